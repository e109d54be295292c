#include <gtest/gtest.h>

#include <cmath>

#include "wreath/bounds.hpp"
#include "wreath/content_profile.hpp"
#include "wreath/oracle.hpp"
#include "wreath/walks.hpp"
#include "wreath/wreath_classes.hpp"
#include "wreath/wreath_reps.hpp"

namespace wreath {
namespace {

OracleWalk to_oracle(WalkKind kind) {
  switch (kind) {
    case WalkKind::Sym: return OracleWalk::Sym;
    case WalkKind::Independent: return OracleWalk::Independent;
    case WalkKind::Paired: return OracleWalk::Paired;
  }
  return OracleWalk::Independent;
}

struct Case {
  std::string group;
  unsigned n;
  WalkKind kind;
};

std::string case_name(const ::testing::TestParamInfo<Case>& info) {
  std::string g = info.param.group;
  g.erase(g.find(':'), 1);
  return g + "_n" + std::to_string(info.param.n) + "_" + walk_name(info.param.kind);
}

class SpectrumVsConvolution : public ::testing::TestWithParam<Case> {};

// On a Cayley graph tr(M^k) = |W| P^{*k}(e), so the spectrum fixes every return
// probability; the l2 distance follows from the same law.
TEST_P(SpectrumVsConvolution, ReturnProbabilitiesAndL2Agree) {
  const Case c = GetParam();
  const GroupTable base = build_group(c.group);
  const GroupTable table = build_wreath_table(base, c.n);
  const Distribution step = procedural_measure(base, c.n, to_oracle(c.kind));
  const auto lines = spectrum(base, c.n, c.kind);
  EXPECT_EQ(total_multiplicity(lines), BigInt(static_cast<unsigned long>(table.order)));
  const auto powers = convolution_powers(table, step, 10);
  for (unsigned k = 0; k <= 10; ++k) {
    EXPECT_EQ(return_probability(lines, k), powers[k][0]) << "k=" << k;
    EXPECT_EQ(l2n_sq_spectral_exact(lines, k), exact_distances(powers[k]).l2n_sq) << "k=" << k;
  }
}

INSTANTIATE_TEST_SUITE_P(Walks, SpectrumVsConvolution,
                         ::testing::Values(Case{"Z:2", 3, WalkKind::Independent}, Case{"Z:2", 3, WalkKind::Paired},
                                           Case{"Z:3", 2, WalkKind::Independent}, Case{"Z:3", 2, WalkKind::Paired},
                                           Case{"S:3", 2, WalkKind::Independent}, Case{"S:3", 2, WalkKind::Paired},
                                           Case{"Z:4", 2, WalkKind::Paired}),
                         case_name);

TEST(Walks, SymSpectrumMatchesTranspositionWalk) {
  const GroupTable& trivial = trivial_group();
  const GroupTable table = build_wreath_table(trivial, 5);
  const Distribution step = procedural_measure(trivial, 5, OracleWalk::Sym);
  const auto lines = spectrum(trivial, 5, WalkKind::Sym);
  const auto powers = convolution_powers(table, step, 8);
  for (unsigned k = 0; k <= 8; ++k) EXPECT_EQ(return_probability(lines, k), powers[k][0]);
}

TEST(Walks, MeasuresAreProbabilities) {
  for (const char* spec : {"Z:2", "Z:5", "S:3", "S:4"}) {
    const GroupTable g = build_group(spec);
    for (WalkKind kind : {WalkKind::Independent, WalkKind::Paired}) {
      const WalkMeasure m = build_measure(kind, g, 4);
      EXPECT_EQ(m.total_mass(), 1) << spec;
    }
  }
  for (WalkKind kind : {WalkKind::Independent, WalkKind::Paired}) {
    const GroupTable g = build_group("S:3");
    const GroupTable table = build_wreath_table(g, 2);
    const WalkMeasure m = build_measure(kind, g, 2);
    const Distribution law = procedural_measure(g, 2, to_oracle(kind));
    for (std::uint64_t x = 0; x < table.order; ++x)
      EXPECT_EQ(m.probability(wreath_from_index(x, g.order, 2)), law[x]) << x;
  }
}

TEST(WreathReps, DimensionsSumToOrder) {
  for (const char* spec : {"Z:2", "Z:3", "S:3"}) {
    const GroupTable g = build_group(spec);
    for (unsigned n = 1; n <= 4; ++n) {
      const auto labels = enumerate_labels(g, n);
      EXPECT_EQ(BigInt(static_cast<unsigned long>(labels.size())), class_count(g, n));
      BigInt sum = 0;
      for (const auto& label : labels) {
        const BigInt d = irrep_dimension(label, g);
        sum += d * d;
      }
      EXPECT_EQ(sum, factorial(n) * pow(BigInt(static_cast<unsigned long>(g.order)), n)) << spec << " n=" << n;
      EXPECT_TRUE(labels.front().is_trivial());
    }
  }
}

TEST(WreathReps, TrivialLabelHasEigenvalueOne) {
  const GroupTable g = build_group("S:3");
  const auto labels = enumerate_labels(g, 3);
  for (WalkKind kind : {WalkKind::Independent, WalkKind::Paired})
    EXPECT_EQ(eigenvalue(labels.front(), build_measure(kind, g, 3)), 1);
}

TEST(Bounds, CollapsedSumMatchesSpectrum) {
  for (unsigned long gorder : {2ul, 3ul}) {
    const GroupTable g = build_group("Z:" + std::to_string(gorder));
    for (unsigned n : {4u, 5u}) {
      const auto lines = spectrum(g, n, WalkKind::Independent);
      for (unsigned long k : {1ul, 5ul, 20ul, 80ul}) {
        const long double exact = l2n_sq_spectral(lines, k);
        const BoundedSum collapsed = l2n_sq_collapsed(BigInt(gorder), n, k);
        EXPECT_EQ(collapsed.tail, 0.0L);
        EXPECT_NEAR(static_cast<double>(collapsed.value / exact), 1.0, 1e-12) << n << " " << k;
      }
    }
  }
}

TEST(Bounds, PairedRelaxedBoundDominatesQuarterL2) {
  for (const char* spec : {"Z:2", "Z:3", "S:3"}) {
    const GroupTable g = build_group(spec);
    for (unsigned n = 2; n <= 3; ++n) {
      const auto lines = spectrum(g, n, WalkKind::Paired);
      for (unsigned long k = 1; k <= 60; k += 3) {
        const long double quarter = l2n_sq_spectral(lines, k) / 4.0L;
        EXPECT_GE(paired_relaxed_bound(g, n, k).upper() * (1.0L + 1e-12L), quarter) << spec << " n=" << n << " k=" << k;
      }
    }
  }
}

TEST(Bounds, SandwichAroundExactDistanceForZ2S3) {
  const GroupTable base = build_group("Z:2");
  const GroupTable table = build_wreath_table(base, 3);
  const auto dims = base.irrep_dims();
  for (WalkKind kind : {WalkKind::Independent, WalkKind::Paired}) {
    const auto powers = convolution_powers(table, procedural_measure(base, 3, to_oracle(kind)), 30);
    const auto lines = spectrum(base, 3, kind);
    for (unsigned k = 1; k <= 30; ++k) {
      const Distances d = exact_distances(powers[k]);
      const double tv = d.tv.get_d();
      const long double l2n = l2n_sq_spectral(lines, k);
      EXPECT_LE(tv, std::sqrt(static_cast<double>(l2n)) / 2 + 1e-12) << k;
      EXPECT_LE(dominant_term(dims, 3, k, kind), d.l2n_sq.get_d() * (1 + 1e-12)) << k;
      if (kind == WalkKind::Independent) EXPECT_LE(tv, tv_upper_coupling(3, k, sym_tv_upper(3, k)) + 1e-12) << k;
    }
  }
}

TEST(Bounds, ChebyshevLowerBoundBelowExactTv) {
  const GroupTable& trivial = trivial_group();
  const GroupTable table = build_wreath_table(trivial, 5);
  const auto powers = convolution_powers(table, procedural_measure(trivial, 5, OracleWalk::Sym), 20);
  for (unsigned k = 0; k <= 20; ++k)
    EXPECT_LE(tv_lower_chebyshev_sym(5, k), exact_distances(powers[k]).tv.get_d() + 1e-12) << k;
}

TEST(Bounds, SymL2MatchesSpectrum) {
  const auto lines = spectrum(trivial_group(), 8, WalkKind::Sym);
  for (unsigned long k : {1ul, 10ul, 40ul}) {
    const BoundedSum s = sym_l2n_sq(8, k);
    EXPECT_NEAR(static_cast<double>(s.value / l2n_sq_spectral(lines, k)), 1.0, 1e-12);
  }
  EXPECT_NEAR(static_cast<double>(coupling_tail_bound(10, 5)), 10 * std::pow(0.9, 10), 1e-12);
}

TEST(ContentProfile, TruncatedProfileBracketsFullSum) {
  const unsigned m = 62;
  const ContentProfile full = build_content_profile(m, 100);
  const ContentProfile cut = build_content_profile(m, 10, 20);
  ASSERT_TRUE(full.complete);
  ASSERT_FALSE(cut.complete);
  const long double denom = static_cast<long double>(m) * m;
  for (unsigned long e : {0ul, 40ul, 200ul, 1000ul}) {
    const PowerSum a = content_power_sum(full, denom, e, true);
    const PowerSum b = content_power_sum(cut, denom, e, true);
    const long double gap = a.sum.value() - b.sum.value();
    EXPECT_GE(gap, -1e-9L * a.sum.value()) << e;
    EXPECT_LE(gap, std::exp(b.log_tail) * (1 + 1e-9L) + 1e-12L * a.sum.value()) << e;
  }
  const PowerSum total = content_power_sum(full, denom, 0, false);
  EXPECT_NEAR(static_cast<double>(total.sum.log_value()), static_cast<double>(log_factorial(m)), 1e-9);
}

TEST(Thresholds, TableShapeAndKnownValue) {
  const GroupTable g = build_group("Z:2");
  EXPECT_EQ(threshold_table(threshold_params(g, 100)).size(), 40u);
  EXPECT_NEAR(mixing_threshold(g, 100, WalkKind::Independent, "l2"), 50 * std::log(100.0), 1e-9);
  EXPECT_EQ(classify_group(g), GroupClass::Z2);
  EXPECT_EQ(classify_group(build_group("S:3")), GroupClass::Sm);
}

}  // namespace
}  // namespace wreath
