#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "wreath/oracle.hpp"
#include "wreath/simulate.hpp"

namespace wreath {
namespace {

std::vector<double> to_doubles(const Distribution& d) {
  std::vector<double> out;
  for (const auto& p : d) out.push_back(p.get_d());
  return out;
}

TEST(Rng, SubstreamsAreDeterministicAndDistinct) {
  Rng a = Rng::substream(7, 3);
  Rng b = Rng::substream(7, 3);
  Rng c = Rng::substream(7, 4);
  for (int i = 0; i < 10; ++i) {
    const auto x = a.next();
    EXPECT_EQ(x, b.next());
    EXPECT_NE(x, c.next());
  }
}

TEST(Rng, SamplersHaveTheRightMoments) {
  Rng rng(12345);
  const int draws = 200000;
  double below_sum = 0, unif_sum = 0, exp_sum = 0, pois_sum = 0;
  for (int i = 0; i < draws; ++i) {
    const auto v = rng.below(10);
    ASSERT_LT(v, 10u);
    below_sum += static_cast<double>(v);
    const double u = rng.uniform01();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    unif_sum += u;
    exp_sum += rng.exponential(2.0);
    pois_sum += static_cast<double>(rng.poisson(3.5));
  }
  // Five standard errors of each sample mean.
  EXPECT_NEAR(below_sum / draws, 4.5, 5 * std::sqrt(8.25 / draws));
  EXPECT_NEAR(unif_sum / draws, 0.5, 5 * std::sqrt(1.0 / 12 / draws));
  EXPECT_NEAR(exp_sum / draws, 0.5, 5 * 0.5 / std::sqrt(draws));
  EXPECT_NEAR(pois_sum / draws, 3.5, 5 * std::sqrt(3.5 / draws));
}

struct SamplerCase {
  const char* group;
  unsigned n;
  WalkKind kind;
};

class OneStepLaw : public ::testing::TestWithParam<SamplerCase> {};

TEST_P(OneStepLaw, ChiSquareAgainstProceduralLaw) {
  const auto c = GetParam();
  const GroupTable g = c.kind == WalkKind::Sym ? build_group("Z:1") : build_group(c.group);
  const OracleWalk walk = c.kind == WalkKind::Sym ? OracleWalk::Sym
                          : c.kind == WalkKind::Paired ? OracleWalk::Paired
                                                       : OracleWalk::Independent;
  const auto expected = to_doubles(procedural_measure(g, c.n, walk));
  const GoodnessOfFit fit = one_step_chi_square(g, c.n, c.kind, 200000, 99, expected);
  EXPECT_GT(fit.p_value, 1e-4) << "statistic " << fit.statistic << " dof " << fit.dof;

  // A deliberately wrong target must be rejected.
  std::vector<double> uniform(expected.size(), 1.0 / static_cast<double>(expected.size()));
  EXPECT_LT(one_step_chi_square(g, c.n, c.kind, 200000, 99, uniform).p_value, 1e-6);
}

INSTANTIATE_TEST_SUITE_P(Walks, OneStepLaw,
                         ::testing::Values(SamplerCase{"Z:2", 3, WalkKind::Independent},
                                           SamplerCase{"Z:2", 3, WalkKind::Paired},
                                           SamplerCase{"S:3", 2, WalkKind::Paired},
                                           SamplerCase{"Z:1", 4, WalkKind::Sym}));

TEST(EmpiricalTv, FromCounts) {
  const std::vector<double> exact{0.5, 0.5};
  const EmpiricalTv perfect = tv_from_counts({50, 50}, exact);
  EXPECT_DOUBLE_EQ(perfect.tv, 0.0);
  EXPECT_EQ(perfect.trials, 100u);
  const EmpiricalTv skew = tv_from_counts({75, 25}, exact);
  EXPECT_DOUBLE_EQ(skew.tv, 0.25);
  EXPECT_GT(skew.stderr, 0.0);
}

TEST(EmpiricalTv, ReproducibleForFixedSeed) {
  const GroupTable g = build_group("Z:2");
  const GroupTable table = build_wreath_table(g, 2);
  const auto exact = to_doubles(convolution_power(table, procedural_measure(g, 2, OracleWalk::Independent), 3));
  const auto a = empirical_tv(g, 2, WalkKind::Independent, 3, SimMode::Discrete, 5000, 11, exact);
  const auto b = empirical_tv(g, 2, WalkKind::Independent, 3, SimMode::Discrete, 5000, 11, exact);
  EXPECT_EQ(a.tv, b.tv);
  EXPECT_EQ(a.stderr, b.stderr);
  EXPECT_LT(a.tv, 0.05);
}

TEST(Coupling, LimitsAndOrdering) {
  EXPECT_NEAR(graph_limit(0.0), 1 - std::exp(-1.0), 1e-15);
  for (double c : {-1.0, 0.0, 1.0, 2.0}) {
    EXPECT_GT(graph_limit_star(c), graph_limit(c));
    EXPECT_LT(graph_limit_star(c), 1.0);
  }
  // Closed form at c -> -inf is 1; large c decays like e^{-2c}... times a constant.
  EXPECT_NEAR(graph_limit_star(-10.0), 1.0, 1e-6);
  EXPECT_NEAR(coupling_threshold(100, 1.0), 50 * std::log(100.0) + 100, 1e-9);

  const CouplingReport report = coupling_experiment(50, 200, 5);
  ASSERT_EQ(report.samples.size(), 200u);
  for (const auto& s : report.samples) EXPECT_GE(s.t_star, s.t);
  const CouplingReport again = coupling_experiment(50, 200, 5);
  EXPECT_EQ(report.samples.back().t, again.samples.back().t);
}

TEST(Coupling, DiscreteTimesMatchCoverageLaw) {
  const unsigned n = 20;
  const auto times = discrete_coupling_times(n, 4000, 3);
  const double mean = std::accumulate(times.begin(), times.end(), 0.0) / static_cast<double>(times.size());
  // Two uniform coordinates per step: P{T > k} = P{2k draws miss some coordinate},
  // by inclusion-exclusion over the missed set.
  double expected = 0;
  for (unsigned k = 0; k < 2000; ++k) {
    double miss = 0, binom = 1;
    for (unsigned j = 1; j <= n; ++j) {
      binom = binom * (n - j + 1) / j;
      miss += (j % 2 ? 1 : -1) * binom * std::pow(1.0 - static_cast<double>(j) / n, 2.0 * k);
    }
    expected += miss;
  }
  double var = 0;
  for (auto t : times) var += (t - mean) * (t - mean);
  var /= static_cast<double>(times.size() - 1);
  EXPECT_NEAR(mean, expected, 5 * std::sqrt(var / static_cast<double>(times.size())));
}

}  // namespace
}  // namespace wreath
