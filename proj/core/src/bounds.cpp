#include "wreath/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "wreath/content_profile.hpp"
#include "wreath/partitions.hpp"

namespace wreath {

namespace {

constexpr long double kNegInf = -std::numeric_limits<long double>::infinity();

long double log_ratio_power(long double log_base, unsigned long exponent) {
  return exponent == 0 ? 0.0L : static_cast<long double>(exponent) * log_base;
}

void compositions(unsigned remaining, std::size_t slots, std::vector<unsigned>& prefix,
                  std::vector<std::vector<unsigned>>& out) {
  if (slots == 0) {
    if (remaining == 0) out.push_back(prefix);
    return;
  }
  if (slots == 1) {
    prefix.push_back(remaining);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (unsigned a = 0; a <= remaining; ++a) {
    prefix.push_back(a);
    compositions(remaining - a, slots - 1, prefix, out);
    prefix.pop_back();
  }
}

// ln[ C(n, n1) n!/n1! (|G|-1)^{n-n1} ]; -inf when the factor vanishes.
long double log_outer_weight(const BigInt& g_order, unsigned n, unsigned n1) {
  const unsigned rest = n - n1;
  long double log_w = log_binomial(n, n1) + log_factorial(n) - log_factorial(n1);
  if (rest > 0) {
    BigInt others = g_order - 1;
    if (others == 0) return kNegInf;
    log_w += static_cast<long double>(rest) * log_abs(others);
  }
  return log_w;
}

}  // namespace

Rational l2n_sq_spectral_exact(const std::vector<SpectralLine>& lines, unsigned long k) {
  Rational acc = 0;
  for (const auto& l : lines) {
    BigInt mult = l.multiplicity;
    if (l.value == 1) mult -= 1;
    if (mult == 0) continue;
    acc += Rational(mult) * pow(l.value, 2 * k);
  }
  return acc;
}

long double l2n_sq_spectral(const std::vector<SpectralLine>& lines, unsigned long k) {
  LogAccumulator acc;
  for (const auto& l : lines) {
    BigInt mult = l.multiplicity;
    if (l.value == 1) mult -= 1;
    if (mult == 0) continue;
    if (l.value == 0) {
      if (k == 0) acc.add_log(log_abs(mult), 1);
      continue;
    }
    acc.add_log(log_abs(mult) + log_ratio_power(log_abs(l.value), 2 * k), 1);
  }
  return acc.empty() ? 0.0L : acc.value();
}

BoundedSum l2n_sq_collapsed(const BigInt& g_order, unsigned n, unsigned long k) {
  LogAccumulator total;
  LogAccumulator tail;
  const long double n_sq = static_cast<long double>(n) * n;
  for (unsigned n1 = 0; n1 <= n; ++n1) {
    const long double log_w = log_outer_weight(g_order, n, n1);
    if (log_w == kNegInf) continue;
    PowerSum inner = content_power_sum(n1, n_sq, 2 * k, n1 == n);
    if (!inner.sum.empty()) {
      long double shift = 0;
      long double scaled = inner.sum.scaled_sum(shift);
      if (scaled != 0.0L) total.add_log(log_w + shift + std::log(std::fabs(scaled)), scaled > 0 ? 1 : -1);
    }
    if (inner.log_tail != kNegInf) tail.add_log(log_w + inner.log_tail, 1);
  }
  BoundedSum out;
  out.value = total.empty() ? 0.0L : total.value();
  out.tail = tail.empty() ? 0.0L : tail.value();
  return out;
}

BigInt collapse_inner_sum(const std::vector<BigInt>& base_dims, unsigned n, unsigned n1) {
  const unsigned rest = n - n1;
  const std::size_t others = base_dims.size() - 1;
  std::vector<std::vector<unsigned>> comps;
  std::vector<unsigned> prefix;
  compositions(rest, others, prefix, comps);
  std::vector<BigInt> partition_square_sums(rest + 1, 0);
  for (unsigned m = 0; m <= rest; ++m)
    for (const Partition& lambda : enumerate_partitions(m)) {
      BigInt d = dim_partition(lambda);
      partition_square_sums[m] += d * d;
    }
  BigInt total = 0;
  for (const auto& comp : comps) {
    BigInt coeff = multinomial(comp);
    BigInt term = coeff * coeff;
    for (std::size_t j = 0; j < comp.size(); ++j) {
      term *= pow(base_dims[j + 1], 2 * comp[j]);
      term *= partition_square_sums[comp[j]];
    }
    total += term;
  }
  return total;
}

BigInt delta_n(const std::vector<BigInt>& base_dims, unsigned n) {
  BigInt total = 0;
  for (std::size_t j = 1; j < base_dims.size(); ++j) total += pow(base_dims[j], 2 * n);
  return total;
}

BigInt delta_n(const GroupTable& g, unsigned n) { return delta_n(g.irrep_dims(), n); }

BoundedSum paired_relaxed_bound(const GroupTable& g, unsigned n, unsigned long k) {
  const BigInt g_order(static_cast<unsigned long>(g.order));
  const long double s = static_cast<long double>(g.class_count());
  LogAccumulator total;
  LogAccumulator tail;
  for (unsigned n1 = 0; n1 <= n; ++n1) {
    const long double log_w = log_outer_weight(g_order, n, n1);
    if (log_w == kNegInf) continue;
    if (n1 == 0) {
      // (n1/n)^{2k} vanishes unless k = 0; the empty partition contributes 1.
      if (k == 0) total.add_log(log_w, 1);
      continue;
    }
    const long double denom = static_cast<long double>(n) * n1;
    PowerSum inner = content_power_sum(n1, denom, 2 * k, n1 == n);
    if (!inner.sum.empty()) {
      long double shift = 0;
      long double scaled = inner.sum.scaled_sum(shift);
      if (scaled != 0.0L) total.add_log(log_w + shift + std::log(std::fabs(scaled)), scaled > 0 ? 1 : -1);
    }
    if (inner.log_tail != kNegInf) tail.add_log(log_w + inner.log_tail, 1);
  }
  BoundedSum out;
  const long double half_s = 0.5L * s;
  out.value = half_s * (total.empty() ? 0.0L : total.value());
  const BigInt delta = delta_n(g, n);
  if (delta != 0) {
    const long double ratio = std::log(static_cast<long double>(n - 1) / n);
    out.value += 0.25L * std::exp(log_abs(delta) + log_ratio_power(ratio, 2 * k));
  }
  out.tail = half_s * (tail.empty() ? 0.0L : tail.value());
  return out;
}

BoundedSum sym_l2n_sq(unsigned n, unsigned long k) {
  PowerSum inner = content_power_sum(n, static_cast<long double>(n) * n, 2 * k, true);
  BoundedSum out;
  out.value = inner.sum.empty() ? 0.0L : inner.sum.value();
  out.tail = inner.log_tail == kNegInf ? 0.0L : std::exp(inner.log_tail);
  return out;
}

double sym_tv_upper(unsigned n, unsigned long k) {
  BoundedSum l2 = sym_l2n_sq(n, k);
  return static_cast<double>(0.5L * std::sqrt(l2.upper()));
}

long double coupling_tail_bound(unsigned n, unsigned long k) {
  if (n == 1) return k == 0 ? 1.0L : 0.0L;
  const long double log_q = std::log1p(-1.0L / n);
  return static_cast<long double>(n) * std::exp(log_ratio_power(log_q, 2 * k));
}

double tv_upper_coupling(unsigned n, unsigned long k, double sym_tv) {
  long double v = static_cast<long double>(sym_tv) + coupling_tail_bound(n, k);
  return static_cast<double>(std::min(1.0L, v));
}

long double dominant_term(const std::vector<BigInt>& base_dims, unsigned n, unsigned long k, WalkKind kind) {
  const long double log_q = std::log1p(-1.0L / n);
  BigInt g_order = 0;
  for (const auto& d : base_dims) g_order += d * d;
  long double best = 0.0L;
  if (g_order > 1) {
    long double log_term =
        2.0L * std::log(static_cast<long double>(n)) + log_abs(BigInt(g_order - 1)) + log_ratio_power(log_q, 4 * k);
    best = std::exp(log_term);
  }
  if (kind == WalkKind::Paired && base_dims.size() > 1) {
    LogAccumulator acc;
    for (std::size_t j = 1; j < base_dims.size(); ++j) {
      const long double log_d = log_abs(base_dims[j]);
      acc.add_log(2.0L * n * log_d + log_ratio_power(log_q - log_d, 2 * k));
    }
    best = std::max(best, acc.value());
  }
  return best;
}

double tv_lower_dominant(const std::vector<BigInt>& base_dims, unsigned n, unsigned long k, WalkKind kind) {
  return static_cast<double>(0.5L * std::sqrt(dominant_term(base_dims, n, k, kind)));
}

ChebyshevMoments chebyshev_moments(unsigned n, unsigned long k) {
  if (n < 4) throw std::invalid_argument("Chebyshev bound needs n >= 4");
  auto expectation = [&](const Partition& lambda) {
    long double d = dim_partition(lambda).get_d();
    long double x = to_long_double(sym_eigenvalue(lambda));
    return d * std::pow(x, static_cast<long double>(k));
  };
  ChebyshevMoments m;
  m.mean = expectation({n - 1, 1});
  m.second_moment = 1.0L + m.mean + expectation({n - 2, 2}) + expectation({n - 2, 1, 1});
  m.variance = std::max(0.0L, m.second_moment - m.mean * m.mean);
  return m;
}

double tv_lower_chebyshev_sym(unsigned n, unsigned long k) {
  const ChebyshevMoments m = chebyshev_moments(n, k);
  if (m.mean <= 0.0L) return 0.0;
  constexpr int kGrid = 64;
  const long double lo = m.mean * 1e-3L;
  const long double hi = m.mean * (1.0L - 1e-3L);
  const long double step = std::log(hi / lo) / (kGrid - 1);
  long double best = 0.0L;
  for (int i = 0; i < kGrid; ++i) {
    const long double alpha = lo * std::exp(step * i);
    const long double gap = m.mean - alpha;
    const long double value = 1.0L - 1.0L / (alpha * alpha) - m.variance / (gap * gap);
    best = std::max(best, value);
  }
  return static_cast<double>(std::clamp(best, 0.0L, 1.0L));
}

std::string group_class_name(GroupClass c) {
  switch (c) {
    case GroupClass::Z2: return "Z2";
    case GroupClass::Zm: return "Zm";
    case GroupClass::Sm: return "Sm";
    case GroupClass::Abelian: return "abelian";
    case GroupClass::Nonabelian: return "nonabelian";
  }
  return "?";
}

GroupClass classify_group(const GroupTable& g) {
  if (g.spec == "Z:2") return GroupClass::Z2;
  if (g.spec.rfind("Z:", 0) == 0) return GroupClass::Zm;
  if (g.spec.rfind("S:", 0) == 0) return GroupClass::Sm;
  return g.is_abelian() ? GroupClass::Abelian : GroupClass::Nonabelian;
}

ThresholdParams threshold_params(const GroupTable& g, unsigned n) {
  ThresholdParams p;
  p.n = n;
  p.g_order = static_cast<unsigned long>(g.order);
  p.s = g.class_count();
  p.delta = g.char_table ? delta_n(g, n) : BigInt(0);
  return p;
}

namespace {

struct FormulaSpec {
  const char* text;
  double (*eval)(const ThresholdParams&);
};

double ln(const BigInt& x) { return x <= 0 ? -std::numeric_limits<double>::infinity() : static_cast<double>(log_abs(x)); }
double nd(const ThresholdParams& p) { return static_cast<double>(p.n); }
double nlogn(const ThresholdParams& p) { return nd(p) * std::log(nd(p)); }

const FormulaSpec kHalfNLogN{"1/2 n log n", [](const ThresholdParams& p) { return 0.5 * nlogn(p); }};
const FormulaSpec kHalfNLogNLimit{"1/2 n log n (n -> infinity)", [](const ThresholdParams& p) { return 0.5 * nlogn(p); }};
const FormulaSpec kNLogN{"n log n", [](const ThresholdParams& p) { return nlogn(p); }};

double indep_l2(const ThresholdParams& p) { return 0.5 * nlogn(p) + 0.25 * nd(p) * ln(p.g_order - 1); }
double paired_l2_abelian(const ThresholdParams& p) { return nlogn(p) + nd(p) * ln(p.g_order - 1); }
double paired_l2_max_suff(const ThresholdParams& p) {
  double a = 0.5 * nd(p) * ln(p.delta);
  double b = nlogn(p) + 0.5 * nd(p) * ln(p.g_order - 1) + 0.5 * nd(p) * ln(BigInt(static_cast<unsigned long>(p.s)) - 1);
  return std::max(a, b);
}
double paired_l2_max_nec(const ThresholdParams& p) { return std::max(0.5 * nd(p) * ln(p.delta), indep_l2(p)); }

const FormulaSpec kIndepZm{"1/2 n log n + 1/4 n log(m-1)", indep_l2};
const FormulaSpec kIndepSm{"1/2 n log n + 1/4 n log(|m!|-1)", indep_l2};
const FormulaSpec kIndepG{"1/2 n log n + 1/4 n log(|G|-1)", indep_l2};
const FormulaSpec kPairedZm{"n log n + n log(m-1)", paired_l2_abelian};
const FormulaSpec kPairedG{"n log n + n log(|G|-1)", paired_l2_abelian};
const FormulaSpec kPairedSmSuff{"max{1/2 n log delta_n, n log n + 1/2 n log(|m!|-1) + 1/2 n log(p(m)-1)}",
                                paired_l2_max_suff};
const FormulaSpec kPairedSmNec{"max{1/2 n log delta_n, 1/2 n log n + 1/4 n log(|m!|-1)}", paired_l2_max_nec};
const FormulaSpec kPairedNonabSuff{"max{1/2 n log delta_n, n log n + 1/2 n log(|G|-1) + 1/2 n log(s-1)}",
                                   paired_l2_max_suff};
const FormulaSpec kPairedNonabNec{"max{1/2 n log delta_n, 1/2 n log n + 1/4 n log(|G|-1)}", paired_l2_max_nec};

// l2 sufficient, l2 necessary, tv sufficient, tv necessary.
std::array<const FormulaSpec*, 4> formulas_for(WalkKind walk, GroupClass c) {
  if (walk == WalkKind::Independent) {
    switch (c) {
      case GroupClass::Z2: return {&kHalfNLogN, &kHalfNLogN, &kHalfNLogN, &kHalfNLogN};
      case GroupClass::Zm: return {&kIndepZm, &kIndepZm, &kHalfNLogN, &kHalfNLogN};
      case GroupClass::Sm: return {&kIndepSm, &kIndepSm, &kHalfNLogN, &kHalfNLogN};
      case GroupClass::Abelian:
      case GroupClass::Nonabelian: return {&kIndepG, &kIndepG, &kHalfNLogN, &kHalfNLogN};
    }
  }
  switch (c) {
    case GroupClass::Z2: return {&kNLogN, &kHalfNLogN, &kHalfNLogNLimit, &kHalfNLogN};
    case GroupClass::Zm: return {&kPairedZm, &kIndepZm, &kHalfNLogNLimit, &kHalfNLogN};
    case GroupClass::Sm: return {&kPairedSmSuff, &kPairedSmNec, &kHalfNLogNLimit, &kHalfNLogN};
    case GroupClass::Abelian: return {&kPairedG, &kIndepG, &kHalfNLogNLimit, &kHalfNLogN};
    case GroupClass::Nonabelian: return {&kPairedNonabSuff, &kPairedNonabNec, &kHalfNLogNLimit, &kHalfNLogN};
  }
  return {};
}

}  // namespace

std::vector<ThresholdRow> threshold_rows(const ThresholdParams& params, WalkKind walk, GroupClass group_class) {
  if (walk == WalkKind::Sym) throw ValidationError("threshold tables cover the independent and paired walks");
  static const char* kMetric[4] = {"l2", "l2", "tv", "tv"};
  static const char* kBound[4] = {"sufficient", "necessary", "sufficient", "necessary"};
  auto specs = formulas_for(walk, group_class);
  std::vector<ThresholdRow> rows;
  for (int i = 0; i < 4; ++i) {
    double steps = params.n == 0 ? std::numeric_limits<double>::quiet_NaN() : specs[i]->eval(params);
    rows.push_back({walk, group_class, kMetric[i], kBound[i], specs[i]->text, steps});
  }
  return rows;
}

std::vector<ThresholdRow> threshold_table(const ThresholdParams& params) {
  std::vector<ThresholdRow> rows;
  for (WalkKind walk : {WalkKind::Independent, WalkKind::Paired})
    for (GroupClass c : {GroupClass::Z2, GroupClass::Zm, GroupClass::Sm, GroupClass::Abelian, GroupClass::Nonabelian})
      for (auto& row : threshold_rows(params, walk, c)) rows.push_back(std::move(row));
  return rows;
}

double mixing_threshold(const GroupTable& g, unsigned n, WalkKind kind, const std::string& metric) {
  if (metric != "l2" && metric != "tv") throw ValidationError("unknown metric '" + metric + "'");
  if (kind == WalkKind::Sym) return 0.5 * n * std::log(static_cast<double>(n));
  for (const auto& row : threshold_rows(threshold_params(g, n), kind, classify_group(g)))
    if (row.metric == metric && row.bound == "sufficient") return row.steps;
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace wreath
