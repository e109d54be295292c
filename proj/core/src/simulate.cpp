#include "wreath/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>

namespace wreath {

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

Rng Rng::substream(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(std::mt19937_64(seq));
}

std::uint64_t Rng::below(std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    std::uint64_t r = engine_();
    if (r >= threshold) return r % bound;
  }
}

double Rng::uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::exponential(double rate) { return -std::log1p(-uniform01()) / rate; }

std::uint64_t Rng::poisson(double mean) {
  std::uint64_t count = 0;
  double t = exponential();
  while (t <= mean) {
    ++count;
    t += exponential();
  }
  return count;
}

std::string mode_name(SimMode mode) { return mode == SimMode::Discrete ? "discrete" : "continuized"; }

SimMode parse_mode(const std::string& name) {
  if (name == "discrete") return SimMode::Discrete;
  if (name == "continuized") return SimMode::Continuized;
  throw ValidationError("unknown mode '" + name + "' (expected discrete or continuized)");
}

WreathElement sample_increment(unsigned n, WalkKind kind, const GroupTable& g, Rng& rng) {
  const GroupTable& base = kind == WalkKind::Sym ? trivial_group() : g;
  WreathElement step = wreath_identity(n);
  const auto p = static_cast<unsigned>(rng.below(n));
  const auto q = static_cast<unsigned>(rng.below(n));
  if (p == q) {
    step.coords[p] = static_cast<Element>(rng.below(base.order));
    return step;
  }
  std::swap(step.perm[p], step.perm[q]);
  const auto x = static_cast<Element>(rng.below(base.order));
  step.coords[p] = x;
  step.coords[q] = kind == WalkKind::Paired ? base.inv[x] : static_cast<Element>(rng.below(base.order));
  return step;
}

WreathElement sample_step(const WreathElement& state, WalkKind kind, const GroupTable& g, Rng& rng) {
  const GroupTable& base = kind == WalkKind::Sym ? trivial_group() : g;
  return wreath_multiply(sample_increment(static_cast<unsigned>(state.perm.size()), kind, g, rng), state, base);
}

EmpiricalTv tv_from_counts(const std::vector<std::uint64_t>& counts, const std::vector<double>& exact) {
  const std::uint64_t total = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
  EmpiricalTv out;
  out.trials = total;
  if (total == 0) return out;
  const double N = static_cast<double>(total);
  double l1 = 0.0;
  for (std::size_t x = 0; x < counts.size(); ++x) l1 += std::fabs(counts[x] / N - exact[x]);
  out.tv = 0.5 * l1;
  if (total < 2) return out;
  // Leave-one-out estimates take one value per occupied state.
  const double M = N - 1.0;
  double base = 0.0;
  for (std::size_t x = 0; x < counts.size(); ++x) base += std::fabs(counts[x] / M - exact[x]);
  std::vector<std::pair<double, double>> loo;  // (estimate, weight)
  double mean = 0.0;
  for (std::size_t x = 0; x < counts.size(); ++x) {
    if (counts[x] == 0) continue;
    double adjusted = base - std::fabs(counts[x] / M - exact[x]) + std::fabs((counts[x] - 1.0) / M - exact[x]);
    double est = 0.5 * adjusted;
    loo.emplace_back(est, static_cast<double>(counts[x]));
    mean += est * counts[x];
  }
  mean /= N;
  double ss = 0.0;
  for (const auto& [est, w] : loo) ss += w * (est - mean) * (est - mean);
  out.stderr = std::sqrt((N - 1.0) / N * ss);
  return out;
}

EmpiricalTv empirical_tv(const GroupTable& g, unsigned n, WalkKind kind, double horizon, SimMode mode,
                         std::uint64_t trials, std::uint64_t seed, const std::vector<double>& exact) {
  if (trials < 1) throw ValidationError("trials must be at least 1");
  const GroupTable& base = kind == WalkKind::Sym ? trivial_group() : g;
  auto order = wreath_order(base.order, n);
  if (!order || *order != exact.size()) throw ValidationError("exact distribution does not match the group");
  std::vector<std::uint64_t> counts(*order, 0);
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    Rng rng = Rng::substream(seed, trial);
    std::uint64_t steps = mode == SimMode::Discrete ? static_cast<std::uint64_t>(std::llround(horizon))
                                                    : rng.poisson(horizon);
    WreathElement state = wreath_identity(n);
    for (std::uint64_t s = 0; s < steps; ++s) state = sample_step(state, kind, base, rng);
    ++counts[wreath_index(state, base.order)];
  }
  return tv_from_counts(counts, exact);
}

GoodnessOfFit one_step_chi_square(const GroupTable& g, unsigned n, WalkKind kind, std::uint64_t draws,
                                  std::uint64_t seed, const std::vector<double>& expected) {
  const GroupTable& base = kind == WalkKind::Sym ? trivial_group() : g;
  std::vector<std::uint64_t> counts(expected.size(), 0);
  Rng rng = Rng::substream(seed, 0);
  for (std::uint64_t i = 0; i < draws; ++i) ++counts[wreath_index(sample_increment(n, kind, base, rng), base.order)];
  GoodnessOfFit fit;
  unsigned cells = 0;
  for (std::size_t x = 0; x < expected.size(); ++x) {
    if (expected[x] <= 0.0) {
      if (counts[x] > 0) {
        fit.statistic = std::numeric_limits<double>::infinity();
        fit.p_value = 0.0;
        return fit;
      }
      continue;
    }
    const double e = expected[x] * static_cast<double>(draws);
    const double d = static_cast<double>(counts[x]) - e;
    fit.statistic += d * d / e;
    ++cells;
  }
  fit.dof = cells > 0 ? cells - 1 : 0;
  fit.p_value = fit.dof == 0 ? 1.0 : boost::math::gamma_q(fit.dof / 2.0, fit.statistic / 2.0);
  return fit;
}

namespace {

struct Components {
  std::vector<unsigned> parent;
  unsigned count;
  explicit Components(unsigned n) : parent(n), count(n) { std::iota(parent.begin(), parent.end(), 0u); }
  unsigned find(unsigned x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(unsigned a, unsigned b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    parent[std::max(a, b)] = std::min(a, b);
    --count;
  }
};

}  // namespace

CouplingReport coupling_experiment(unsigned n, std::uint64_t trials, std::uint64_t seed) {
  if (n < 2 || n > 10000) throw ValidationError("coupling experiment needs 2 <= n <= 10000");
  if (trials < 1 || trials > 1000000) throw ValidationError("coupling experiment needs 1 <= trials <= 1000000");
  CouplingReport report;
  report.n = n;
  report.trials = trials;
  report.seed = seed;
  report.samples.reserve(trials);
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    Rng rng = Rng::substream(seed, trial);
    Components graph(n);
    double t = 0.0;
    while (graph.count > 1) {
      t += rng.exponential();
      const auto p = static_cast<unsigned>(rng.below(n));
      const auto q = static_cast<unsigned>(rng.below(n));
      if (p != q) graph.unite(p, q);
    }
    CouplingTrial sample;
    sample.t = t;
    while (true) {
      t += rng.exponential();
      const auto p = rng.below(n);
      const auto q = rng.below(n);
      if (p == q) break;
    }
    sample.t_star = t;
    report.samples.push_back(sample);
  }
  return report;
}

double coupling_threshold(unsigned n, double c) {
  const double nd = static_cast<double>(n);
  return 0.5 * nd * std::log(nd) + c * nd;
}

double graph_limit(double c) { return 1.0 - std::exp(-std::exp(-2.0 * c)); }

double graph_limit_star(double c) {
  auto integrand = [c](double u) { return std::exp(-u) * graph_limit(c - u); };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      integrand, 0.0, std::numeric_limits<double>::infinity(), 15, 1e-12);
}

std::vector<TailEstimate> coupling_tails(const CouplingReport& report, const std::vector<double>& c_values,
                                         bool use_t_star) {
  std::vector<TailEstimate> out;
  const double N = static_cast<double>(report.samples.size());
  for (double c : c_values) {
    TailEstimate est;
    est.c = c;
    est.threshold = coupling_threshold(report.n, c);
    std::uint64_t above = 0;
    for (const auto& s : report.samples)
      if ((use_t_star ? s.t_star : s.t) > est.threshold) ++above;
    est.tail = static_cast<double>(above) / N;
    est.stderr = std::sqrt(est.tail * (1.0 - est.tail) / N);
    est.limit = use_t_star ? graph_limit_star(c) : graph_limit(c);
    out.push_back(est);
  }
  return out;
}

std::vector<std::uint64_t> discrete_coupling_times(unsigned n, std::uint64_t trials, std::uint64_t seed) {
  if (n < 1) throw ValidationError("n must be positive");
  std::vector<std::uint64_t> times;
  times.reserve(trials);
  std::vector<char> hit(n);
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    Rng rng = Rng::substream(seed, trial);
    std::fill(hit.begin(), hit.end(), 0);
    unsigned remaining = n;
    std::uint64_t steps = 0;
    while (remaining > 0) {
      ++steps;
      const auto p = static_cast<unsigned>(rng.below(n));
      const auto q = static_cast<unsigned>(rng.below(n));
      for (unsigned i : {p, q}) {
        if (!hit[i]) {
          hit[i] = 1;
          --remaining;
        }
      }
    }
    times.push_back(steps);
  }
  return times;
}

TailEstimate discrete_coupling_tail(unsigned n, std::uint64_t k, std::uint64_t trials, std::uint64_t seed) {
  auto times = discrete_coupling_times(n, trials, seed);
  TailEstimate est;
  est.threshold = static_cast<double>(k);
  std::uint64_t above = 0;
  for (auto t : times)
    if (t > k) ++above;
  const double N = static_cast<double>(trials);
  est.tail = static_cast<double>(above) / N;
  est.stderr = std::sqrt(est.tail * (1.0 - est.tail) / N);
  const double q = 1.0 - 1.0 / n;
  est.limit = n * std::pow(q, 2.0 * static_cast<double>(k));
  return est;
}

}  // namespace wreath
