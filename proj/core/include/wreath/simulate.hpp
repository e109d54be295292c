#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wreath/group.hpp"
#include "wreath/walks.hpp"

namespace wreath {

/// Seedable generator with portable samplers. Every trial uses its own
/// substream derived from (seed, trial index), so results do not depend on
/// the order in which trials run.
class Rng {
 public:
  static constexpr const char* kName = "mt19937_64";

  explicit Rng(std::uint64_t seed);
  static Rng substream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next() { return engine_(); }
  /// Uniform on {0, ..., bound - 1}, by rejection.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform on [0, 1) with 53 random bits.
  double uniform01();
  double exponential(double rate = 1.0);
  /// Number of rate-1 arrivals in [0, mean].
  std::uint64_t poisson(double mean);

 private:
  explicit Rng(std::mt19937_64 engine) : engine_(engine) {}
  std::mt19937_64 engine_;
};

enum class SimMode { Discrete, Continuized };
std::string mode_name(SimMode mode);
SimMode parse_mode(const std::string& name);

/// One draw from the walk's step law, realized by the card procedure.
WreathElement sample_increment(unsigned n, WalkKind kind, const GroupTable& g, Rng& rng);
/// Left-multiplies the state by one draw.
WreathElement sample_step(const WreathElement& state, WalkKind kind, const GroupTable& g, Rng& rng);

struct EmpiricalTv {
  double tv = 0.0;
  double stderr = 0.0;  // jackknife
  std::uint64_t trials = 0;
};

/// Plug-in TV between the empirical law after `horizon` steps (discrete) or time
/// `horizon` (continuized) and `exact`, indexed by wreath_index.
EmpiricalTv empirical_tv(const GroupTable& g, unsigned n, WalkKind kind, double horizon, SimMode mode,
                         std::uint64_t trials, std::uint64_t seed, const std::vector<double>& exact);

/// Plug-in TV and its jackknife standard error from per-state counts.
EmpiricalTv tv_from_counts(const std::vector<std::uint64_t>& counts, const std::vector<double>& exact);

struct GoodnessOfFit {
  double statistic = 0.0;
  unsigned dof = 0;
  double p_value = 0.0;
};

/// Pearson chi-square of one-step draws against expected per-element probabilities.
GoodnessOfFit one_step_chi_square(const GroupTable& g, unsigned n, WalkKind kind, std::uint64_t draws,
                                  std::uint64_t seed, const std::vector<double>& expected);

struct CouplingTrial {
  double t = 0.0;       // pair-event graph becomes connected
  double t_star = 0.0;  // first coordinate event after t
};

struct CouplingReport {
  unsigned n = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<CouplingTrial> samples;
};

/// Event skeleton of the continuized paired walk: rate-1 events, each a uniform
/// ordered pair (p, q); p != q adds edge {p, q}, p == q randomizes coordinate p.
CouplingReport coupling_experiment(unsigned n, std::uint64_t trials, std::uint64_t seed);

struct TailEstimate {
  double c = 0.0;
  double threshold = 0.0;
  double tail = 0.0;
  double limit = 0.0;
  double stderr = 0.0;
};

/// 1/2 n log n + c n.
double coupling_threshold(unsigned n, double c);
/// 1 - exp(-e^{-2c}).
double graph_limit(double c);
/// Integral over u >= 0 of e^{-u} [1 - exp(-e^{-2(c-u)})].
double graph_limit_star(double c);

std::vector<TailEstimate> coupling_tails(const CouplingReport& report, const std::vector<double>& c_values,
                                         bool use_t_star);

/// Steps until every coordinate of the independent walk has been randomized.
std::vector<std::uint64_t> discrete_coupling_times(unsigned n, std::uint64_t trials, std::uint64_t seed);
/// Empirical P{T > k} with binomial standard error.
TailEstimate discrete_coupling_tail(unsigned n, std::uint64_t k, std::uint64_t trials, std::uint64_t seed);

}  // namespace wreath
