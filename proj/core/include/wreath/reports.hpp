#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wreath/emit.hpp"
#include "wreath/group.hpp"
#include "wreath/simulate.hpp"
#include "wreath/walks.hpp"

namespace wreath {

// Table builders shared by the command-line tool and the self-test.

struct Caps {
  std::size_t max_order = 5000;
  std::size_t max_labels = 2000000;
};

/// value_num,value_den,multiplicity,n1,lambda1,...,ns,lambdas (witness label per line).
Table spectrum_report(const GroupTable& g, unsigned n, WalkKind kind, const Caps& caps);

struct OracleAgreement {
  bool checked = false;
  Rational max_deviation = 0;
};

/// k,l2n_sq,tv_upper_spectral,tv_upper_coupling,l2_lower_dominant,tv_lower_chebyshev.
/// Cells that do not apply to the walk are left empty. With check_oracle the
/// exact convolution law is compared against the spectral sum at every k.
Table distance_report(const GroupTable& g, unsigned n, WalkKind kind, const std::vector<unsigned long>& ks,
                      const Caps& caps, bool check_oracle, OracleAgreement* agreement);

/// walk,group_class,metric,bound,formula,steps for the requested walk and metric
/// (empty metric: both).
Table threshold_report(const GroupTable& g, unsigned n, WalkKind kind, const std::string& metric);

/// k,tv,l1,l2_sq,l2n_sq,identity_mass,tv_float,l2n_sq_float from exact convolution.
Table oracle_report(const GroupTable& g, unsigned n, WalkKind kind, const std::vector<unsigned long>& ks,
                    const Caps& caps);

/// horizon,mode,tv_empirical,stderr,tv_exact,trials,seed,rng.
Table simulate_report(const GroupTable& g, unsigned n, WalkKind kind, const std::vector<double>& horizons,
                      SimMode mode, std::uint64_t trials, std::uint64_t seed, const Caps& caps);

/// c,threshold,empirical_tail,limit,stderr,trials,seed. Paired: continuous-time
/// graph experiment (statistic "T" or "Tstar"). Independent: discrete coupling
/// time against n (1 - 1/n)^{2k}.
Table coupling_report(unsigned n, WalkKind kind, const std::vector<double>& c_values, std::uint64_t trials,
                      std::uint64_t seed, const std::string& statistic);

/// Exact law after a Poisson(t) number of steps, truncated once the remaining
/// Poisson mass is below 1e-17.
std::vector<double> continuized_law(const GroupTable& g, unsigned n, WalkKind kind, double t, const Caps& caps);

}  // namespace wreath
