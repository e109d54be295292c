#pragma once

#include <limits>
#include <vector>

#include "wreath/numeric.hpp"

namespace wreath {

// Sums over partitions of m that depend on lambda only through d_lambda^2 and
// the content sum c(lambda). Eigenvalues of the walks studied here are affine
// in c, so grouping partitions by content turns a sum over p(m) terms into a
// sum over O(m^2) terms.

struct ContentProfile {
  unsigned m = 0;
  bool complete = true;  // false: only partitions with a row or column of length >= m - depth
  unsigned depth = 0;
  std::vector<long long> contents;      // ascending
  std::vector<long double> log_dim_sq;  // ln of sum of d^2 over partitions with that content
  // Omitted partitions, bounded jointly: for each entry, |m + 2c| <= tail_numerators[i]
  // on a set whose d^2 sum is at most exp(tail_log_mass[i]).
  std::vector<long double> tail_numerators;
  std::vector<long double> tail_log_mass;
};

/// Largest m whose profile is built by full enumeration.
constexpr unsigned kFullProfileLimit = 60;
/// Depth of the truncated profile for larger m.
constexpr unsigned kProfileDepth = 40;

/// Cached, thread-safe.
const ContentProfile& content_profile(unsigned m);
ContentProfile build_content_profile(unsigned m, unsigned full_limit = kFullProfileLimit,
                                     unsigned depth = kProfileDepth);

struct PowerSum {
  LogAccumulator sum;
  /// ln of a rigorous bound on the omitted partitions; -inf when the profile is complete.
  long double log_tail = -std::numeric_limits<long double>::infinity();
};

/// Sum over lambda |- m of d_lambda^2 ((m + 2 c(lambda)) / denom)^exponent.
/// exclude_trivial drops lambda = [m].
PowerSum content_power_sum(unsigned m, long double denom, unsigned long exponent, bool exclude_trivial);
PowerSum content_power_sum(const ContentProfile& profile, long double denom, unsigned long exponent,
                           bool exclude_trivial);

}  // namespace wreath
