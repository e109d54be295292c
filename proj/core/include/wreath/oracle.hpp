#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "wreath/group.hpp"
#include "wreath/numeric.hpp"

namespace wreath {

// Brute-force reference computations on explicit group tables. Nothing here
// depends on the spectral or bound modules; the step law is rebuilt from the
// card procedure itself.

enum class OracleWalk { Sym, Independent, Paired };

using Distribution = std::vector<Rational>;

/// One-step law on build_wreath_table(base, n) obtained by enumerating every
/// (p, q, randomization) outcome of the shuffle. For Sym the base group must be Z:1.
Distribution procedural_measure(const GroupTable& base, unsigned n, OracleWalk walk);

/// entry(g, h) = P(h g^-1), stored as integer numerators over a common denominator.
/// Rows are kept sparse; the interface is that of a dense matrix.
struct TransitionMatrix {
  std::size_t order = 0;
  BigInt denominator = 1;
  std::vector<std::vector<std::pair<std::size_t, BigInt>>> rows;

  Rational entry(std::size_t g, std::size_t h) const;
  Rational row_sum(std::size_t g) const;
  Rational trace() const;
};

TransitionMatrix build_transition_matrix(const GroupTable& table, const Distribution& measure,
                                         std::size_t max_order = 5000);
bool is_symmetric(const TransitionMatrix& m);
bool is_doubly_stochastic(const TransitionMatrix& m);

/// Law of the walk after k steps from the identity, by sparse convolution.
Distribution convolution_power(const GroupTable& table, const Distribution& measure, unsigned k);
/// All powers 0..k_max.
std::vector<Distribution> convolution_powers(const GroupTable& table, const Distribution& measure, unsigned k_max);

struct Distances {
  Rational tv;
  Rational l1;
  Rational l2_sq;
  Rational l2n_sq;  // order * l2_sq
  double l2;
};

/// Distances to the uniform distribution; tv = l1 / 2.
Distances exact_distances(const Distribution& dist);

struct TraceReport {
  std::vector<Rational> traces;    // tr(M^k)
  std::vector<Rational> spectral;  // sum mult value^k
  std::vector<Rational> deviation;
  Rational max_deviation = 0;
};

/// Compares tr(M^k), from repeated exact multiplication, with sum mult * value^k for k = 0..k_max.
TraceReport trace_moment_check(const TransitionMatrix& m, const std::vector<std::pair<Rational, BigInt>>& lines,
                               unsigned k_max);

/// Conjugacy classes of G wr S_n by union-find over structured elements, as lists of wreath_index values.
std::vector<std::vector<std::uint64_t>> brute_force_classes(const GroupTable& base, unsigned n,
                                                            std::uint64_t max_order = 200000);
std::size_t brute_force_class_count(const GroupTable& base, unsigned n, std::uint64_t max_order = 200000);

}  // namespace wreath
