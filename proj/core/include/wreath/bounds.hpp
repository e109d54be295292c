#pragma once

#include <string>
#include <vector>

#include "wreath/group.hpp"
#include "wreath/numeric.hpp"
#include "wreath/walks.hpp"

namespace wreath {

// Throughout, l2n_sq(k) = |G wr S_n| * ||P^{*k} - U||_2^2, the sum over
// nontrivial irreps of d^2 * eigenvalue^{2k}. The TV upper bound is sqrt(l2n_sq)/2.

/// A floating-point sum together with a rigorous bound on omitted terms.
struct BoundedSum {
  long double value = 0.0L;
  long double tail = 0.0L;  // 0 when every term was summed
  long double upper() const { return value + tail; }
};

Rational l2n_sq_spectral_exact(const std::vector<SpectralLine>& lines, unsigned long k);
long double l2n_sq_spectral(const std::vector<SpectralLine>& lines, unsigned long k);

/// Independent walk, summed by (n_1, lambda_1) with the inner multiplicities collapsed.
BoundedSum l2n_sq_collapsed(const BigInt& g_order, unsigned n, unsigned long k);

/// Sum over (n_2..n_s) and (lambda_2..lambda_s) of (n - n_1 choose n_2..n_s)^2 prod_{j>=2} d_j^{2 n_j} d_{lambda_j}^2,
/// by explicit enumeration.
BigInt collapse_inner_sum(const std::vector<BigInt>& base_dims, unsigned n, unsigned n1);

/// Relaxed upper bound on l2n_sq / 4 for the paired walk (includes the delta_n term).
BoundedSum paired_relaxed_bound(const GroupTable& g, unsigned n, unsigned long k);

/// Sum of d^{2n} over nontrivial irreps of G.
BigInt delta_n(const GroupTable& g, unsigned n);
BigInt delta_n(const std::vector<BigInt>& base_dims, unsigned n);

/// Transposition walk on S_n: sum over lambda != [n] of d^2 eigenvalue^{2k}.
BoundedSum sym_l2n_sq(unsigned n, unsigned long k);
double sym_tv_upper(unsigned n, unsigned long k);

/// n (1 - 1/n)^{2k}.
long double coupling_tail_bound(unsigned n, unsigned long k);
/// min(1, sym_tv_upper + n (1 - 1/n)^{2k}).
double tv_upper_coupling(unsigned n, unsigned long k, double sym_tv_upper);

/// Partial l2n_sq sums over label families, each a lower bound: n^2 (|G|-1) (1-1/n)^{4k}
/// (n_1 = n - 1), and for the paired walk sum_j d_j^{2n} ((n-1)/(n d_j))^{2k} (n_j = n, j >= 2).
/// Returns the larger. base_dims lists the irrep degrees of G, trivial first.
long double dominant_term(const std::vector<BigInt>& base_dims, unsigned n, unsigned long k, WalkKind kind);
/// sqrt(dominant_term) / 2.
double tv_lower_dominant(const std::vector<BigInt>& base_dims, unsigned n, unsigned long k, WalkKind kind);

/// Chebyshev moments of chi_[n-1,1] under P^{*k} for the transposition walk.
struct ChebyshevMoments {
  long double mean;
  long double second_moment;
  long double variance;
};
ChebyshevMoments chebyshev_moments(unsigned n, unsigned long k);
/// max over a geometric alpha grid of 1 - 1/alpha^2 - Var/(E - alpha)^2, clamped to [0, 1].
double tv_lower_chebyshev_sym(unsigned n, unsigned long k);

enum class GroupClass { Z2, Zm, Sm, Abelian, Nonabelian };
std::string group_class_name(GroupClass c);
GroupClass classify_group(const GroupTable& g);

struct ThresholdParams {
  unsigned n = 0;
  BigInt g_order = 0;
  std::size_t s = 0;
  BigInt delta = 0;
};
ThresholdParams threshold_params(const GroupTable& g, unsigned n);

struct ThresholdRow {
  WalkKind walk;
  GroupClass group_class;
  std::string metric;  // "l2" or "tv"
  std::string bound;   // "sufficient" or "necessary"
  std::string formula;
  double steps;  // formula evaluated at the given parameters
};

/// All rows of both summary tables: 5 group classes x 2 metrics x 2 bounds per walk.
std::vector<ThresholdRow> threshold_table(const ThresholdParams& params);
/// Rows for one walk and group class.
std::vector<ThresholdRow> threshold_rows(const ThresholdParams& params, WalkKind walk, GroupClass group_class);
/// The sufficient step count for (walk, metric) and the class of g.
double mixing_threshold(const GroupTable& g, unsigned n, WalkKind kind, const std::string& metric);

}  // namespace wreath
