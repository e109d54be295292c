#pragma once

#include <string>
#include <vector>

#include "wreath/numeric.hpp"

namespace wreath {

/// Weakly decreasing positive parts. The empty partition has size 0.
using Partition = std::vector<unsigned>;

unsigned partition_size(const Partition& lambda);
bool is_partition(const Partition& lambda);

/// Reverse lexicographic order: [n] first, [1,...,1] last.
std::vector<Partition> enumerate_partitions(unsigned n);
BigInt partition_count(unsigned n);

/// n! det(1/(lambda_i - i + j)!) evaluated exactly.
BigInt dim_partition(const Partition& lambda);
/// n! / prod(hook lengths).
BigInt dim_hook_length(const Partition& lambda);
/// ln of the dimension via hook lengths, in floating point.
long double log_dim(const Partition& lambda);

/// Sum over cells of (column - row), 0-based.
long long content_sum(const Partition& lambda);
/// chi(transposition) / dim = 2 * content / (n (n - 1)); requires n >= 2.
Rational r_of_partition(const Partition& lambda);

Partition conjugate_partition(const Partition& lambda);
/// lambda >= mu in dominance order (same size required).
bool dominates(const Partition& lambda, const Partition& mu);

/// Character of the irrep lambda on the class of cycle type mu (Murnaghan-Nakayama).
BigInt mn_character(const Partition& lambda, const Partition& mu);
/// Centralizer order z_mu = prod_j j^{m_j} m_j!.
BigInt centralizer_order(const Partition& mu);
/// Number of permutations with cycle type mu.
BigInt cycle_class_size(const Partition& mu);

/// "3.1"; empty partition is "-".
std::string format_partition(const Partition& lambda);
Partition parse_partition(const std::string& text);

}  // namespace wreath
