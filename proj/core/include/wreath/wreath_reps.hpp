#pragma once

#include <complex>
#include <string>
#include <vector>

#include "wreath/group.hpp"
#include "wreath/numeric.hpp"
#include "wreath/partitions.hpp"

namespace wreath {

/// Irrep of G wr S_n: a type composition (n_1..n_s) and one partition of n_j per irrep of G.
/// Slot 0 corresponds to the trivial irrep of G.
struct IrrepLabel {
  std::vector<unsigned> type_comp;
  std::vector<Partition> parts;

  bool operator==(const IrrepLabel&) const = default;
  bool is_trivial() const;
};

/// "n1.n2|lambda1|lambda2", partitions in dot notation.
std::string format_label(const IrrepLabel& label);

/// Compositions in descending lexicographic order, then partitions slot by slot
/// (slot 0 most significant) in reverse lexicographic order.
std::vector<IrrepLabel> enumerate_labels(const GroupTable& g, unsigned n, std::size_t max_labels = 2000000);

BigInt irrep_dimension(const IrrepLabel& label, const std::vector<BigInt>& base_dims);
BigInt irrep_dimension(const IrrepLabel& label, const GroupTable& g);

/// Character value: exact Gaussian rational when the base table is integral, else floating point.
struct CharValue {
  bool exact = true;
  Rational re = 0;
  Rational im = 0;
  std::complex<long double> approx{0.0L, 0.0L};

  static CharValue from_exact(const Rational& re, const Rational& im);
  static CharValue from_float(std::complex<long double> z);

  void add_scaled(const CharValue& v, const Rational& w);
  CharValue scaled(const Rational& w) const;
  std::complex<long double> value() const;
  std::string str() const;
};

/// Characters on the support classes; index k is the G-class of the changed
/// coordinate (chi_u) or of the transposition cycle product (chi_v).
/// chi_u[0] is the identity value, i.e. the dimension.
struct SupportCharacter {
  BigInt dim;
  std::vector<CharValue> chi_u;
  std::vector<CharValue> chi_v;
};

SupportCharacter support_characters(const IrrepLabel& label, const GroupTable& g);

}  // namespace wreath
