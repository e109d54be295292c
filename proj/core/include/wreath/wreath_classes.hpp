#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "wreath/group.hpp"
#include "wreath/numeric.hpp"

namespace wreath {

struct CycleProduct {
  unsigned length;
  std::size_t g_class;
};

/// One entry per cycle of pi, fixed points included, ordered by smallest member.
/// The product runs x_i x_{pi^-1(i)} x_{pi^-2(i)} ... from the smallest index i.
std::vector<CycleProduct> cycle_products(const WreathElement& w, const GroupTable& g);

/// Sparse s x n type matrix: entries (class i, cycle length j, count a_ij) with a_ij > 0, sorted.
struct TypeMatrix {
  std::size_t s = 0;
  unsigned n = 0;
  std::vector<std::tuple<std::size_t, unsigned, unsigned>> entries;

  unsigned at(std::size_t i, unsigned j) const;
  auto operator<=>(const TypeMatrix&) const = default;
};

TypeMatrix type_matrix(const WreathElement& w, const GroupTable& g);
std::string format_type_matrix(const TypeMatrix& t);

/// Sum over compositions (n_1..n_s) of n of p(n_1)...p(n_s).
BigInt class_count(std::size_t s, unsigned n);
BigInt class_count(const GroupTable& g, unsigned n);

/// |G|^n n! / prod_ij [(j |G| / |C_i|)^{a_ij} a_ij!].
BigInt class_size(const TypeMatrix& t, const GroupTable& g);

/// Support classes of the independent walk: identity, u-classes (coordinate
/// change in class k >= 1, identity permutation), v-classes (transposition with
/// cycle product in class k >= 0). Class indices are 0-based; class 0 is {e}.
struct SupportClass {
  enum class Kind { Identity, Coordinate, Transposition };
  Kind kind;
  std::size_t k;
  BigInt size;
  std::string tag;

  TypeMatrix type(std::size_t s, unsigned n) const;
};

std::vector<SupportClass> support_classes(const GroupTable& g, unsigned n);

}  // namespace wreath
