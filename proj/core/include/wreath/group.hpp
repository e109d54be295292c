#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wreath/numeric.hpp"

namespace wreath {

using Element = std::uint32_t;
using CharTable = std::vector<std::vector<std::complex<double>>>;

/// Finite group given by its multiplication table. Element 0 is the identity.
struct GroupTable {
  std::size_t order = 0;
  std::vector<Element> mult;  // row-major, mult[a * order + b] = a*b
  std::vector<Element> inv;
  std::vector<std::string> labels;
  std::vector<std::vector<Element>> classes;  // class 0 = {identity}
  std::vector<std::size_t> class_of;
  std::optional<CharTable> char_table;  // rows = irreps (row 0 trivial), columns = classes
  std::string spec;

  Element mul(Element a, Element b) const { return mult[static_cast<std::size_t>(a) * order + b]; }
  std::size_t class_count() const { return classes.size(); }
  std::size_t class_size(std::size_t k) const { return classes[k].size(); }
  bool is_abelian() const { return classes.size() == order; }

  /// Irrep degrees read off column 0 of the character table.
  std::vector<BigInt> irrep_dims() const;
  /// True when every character value lies within 1e-12 of a Gaussian integer.
  bool integral_characters() const;
};

struct GroupOptions {
  std::size_t max_order = 5000;
};

/// "Z:m", "S:m" (m <= 6) or "file:<path>".
GroupTable build_group(const std::string& spec, const GroupOptions& options = {});
GroupTable cyclic_group(unsigned m);
GroupTable symmetric_group(unsigned m);
GroupTable load_group_file(const std::string& path);
/// Parses the JSON group-definition document (same schema as group files).
GroupTable parse_group_document(const std::string& text, const std::string& spec = "file");

/// Classes ordered by smallest member; class 0 contains the identity.
std::vector<std::vector<Element>> conjugacy_classes(const GroupTable& g);
void assign_classes(GroupTable& g);

/// Throws ValidationError describing the first failed axiom.
void validate_table(const GroupTable& g, bool exhaustive_associativity);
void validate_char_table(const GroupTable& g, const CharTable& table, double tolerance = 1e-9);

/// A greedy generating set: each element added is outside the subgroup spanned so far.
std::vector<Element> generating_set(const GroupTable& g);

// Permutations are 0-based images: perm[i] = pi(i). Composition is right to left.
using Permutation = std::vector<std::uint32_t>;

Permutation identity_permutation(unsigned n);
Permutation compose(const Permutation& sigma, const Permutation& pi);  // sigma after pi
Permutation inverse(const Permutation& pi);
/// Cycle lengths sorted decreasingly.
std::vector<unsigned> cycle_type(const Permutation& pi);
/// Lexicographic rank among all permutations of the same size.
std::uint64_t permutation_rank(const Permutation& pi);
Permutation permutation_unrank(std::uint64_t rank, unsigned n);
std::string cycle_notation(const Permutation& pi);

/// An element (x; pi) of G wr S_n.
struct WreathElement {
  std::vector<Element> coords;
  Permutation perm;

  bool operator==(const WreathElement&) const = default;
};

WreathElement wreath_identity(unsigned n);
/// (y; sigma)(x; pi) = (y_i x_{sigma^-1(i)}; sigma pi).
WreathElement wreath_multiply(const WreathElement& a, const WreathElement& b, const GroupTable& g);
/// (x; pi)^-1 = (x_{pi(i)}^-1; pi^-1).
WreathElement wreath_inverse(const WreathElement& a, const GroupTable& g);

/// Index of an element in build_wreath_table order: coords major (coords[0] most significant), perm minor.
std::uint64_t wreath_index(const WreathElement& w, std::size_t base_order);
WreathElement wreath_from_index(std::uint64_t index, std::size_t base_order, unsigned n);
/// |G|^n n!, or nullopt on 64-bit overflow.
std::optional<std::uint64_t> wreath_order(std::size_t base_order, unsigned n);

std::string wreath_label(const WreathElement& w, const GroupTable& g);

GroupTable build_wreath_table(const GroupTable& g, unsigned n, const GroupOptions& options = {});

}  // namespace wreath
