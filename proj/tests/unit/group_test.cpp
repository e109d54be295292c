#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "wreath/group.hpp"
#include "wreath/oracle.hpp"
#include "wreath/wreath_classes.hpp"

namespace wreath {
namespace {

TEST(Group, CyclicTable) {
  const GroupTable z5 = cyclic_group(5);
  EXPECT_EQ(z5.order, 5u);
  EXPECT_TRUE(z5.is_abelian());
  EXPECT_EQ(z5.mul(3, 4), 2u);
  EXPECT_EQ(z5.inv[2], 3u);
  EXPECT_NO_THROW(validate_table(z5, true));
  ASSERT_TRUE(z5.char_table.has_value());
  EXPECT_NO_THROW(validate_char_table(z5, *z5.char_table));
}

TEST(Group, SymmetricTables) {
  const unsigned long orders[] = {1, 1, 2, 6, 24, 120, 720};
  const std::size_t classes[] = {1, 1, 2, 3, 5, 7, 11};
  for (unsigned m = 1; m <= 6; ++m) {
    const GroupTable g = symmetric_group(m);
    EXPECT_EQ(g.order, orders[m]);
    EXPECT_EQ(g.class_count(), classes[m]);
    EXPECT_EQ(g.is_abelian(), m <= 2);
    if (m <= 4) EXPECT_NO_THROW(validate_table(g, true));
    ASSERT_TRUE(g.char_table.has_value());
    EXPECT_NO_THROW(validate_char_table(g, *g.char_table));
    EXPECT_TRUE(g.integral_characters());
  }
  const auto dims = symmetric_group(3).irrep_dims();
  EXPECT_EQ(dims, (std::vector<BigInt>{1, 2, 1}));
}

TEST(Group, SpecParsing) {
  EXPECT_EQ(build_group("Z:7").order, 7u);
  EXPECT_EQ(build_group("S:4").order, 24u);
  EXPECT_THROW(build_group("Q:8"), ValidationError);
  EXPECT_THROW(build_group("S:7"), std::exception);
  GroupOptions small;
  small.max_order = 10;
  EXPECT_THROW(build_group("Z:11", small), CapExceeded);
}

TEST(Group, DocumentValidation) {
  EXPECT_EQ(parse_group_document(R"({"order": 2, "mult": [[0, 1], [1, 0]]})").order, 2u);
  // Not associative: a Latin square with identity 0 that is not a group.
  const char* bad = R"({"order": 5, "mult": [[0,1,2,3,4],[1,0,3,4,2],[2,4,0,1,3],[3,2,4,0,1],[4,3,1,2,0]]})";
  EXPECT_THROW(parse_group_document(bad), ValidationError);
  EXPECT_THROW(parse_group_document(R"({"order": 2, "mult": [[0, 1], [1, 1]]})"), ValidationError);
  EXPECT_THROW(parse_group_document("{not json"), ValidationError);
  EXPECT_THROW(parse_group_document(R"({"order": 2})"), ValidationError);
}

TEST(Group, GeneratingSetSpans) {
  const GroupTable g = symmetric_group(4);
  const auto gens = generating_set(g);
  std::set<Element> seen{0};
  std::vector<Element> frontier{0};
  while (!frontier.empty()) {
    Element x = frontier.back();
    frontier.pop_back();
    for (Element s : gens)
      if (seen.insert(g.mul(s, x)).second) frontier.push_back(g.mul(s, x));
  }
  EXPECT_EQ(seen.size(), g.order);
}

TEST(Permutations, RankRoundTripAndComposition) {
  for (std::uint64_t r = 0; r < 120; ++r) {
    const Permutation p = permutation_unrank(r, 5);
    EXPECT_EQ(permutation_rank(p), r);
    EXPECT_EQ(compose(p, inverse(p)), identity_permutation(5));
  }
  const Permutation sigma{1, 2, 0, 3};  // 0->1->2->0
  EXPECT_EQ(cycle_type(sigma), (std::vector<unsigned>{3, 1}));
  const Permutation tau{1, 0, 2, 3};
  // (sigma after tau)(0) = sigma(1) = 2.
  EXPECT_EQ(compose(sigma, tau)[0], 2u);
}

class WreathFixture : public ::testing::TestWithParam<std::pair<std::string, unsigned>> {};

TEST_P(WreathFixture, TableIsAGroupWithMatchingIndexing) {
  const auto [spec, n] = GetParam();
  const GroupTable base = build_group(spec);
  const GroupTable w = build_wreath_table(base, n);
  ASSERT_EQ(w.order, *wreath_order(base.order, n));
  EXPECT_NO_THROW(validate_table(w, w.order <= 100));
  for (std::uint64_t a = 0; a < w.order; a += 7) {
    const WreathElement x = wreath_from_index(a, base.order, n);
    EXPECT_EQ(wreath_index(x, base.order), a);
    EXPECT_EQ(wreath_index(wreath_inverse(x, base), base.order), w.inv[a]);
    for (std::uint64_t b = 0; b < w.order; b += 11) {
      const WreathElement y = wreath_from_index(b, base.order, n);
      EXPECT_EQ(wreath_index(wreath_multiply(x, y, base), base.order), w.mul(a, b));
    }
  }
}

// Conjugacy classes by orbit closure under conjugation by every element.
std::vector<std::set<std::uint64_t>> orbit_classes(const GroupTable& w) {
  std::vector<int> assigned(w.order, -1);
  std::vector<std::set<std::uint64_t>> out;
  for (std::uint64_t x = 0; x < w.order; ++x) {
    if (assigned[x] >= 0) continue;
    std::set<std::uint64_t> cls;
    for (std::uint64_t g = 0; g < w.order; ++g) cls.insert(w.mul(w.mul(g, x), w.inv[g]));
    for (auto y : cls) assigned[y] = static_cast<int>(out.size());
    out.push_back(std::move(cls));
  }
  return out;
}

TEST_P(WreathFixture, TypeMatrixIsACompleteClassInvariant) {
  const auto [spec, n] = GetParam();
  const GroupTable base = build_group(spec);
  const GroupTable w = build_wreath_table(base, n);
  const auto classes = orbit_classes(w);
  EXPECT_EQ(BigInt(static_cast<unsigned long>(classes.size())), class_count(base, n));
  EXPECT_EQ(classes.size(), brute_force_class_count(base, n));
  std::map<TypeMatrix, std::size_t> seen;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    std::set<TypeMatrix> types;
    for (auto x : classes[c]) types.insert(type_matrix(wreath_from_index(x, base.order, n), base));
    ASSERT_EQ(types.size(), 1u);
    EXPECT_TRUE(seen.emplace(*types.begin(), c).second);
    EXPECT_EQ(class_size(*types.begin(), base), BigInt(static_cast<unsigned long>(classes[c].size())));
  }
}

TEST_P(WreathFixture, SupportClassesCoverSupport) {
  const auto [spec, n] = GetParam();
  const GroupTable base = build_group(spec);
  BigInt total = 0;
  for (const SupportClass& c : support_classes(base, n)) total += c.size;
  // identity, n (|G| - 1) single coordinate changes, C(n,2) |G|^2 transpositions
  // with both swapped coordinates free.
  const long g = static_cast<long>(base.order);
  EXPECT_EQ(total, 1 + static_cast<long>(n) * (g - 1) + static_cast<long>(n * (n - 1) / 2) * g * g);
}

INSTANTIATE_TEST_SUITE_P(Small, WreathFixture,
                         ::testing::Values(std::make_pair(std::string("Z:2"), 2u), std::make_pair(std::string("Z:2"), 3u),
                                           std::make_pair(std::string("Z:3"), 3u), std::make_pair(std::string("S:3"), 2u),
                                           std::make_pair(std::string("Z:4"), 2u)));

TEST(WreathClasses, ClassCountFormula) {
  // Hyperoctahedral class numbers: pairs of partitions (a, b) with |a| + |b| = n.
  const unsigned long bn[] = {1, 2, 5, 10, 20, 36, 65, 110, 185, 300, 481};
  for (unsigned n = 0; n <= 10; ++n) EXPECT_EQ(class_count(2, n), bn[n]) << n;
}

}  // namespace
}  // namespace wreath
