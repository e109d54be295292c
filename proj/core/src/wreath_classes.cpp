#include "wreath/wreath_classes.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "wreath/partitions.hpp"

namespace wreath {

std::vector<CycleProduct> cycle_products(const WreathElement& w, const GroupTable& g) {
  const std::size_t n = w.perm.size();
  Permutation pinv = inverse(w.perm);
  std::vector<char> seen(n, 0);
  std::vector<CycleProduct> out;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    Element product = 0;
    unsigned length = 0;
    for (std::size_t i = start; !seen[i]; i = pinv[i]) {
      seen[i] = 1;
      product = g.mul(product, w.coords[i]);
      ++length;
    }
    out.push_back({length, g.class_of[product]});
  }
  return out;
}

unsigned TypeMatrix::at(std::size_t i, unsigned j) const {
  for (const auto& [ci, cj, a] : entries)
    if (ci == i && cj == j) return a;
  return 0;
}

TypeMatrix type_matrix(const WreathElement& w, const GroupTable& g) {
  std::map<std::pair<std::size_t, unsigned>, unsigned> counts;
  for (const auto& cp : cycle_products(w, g)) ++counts[{cp.g_class, cp.length}];
  TypeMatrix t;
  t.s = g.class_count();
  t.n = static_cast<unsigned>(w.perm.size());
  for (const auto& [key, a] : counts) t.entries.emplace_back(key.first, key.second, a);
  return t;
}

std::string format_type_matrix(const TypeMatrix& t) {
  std::string out;
  for (const auto& [i, j, a] : t.entries) {
    if (!out.empty()) out += " ";
    out += "a" + std::to_string(i + 1) + "," + std::to_string(j) + "=" + std::to_string(a);
  }
  return out;
}

BigInt class_count(std::size_t s, unsigned n) {
  std::vector<BigInt> p(n + 1);
  for (unsigned i = 0; i <= n; ++i) p[i] = partition_count(i);
  std::vector<BigInt> ways(n + 1, 0);
  ways[0] = 1;
  for (std::size_t slot = 0; slot < s; ++slot) {
    std::vector<BigInt> next(n + 1, 0);
    for (unsigned used = 0; used <= n; ++used) {
      if (ways[used] == 0) continue;
      for (unsigned a = 0; used + a <= n; ++a) next[used + a] += ways[used] * p[a];
    }
    ways.swap(next);
  }
  return ways[n];
}

BigInt class_count(const GroupTable& g, unsigned n) { return class_count(g.class_count(), n); }

BigInt class_size(const TypeMatrix& t, const GroupTable& g) {
  const BigInt order(static_cast<unsigned long>(g.order));
  Rational denom = 1;
  for (const auto& [i, j, a] : t.entries) {
    Rational base(order * j, BigInt(static_cast<unsigned long>(g.class_size(i))));
    base.canonicalize();
    denom *= pow(base, a) * Rational(factorial(a));
  }
  Rational size = Rational(pow(order, t.n) * factorial(t.n)) / denom;
  size.canonicalize();
  if (size.get_den() != 1) throw std::logic_error("class size is not an integer");
  return size.get_num();
}

TypeMatrix SupportClass::type(std::size_t s, unsigned n) const {
  TypeMatrix t;
  t.s = s;
  t.n = n;
  switch (kind) {
    case Kind::Identity:
      t.entries.emplace_back(0, 1, n);
      break;
    case Kind::Coordinate:
      if (n > 1) t.entries.emplace_back(0, 1, n - 1);
      t.entries.emplace_back(k, 1, 1);
      break;
    case Kind::Transposition:
      if (n > 2) t.entries.emplace_back(0, 1, n - 2);
      t.entries.emplace_back(k, 2, 1);
      break;
  }
  std::sort(t.entries.begin(), t.entries.end());
  return t;
}

std::vector<SupportClass> support_classes(const GroupTable& g, unsigned n) {
  if (n < 2) throw std::invalid_argument("support classes need n >= 2");
  const std::size_t s = g.class_count();
  const BigInt order(static_cast<unsigned long>(g.order));
  std::vector<SupportClass> out;
  out.push_back({SupportClass::Kind::Identity, 0, 1, "e"});
  for (std::size_t k = 1; k < s; ++k) {
    BigInt size = BigInt(n) * static_cast<unsigned long>(g.class_size(k));
    out.push_back({SupportClass::Kind::Coordinate, k, size, "u" + std::to_string(k)});
  }
  for (std::size_t k = 0; k < s; ++k) {
    BigInt size = BigInt(n) * (n - 1) / 2 * order * static_cast<unsigned long>(g.class_size(k));
    out.push_back({SupportClass::Kind::Transposition, k, size, "v" + std::to_string(k)});
  }
  return out;
}

}  // namespace wreath
