#include "wreath/group.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "wreath/partitions.hpp"

namespace wreath {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::complex<double> root_of_unity(unsigned numerator, unsigned m) {
  unsigned r = numerator % m;
  if ((4u * r) % m == 0) {
    switch ((4u * r) / m) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  double angle = 2.0 * kPi * static_cast<double>(r) / static_cast<double>(m);
  return {std::cos(angle), std::sin(angle)};
}

void fill_inverses(GroupTable& g) {
  g.inv.assign(g.order, 0);
  for (std::size_t a = 0; a < g.order; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < g.order; ++b) {
      if (g.mul(static_cast<Element>(a), static_cast<Element>(b)) == 0) {
        g.inv[a] = static_cast<Element>(b);
        found = true;
        break;
      }
    }
    if (!found) throw ValidationError("element " + std::to_string(a) + " has no inverse");
  }
}

std::vector<Element> closure(const GroupTable& g, const std::vector<Element>& gens) {
  std::vector<char> seen(g.order, 0);
  std::vector<Element> members{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (Element h : gens) {
      Element p = g.mul(members[head], h);
      if (!seen[p]) {
        seen[p] = 1;
        members.push_back(p);
      }
    }
  }
  return members;
}

}  // namespace

std::vector<BigInt> GroupTable::irrep_dims() const {
  if (!char_table) throw ValidationError("group " + spec + " has no character table");
  std::vector<BigInt> dims;
  dims.reserve(char_table->size());
  for (const auto& row : *char_table) dims.emplace_back(static_cast<long>(std::llround(row.front().real())));
  return dims;
}

bool GroupTable::integral_characters() const {
  if (!char_table) return false;
  for (const auto& row : *char_table) {
    for (const auto& z : row) {
      if (std::fabs(z.real() - std::round(z.real())) > 1e-12) return false;
      if (std::fabs(z.imag() - std::round(z.imag())) > 1e-12) return false;
    }
  }
  return true;
}

std::vector<Element> generating_set(const GroupTable& g) {
  std::vector<Element> gens;
  std::vector<char> in_span(g.order, 0);
  in_span[0] = 1;
  for (std::size_t x = 1; x < g.order; ++x) {
    if (in_span[x]) continue;
    gens.push_back(static_cast<Element>(x));
    for (Element m : closure(g, gens)) in_span[m] = 1;
  }
  return gens;
}

std::vector<std::vector<Element>> conjugacy_classes(const GroupTable& g) {
  std::vector<Element> gens = generating_set(g);
  std::vector<long> class_id(g.order, -1);
  std::vector<std::vector<Element>> classes;
  for (std::size_t x = 0; x < g.order; ++x) {
    if (class_id[x] >= 0) continue;
    long id = static_cast<long>(classes.size());
    std::vector<Element> members{static_cast<Element>(x)};
    class_id[x] = id;
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (Element h : gens) {
        Element c = g.mul(g.mul(h, members[head]), g.inv[h]);
        if (class_id[c] < 0) {
          class_id[c] = id;
          members.push_back(c);
        }
      }
    }
    std::sort(members.begin(), members.end());
    classes.push_back(std::move(members));
  }
  return classes;
}

void assign_classes(GroupTable& g) {
  g.classes = conjugacy_classes(g);
  g.class_of.assign(g.order, 0);
  for (std::size_t k = 0; k < g.classes.size(); ++k)
    for (Element x : g.classes[k]) g.class_of[x] = k;
}

void validate_table(const GroupTable& g, bool exhaustive_associativity) {
  const std::size_t n = g.order;
  if (n == 0) throw ValidationError("order must be positive");
  if (g.mult.size() != n * n) throw ValidationError("multiplication table must be order x order");
  for (Element v : g.mult)
    if (v >= n) throw ValidationError("table entry out of range");
  for (std::size_t a = 0; a < n; ++a) {
    if (g.mul(0, static_cast<Element>(a)) != a || g.mul(static_cast<Element>(a), 0) != a)
      throw ValidationError("element 0 is not an identity");
  }
  std::vector<char> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      Element p = g.mul(static_cast<Element>(a), static_cast<Element>(b));
      if (seen[p]) throw ValidationError("row " + std::to_string(a) + " repeats an entry");
      seen[p] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      Element p = g.mul(static_cast<Element>(b), static_cast<Element>(a));
      if (seen[p]) throw ValidationError("column " + std::to_string(a) + " repeats an entry");
      seen[p] = 1;
    }
  }
  std::vector<Element> middles;
  if (exhaustive_associativity) {
    middles.resize(n);
    std::iota(middles.begin(), middles.end(), Element{0});
  } else {
    // Light's test: elements associating in the middle position form a closed set.
    middles = generating_set(g);
    if (closure(g, middles).size() != n) throw ValidationError("generating set does not span the table");
  }
  for (Element a : middles) {
    for (std::size_t x = 0; x < n; ++x) {
      Element xa = g.mul(static_cast<Element>(x), a);
      for (std::size_t y = 0; y < n; ++y) {
        if (g.mul(xa, static_cast<Element>(y)) != g.mul(static_cast<Element>(x), g.mul(a, static_cast<Element>(y))))
          throw ValidationError("multiplication is not associative at (" + std::to_string(x) + "," +
                                std::to_string(a) + "," + std::to_string(y) + ")");
      }
    }
  }
  if (!g.inv.empty()) {
    for (std::size_t a = 0; a < n; ++a)
      if (g.mul(static_cast<Element>(a), g.inv[a]) != 0) throw ValidationError("inverse table is wrong");
  }
}

void validate_char_table(const GroupTable& g, const CharTable& table, double tolerance) {
  const std::size_t s = g.classes.size();
  if (table.size() != s) throw ValidationError("character table must have one row per class");
  for (const auto& row : table)
    if (row.size() != s) throw ValidationError("character table must have one column per class");
  for (const auto& z : table[0])
    if (std::abs(z - std::complex<double>(1.0, 0.0)) > tolerance)
      throw ValidationError("character table row 0 must be the trivial character");
  double dim_square_sum = 0.0;
  for (const auto& row : table) {
    double d = row[0].real();
    if (std::fabs(row[0].imag()) > tolerance || d < 0.5 || std::fabs(d - std::round(d)) > tolerance)
      throw ValidationError("character degree is not a positive integer");
    dim_square_sum += d * d;
  }
  const double order = static_cast<double>(g.order);
  if (std::fabs(dim_square_sum - order) > tolerance * order)
    throw ValidationError("sum of squared degrees differs from the group order");
  for (std::size_t r = 0; r < s; ++r) {
    for (std::size_t t = r; t < s; ++t) {
      std::complex<double> acc = 0.0;
      for (std::size_t k = 0; k < s; ++k)
        acc += static_cast<double>(g.classes[k].size()) * table[r][k] * std::conj(table[t][k]);
      double expected = r == t ? order : 0.0;
      if (std::abs(acc - expected) > tolerance * order)
        throw ValidationError("character rows " + std::to_string(r) + " and " + std::to_string(t) +
                              " fail orthogonality");
    }
  }
}

GroupTable cyclic_group(unsigned m) {
  if (m < 1) throw ValidationError("Z:m requires m >= 1");
  GroupTable g;
  g.spec = "Z:" + std::to_string(m);
  g.order = m;
  g.mult.resize(static_cast<std::size_t>(m) * m);
  for (unsigned a = 0; a < m; ++a)
    for (unsigned b = 0; b < m; ++b) g.mult[static_cast<std::size_t>(a) * m + b] = (a + b) % m;
  g.inv.resize(m);
  for (unsigned a = 0; a < m; ++a) g.inv[a] = (m - a) % m;
  for (unsigned a = 0; a < m; ++a) g.labels.push_back(std::to_string(a));
  assign_classes(g);
  CharTable table(m, std::vector<std::complex<double>>(m));
  for (unsigned j = 0; j < m; ++j)
    for (unsigned k = 0; k < m; ++k) table[j][k] = root_of_unity(j * k, m);
  g.char_table = std::move(table);
  return g;
}

GroupTable symmetric_group(unsigned m) {
  if (m < 1 || m > 6) throw ValidationError("S:m requires 1 <= m <= 6");
  GroupTable g;
  g.spec = "S:" + std::to_string(m);
  std::uint64_t order = 1;
  for (unsigned i = 2; i <= m; ++i) order *= i;
  g.order = order;
  std::vector<Permutation> perms;
  perms.reserve(order);
  for (std::uint64_t r = 0; r < order; ++r) perms.push_back(permutation_unrank(r, m));
  g.mult.resize(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      g.mult[a * order + b] = static_cast<Element>(permutation_rank(compose(perms[a], perms[b])));
  g.inv.resize(order);
  for (std::size_t a = 0; a < order; ++a) g.inv[a] = static_cast<Element>(permutation_rank(inverse(perms[a])));
  for (const auto& p : perms) g.labels.push_back(cycle_notation(p));
  assign_classes(g);
  std::vector<Partition> irreps = enumerate_partitions(m);
  CharTable table(irreps.size(), std::vector<std::complex<double>>(g.classes.size()));
  for (std::size_t i = 0; i < irreps.size(); ++i) {
    for (std::size_t k = 0; k < g.classes.size(); ++k) {
      Partition mu = cycle_type(perms[g.classes[k].front()]);
      table[i][k] = {mn_character(irreps[i], mu).get_d(), 0.0};
    }
  }
  g.char_table = std::move(table);
  return g;
}

GroupTable parse_group_document(const std::string& text, const std::string& spec) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("group file is not valid JSON: ") + e.what());
  }
  try {
    GroupTable g;
    g.spec = spec;
    if (!doc.contains("order") || !doc.contains("mult")) throw ValidationError("group file needs 'order' and 'mult'");
    long long order = doc.at("order").get<long long>();
    if (order < 1) throw ValidationError("order must be positive");
    g.order = static_cast<std::size_t>(order);
    const auto& rows = doc.at("mult");
    if (!rows.is_array() || rows.size() != g.order) throw ValidationError("'mult' must have 'order' rows");
    g.mult.reserve(g.order * g.order);
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != g.order) throw ValidationError("'mult' rows must have 'order' entries");
      for (const auto& v : row) {
        long long e = v.get<long long>();
        if (e < 0 || e >= order) throw ValidationError("'mult' entry out of range");
        g.mult.push_back(static_cast<Element>(e));
      }
    }
    if (doc.contains("labels")) {
      const auto& labels = doc.at("labels");
      if (!labels.is_array() || labels.size() != g.order) throw ValidationError("'labels' must have 'order' entries");
      for (const auto& l : labels) g.labels.push_back(l.get<std::string>());
    } else {
      for (std::size_t i = 0; i < g.order; ++i) g.labels.push_back(std::to_string(i));
    }
    validate_table(g, g.order <= 200);
    fill_inverses(g);
    assign_classes(g);
    if (doc.contains("char_table")) {
      CharTable table;
      for (const auto& row : doc.at("char_table")) {
        std::vector<std::complex<double>> values;
        for (const auto& z : row) {
          if (!z.is_array() || z.size() != 2) throw ValidationError("character entries must be [re, im] pairs");
          values.emplace_back(z[0].get<double>(), z[1].get<double>());
        }
        table.push_back(std::move(values));
      }
      validate_char_table(g, table);
      g.char_table = std::move(table);
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed group file: ") + e.what());
  }
}

GroupTable load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open group file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_group_document(buffer.str(), "file:" + path);
}

GroupTable build_group(const std::string& spec, const GroupOptions& options) {
  auto parse_m = [&](const std::string& digits) -> unsigned {
    if (digits.empty() || digits.size() > 9 || !std::all_of(digits.begin(), digits.end(), ::isdigit))
      throw ValidationError("malformed group spec '" + spec + "'");
    return static_cast<unsigned>(std::stoul(digits));
  };
  GroupTable g;
  if (spec.rfind("Z:", 0) == 0) {
    unsigned m = parse_m(spec.substr(2));
    if (m > options.max_order) throw CapExceeded("Z:" + std::to_string(m) + " exceeds --max-order");
    g = cyclic_group(m);
  } else if (spec.rfind("S:", 0) == 0) {
    g = symmetric_group(parse_m(spec.substr(2)));
  } else if (spec.rfind("file:", 0) == 0) {
    g = load_group_file(spec.substr(5));
  } else {
    throw ValidationError("malformed group spec '" + spec + "' (expected Z:m, S:m or file:<path>)");
  }
  if (g.order > options.max_order) throw CapExceeded("group order exceeds --max-order");
  return g;
}

Permutation identity_permutation(unsigned n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

Permutation compose(const Permutation& sigma, const Permutation& pi) {
  Permutation out(pi.size());
  for (std::size_t i = 0; i < pi.size(); ++i) out[i] = sigma[pi[i]];
  return out;
}

Permutation inverse(const Permutation& pi) {
  Permutation out(pi.size());
  for (std::size_t i = 0; i < pi.size(); ++i) out[pi[i]] = static_cast<std::uint32_t>(i);
  return out;
}

std::vector<unsigned> cycle_type(const Permutation& pi) {
  std::vector<unsigned> lengths;
  std::vector<char> seen(pi.size(), 0);
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (seen[i]) continue;
    unsigned len = 0;
    for (std::size_t j = i; !seen[j]; j = pi[j]) {
      seen[j] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

std::uint64_t permutation_rank(const Permutation& pi) {
  const std::size_t n = pi.size();
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      if (pi[j] < pi[i]) ++smaller;
    rank = rank * (n - i) + smaller;
  }
  return rank;
}

Permutation permutation_unrank(std::uint64_t rank, unsigned n) {
  std::vector<std::uint64_t> digits(n, 0);
  for (unsigned i = 0; i < n; ++i) {
    unsigned radix = i + 1;
    digits[n - 1 - i] = rank % radix;
    rank /= radix;
  }
  std::vector<std::uint32_t> pool = identity_permutation(n);
  Permutation out;
  out.reserve(n);
  for (unsigned i = 0; i < n; ++i) {
    out.push_back(pool[digits[i]]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digits[i]));
  }
  return out;
}

std::string cycle_notation(const Permutation& pi) {
  std::string out;
  std::vector<char> seen(pi.size(), 0);
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (seen[i] || pi[i] == i) continue;
    out += "(";
    for (std::size_t j = i; !seen[j]; j = pi[j]) {
      seen[j] = 1;
      if (j != i) out += " ";
      out += std::to_string(j + 1);
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

WreathElement wreath_identity(unsigned n) {
  return WreathElement{std::vector<Element>(n, 0), identity_permutation(n)};
}

WreathElement wreath_multiply(const WreathElement& a, const WreathElement& b, const GroupTable& g) {
  const std::size_t n = a.perm.size();
  if (b.perm.size() != n || a.coords.size() != n || b.coords.size() != n)
    throw ValidationError("wreath elements have mismatched n");
  Permutation sigma_inv = inverse(a.perm);
  WreathElement out;
  out.coords.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.coords[i] = g.mul(a.coords[i], b.coords[sigma_inv[i]]);
  out.perm = compose(a.perm, b.perm);
  return out;
}

WreathElement wreath_inverse(const WreathElement& a, const GroupTable& g) {
  const std::size_t n = a.perm.size();
  WreathElement out;
  out.coords.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.coords[i] = g.inv[a.coords[a.perm[i]]];
  out.perm = inverse(a.perm);
  return out;
}

std::optional<std::uint64_t> wreath_order(std::size_t base_order, unsigned n) {
  unsigned __int128 total = 1;
  const unsigned __int128 limit = static_cast<unsigned __int128>(UINT64_MAX);
  for (unsigned i = 0; i < n; ++i) {
    total *= base_order;
    if (total > limit) return std::nullopt;
  }
  for (unsigned i = 2; i <= n; ++i) {
    total *= i;
    if (total > limit) return std::nullopt;
  }
  return static_cast<std::uint64_t>(total);
}

std::uint64_t wreath_index(const WreathElement& w, std::size_t base_order) {
  std::uint64_t coord_rank = 0;
  for (Element x : w.coords) coord_rank = coord_rank * base_order + x;
  std::uint64_t nfact = 1;
  for (std::size_t i = 2; i <= w.perm.size(); ++i) nfact *= i;
  return coord_rank * nfact + permutation_rank(w.perm);
}

WreathElement wreath_from_index(std::uint64_t index, std::size_t base_order, unsigned n) {
  std::uint64_t nfact = 1;
  for (unsigned i = 2; i <= n; ++i) nfact *= i;
  WreathElement w;
  w.perm = permutation_unrank(index % nfact, n);
  std::uint64_t coord_rank = index / nfact;
  w.coords.assign(n, 0);
  for (unsigned i = n; i-- > 0;) {
    w.coords[i] = static_cast<Element>(coord_rank % base_order);
    coord_rank /= base_order;
  }
  return w;
}

std::string wreath_label(const WreathElement& w, const GroupTable& g) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.coords.size(); ++i) {
    if (i) out += ",";
    out += g.labels.empty() ? std::to_string(w.coords[i]) : g.labels[w.coords[i]];
  }
  return out + ";" + cycle_notation(w.perm) + ")";
}

GroupTable build_wreath_table(const GroupTable& g, unsigned n, const GroupOptions& options) {
  if (n < 1) throw ValidationError("n must be positive");
  auto order = wreath_order(g.order, n);
  if (!order || *order > options.max_order)
    throw CapExceeded("|G|^n n! exceeds the order cap (--max-order " + std::to_string(options.max_order) + ")");
  GroupTable w;
  w.spec = g.spec + " wr S" + std::to_string(n);
  w.order = *order;
  std::vector<WreathElement> elements;
  elements.reserve(w.order);
  for (std::uint64_t i = 0; i < w.order; ++i) elements.push_back(wreath_from_index(i, g.order, n));
  w.mult.resize(w.order * w.order);
  for (std::size_t a = 0; a < w.order; ++a)
    for (std::size_t b = 0; b < w.order; ++b)
      w.mult[a * w.order + b] =
          static_cast<Element>(wreath_index(wreath_multiply(elements[a], elements[b], g), g.order));
  w.inv.resize(w.order);
  for (std::size_t a = 0; a < w.order; ++a)
    w.inv[a] = static_cast<Element>(wreath_index(wreath_inverse(elements[a], g), g.order));
  for (const auto& e : elements) w.labels.push_back(wreath_label(e, g));
  assign_classes(w);
  return w;
}

}  // namespace wreath
