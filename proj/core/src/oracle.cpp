#include "wreath/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace wreath {

namespace {

BigInt lcm_of_denominators(const Distribution& measure) {
  BigInt l = 1;
  for (const auto& p : measure) {
    if (p == 0) continue;
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), p.get_den_mpz_t());
  }
  return l;
}

std::vector<std::pair<std::size_t, BigInt>> scaled_support(const Distribution& measure, const BigInt& denom) {
  std::vector<std::pair<std::size_t, BigInt>> out;
  for (std::size_t s = 0; s < measure.size(); ++s) {
    if (measure[s] == 0) continue;
    Rational scaled = measure[s] * Rational(denom);
    out.emplace_back(s, BigInt(scaled.get_num()));
  }
  return out;
}

struct UnionFind {
  std::vector<std::uint64_t> parent;
  explicit UnionFind(std::uint64_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::uint64_t{0}); }
  std::uint64_t find(std::uint64_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::uint64_t a, std::uint64_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) parent[b] = a;
    else parent[a] = b;
  }
};

}  // namespace

Distribution procedural_measure(const GroupTable& base, unsigned n, OracleWalk walk) {
  if (walk == OracleWalk::Sym && base.order != 1) throw ValidationError("the transposition walk uses the trivial base group");
  if (n < 1) throw ValidationError("n must be positive");
  auto total = wreath_order(base.order, n);
  if (!total) throw CapExceeded("wreath group too large for the oracle");
  Distribution law(*total, Rational(0));
  const std::size_t m = base.order;
  const Rational pick = frac(1, BigInt(n) * n);
  for (unsigned p = 0; p < n; ++p) {
    for (unsigned q = 0; q < n; ++q) {
      if (p == q) {
        // Randomize deck p only.
        const Rational w = pick * frac(1, BigInt(static_cast<unsigned long>(m)));
        for (std::size_t g = 0; g < m; ++g) {
          WreathElement e = wreath_identity(n);
          e.coords[p] = static_cast<Element>(g);
          law[wreath_index(e, m)] += w;
        }
        continue;
      }
      Permutation tau = identity_permutation(n);
      std::swap(tau[p], tau[q]);
      if (walk == OracleWalk::Paired) {
        const Rational w = pick * frac(1, BigInt(static_cast<unsigned long>(m)));
        for (std::size_t g = 0; g < m; ++g) {
          WreathElement e{std::vector<Element>(n, 0), tau};
          e.coords[p] = static_cast<Element>(g);
          e.coords[q] = base.inv[g];
          law[wreath_index(e, m)] += w;
        }
      } else {
        const Rational w = pick * frac(1, BigInt(static_cast<unsigned long>(m * m)));
        for (std::size_t g = 0; g < m; ++g) {
          for (std::size_t h = 0; h < m; ++h) {
            WreathElement e{std::vector<Element>(n, 0), tau};
            e.coords[p] = static_cast<Element>(g);
            e.coords[q] = static_cast<Element>(h);
            law[wreath_index(e, m)] += w;
          }
        }
      }
    }
  }
  return law;
}

Rational TransitionMatrix::entry(std::size_t g, std::size_t h) const {
  for (const auto& [col, v] : rows[g])
    if (col == h) return frac(v, denominator);
  return 0;
}

Rational TransitionMatrix::row_sum(std::size_t g) const {
  BigInt acc = 0;
  for (const auto& [col, v] : rows[g]) acc += v;
  return frac(acc, denominator);
}

Rational TransitionMatrix::trace() const {
  BigInt acc = 0;
  for (std::size_t g = 0; g < order; ++g)
    for (const auto& [col, v] : rows[g])
      if (col == g) acc += v;
  return frac(acc, denominator);
}

TransitionMatrix build_transition_matrix(const GroupTable& table, const Distribution& measure, std::size_t max_order) {
  if (table.order > max_order) throw CapExceeded("transition matrix exceeds the order cap");
  if (measure.size() != table.order) throw ValidationError("measure size does not match the table");
  TransitionMatrix m;
  m.order = table.order;
  m.denominator = lcm_of_denominators(measure);
  const auto support = scaled_support(measure, m.denominator);
  m.rows.resize(table.order);
  for (std::size_t g = 0; g < table.order; ++g) {
    // entry(g, h) = P(h g^-1), nonzero exactly when h = s g for s in the support.
    for (const auto& [s, v] : support) m.rows[g].emplace_back(table.mul(static_cast<Element>(s), static_cast<Element>(g)), v);
    std::sort(m.rows[g].begin(), m.rows[g].end());
  }
  return m;
}

bool is_symmetric(const TransitionMatrix& m) {
  for (std::size_t g = 0; g < m.order; ++g)
    for (const auto& [h, v] : m.rows[g])
      if (m.entry(h, g) != frac(v, m.denominator)) return false;
  return true;
}

bool is_doubly_stochastic(const TransitionMatrix& m) {
  std::vector<BigInt> col(m.order, 0);
  for (std::size_t g = 0; g < m.order; ++g) {
    if (m.row_sum(g) != 1) return false;
    for (const auto& [h, v] : m.rows[g]) col[h] += v;
  }
  for (const auto& c : col)
    if (c != m.denominator) return false;
  return true;
}

std::vector<Distribution> convolution_powers(const GroupTable& table, const Distribution& measure, unsigned k_max) {
  if (measure.size() != table.order) throw ValidationError("measure size does not match the table");
  const BigInt denom = lcm_of_denominators(measure);
  const auto support = scaled_support(measure, denom);
  std::vector<BigInt> current(table.order, 0);
  current[0] = 1;
  BigInt scale = 1;
  std::vector<Distribution> out;
  out.reserve(k_max + 1);
  auto snapshot = [&] {
    Distribution d(table.order);
    for (std::size_t g = 0; g < table.order; ++g) d[g] = frac(current[g], scale);
    out.push_back(std::move(d));
  };
  snapshot();
  std::vector<BigInt> next(table.order);
  for (unsigned step = 1; step <= k_max; ++step) {
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t h = 0; h < table.order; ++h) {
      if (current[h] == 0) continue;
      for (const auto& [s, v] : support) next[table.mul(static_cast<Element>(s), static_cast<Element>(h))] += v * current[h];
    }
    current.swap(next);
    scale *= denom;
    snapshot();
  }
  return out;
}

Distribution convolution_power(const GroupTable& table, const Distribution& measure, unsigned k) {
  return std::move(convolution_powers(table, measure, k).back());
}

Distances exact_distances(const Distribution& dist) {
  const std::size_t order = dist.size();
  const Rational u = frac(1, BigInt(static_cast<unsigned long>(order)));
  Distances d;
  d.l1 = 0;
  d.l2_sq = 0;
  for (const auto& p : dist) {
    Rational diff = p - u;
    d.l1 += abs(diff);
    d.l2_sq += diff * diff;
  }
  d.tv = d.l1 / 2;
  d.l2n_sq = d.l2_sq * Rational(static_cast<unsigned long>(order));
  d.l2 = std::sqrt(d.l2_sq.get_d());
  return d;
}

TraceReport trace_moment_check(const TransitionMatrix& m, const std::vector<std::pair<Rational, BigInt>>& lines,
                               unsigned k_max) {
  const std::size_t n = m.order;
  std::vector<BigInt> power(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) power[i * n + i] = 1;
  std::vector<BigInt> next(n * n);
  BigInt scale = 1;
  TraceReport report;
  for (unsigned k = 0; k <= k_max; ++k) {
    if (k > 0) {
      std::fill(next.begin(), next.end(), 0);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < n; ++l) {
          const BigInt& a = power[i * n + l];
          if (a == 0) continue;
          for (const auto& [j, v] : m.rows[l]) next[i * n + j] += a * v;
        }
      }
      power.swap(next);
      scale *= m.denominator;
    }
    BigInt tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += power[i * n + i];
    Rational trace = frac(tr, scale);
    Rational spectral = 0;
    for (const auto& [value, mult] : lines) spectral += Rational(mult) * pow(value, k);
    Rational dev = abs(trace - spectral);
    report.traces.push_back(trace);
    report.spectral.push_back(spectral);
    report.deviation.push_back(dev);
    if (dev > report.max_deviation) report.max_deviation = dev;
  }
  return report;
}

std::vector<std::vector<std::uint64_t>> brute_force_classes(const GroupTable& base, unsigned n, std::uint64_t max_order) {
  auto total = wreath_order(base.order, n);
  if (!total || *total > max_order) throw CapExceeded("wreath group exceeds the brute-force cap");
  const std::size_t m = base.order;
  std::vector<WreathElement> gens;
  for (Element h : generating_set(base)) {
    WreathElement e = wreath_identity(n);
    e.coords[0] = h;
    gens.push_back(e);
  }
  if (n >= 2) {
    WreathElement swap01 = wreath_identity(n);
    std::swap(swap01.perm[0], swap01.perm[1]);
    gens.push_back(swap01);
    WreathElement cycle = wreath_identity(n);
    for (unsigned i = 0; i < n; ++i) cycle.perm[i] = (i + 1) % n;
    gens.push_back(cycle);
  }
  std::vector<WreathElement> gen_inv;
  for (const auto& g : gens) gen_inv.push_back(wreath_inverse(g, base));
  UnionFind uf(*total);
  for (std::uint64_t x = 0; x < *total; ++x) {
    WreathElement w = wreath_from_index(x, m, n);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      WreathElement c = wreath_multiply(wreath_multiply(gens[i], w, base), gen_inv[i], base);
      uf.unite(x, wreath_index(c, m));
    }
  }
  std::map<std::uint64_t, std::vector<std::uint64_t>> groups;
  for (std::uint64_t x = 0; x < *total; ++x) groups[uf.find(x)].push_back(x);
  std::vector<std::vector<std::uint64_t>> out;
  out.reserve(groups.size());
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

std::size_t brute_force_class_count(const GroupTable& base, unsigned n, std::uint64_t max_order) {
  return brute_force_classes(base, n, max_order).size();
}

}  // namespace wreath
