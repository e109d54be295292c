#include "wreath/content_profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>

#include "wreath/partitions.hpp"

namespace wreath {

namespace {

constexpr long double kNegInf = -std::numeric_limits<long double>::infinity();

long double log_add(long double a, long double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  long double hi = std::max(a, b);
  long double lo = std::min(a, b);
  return hi + std::log1p(std::exp(lo - hi));
}

const std::vector<long double>& log_table(std::size_t upto) {
  static std::vector<long double> table;
  static std::mutex guard;
  std::lock_guard<std::mutex> lock(guard);
  if (table.size() <= upto) {
    std::size_t old = table.size();
    table.resize(upto + 1);
    for (std::size_t i = old; i <= upto; ++i) table[i] = i == 0 ? kNegInf : std::log(static_cast<long double>(i));
  }
  return table;
}

class ContentBins {
 public:
  explicit ContentBins(unsigned m) : offset_(static_cast<long long>(m) * (m > 0 ? m - 1 : 0) / 2) {
    bins_.assign(static_cast<std::size_t>(2 * offset_ + 1), kNegInf);
  }
  void add(long long content, long double log_d_sq) {
    auto& slot = bins_[static_cast<std::size_t>(content + offset_)];
    slot = log_add(slot, log_d_sq);
  }
  void export_to(ContentProfile& profile) const {
    for (std::size_t i = 0; i < bins_.size(); ++i) {
      if (bins_[i] == kNegInf) continue;
      profile.contents.push_back(static_cast<long long>(i) - offset_);
      profile.log_dim_sq.push_back(bins_[i]);
    }
  }

 private:
  long long offset_;
  std::vector<long double> bins_;
};

// Full enumeration, tracking the conjugate incrementally so hooks cost O(|lambda|).
struct FullWalker {
  unsigned m;
  const std::vector<long double>& logs;
  ContentBins& bins;
  long double log_m_fact;
  Partition parts;

  void run() { recurse(m, m); }

  void recurse(unsigned remaining, unsigned max_part) {
    if (remaining == 0) {
      visit();
      return;
    }
    for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
      parts.push_back(part);
      recurse(remaining - part, part);
      parts.pop_back();
    }
  }

  void visit() {
    Partition conj = conjugate_partition(parts);
    long double log_hooks = 0.0L;
    long long content = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const unsigned row = parts[i];
      content += static_cast<long long>(row) * (row - 1) / 2 - static_cast<long long>(i) * row;
      for (unsigned j = 0; j < row; ++j) log_hooks += logs[(row - j) + (conj[j] - i) - 1];
    }
    bins.add(content, 2.0L * (log_m_fact - log_hooks));
  }
};

struct SmallPartition {
  long long content;
  long double log_hooks;
  unsigned length;
  Partition conj;  // conj.size() == mu_1
};

const std::vector<std::vector<SmallPartition>>& small_partitions(unsigned depth) {
  static std::map<unsigned, std::vector<std::vector<SmallPartition>>> cache;
  static std::mutex guard;
  std::lock_guard<std::mutex> lock(guard);
  auto it = cache.find(depth);
  if (it != cache.end()) return it->second;
  std::vector<std::vector<SmallPartition>> table(depth + 1);
  for (unsigned j = 0; j <= depth; ++j) {
    for (const Partition& mu : enumerate_partitions(j)) {
      SmallPartition sp;
      sp.content = content_sum(mu);
      sp.log_hooks = log_factorial(j) - (j == 0 ? 0.0L : log_dim(mu));
      sp.length = static_cast<unsigned>(mu.size());
      sp.conj = conjugate_partition(mu);
      table[j].push_back(std::move(sp));
    }
  }
  return cache.emplace(depth, std::move(table)).first->second;
}

// Greedy partition [L, L, ..., rem] of m: the dominance-maximal partition with first part L.
long double greedy_ratio(unsigned m, unsigned first_part) {
  long long content = 0;
  unsigned remaining = m;
  for (long long row = 0; remaining > 0; ++row) {
    long long len = std::min(first_part, remaining);
    content += len * (len - 1) / 2 - row * len;
    remaining -= static_cast<unsigned>(len);
  }
  return 2.0L * static_cast<long double>(content) / (static_cast<long double>(m) * (m - 1));
}

// Partitions with first row L and first column M, both at most m - depth - 1, have
// d^2 sum at most min(C(m,L)^2 (m-L)!, C(m,M)^2 (m-M)!) and r in [-r_g(M), r_g(L)],
// where r_g(L) is the ratio of the greedy partition with first part L.
void add_tail_bounds(ContentProfile& profile) {
  const unsigned m = profile.m;
  const unsigned top = m - profile.depth - 1;
  const long double mm1 = static_cast<long double>(m) * (m - 1);
  std::vector<long double> r_g(top + 1), log_mass(top + 1);
  for (unsigned L = 1; L <= top; ++L) {
    r_g[L] = greedy_ratio(m, L);
    log_mass[L] = 2.0L * log_binomial(m, L) + log_factorial(m - L);
  }
  std::map<long double, long double> by_numerator;
  for (unsigned L = 1; L <= top; ++L)
    for (unsigned M = 1; M <= top; ++M) {
      if (static_cast<unsigned long>(L) * M < m || L + M > m + 1) continue;
      const long double numer =
          std::max(std::fabs(m + mm1 * r_g[L]), std::fabs(m - mm1 * r_g[M]));
      const long double mass = std::min(log_mass[L], log_mass[M]);
      auto [it, fresh] = by_numerator.emplace(numer, mass);
      if (!fresh) it->second = log_add(it->second, mass);
    }
  for (const auto& [numer, mass] : by_numerator) {
    profile.tail_numerators.push_back(numer);
    profile.tail_log_mass.push_back(mass);
  }
}

}  // namespace

ContentProfile build_content_profile(unsigned m, unsigned full_limit, unsigned depth) {
  ContentProfile profile;
  profile.m = m;
  ContentBins bins(m);
  const auto& logs = log_table(2 * static_cast<std::size_t>(m) + 2);
  if (m <= full_limit || depth + 1 >= m) {
    FullWalker walker{m, logs, bins, log_factorial(m), {}};
    walker.run();
    profile.complete = true;
  } else {
    profile.complete = false;
    profile.depth = depth;
    const auto& small = small_partitions(depth);
    const long double log_m_fact = log_factorial(m);
    const unsigned cutoff = m - depth;  // rows of length >= cutoff are enumerated
    for (unsigned j = 0; j <= depth; ++j) {
      const unsigned first = m - j;
      for (const SmallPartition& mu : small[j]) {
        if (!mu.conj.empty() && mu.conj.size() > first) continue;
        long double log_hooks = mu.log_hooks + log_factorial(first - static_cast<unsigned>(mu.conj.size()));
        for (std::size_t i = 0; i < mu.conj.size(); ++i) log_hooks += logs[first - i + mu.conj[i]];
        const long double log_d_sq = 2.0L * (log_m_fact - log_hooks);
        const long long content = static_cast<long long>(first) * (first - 1) / 2 + mu.content - j;
        bins.add(content, log_d_sq);
        // Conjugate, unless it already has a first row of length >= cutoff.
        if (mu.length + 1 < cutoff) bins.add(-content, log_d_sq);
      }
    }
  }
  bins.export_to(profile);
  if (!profile.complete) add_tail_bounds(profile);
  return profile;
}

const ContentProfile& content_profile(unsigned m) {
  static std::map<unsigned, std::unique_ptr<ContentProfile>> cache;
  static std::mutex guard;
  {
    std::lock_guard<std::mutex> lock(guard);
    auto it = cache.find(m);
    if (it != cache.end()) return *it->second;
  }
  auto built = std::make_unique<ContentProfile>(build_content_profile(m));
  std::lock_guard<std::mutex> lock(guard);
  auto [it, inserted] = cache.emplace(m, std::move(built));
  return *it->second;
}

PowerSum content_power_sum(const ContentProfile& profile, long double denom, unsigned long exponent,
                           bool exclude_trivial) {
  PowerSum out;
  const unsigned m = profile.m;
  const long long trivial_content = static_cast<long long>(m) * (m > 0 ? m - 1 : 0) / 2;
  const long double e = static_cast<long double>(exponent);
  for (std::size_t i = 0; i < profile.contents.size(); ++i) {
    const long long c = profile.contents[i];
    if (exclude_trivial && c == trivial_content) continue;
    if (exponent == 0) {
      out.sum.add_log(profile.log_dim_sq[i], 1);
      continue;
    }
    const long double x = (static_cast<long double>(m) + 2.0L * static_cast<long double>(c)) / denom;
    if (x == 0.0L) continue;
    const int sign = (x < 0 && exponent % 2 == 1) ? -1 : 1;
    out.sum.add_log(profile.log_dim_sq[i] + e * std::log(std::fabs(x)), sign);
  }
  if (!profile.complete) {
    LogAccumulator tail;
    const long double log_denom = std::log(std::fabs(denom));
    for (std::size_t i = 0; i < profile.tail_numerators.size(); ++i) {
      const long double numer = profile.tail_numerators[i];
      if (exponent == 0) tail.add_log(profile.tail_log_mass[i], 1);
      else if (numer > 0) tail.add_log(profile.tail_log_mass[i] + e * (std::log(numer) - log_denom), 1);
    }
    out.log_tail = tail.log_value();
  }
  return out;
}

PowerSum content_power_sum(unsigned m, long double denom, unsigned long exponent, bool exclude_trivial) {
  return content_power_sum(content_profile(m), denom, exponent, exclude_trivial);
}

}  // namespace wreath
