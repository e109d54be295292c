#include "wreath/partitions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace wreath {

namespace {

void enumerate_into(unsigned remaining, unsigned max_part, Partition& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    enumerate_into(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

using BetaKey = std::pair<std::vector<unsigned>, std::size_t>;

BigInt mn_recurse(std::vector<unsigned>& beta, const Partition& mu, std::size_t idx, std::map<BetaKey, BigInt>& memo) {
  if (idx == mu.size()) return 1;
  BetaKey key{beta, idx};
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const unsigned h = mu[idx];
  BigInt total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    unsigned b = beta[i];
    if (b < h) continue;
    unsigned target = b - h;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (unsigned other : beta)
      if (other > target && other < b) ++between;
    beta[i] = target;
    BigInt sub = mn_recurse(beta, mu, idx + 1, memo);
    beta[i] = b;
    if (between % 2) total -= sub;
    else total += sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

unsigned partition_size(const Partition& lambda) {
  unsigned n = 0;
  for (unsigned p : lambda) n += p;
  return n;
}

bool is_partition(const Partition& lambda) {
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] == 0) return false;
    if (i > 0 && lambda[i] > lambda[i - 1]) return false;
  }
  return true;
}

std::vector<Partition> enumerate_partitions(unsigned n) {
  std::vector<Partition> out;
  Partition prefix;
  enumerate_into(n, n, prefix, out);
  return out;
}

BigInt partition_count(unsigned n) {
  std::vector<BigInt> p(n + 1, 0);
  p[0] = 1;
  for (unsigned part = 1; part <= n; ++part)
    for (unsigned total = part; total <= n; ++total) p[total] += p[total - part];
  return p[n];
}

BigInt dim_partition(const Partition& lambda) {
  const std::size_t k = lambda.size();
  const unsigned n = partition_size(lambda);
  if (k == 0) return 1;
  std::vector<BigInt> facts(n + 1);
  facts[0] = 1;
  for (unsigned i = 1; i <= n; ++i) facts[i] = facts[i - 1] * i;
  std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      long long arg = static_cast<long long>(lambda[i]) - static_cast<long long>(i) + static_cast<long long>(j);
      a[i][j] = arg < 0 ? Rational(0) : Rational(BigInt(1), facts[static_cast<std::size_t>(arg)]);
    }
  }
  Rational det = 1;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    while (pivot < k && a[pivot][col] == 0) ++pivot;
    if (pivot == k) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t row = col + 1; row < k; ++row) {
      if (a[row][col] == 0) continue;
      Rational factor = a[row][col] / a[col][col];
      for (std::size_t j = col; j < k; ++j) a[row][j] -= factor * a[col][j];
    }
  }
  Rational value = det * Rational(facts[n]);
  value.canonicalize();
  if (value.get_den() != 1) throw std::logic_error("determinant dimension is not an integer");
  return value.get_num();
}

BigInt dim_hook_length(const Partition& lambda) {
  const unsigned n = partition_size(lambda);
  Partition conj = conjugate_partition(lambda);
  BigInt hooks = 1;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (unsigned j = 0; j < lambda[i]; ++j) hooks *= (lambda[i] - j) + (conj[j] - static_cast<unsigned>(i)) - 1;
  return factorial(n) / hooks;
}

long double log_dim(const Partition& lambda) {
  const unsigned n = partition_size(lambda);
  Partition conj = conjugate_partition(lambda);
  long double log_hooks = 0.0L;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (unsigned j = 0; j < lambda[i]; ++j)
      log_hooks += std::log(static_cast<long double>((lambda[i] - j) + (conj[j] - static_cast<unsigned>(i)) - 1));
  return log_factorial(n) - log_hooks;
}

long long content_sum(const Partition& lambda) {
  long long c = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    long long l = lambda[i];
    c += l * (l - 1) / 2 - static_cast<long long>(i) * l;
  }
  return c;
}

Rational r_of_partition(const Partition& lambda) {
  const long long n = partition_size(lambda);
  if (n < 2) throw std::domain_error("r(lambda) needs a partition of n >= 2");
  long sum = 0;
  for (std::size_t j = 1; j <= lambda.size(); ++j) {
    long l = lambda[j - 1];
    sum += l * l - static_cast<long>(2 * j - 1) * l;
  }
  return frac(BigInt(sum), BigInt(static_cast<long>(n * (n - 1))));
}

Partition conjugate_partition(const Partition& lambda) {
  if (lambda.empty()) return {};
  Partition conj(lambda.front(), 0);
  for (unsigned part : lambda)
    for (unsigned j = 0; j < part; ++j) ++conj[j];
  return conj;
}

bool dominates(const Partition& lambda, const Partition& mu) {
  unsigned a = 0;
  unsigned b = 0;
  std::size_t len = std::max(lambda.size(), mu.size());
  for (std::size_t i = 0; i < len; ++i) {
    a += i < lambda.size() ? lambda[i] : 0;
    b += i < mu.size() ? mu[i] : 0;
    if (a < b) return false;
  }
  return true;
}

BigInt mn_character(const Partition& lambda, const Partition& mu) {
  if (partition_size(lambda) != partition_size(mu))
    throw std::invalid_argument("mn_character: |lambda| != |mu|");
  Partition parts = mu;
  std::sort(parts.rbegin(), parts.rend());
  std::vector<unsigned> beta(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i)
    beta[i] = lambda[i] + static_cast<unsigned>(lambda.size() - 1 - i);
  std::map<BetaKey, BigInt> memo;
  return mn_recurse(beta, parts, 0, memo);
}

BigInt centralizer_order(const Partition& mu) {
  std::map<unsigned, unsigned> multiplicity;
  for (unsigned part : mu) ++multiplicity[part];
  BigInt z = 1;
  for (const auto& [part, count] : multiplicity) z *= pow(BigInt(part), count) * factorial(count);
  return z;
}

BigInt cycle_class_size(const Partition& mu) { return factorial(partition_size(mu)) / centralizer_order(mu); }

std::string format_partition(const Partition& lambda) {
  if (lambda.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (i) out += ".";
    out += std::to_string(lambda[i]);
  }
  return out;
}

Partition parse_partition(const std::string& text) {
  if (text == "-" || text.empty()) return {};
  Partition out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, '.')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit))
      throw ValidationError("malformed partition '" + text + "'");
    out.push_back(static_cast<unsigned>(std::stoul(item)));
  }
  if (!is_partition(out)) throw ValidationError("parts of '" + text + "' are not weakly decreasing and positive");
  return out;
}

}  // namespace wreath
