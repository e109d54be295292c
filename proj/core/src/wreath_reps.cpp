#include "wreath/wreath_reps.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "wreath/wreath_classes.hpp"

namespace wreath {

namespace {

const BigInt& cached_dim(const Partition& lambda) {
  static std::map<Partition, BigInt> cache;
  static std::mutex guard;
  std::lock_guard<std::mutex> lock(guard);
  auto it = cache.find(lambda);
  if (it == cache.end()) it = cache.emplace(lambda, dim_partition(lambda)).first;
  return it->second;
}

void compositions(unsigned remaining, std::size_t slots, std::vector<unsigned>& prefix,
                  std::vector<std::vector<unsigned>>& out) {
  if (prefix.size() + 1 == slots) {
    prefix.push_back(remaining);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (unsigned a = remaining + 1; a-- > 0;) {
    prefix.push_back(a);
    compositions(remaining - a, slots, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

bool IrrepLabel::is_trivial() const {
  if (type_comp.empty()) return false;
  for (std::size_t j = 1; j < type_comp.size(); ++j)
    if (type_comp[j] != 0) return false;
  return parts[0].size() <= 1;
}

std::string format_label(const IrrepLabel& label) {
  std::string out;
  for (std::size_t j = 0; j < label.type_comp.size(); ++j) {
    if (j) out += ".";
    out += std::to_string(label.type_comp[j]);
  }
  for (const auto& p : label.parts) out += "|" + format_partition(p);
  return out;
}

std::vector<IrrepLabel> enumerate_labels(const GroupTable& g, unsigned n, std::size_t max_labels) {
  const std::size_t s = g.class_count();
  BigInt count = class_count(s, n);
  if (count > BigInt(static_cast<unsigned long>(max_labels)))
    throw CapExceeded("label count " + count.get_str() + " exceeds --max-labels " + std::to_string(max_labels));
  std::vector<std::vector<Partition>> by_size(n + 1);
  for (unsigned m = 0; m <= n; ++m) by_size[m] = enumerate_partitions(m);
  std::vector<std::vector<unsigned>> comps;
  std::vector<unsigned> prefix;
  compositions(n, s, prefix, comps);
  std::vector<IrrepLabel> labels;
  labels.reserve(count.get_ui());
  for (const auto& comp : comps) {
    std::vector<std::size_t> idx(s, 0);
    while (true) {
      IrrepLabel label;
      label.type_comp = comp;
      for (std::size_t j = 0; j < s; ++j) label.parts.push_back(by_size[comp[j]][idx[j]]);
      labels.push_back(std::move(label));
      std::size_t j = s;
      while (j-- > 0) {
        if (++idx[j] < by_size[comp[j]].size()) break;
        idx[j] = 0;
      }
      if (j == static_cast<std::size_t>(-1)) break;
    }
  }
  return labels;
}

BigInt irrep_dimension(const IrrepLabel& label, const std::vector<BigInt>& base_dims) {
  BigInt d = multinomial(label.type_comp);
  for (std::size_t j = 0; j < label.type_comp.size(); ++j) {
    d *= pow(base_dims[j], label.type_comp[j]);
    d *= cached_dim(label.parts[j]);
  }
  return d;
}

BigInt irrep_dimension(const IrrepLabel& label, const GroupTable& g) {
  return irrep_dimension(label, g.irrep_dims());
}

CharValue CharValue::from_exact(const Rational& re, const Rational& im) {
  CharValue v;
  v.exact = true;
  v.re = re;
  v.im = im;
  v.approx = {to_long_double(re), to_long_double(im)};
  return v;
}

CharValue CharValue::from_float(std::complex<long double> z) {
  CharValue v;
  v.exact = false;
  v.approx = z;
  return v;
}

void CharValue::add_scaled(const CharValue& v, const Rational& w) {
  if (exact && v.exact) {
    re += v.re * w;
    im += v.im * w;
    approx = {to_long_double(re), to_long_double(im)};
  } else {
    exact = false;
    approx += v.value() * to_long_double(w);
  }
}

CharValue CharValue::scaled(const Rational& w) const {
  CharValue out = exact ? from_exact(0, 0) : from_float({0.0L, 0.0L});
  out.add_scaled(*this, w);
  return out;
}

std::complex<long double> CharValue::value() const { return approx; }

std::string CharValue::str() const {
  if (exact) {
    if (im == 0) return to_string(re);
    return to_string(re) + (sgn(im) < 0 ? "-" : "+") + to_string(Rational(abs(im))) + "i";
  }
  return "(" + std::to_string(static_cast<double>(approx.real())) + "," +
         std::to_string(static_cast<double>(approx.imag())) + ")";
}

SupportCharacter support_characters(const IrrepLabel& label, const GroupTable& g) {
  if (!g.char_table) throw ValidationError("group " + g.spec + " has no character table");
  const auto& table = *g.char_table;
  const std::size_t s = g.class_count();
  unsigned n = 0;
  for (unsigned nj : label.type_comp) n += nj;
  if (n < 2) throw std::invalid_argument("support characters need n >= 2");
  const std::vector<BigInt> dims = g.irrep_dims();
  const bool exact = g.integral_characters();

  SupportCharacter out;
  out.dim = irrep_dimension(label, dims);
  const Rational d(out.dim);
  auto base_value = [&](std::size_t j, std::size_t k) {
    if (exact)
      return CharValue::from_exact(Rational(static_cast<long>(std::lround(table[j][k].real()))),
                                   Rational(static_cast<long>(std::lround(table[j][k].imag()))));
    return CharValue::from_float({table[j][k].real(), table[j][k].imag()});
  };
  auto zero = [&] { return exact ? CharValue::from_exact(0, 0) : CharValue::from_float({0.0L, 0.0L}); };

  out.chi_u.assign(s, zero());
  out.chi_v.assign(s, zero());
  for (std::size_t j = 0; j < s; ++j) {
    const unsigned nj = label.type_comp[j];
    if (nj == 0) continue;
    const Rational u_weight = d * frac(nj, n) / Rational(dims[j]);
    Rational v_weight = 0;
    if (nj >= 2)
      v_weight = d * frac(BigInt(nj) * (nj - 1), BigInt(n) * (n - 1)) / Rational(dims[j] * dims[j]) *
                 r_of_partition(label.parts[j]);
    for (std::size_t k = 0; k < s; ++k) {
      CharValue chi = base_value(j, k);
      out.chi_u[k].add_scaled(chi, u_weight);
      if (nj >= 2) out.chi_v[k].add_scaled(chi, v_weight);
    }
  }
  return out;
}

}  // namespace wreath
