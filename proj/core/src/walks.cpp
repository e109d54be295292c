#include "wreath/walks.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace wreath {

std::string walk_name(WalkKind kind) {
  switch (kind) {
    case WalkKind::Sym: return "sym";
    case WalkKind::Independent: return "independent";
    case WalkKind::Paired: return "paired";
  }
  return "?";
}

WalkKind parse_walk(const std::string& name) {
  if (name == "sym") return WalkKind::Sym;
  if (name == "independent") return WalkKind::Independent;
  if (name == "paired") return WalkKind::Paired;
  throw ValidationError("unknown walk '" + name + "' (expected sym, independent or paired)");
}

const GroupTable& trivial_group() {
  static const GroupTable g = cyclic_group(1);
  return g;
}

Rational WalkMeasure::probability(const SupportClass& c) const {
  switch (c.kind) {
    case SupportClass::Kind::Identity: return p_identity;
    case SupportClass::Kind::Coordinate: return p_coordinate[c.k];
    case SupportClass::Kind::Transposition: return p_transposition[c.k];
  }
  return 0;
}

Rational WalkMeasure::probability(const WreathElement& w) const {
  std::vector<std::size_t> moved;
  std::vector<std::size_t> changed;
  for (std::size_t i = 0; i < w.perm.size(); ++i) {
    if (w.perm[i] != i) moved.push_back(i);
    if (w.coords[i] != 0) changed.push_back(i);
  }
  if (moved.empty()) {
    if (changed.empty()) return p_identity;
    if (changed.size() == 1) return p_coordinate[group->class_of[w.coords[changed[0]]]];
    return 0;
  }
  if (moved.size() != 2) return 0;
  for (std::size_t i : changed)
    if (i != moved[0] && i != moved[1]) return 0;
  Element product = group->mul(w.coords[moved[0]], w.coords[moved[1]]);
  return p_transposition[group->class_of[product]];
}

Rational WalkMeasure::total_mass() const {
  Rational total = 0;
  for (const auto& c : support_classes(*group, n)) total += Rational(c.size) * probability(c);
  return total;
}

WalkMeasure build_measure(WalkKind kind, const GroupTable& g, unsigned n) {
  if (n < 2) throw ValidationError("walk measures need n >= 2");
  WalkMeasure m;
  m.kind = kind;
  m.group = kind == WalkKind::Sym ? &trivial_group() : &g;
  m.n = n;
  const std::size_t s = m.group->class_count();
  const BigInt order(static_cast<unsigned long>(m.group->order));
  const BigInt nn(n);
  m.p_coordinate.assign(s, 0);
  m.p_transposition.assign(s, 0);
  switch (kind) {
    case WalkKind::Sym:
      m.p_identity = frac(1, nn);
      m.p_transposition[0] = frac(2, nn * nn);
      break;
    case WalkKind::Independent:
      m.p_identity = frac(1, order * nn);
      for (std::size_t k = 1; k < s; ++k) m.p_coordinate[k] = frac(1, order * nn * nn);
      for (std::size_t k = 0; k < s; ++k) m.p_transposition[k] = frac(2, order * order * nn * nn);
      break;
    case WalkKind::Paired:
      m.p_identity = frac(1, order * nn);
      for (std::size_t k = 1; k < s; ++k) m.p_coordinate[k] = frac(1, order * nn * nn);
      m.p_transposition[0] = frac(2, order * nn * nn);
      break;
  }
  return m;
}

Rational sym_eigenvalue(const Partition& lambda) {
  const unsigned n = partition_size(lambda);
  return frac(1, n) + frac(n - 1, n) * r_of_partition(lambda);
}

Rational eigenvalue(const IrrepLabel& label, WalkKind kind, const std::vector<BigInt>& base_dims) {
  unsigned n = 0;
  for (unsigned nj : label.type_comp) n += nj;
  const BigInt n_sq = BigInt(n) * n;
  auto slot_term = [&](std::size_t j) -> Rational {
    const unsigned nj = label.type_comp[j];
    if (nj < 2) return 0;
    return frac(BigInt(nj) * (nj - 1), n_sq) * r_of_partition(label.parts[j]);
  };
  const unsigned n1 = label.type_comp[0];
  Rational value = frac(n1, n_sq) + slot_term(0);
  if (kind == WalkKind::Paired)
    for (std::size_t j = 1; j < label.type_comp.size(); ++j) {
      Rational term = slot_term(j);
      if (!base_dims.empty() && term != 0) term /= Rational(base_dims[j]);
      value += term;
    }
  return value;
}

Rational eigenvalue(const IrrepLabel& label, const WalkMeasure& measure) {
  return eigenvalue(label, measure.kind, measure.group->irrep_dims());
}

CharValue fourier_class_function(const WalkMeasure& measure, const SupportCharacter& chars) {
  const Rational d(chars.dim);
  CharValue acc = chars.chi_u[0].exact ? CharValue::from_exact(0, 0) : CharValue::from_float({0.0L, 0.0L});
  for (const auto& c : support_classes(*measure.group, measure.n)) {
    const Rational weight = measure.probability(c) * Rational(c.size) / d;
    if (weight == 0) continue;
    switch (c.kind) {
      case SupportClass::Kind::Identity: acc.add_scaled(chars.chi_u[0], weight); break;
      case SupportClass::Kind::Coordinate: acc.add_scaled(chars.chi_u[c.k], weight); break;
      case SupportClass::Kind::Transposition: acc.add_scaled(chars.chi_v[c.k], weight); break;
    }
  }
  return acc;
}

CharValue fourier_class_function(const WalkMeasure& measure, const IrrepLabel& label) {
  return fourier_class_function(measure, support_characters(label, *measure.group));
}

std::vector<SpectralLine> spectrum(const GroupTable& g, unsigned n, WalkKind kind, std::size_t max_labels) {
  const GroupTable& base = kind == WalkKind::Sym ? trivial_group() : g;
  const std::vector<BigInt> dims = base.irrep_dims();
  std::map<Rational, SpectralLine> lines;
  for (const IrrepLabel& label : enumerate_labels(base, n, max_labels)) {
    Rational value = eigenvalue(label, kind == WalkKind::Sym ? WalkKind::Independent : kind, dims);
    BigInt d = irrep_dimension(label, dims);
    auto it = lines.find(value);
    if (it == lines.end()) {
      lines.emplace(value, SpectralLine{value, d * d, label});
    } else {
      it->second.multiplicity += d * d;
    }
  }
  std::vector<SpectralLine> out;
  out.reserve(lines.size());
  for (auto it = lines.rbegin(); it != lines.rend(); ++it) out.push_back(std::move(it->second));
  return out;
}

BigInt total_multiplicity(const std::vector<SpectralLine>& lines) {
  BigInt total = 0;
  for (const auto& l : lines) total += l.multiplicity;
  return total;
}

Rational return_probability(const std::vector<SpectralLine>& lines, unsigned long k) {
  Rational acc = 0;
  for (const auto& l : lines) acc += Rational(l.multiplicity) * pow(l.value, k);
  return acc / Rational(total_multiplicity(lines));
}

long double return_probability_float(const std::vector<SpectralLine>& lines, unsigned long k) {
  LogAccumulator acc;
  for (const auto& l : lines) {
    if (l.value == 0) {
      if (k == 0) acc.add_log(log_abs(l.multiplicity), 1);
      continue;
    }
    const int sign = (sgn(l.value) < 0 && k % 2 == 1) ? -1 : 1;
    acc.add_log(log_abs(l.multiplicity) + static_cast<long double>(k) * log_abs(l.value), sign);
  }
  if (acc.empty()) return 0.0L;
  return acc.sign() * std::exp(acc.log_value() - log_abs(total_multiplicity(lines)));
}

}  // namespace wreath
