#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wreath/group.hpp"
#include "wreath/numeric.hpp"
#include "wreath/wreath_classes.hpp"
#include "wreath/wreath_reps.hpp"

namespace wreath {

enum class WalkKind { Sym, Independent, Paired };

std::string walk_name(WalkKind kind);
WalkKind parse_walk(const std::string& name);

/// The trivial group; the transposition walk on S_n is the independent walk on Z_1 wr S_n.
const GroupTable& trivial_group();

/// Class-function measure given by per-element probabilities on support classes.
struct WalkMeasure {
  WalkKind kind = WalkKind::Independent;
  const GroupTable* group = nullptr;
  unsigned n = 0;
  Rational p_identity;
  std::vector<Rational> p_coordinate;     // by G-class; entry 0 unused (identity)
  std::vector<Rational> p_transposition;  // by G-class of the cycle product

  Rational probability(const SupportClass& c) const;
  /// Per-element probability of an arbitrary element (0 off the support).
  Rational probability(const WreathElement& w) const;
  /// Sum over support classes of size times per-element probability.
  Rational total_mass() const;
};

/// For WalkKind::Sym the base group is ignored and trivial_group() is used.
WalkMeasure build_measure(WalkKind kind, const GroupTable& g, unsigned n);

/// Closed-form eigenvalue of the label (for Sym the label has one slot holding lambda |- n).
/// The paired walk's slot j >= 2 term carries a factor 1/d_j, so base_dims is needed
/// for nonabelian G; an empty vector means every base irrep is one-dimensional.
Rational eigenvalue(const IrrepLabel& label, WalkKind kind, const std::vector<BigInt>& base_dims = {});
Rational eigenvalue(const IrrepLabel& label, const WalkMeasure& measure);
/// Transposition walk on S_n: 1/n + (n-1)/n r(lambda).
Rational sym_eigenvalue(const Partition& lambda);

/// (1/d) sum over support classes of P_i |C_i| chi_i.
CharValue fourier_class_function(const WalkMeasure& measure, const IrrepLabel& label);
CharValue fourier_class_function(const WalkMeasure& measure, const SupportCharacter& chars);

struct SpectralLine {
  Rational value;
  BigInt multiplicity;
  std::optional<IrrepLabel> witness;
};

/// Lines with distinct values, descending, multiplicities summed.
std::vector<SpectralLine> spectrum(const GroupTable& g, unsigned n, WalkKind kind, std::size_t max_labels = 2000000);
BigInt total_multiplicity(const std::vector<SpectralLine>& lines);

/// (1/order) sum mult value^k, exactly.
Rational return_probability(const std::vector<SpectralLine>& lines, unsigned long k);
long double return_probability_float(const std::vector<SpectralLine>& lines, unsigned long k);

}  // namespace wreath
