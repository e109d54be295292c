#include "wreath/reports.hpp"

#include <algorithm>
#include <cmath>

#include "wreath/bounds.hpp"
#include "wreath/oracle.hpp"
#include "wreath/wreath_classes.hpp"

namespace wreath {

namespace {

const GroupTable& base_for(const GroupTable& g, WalkKind kind) { return kind == WalkKind::Sym ? trivial_group() : g; }

OracleWalk oracle_walk(WalkKind kind) {
  switch (kind) {
    case WalkKind::Sym: return OracleWalk::Sym;
    case WalkKind::Independent: return OracleWalk::Independent;
    case WalkKind::Paired: return OracleWalk::Paired;
  }
  return OracleWalk::Independent;
}

std::uint64_t checked_order(const GroupTable& base, unsigned n, const Caps& caps) {
  auto order = wreath_order(base.order, n);
  if (!order || *order > caps.max_order)
    throw CapExceeded("wreath group order exceeds --max-order (" + std::to_string(caps.max_order) + ")");
  return *order;
}

void common_metadata(Table& t, const GroupTable& g, unsigned n, WalkKind kind) {
  t.metadata.emplace_back("group", kind == WalkKind::Sym ? std::string("Z:1") : g.spec);
  t.metadata.emplace_back("n", std::to_string(n));
  t.metadata.emplace_back("walk", walk_name(kind));
}

Cell rational_cell(const Rational& r) { return Cell::text(to_string(r)); }

}  // namespace

Table spectrum_report(const GroupTable& g, unsigned n, WalkKind kind, const Caps& caps) {
  const GroupTable& base = base_for(g, kind);
  const auto lines = spectrum(base, n, kind, caps.max_labels);
  const std::size_t s = base.class_count();
  Table t;
  t.columns = {"value_num", "value_den", "multiplicity"};
  for (std::size_t j = 1; j <= s; ++j) {
    t.columns.push_back("n" + std::to_string(j));
    t.columns.push_back("lambda" + std::to_string(j));
  }
  common_metadata(t, g, n, kind);
  for (const auto& line : lines) {
    std::vector<Cell> row{Cell::integer(BigInt(line.value.get_num())), Cell::integer(BigInt(line.value.get_den())),
                          Cell::integer(line.multiplicity)};
    for (std::size_t j = 0; j < s; ++j) {
      if (line.witness) {
        row.push_back(Cell::integer(static_cast<long long>(line.witness->type_comp[j])));
        row.push_back(Cell::text(format_partition(line.witness->parts[j])));
      } else {
        row.push_back(Cell::text(""));
        row.push_back(Cell::text(""));
      }
    }
    t.add_row(std::move(row));
  }
  return t;
}

Table distance_report(const GroupTable& g, unsigned n, WalkKind kind, const std::vector<unsigned long>& ks,
                      const Caps& caps, bool check_oracle, OracleAgreement* agreement) {
  if (n < 2) throw ValidationError("distance curves need n >= 2");
  const GroupTable& base = base_for(g, kind);
  const BigInt g_order(static_cast<unsigned long>(base.order));
  const bool enumerable = class_count(base, n) <= BigInt(static_cast<unsigned long>(caps.max_labels));
  std::vector<SpectralLine> lines;
  if (enumerable || check_oracle) lines = spectrum(base, n, kind, caps.max_labels);

  Table t;
  t.columns = {"k", "l2n_sq", "tv_upper_spectral", "tv_upper_coupling", "l2_lower_dominant", "tv_lower_chebyshev"};
  common_metadata(t, g, n, kind);
  t.metadata.emplace_back("l2n_sq_source", enumerable ? "spectrum"
                                           : kind == WalkKind::Paired ? "relaxed_upper_bound"
                                                                      : "content_sum_upper");

  for (unsigned long k : ks) {
    long double l2;
    if (enumerable) {
      l2 = l2n_sq_spectral(lines, k);
    } else if (kind == WalkKind::Sym) {
      l2 = sym_l2n_sq(n, k).upper();
    } else if (kind == WalkKind::Independent) {
      l2 = l2n_sq_collapsed(g_order, n, k).upper();
    } else {
      l2 = 4.0L * paired_relaxed_bound(base, n, k).upper();
    }
    const double tv_spec = static_cast<double>(std::min(1.0L, 0.5L * std::sqrt(l2)));

    Cell coupling = Cell::text("");
    if (kind == WalkKind::Independent) coupling = Cell::real(tv_upper_coupling(n, k, sym_tv_upper(n, k)));

    long double dominant;
    if (kind == WalkKind::Sym) {
      const long double x = static_cast<long double>(n - 2) / n;
      dominant = static_cast<long double>(n - 1) * (n - 1) * std::pow(x, 2.0L * k);
    } else {
      dominant = dominant_term(base.irrep_dims(), n, k, kind);
    }

    Cell cheb = n >= 4 ? Cell::real(tv_lower_chebyshev_sym(n, k)) : Cell::text("");
    t.add_row({Cell::integer(static_cast<long long>(k)), Cell::real(static_cast<double>(l2)), Cell::real(tv_spec),
               coupling, Cell::real(static_cast<double>(dominant)), cheb});
  }

  if (check_oracle) {
    checked_order(base, n, caps);
    GroupOptions opts;
    opts.max_order = caps.max_order;
    const GroupTable table = build_wreath_table(base, n, opts);
    const Distribution measure = procedural_measure(base, n, oracle_walk(kind));
    const unsigned long k_max = ks.empty() ? 0 : *std::max_element(ks.begin(), ks.end());
    const auto powers = convolution_powers(table, measure, static_cast<unsigned>(k_max));
    Rational worst = 0;
    for (unsigned long k : ks) {
      Rational dev = abs(exact_distances(powers[k]).l2n_sq - l2n_sq_spectral_exact(lines, k));
      if (dev > worst) worst = dev;
    }
    if (agreement) {
      agreement->checked = true;
      agreement->max_deviation = worst;
    }
    t.metadata.emplace_back("oracle_max_deviation", to_string(worst));
  }
  return t;
}

Table threshold_report(const GroupTable& g, unsigned n, WalkKind kind, const std::string& metric) {
  if (!metric.empty() && metric != "l2" && metric != "tv") throw ValidationError("unknown metric '" + metric + "'");
  Table t;
  t.columns = {"walk", "group_class", "metric", "bound", "formula", "steps"};
  common_metadata(t, g, n, kind);
  if (kind == WalkKind::Sym) {
    for (const char* m : {"l2", "tv"}) {
      if (!metric.empty() && metric != m) continue;
      t.add_row({Cell::text("sym"), Cell::text("trivial"), Cell::text(m), Cell::text("sufficient"),
                 Cell::text("1/2 n log n"), Cell::real(mixing_threshold(trivial_group(), n, kind, m))});
    }
    return t;
  }
  for (const auto& row : threshold_rows(threshold_params(g, n), kind, classify_group(g))) {
    if (!metric.empty() && row.metric != metric) continue;
    t.add_row({Cell::text(walk_name(row.walk)), Cell::text(group_class_name(row.group_class)), Cell::text(row.metric),
               Cell::text(row.bound), Cell::text(row.formula), Cell::real(row.steps)});
  }
  return t;
}

Table oracle_report(const GroupTable& g, unsigned n, WalkKind kind, const std::vector<unsigned long>& ks,
                    const Caps& caps) {
  const GroupTable& base = base_for(g, kind);
  checked_order(base, n, caps);
  GroupOptions opts;
  opts.max_order = caps.max_order;
  const GroupTable table = build_wreath_table(base, n, opts);
  const Distribution measure = procedural_measure(base, n, oracle_walk(kind));
  const unsigned long k_max = ks.empty() ? 0 : *std::max_element(ks.begin(), ks.end());
  const auto powers = convolution_powers(table, measure, static_cast<unsigned>(k_max));
  Table t;
  t.columns = {"k", "tv", "l1", "l2_sq", "l2n_sq", "identity_mass", "tv_float", "l2n_sq_float"};
  common_metadata(t, g, n, kind);
  t.metadata.emplace_back("order", std::to_string(table.order));
  for (unsigned long k : ks) {
    const Distances d = exact_distances(powers[k]);
    t.add_row({Cell::integer(static_cast<long long>(k)), rational_cell(d.tv), rational_cell(d.l1),
               rational_cell(d.l2_sq), rational_cell(d.l2n_sq), rational_cell(powers[k][0]), Cell::real(d.tv.get_d()),
               Cell::real(d.l2n_sq.get_d())});
  }
  return t;
}

std::vector<double> continuized_law(const GroupTable& g, unsigned n, WalkKind kind, double t, const Caps& caps) {
  const GroupTable& base = base_for(g, kind);
  checked_order(base, n, caps);
  GroupOptions opts;
  opts.max_order = caps.max_order;
  const GroupTable table = build_wreath_table(base, n, opts);
  const Distribution measure = procedural_measure(base, n, oracle_walk(kind));
  std::vector<std::pair<Element, double>> support;
  for (std::size_t s = 0; s < measure.size(); ++s)
    if (measure[s] != 0) support.emplace_back(static_cast<Element>(s), measure[s].get_d());

  std::vector<double> current(table.order, 0.0), next(table.order), law(table.order, 0.0);
  current[0] = 1.0;
  double weight = std::exp(-t);
  double cumulative = 0.0;
  for (unsigned long j = 0;; ++j) {
    if (j > 0) weight *= t / static_cast<double>(j);
    for (std::size_t x = 0; x < table.order; ++x) law[x] += weight * current[x];
    cumulative += weight;
    if (static_cast<double>(j) > t && 1.0 - cumulative < 1e-17) break;
    if (j > 100000) break;
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t h = 0; h < table.order; ++h) {
      if (current[h] == 0.0) continue;
      for (const auto& [s, p] : support) next[table.mul(s, static_cast<Element>(h))] += p * current[h];
    }
    current.swap(next);
  }
  return law;
}

Table simulate_report(const GroupTable& g, unsigned n, WalkKind kind, const std::vector<double>& horizons,
                      SimMode mode, std::uint64_t trials, std::uint64_t seed, const Caps& caps) {
  const GroupTable& base = base_for(g, kind);
  checked_order(base, n, caps);
  GroupOptions opts;
  opts.max_order = caps.max_order;
  const GroupTable table = build_wreath_table(base, n, opts);
  const Distribution measure = procedural_measure(base, n, oracle_walk(kind));

  Table t;
  t.columns = {mode == SimMode::Discrete ? "k" : "t", "mode", "tv_empirical", "stderr", "tv_exact", "trials", "seed", "rng"};
  common_metadata(t, g, n, kind);
  t.metadata.emplace_back("rng", Rng::kName);
  t.metadata.emplace_back("seed", std::to_string(seed));
  t.metadata.emplace_back("trials", std::to_string(trials));

  for (double h : horizons) {
    std::vector<double> exact;
    double tv_exact;
    Cell horizon_cell = Cell::real(h);
    if (mode == SimMode::Discrete) {
      if (h < 0 || h != std::floor(h)) throw ValidationError("discrete horizons must be nonnegative integers");
      const Distribution law = convolution_power(table, measure, static_cast<unsigned>(h));
      exact.reserve(law.size());
      for (const auto& p : law) exact.push_back(p.get_d());
      tv_exact = exact_distances(law).tv.get_d();
      horizon_cell = Cell::integer(static_cast<long long>(h));
    } else {
      exact = continuized_law(base, n, kind, h, caps);
      const double u = 1.0 / static_cast<double>(exact.size());
      double l1 = 0.0;
      for (double p : exact) l1 += std::fabs(p - u);
      tv_exact = 0.5 * l1;
    }
    const EmpiricalTv est = empirical_tv(base, n, kind, h, mode, trials, seed, exact);
    t.add_row({horizon_cell, Cell::text(mode_name(mode)), Cell::real(est.tv), Cell::real(est.stderr),
               Cell::real(tv_exact), Cell::integer(static_cast<long long>(trials)),
               Cell::integer(BigInt(std::to_string(seed))), Cell::text(Rng::kName)});
  }
  return t;
}

Table coupling_report(unsigned n, WalkKind kind, const std::vector<double>& c_values, std::uint64_t trials,
                      std::uint64_t seed, const std::string& statistic) {
  if (statistic != "T" && statistic != "Tstar") throw ValidationError("statistic must be T or Tstar");
  Table t;
  t.columns = {"c", "threshold", "empirical_tail", "limit", "stderr", "trials", "seed"};
  t.metadata.emplace_back("n", std::to_string(n));
  t.metadata.emplace_back("walk", walk_name(kind));
  t.metadata.emplace_back("rng", Rng::kName);
  t.metadata.emplace_back("seed", std::to_string(seed));
  const Cell seed_cell = Cell::integer(BigInt(std::to_string(seed)));
  const Cell trials_cell = Cell::integer(static_cast<long long>(trials));

  if (kind == WalkKind::Paired) {
    t.metadata.emplace_back("statistic", statistic);
    t.metadata.emplace_back("limit", statistic == "T" ? "1 - exp(-e^{-2c})" : "int_0^inf e^{-u} (1 - exp(-e^{-2(c-u)})) du");
    const CouplingReport report = coupling_experiment(n, trials, seed);
    for (const auto& est : coupling_tails(report, c_values, statistic == "Tstar"))
      t.add_row({Cell::real(est.c), Cell::real(est.threshold), Cell::real(est.tail), Cell::real(est.limit),
                 Cell::real(est.stderr), trials_cell, seed_cell});
    return t;
  }
  if (kind == WalkKind::Independent) {
    if (n > 10000) throw ValidationError("coupling experiment needs n <= 10000");
    if (trials < 1 || trials > 1000000) throw ValidationError("coupling experiment needs 1 <= trials <= 1000000");
    t.metadata.emplace_back("statistic", "T");
    t.metadata.emplace_back("limit", "n (1 - 1/n)^{2k}");
    const auto times = discrete_coupling_times(n, trials, seed);
    const double N = static_cast<double>(trials);
    for (double c : c_values) {
      const double raw = coupling_threshold(n, c);
      const std::uint64_t k = raw <= 0 ? 0 : static_cast<std::uint64_t>(std::ceil(raw));
      std::uint64_t above = 0;
      for (auto x : times)
        if (x > k) ++above;
      const double tail = static_cast<double>(above) / N;
      t.add_row({Cell::real(c), Cell::integer(static_cast<long long>(k)), Cell::real(tail),
                 Cell::real(static_cast<double>(coupling_tail_bound(n, k))),
                 Cell::real(std::sqrt(tail * (1.0 - tail) / N)), trials_cell, seed_cell});
    }
    return t;
  }
  throw ValidationError("coupling experiments are defined for the independent and paired walks");
}

}  // namespace wreath
