#include "wreath/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <regex>
#include <sstream>

#include "wreath/bounds.hpp"
#include "wreath/emit.hpp"
#include "wreath/group.hpp"
#include "wreath/oracle.hpp"
#include "wreath/partitions.hpp"
#include "wreath/reports.hpp"
#include "wreath/simulate.hpp"
#include "wreath/walks.hpp"
#include "wreath/wreath_classes.hpp"
#include "wreath/wreath_reps.hpp"

namespace wreath {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects failures; the first few are kept for the report line.
struct Check {
  bool ok = true;
  int failures = 0;
  std::ostringstream notes;

  void expect(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (failures++ < 3) notes << (failures > 1 ? "; " : "") << what;
  }
};

struct Instance {
  std::string spec;
  unsigned n;
};

const std::vector<Instance>& small_instances() {
  static const std::vector<Instance> v{{"Z:2", 2}, {"Z:2", 3}, {"Z:3", 2}, {"S:3", 2}};
  return v;
}

OracleWalk as_oracle(WalkKind kind) { return kind == WalkKind::Paired ? OracleWalk::Paired : OracleWalk::Independent; }

std::string where(const Instance& inst, WalkKind kind) {
  return inst.spec + " n=" + std::to_string(inst.n) + " " + walk_name(kind);
}

CriterionResult finish(int id, const std::string& name, const Check& c, const std::string& summary, Clock::time_point t0) {
  CriterionResult r;
  r.id = id;
  r.name = name;
  r.passed = c.ok;
  r.detail = c.ok ? summary : c.notes.str();
  r.seconds = seconds_since(t0);
  return r;
}

CriterionResult trace_moments() {
  auto t0 = Clock::now();
  Check c;
  int cases = 0;
  for (const auto& inst : small_instances()) {
    const GroupTable base = build_group(inst.spec);
    const GroupTable table = build_wreath_table(base, inst.n);
    for (WalkKind kind : {WalkKind::Independent, WalkKind::Paired}) {
      const Distribution law = procedural_measure(base, inst.n, as_oracle(kind));
      const WalkMeasure measure = build_measure(kind, base, inst.n);
      for (std::size_t x = 0; x < law.size(); ++x)
        if (measure.probability(wreath_from_index(x, base.order, inst.n)) != law[x]) {
          c.expect(false, where(inst, kind) + ": step law differs at element " + std::to_string(x));
          break;
        }
      const TransitionMatrix m = build_transition_matrix(table, law);
      std::vector<std::pair<Rational, BigInt>> lines;
      for (const auto& l : spectrum(base, inst.n, kind)) lines.emplace_back(l.value, l.multiplicity);
      const TraceReport report = trace_moment_check(m, lines, 6);
      c.expect(report.max_deviation == 0, where(inst, kind) + ": trace deviation " + to_string(report.max_deviation));
      ++cases;
    }
  }
  const double elapsed = seconds_since(t0);
  c.expect(elapsed < 60.0, "runtime " + format_double(elapsed) + " s exceeds 60 s");
  return finish(1, "trace moments equal spectral power sums", c,
                std::to_string(cases) + " cases, k=0..6, deviation 0", t0);
}

CriterionResult fourier_cross_check() {
  auto t0 = Clock::now();
  Check c;
  std::size_t labels = 0;
  long double worst = 0.0L;
  for (const auto& inst : small_instances()) {
    const GroupTable base = build_group(inst.spec);
    for (WalkKind kind : {WalkKind::Independent, WalkKind::Paired}) {
      const WalkMeasure measure = build_measure(kind, base, inst.n);
      for (const auto& label : enumerate_labels(base, inst.n)) {
        const CharValue f = fourier_class_function(measure, label);
        const Rational ev = eigenvalue(label, measure);
        if (f.exact) {
          c.expect(f.re == ev && f.im == 0,
                   where(inst, kind) + " " + format_label(label) + ": " + f.str() + " vs " + to_string(ev));
        } else {
          long double err = std::abs(f.value() - std::complex<long double>(to_long_double(ev), 0.0L));
          worst = std::max(worst, err);
          c.expect(err <= 1e-9L, where(inst, kind) + " " + format_label(label) + ": float error");
        }
        ++labels;
      }
    }
  }
  return finish(2, "Fourier class function equals closed-form eigenvalue", c,
                std::to_string(labels) + " labels, max float error " + format_double(static_cast<double>(worst)), t0);
}

CriterionResult convolution_equality() {
  auto t0 = Clock::now();
  Check c;
  const GroupTable base = build_group("Z:2");
  const unsigned n = 3;
  const GroupTable table = build_wreath_table(base, n);
  for (WalkKind kind : {WalkKind::Independent, WalkKind::Paired}) {
    const auto powers = convolution_powers(table, procedural_measure(base, n, as_oracle(kind)), 20);
    const auto lines = spectrum(base, n, kind);
    for (unsigned k = 1; k <= 20; ++k) {
      const Rational oracle = exact_distances(powers[k]).l2n_sq;
      const Rational spectral = l2n_sq_spectral_exact(lines, k);
      c.expect(oracle == spectral, walk_name(kind) + " k=" + std::to_string(k) + ": " + to_string(oracle) + " vs " +
                                       to_string(spectral));
      c.expect(return_probability(lines, k) == powers[k][0],
               walk_name(kind) + " k=" + std::to_string(k) + ": return probability mismatch");
    }
  }
  return finish(3, "exact convolution matches spectral l2 and return probability", c,
                "Z:2 n=3, both walks, k=1..20 exact", t0);
}

CriterionResult counting_identities() {
  auto t0 = Clock::now();
  Check c;
  const std::vector<std::pair<std::string, unsigned>> cases{{"Z:2", 6}, {"Z:3", 5}, {"S:3", 4}};
  int checked = 0;
  for (const auto& [spec, n_max] : cases) {
    const GroupTable base = build_group(spec);
    for (unsigned n = 1; n <= n_max; ++n) {
      const BigInt order = pow(BigInt(static_cast<unsigned long>(base.order)), n) * factorial(n);
      for (WalkKind kind : {WalkKind::Independent, WalkKind::Paired})
        c.expect(total_multiplicity(spectrum(base, n, kind)) == order,
                 spec + " n=" + std::to_string(n) + " " + walk_name(kind) + ": multiplicities do not sum to the order");
      const std::size_t labels = enumerate_labels(base, n).size();
      const BigInt formula = class_count(base, n);
      const std::size_t brute = brute_force_class_count(base, n);
      c.expect(BigInt(static_cast<unsigned long>(labels)) == formula && formula == BigInt(static_cast<unsigned long>(brute)),
               spec + " n=" + std::to_string(n) + ": labels " + std::to_string(labels) + ", classes " + to_string(formula) +
                   ", brute force " + std::to_string(brute));
      ++checked;
    }
  }
  return finish(4, "multiplicities sum to the order; labels = classes = brute-force classes", c,
                std::to_string(checked) + " (G, n) pairs", t0);
}

CriterionResult partition_layer() {
  auto t0 = Clock::now();
  Check c;
  for (unsigned n = 1; n <= 12; ++n) {
    BigInt sum = 0;
    for (const auto& lambda : enumerate_partitions(n)) {
      const BigInt d = dim_partition(lambda);
      sum += d * d;
      c.expect(d == dim_hook_length(lambda), "determinant vs hook length at " + format_partition(lambda));
      const Partition conj = conjugate_partition(lambda);
      c.expect(dim_partition(conj) == d, "d(conjugate) at " + format_partition(lambda));
      if (n >= 2) c.expect(r_of_partition(conj) == -r_of_partition(lambda), "r(conjugate) at " + format_partition(lambda));
    }
    c.expect(sum == factorial(n), "sum of squared dimensions at n=" + std::to_string(n));
  }
  for (unsigned n = 1; n <= 6; ++n) {
    const auto parts = enumerate_partitions(n);
    std::vector<std::vector<BigInt>> chi(parts.size(), std::vector<BigInt>(parts.size()));
    for (std::size_t a = 0; a < parts.size(); ++a)
      for (std::size_t b = 0; b < parts.size(); ++b) chi[a][b] = mn_character(parts[a], parts[b]);
    for (std::size_t a = 0; a < parts.size(); ++a)
      for (std::size_t b = 0; b < parts.size(); ++b) {
        BigInt rows = 0, cols = 0;
        for (std::size_t m = 0; m < parts.size(); ++m) {
          rows += cycle_class_size(parts[m]) * chi[a][m] * chi[b][m];
          cols += chi[m][a] * chi[m][b];
        }
        c.expect(rows == (a == b ? factorial(n) : BigInt(0)), "row orthogonality at n=" + std::to_string(n));
        c.expect(cols == (a == b ? centralizer_order(parts[a]) : BigInt(0)), "column orthogonality at n=" + std::to_string(n));
      }
  }
  return finish(5, "partition dimensions, conjugation symmetry, MN orthogonality", c,
                "n<=12 dimensions and r, n<=6 orthogonality, exact", t0);
}

CriterionResult collapsed_formula() {
  auto t0 = Clock::now();
  Check c;
  long double worst = 0.0L;
  for (const auto& [spec, n_max] : std::vector<std::pair<std::string, unsigned>>{{"Z:2", 6}, {"Z:3", 5}}) {
    const GroupTable base = build_group(spec);
    const BigInt order(static_cast<unsigned long>(base.order));
    for (unsigned n = 2; n <= n_max; ++n) {
      const auto lines = spectrum(base, n, WalkKind::Independent);
      for (unsigned k = 0; k <= 20; ++k) {
        const long double spectral = to_long_double(l2n_sq_spectral_exact(lines, k));
        const BoundedSum collapsed = l2n_sq_collapsed(order, n, k);
        const long double rel = std::fabs(collapsed.value - spectral) / std::max(1.0L, std::fabs(spectral));
        worst = std::max(worst, rel);
        c.expect(rel <= 1e-9L && collapsed.tail == 0.0L,
                 spec + " n=" + std::to_string(n) + " k=" + std::to_string(k) + ": relative error " +
                     format_double(static_cast<double>(rel)));
      }
    }
  }
  int identities = 0;
  for (const std::string spec : {"Z:2", "Z:3", "S:3"}) {
    const GroupTable base = build_group(spec);
    const auto dims = base.irrep_dims();
    const BigInt others(static_cast<unsigned long>(base.order - 1));
    for (unsigned n = 1; n <= 8; ++n)
      for (unsigned n1 = 0; n1 <= n; ++n1) {
        c.expect(collapse_inner_sum(dims, n, n1) == pow(others, n - n1) * factorial(n - n1),
                 spec + " n=" + std::to_string(n) + " n1=" + std::to_string(n1) + ": collapse identity");
        ++identities;
      }
  }
  return finish(6, "collapsed sum equals spectral sum; multiplicity collapse identity", c,
                "max relative error " + format_double(static_cast<double>(worst)) + ", " + std::to_string(identities) +
                    " exact identities",
                t0);
}

// Independent-walk eigenvalue for (n1, lambda1) in a two-slot label.
Rational independent_value(unsigned n, const Partition& lambda1) {
  const unsigned n1 = partition_size(lambda1);
  IrrepLabel label{{n1, n - n1}, {lambda1, n - n1 ? Partition{n - n1} : Partition{}}};
  return eigenvalue(label, WalkKind::Independent);
}

CriterionResult cutoff_envelope() {
  auto t0 = Clock::now();
  Check c;
  // Extremes of r over partitions of m, verified exhaustively for small m.
  for (unsigned m = 2; m <= 20; ++m) {
    const Rational top = r_of_partition({m});
    const Rational bottom = r_of_partition(Partition(m, 1));
    const Rational second = r_of_partition({m - 1, 1});
    for (const auto& lambda : enumerate_partitions(m)) {
      const Rational r = r_of_partition(lambda);
      c.expect(r >= bottom && r <= top, "r outside [r(1^m), r(m)] at " + format_partition(lambda));
      if (lambda != Partition{m}) c.expect(r <= second, "r above r(m-1,1) at " + format_partition(lambda));
    }
  }
  // Closed-form extremes for every n1 <= n <= 200.
  std::size_t checked = 0;
  for (unsigned n = 2; n <= 200; ++n) {
    const Rational bound = pow(frac(n - 1, n), 2);
    for (unsigned n1 = 0; n1 <= n; ++n1) {
      std::vector<Partition> extremes;
      if (n1 == n) {
        extremes = {{n - 1, 1}, Partition(n, 1)};
      } else if (n1 == 0) {
        extremes = {{}};
      } else {
        extremes = {{n1}, Partition(n1, 1)};
      }
      for (const auto& lambda : extremes) {
        const Rational v = independent_value(n, lambda);
        c.expect(abs(v) <= bound, "n=" + std::to_string(n) + " label (" + std::to_string(n1) + ", " +
                                      format_partition(lambda) + "): |value| " + to_string(v) + " > (1-1/n)^2");
        ++checked;
      }
    }
  }
  // Every nontrivial eigenvalue on small instances.
  for (unsigned n = 2; n <= 6; ++n) {
    const Rational bound = pow(frac(n - 1, n), 2);
    for (const auto& line : spectrum(build_group("Z:2"), n, WalkKind::Independent))
      if (line.value != 1) c.expect(abs(line.value) <= bound, "Z:2 n=" + std::to_string(n) + ": eigenvalue beyond envelope");
  }
  // Numeric envelope.
  int numeric = 0;
  for (unsigned n : {25u, 50u, 100u, 200u})
    for (unsigned long g : {2ul, 6ul, 720ul}) {
      const double nd = n;
      const auto k0 = static_cast<unsigned long>(
          std::ceil(0.5 * nd * std::log(nd) + 0.25 * nd * std::log(static_cast<double>(g - 1))));
      const BoundedSum base = l2n_sq_collapsed(BigInt(g), n, k0);
      for (double cc : {0.5, 1.0, 2.0}) {
        const auto k1 = k0 + static_cast<unsigned long>(std::ceil(cc * nd));
        const BoundedSum later = l2n_sq_collapsed(BigInt(g), n, k1);
        const long double rhs = std::exp(-4.0L * cc) * base.value * (1.0L + 1e-6L);
        c.expect(later.upper() <= rhs, "n=" + std::to_string(n) + " |G|=" + std::to_string(g) + " c=" +
                                           format_double(cc) + ": " + format_double(static_cast<double>(later.upper())) +
                                           " > " + format_double(static_cast<double>(rhs)));
        ++numeric;
      }
    }
  const double elapsed = seconds_since(t0);
  c.expect(elapsed < 120.0, "runtime " + format_double(elapsed) + " s exceeds 120 s");
  return finish(7, "eigenvalue envelope and l2 decay past the cutoff", c,
                std::to_string(checked) + " closed-form extremes, " + std::to_string(numeric) + " numeric envelopes", t0);
}

CriterionResult lower_bound_witnesses() {
  auto t0 = Clock::now();
  Check c;
  const GroupTable base = build_group("Z:2");
  const unsigned n = 3;
  const auto lines = spectrum(base, n, WalkKind::Independent);
  for (unsigned k = 0; k <= 30; ++k) {
    const Rational witness = Rational(n * n) * Rational(base.order - 1) * pow(frac(n - 1, n), 4 * k);
    const Rational l2 = l2n_sq_spectral_exact(lines, k);
    c.expect(witness <= l2, "k=" + std::to_string(k) + ": dominant term exceeds l2n_sq");
    const long double f = dominant_term(base.irrep_dims(), n, k, WalkKind::Independent);
    c.expect(std::fabs(f - to_long_double(witness)) <= 1e-12L * to_long_double(witness),
             "k=" + std::to_string(k) + ": floating dominant term disagrees");
  }
  std::ostringstream vals;
  for (int cc : {1, 2, 3}) {
    const double raw = 50.0 * std::log(100.0) - 100.0 * cc;
    const unsigned long k = raw <= 0 ? 0 : static_cast<unsigned long>(std::ceil(raw));
    const double lower = tv_lower_chebyshev_sym(100, k);
    const double target = 1.0 - 2187.0 * std::exp(-2.0 * cc);
    c.expect(lower >= target, "c=" + std::to_string(cc) + ": Chebyshev " + format_double(lower) + " < " + format_double(target));
    vals << (cc > 1 ? ", " : "") << "c=" << cc << " k=" << k << " tv>=" << std::setprecision(6) << lower;
  }
  return finish(8, "dominant-term and Chebyshev lower bounds", c, "Z:2 n=3 k<=30 exact; " + vals.str(), t0);
}

CriterionResult coupling_graph() {
  auto t0 = Clock::now();
  Check c;
  const CouplingReport report = coupling_experiment(200, 10000, 20240917);
  for (const auto& s : report.samples) c.expect(s.t_star >= s.t && s.t >= 0.0, "trial with T* < T");
  std::ostringstream vals;
  vals << std::setprecision(4);
  for (const auto& est : coupling_tails(report, {0.0, 1.0}, false)) {
    c.expect(std::fabs(est.tail - est.limit) <= 0.05,
             "T tail at c=" + format_double(est.c) + ": " + format_double(est.tail) + " vs " + format_double(est.limit));
    vals << "P{T>t} c=" << est.c << ": " << est.tail << " (limit " << est.limit << "); ";
  }
  for (const auto& est : coupling_tails(report, {1.0, 2.0}, true)) {
    const double cap = 2.0 * std::exp(-est.c) + 0.03;
    c.expect(est.tail <= cap, "T* tail at c=" + format_double(est.c) + ": " + format_double(est.tail) + " > " + format_double(cap));
    vals << "P{T*>t} c=" << est.c << ": " << est.tail << (est.c < 2 ? "; " : "");
  }
  const double elapsed = seconds_since(t0);
  c.expect(elapsed < 300.0, "runtime " + format_double(elapsed) + " s exceeds 300 s");
  return finish(9, "random-graph coupling tails", c, vals.str(), t0);
}

CriterionResult monte_carlo() {
  auto t0 = Clock::now();
  Check c;
  const GroupTable base = build_group("Z:2");
  const unsigned n = 2, k = 20;
  const std::uint64_t trials = 100000, seed = 42;
  const Distribution law = convolution_power(build_wreath_table(base, n), procedural_measure(base, n, OracleWalk::Independent), k);
  std::vector<double> exact;
  for (const auto& p : law) exact.push_back(p.get_d());
  const double tv_exact = exact_distances(law).tv.get_d();
  const EmpiricalTv est = empirical_tv(base, n, WalkKind::Independent, k, SimMode::Discrete, trials, seed, exact);
  c.expect(std::fabs(est.tv - tv_exact) <= 3.0 * est.stderr,
           "empirical " + format_double(est.tv) + " vs exact " + format_double(tv_exact) + ", 3 se = " +
               format_double(3.0 * est.stderr));
  const std::vector<double> horizons{static_cast<double>(k)};
  const std::string first = render_csv(simulate_report(base, n, WalkKind::Independent, horizons, SimMode::Discrete, trials, seed, {}));
  const std::string second = render_csv(simulate_report(base, n, WalkKind::Independent, horizons, SimMode::Discrete, trials, seed, {}));
  c.expect(first == second, "identical seeds produced different CSV");
  std::ostringstream vals;
  vals << std::setprecision(4) << "tv " << est.tv << " vs exact " << tv_exact << ", se " << est.stderr
       << "; CSV byte-identical";
  return finish(10, "Monte Carlo TV matches the exact law; seeded output is reproducible", c, vals.str(), t0);
}

// LaTeX cell text to the tool's plain-text formula notation.
std::string plain_formula(std::string s) {
  const std::vector<std::pair<std::string, std::string>> subs{
      {"\\max \\bigg\\{", "max{"}, {"\\bigg\\}", "}"},        {"\\frac{1}{2}", "1/2"},
      {"\\frac{1}{4}", "1/4"},     {"\\delta_n", "delta_n"},   {"\\rightarrow", "->"},
      {"\\infty", "infinity"},     {"\\log", "log"},           {"\\ ", " "}};
  for (const auto& [from, to] : subs)
    for (std::size_t pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size()))
      s.replace(pos, from.size(), to);
  s = std::regex_replace(s, std::regex("\\s+"), " ");
  s = std::regex_replace(s, std::regex("\\{ "), "{");
  s = std::regex_replace(s, std::regex(" \\}"), "}");
  s = std::regex_replace(s, std::regex("^ | $"), "");
  return s;
}

struct TableRow {
  const char* walk;
  const char* group;
  const char* metric;
  const char* bound;
  const char* latex;
};

const std::vector<TableRow>& summary_tables() {
  static const std::vector<TableRow> rows{
      {"independent", "Z2", "l2", "sufficient", "\\frac{1}{2} n \\log n"},
      {"independent", "Z2", "l2", "necessary", "\\frac{1}{2} n \\log n"},
      {"independent", "Z2", "tv", "sufficient", "\\frac{1}{2} n \\log n"},
      {"independent", "Z2", "tv", "necessary", "\\frac{1}{2} n \\log n"},
      {"independent", "Zm", "l2", "sufficient", "\\frac{1}{2} n \\log n + \\frac{1}{4} n \\log(m-1)"},
      {"independent", "Zm", "l2", "necessary", "\\frac{1}{2} n \\log n + \\frac{1}{4} n \\log(m-1)"},
      {"independent", "Zm", "tv", "sufficient", "\\frac{1}{2} n \\log n"},
      {"independent", "Zm", "tv", "necessary", "\\frac{1}{2} n \\log n"},
      {"independent", "Sm", "l2", "sufficient", "\\frac{1}{2} n \\log n + \\frac{1}{4} n \\log(|m!|-1)"},
      {"independent", "Sm", "l2", "necessary", "\\frac{1}{2} n \\log n + \\frac{1}{4} n \\log(|m!|-1)"},
      {"independent", "Sm", "tv", "sufficient", "\\frac{1}{2} n \\log n"},
      {"independent", "Sm", "tv", "necessary", "\\frac{1}{2} n \\log n"},
      {"independent", "abelian", "l2", "sufficient", "\\frac{1}{2} n \\log n + \\frac{1}{4} n \\log(|G|-1)"},
      {"independent", "abelian", "l2", "necessary", "\\frac{1}{2} n \\log n + \\frac{1}{4} n \\log(|G|-1)"},
      {"independent", "abelian", "tv", "sufficient", "\\frac{1}{2} n \\log n"},
      {"independent", "abelian", "tv", "necessary", "\\frac{1}{2} n \\log n"},
      {"independent", "nonabelian", "l2", "sufficient", "\\frac{1}{2} n \\log n + \\frac{1}{4} n \\log(|G|-1)"},
      {"independent", "nonabelian", "l2", "necessary", "\\frac{1}{2} n \\log n + \\frac{1}{4} n \\log(|G|-1)"},
      {"independent", "nonabelian", "tv", "sufficient", "\\frac{1}{2} n \\log n"},
      {"independent", "nonabelian", "tv", "necessary", "\\frac{1}{2} n \\log n"},
      {"paired", "Z2", "l2", "sufficient", "n \\log n"},
      {"paired", "Z2", "l2", "necessary", "\\frac{1}{2} n \\log n"},
      {"paired", "Z2", "tv", "sufficient", "\\frac{1}{2} n \\log n \\ \\ (n \\rightarrow \\infty)"},
      {"paired", "Z2", "tv", "necessary", "\\frac{1}{2} n \\log n"},
      {"paired", "Zm", "l2", "sufficient", "n \\log n + n \\log(m-1)"},
      {"paired", "Zm", "l2", "necessary", "\\frac{1}{2} n \\log n + \\frac{1}{4} n \\log(m-1)"},
      {"paired", "Zm", "tv", "sufficient", "\\frac{1}{2} n \\log n \\ \\ (n \\rightarrow \\infty)"},
      {"paired", "Zm", "tv", "necessary", "\\frac{1}{2} n \\log n"},
      {"paired", "Sm", "l2", "sufficient",
       "\\max \\bigg\\{ \\frac{1}{2} n \\log \\delta_n, \\ n \\log n \\ \\ \\ \\ \\ \\ \\ \\ + \\frac{1}{2} n "
       "\\log(|m!|-1) \\ \\ \\ \\ \\ \\ \\ \\ + \\frac{1}{2} n \\log(p(m)-1) \\bigg\\}"},
      {"paired", "Sm", "l2", "necessary",
       "\\max \\bigg\\{ \\frac{1}{2} n \\log \\delta_n, \\ \\frac{1}{2} n \\log n \\ \\ \\ \\ \\ \\ \\ \\ + "
       "\\frac{1}{4} n \\log(|m!|-1) \\bigg\\}"},
      {"paired", "Sm", "tv", "sufficient", "\\frac{1}{2} n \\log n \\ \\ (n \\rightarrow \\infty)"},
      {"paired", "Sm", "tv", "necessary", "\\frac{1}{2} n \\log n"},
      {"paired", "abelian", "l2", "sufficient", "n \\log n + n \\log(|G|-1)"},
      {"paired", "abelian", "l2", "necessary", "\\frac{1}{2} n \\log n + \\frac{1}{4} n \\log(|G|-1)"},
      {"paired", "abelian", "tv", "sufficient", "\\frac{1}{2} n \\log n \\ \\ (n \\rightarrow \\infty)"},
      {"paired", "abelian", "tv", "necessary", "\\frac{1}{2} n \\log n"},
      {"paired", "nonabelian", "l2", "sufficient",
       "\\max \\bigg\\{ \\frac{1}{2} n \\log \\delta_n, \\ n \\log n \\ \\ \\ \\ \\ \\ \\ \\ + \\frac{1}{2} n "
       "\\log(|G|-1) \\ \\ \\ \\ \\ \\ \\ \\ + \\frac{1}{2} n \\log(s-1) \\bigg\\}"},
      {"paired", "nonabelian", "l2", "necessary",
       "\\max \\bigg\\{ \\frac{1}{2} n \\log \\delta_n, \\ \\frac{1}{2} n \\log n \\ \\ \\ \\ \\ \\ \\ \\ + "
       "\\frac{1}{4} n \\log(|G|-1) \\bigg\\}"},
      {"paired", "nonabelian", "tv", "sufficient", "\\frac{1}{2} n \\log n \\ \\ (n \\rightarrow \\infty)"},
      {"paired", "nonabelian", "tv", "necessary", "\\frac{1}{2} n \\log n"},
  };
  return rows;
}

CriterionResult threshold_tables() {
  auto t0 = Clock::now();
  Check c;
  const auto rows = threshold_table(threshold_params(build_group("Z:2"), 10));
  const auto& expected = summary_tables();
  c.expect(rows.size() == expected.size(),
           "row count " + std::to_string(rows.size()) + " vs " + std::to_string(expected.size()));
  for (std::size_t i = 0; i < std::min(rows.size(), expected.size()); ++i) {
    const auto& r = rows[i];
    const auto& e = expected[i];
    const std::string want = plain_formula(e.latex);
    c.expect(walk_name(r.walk) == e.walk && group_class_name(r.group_class) == e.group && r.metric == e.metric &&
                 r.bound == e.bound && r.formula == want,
             std::string(e.walk) + "/" + e.group + "/" + e.metric + "/" + e.bound + ": '" + r.formula + "' vs '" + want + "'");
  }
  const double steps = mixing_threshold(build_group("Z:2"), 100, WalkKind::Independent, "l2");
  c.expect(std::fabs(steps - 50.0 * std::log(100.0)) < 1e-9, "Z:2 n=100 l2 threshold " + format_double(steps));
  return finish(11, "threshold formulas reproduce both summary tables", c,
                std::to_string(rows.size()) + " rows match; Z:2 n=100 l2 -> " + format_double(steps), t0);
}

}  // namespace

std::vector<Criterion> acceptance_criteria() {
  return {
      {1, "trace moments", trace_moments},
      {2, "Fourier cross-check", fourier_cross_check},
      {3, "convolution equality", convolution_equality},
      {4, "counting identities", counting_identities},
      {5, "partition layer", partition_layer},
      {6, "collapsed formula", collapsed_formula},
      {7, "cutoff envelope", cutoff_envelope},
      {8, "lower-bound witnesses", lower_bound_witnesses},
      {9, "coupling experiment", coupling_graph},
      {10, "Monte Carlo validation", monte_carlo},
      {11, "threshold tables", threshold_tables},
  };
}

std::vector<CriterionResult> run_acceptance(std::ostream& out, int only) {
  std::vector<CriterionResult> results;
  for (const auto& criterion : acceptance_criteria()) {
    if (only != 0 && criterion.id != only) continue;
    CriterionResult r;
    const auto t0 = Clock::now();
    try {
      r = criterion.run();
    } catch (const std::exception& e) {
      r.id = criterion.id;
      r.name = criterion.name;
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
      r.seconds = seconds_since(t0);
    }
    out << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " (" << std::fixed << std::setprecision(2)
        << r.seconds << " s): " << r.detail << std::defaultfloat << std::endl;
    results.push_back(std::move(r));
  }
  return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return !results.empty();
}

}  // namespace wreath
