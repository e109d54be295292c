#include "wreath/cli.hpp"

#include <charconv>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "wreath/acceptance.hpp"
#include "wreath/emit.hpp"
#include "wreath/group.hpp"
#include "wreath/reports.hpp"
#include "wreath/simulate.hpp"
#include "wreath/walks.hpp"

namespace wreath {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string group = "Z:2";
  unsigned n = 0;
  std::string walk = "independent";
  std::string metric;
  std::string k = "0";
  std::string t;
  std::string c = "0";
  std::uint64_t trials = 10000;
  std::uint64_t seed = 1;
  std::string mode = "discrete";
  std::string statistic = "T";
  bool check_oracle = false;
  std::string format = "csv";
  std::string out = "-";
  std::size_t max_order = 5000;
  std::size_t max_labels = 2000000;
  int only = 0;
};

unsigned long parse_unsigned(const std::string& text, const std::string& what) {
  unsigned long v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) throw UsageError("invalid " + what + " '" + text + "'");
  return v;
}

/// "a..b[:step]", "a,b,c" or "a".
std::vector<unsigned long> parse_k_range(const std::string& text) {
  std::vector<unsigned long> ks;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    std::string rest = text.substr(dots + 2);
    unsigned long step = 1;
    if (auto colon = rest.find(':'); colon != std::string::npos) {
      step = parse_unsigned(rest.substr(colon + 1), "--k step");
      rest = rest.substr(0, colon);
    }
    const unsigned long a = parse_unsigned(text.substr(0, dots), "--k start");
    const unsigned long b = parse_unsigned(rest, "--k end");
    if (step == 0 || b < a) throw UsageError("invalid --k range '" + text + "'");
    if ((b - a) / step > 1000000) throw UsageError("--k range has too many points");
    for (unsigned long k = a; k <= b; k += step) ks.push_back(k);
    return ks;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) ks.push_back(parse_unsigned(item, "--k value"));
  if (ks.empty()) throw UsageError("empty --k");
  return ks;
}

std::vector<double> parse_reals(const std::string& text, const std::string& flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      double v = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw UsageError("invalid " + flag + " value '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError("empty " + flag);
  return out;
}

void write_table(const Table& table, const Options& o, std::ostream& out) {
  const Format format = parse_format(o.format);
  if (o.out.empty() || o.out == "-") {
    out << render(table, format);
    out.flush();
  } else {
    emit(table, format, o.out);
  }
}

void add_common(CLI::App* cmd, Options& o, bool needs_n) {
  cmd->add_option("--group", o.group, "base group: Z:m, S:m or file:<path>");
  auto* n = cmd->add_option("--n", o.n, "number of decks")->check(CLI::PositiveNumber);
  if (needs_n) n->required();
  cmd->add_option("--walk", o.walk, "sym, independent or paired")
      ->check(CLI::IsMember({"sym", "independent", "paired"}));
  cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", o.out, "output path ('-' for stdout)");
  cmd->add_option("--max-order", o.max_order, "cap on explicit group orders")->check(CLI::PositiveNumber);
  cmd->add_option("--max-labels", o.max_labels, "cap on enumerated irreducible labels")->check(CLI::PositiveNumber);
}

GroupTable load_base(const Options& o) {
  GroupOptions opts;
  opts.max_order = o.max_order;
  return build_group(o.group, opts);
}

int run(CLI::App& app, const Options& o, std::ostream& out, std::ostream& err) {
  const Caps caps{o.max_order, o.max_labels};
  auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front();
  if (!sub) {
    err << app.help();
    return 2;
  }
  const std::string name = sub->get_name();
  if (name == "selftest") {
    return all_passed(run_acceptance(out, o.only)) ? 0 : 1;
  }
  const WalkKind kind = parse_walk(o.walk);
  if (name == "coupling") {
    write_table(coupling_report(o.n, kind, parse_reals(o.c, "--c"), o.trials, o.seed, o.statistic), o, out);
    return 0;
  }
  const GroupTable base = load_base(o);
  if (name == "spectrum") {
    write_table(spectrum_report(base, o.n, kind, caps), o, out);
  } else if (name == "distance") {
    OracleAgreement agreement;
    write_table(distance_report(base, o.n, kind, parse_k_range(o.k), caps, o.check_oracle, &agreement), o, out);
    if (agreement.checked) {
      err << "oracle agreement: max |delta l2n_sq| = " << to_string(agreement.max_deviation) << "\n";
      if (agreement.max_deviation != 0) return 1;
    }
  } else if (name == "threshold") {
    write_table(threshold_report(base, o.n, kind, o.metric), o, out);
  } else if (name == "oracle") {
    write_table(oracle_report(base, o.n, kind, parse_k_range(o.k), caps), o, out);
  } else if (name == "simulate") {
    const SimMode mode = parse_mode(o.mode);
    std::vector<double> horizons;
    if (!o.t.empty()) {
      horizons = parse_reals(o.t, "--t");
    } else {
      for (unsigned long k : parse_k_range(o.k)) horizons.push_back(static_cast<double>(k));
    }
    write_table(simulate_report(base, o.n, kind, horizons, mode, o.trials, o.seed, caps), o, out);
  }
  return 0;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random walks on wreath products G wr S_n: spectra, distance bounds, oracles and simulation",
               "wreathwalk"};
  app.require_subcommand(1);
  Options o;

  auto* spectrum = app.add_subcommand("spectrum", "distinct eigenvalues with multiplicities");
  add_common(spectrum, o, true);

  auto* distance = app.add_subcommand("distance", "l2 and total variation bounds along a k range");
  add_common(distance, o, true);
  distance->add_option("--k", o.k, "steps: a..b[:step] or a comma list");
  distance->add_flag("--check-oracle", o.check_oracle, "compare against exact convolution");

  auto* threshold = app.add_subcommand("threshold", "mixing-time formulas and their values");
  add_common(threshold, o, true);
  threshold->add_option("--metric", o.metric, "l2 or tv")->check(CLI::IsMember({"l2", "tv"}));

  auto* oracle = app.add_subcommand("oracle", "exact distances by brute-force convolution");
  add_common(oracle, o, true);
  oracle->add_option("--k", o.k, "steps: a..b[:step] or a comma list");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo total variation estimates");
  add_common(simulate, o, true);
  simulate->add_option("--k", o.k, "steps: a..b[:step] or a comma list");
  simulate->add_option("--t", o.t, "continuized times (comma list); defaults to the --k values");
  simulate->add_option("--mode", o.mode, "discrete or continuized")->check(CLI::IsMember({"discrete", "continuized"}));
  simulate->add_option("--trials", o.trials, "number of trials")->check(CLI::PositiveNumber);
  simulate->add_option("--seed", o.seed, "64-bit seed");

  auto* coupling = app.add_subcommand("coupling", "coupling-time tail experiments");
  coupling->add_option("--n", o.n, "number of decks")->required()->check(CLI::PositiveNumber);
  coupling->add_option("--walk", o.walk, "independent (discrete) or paired (continuous-time graph)")
      ->check(CLI::IsMember({"independent", "paired"}));
  coupling->add_option("--c", o.c, "comma list of window offsets c");
  coupling->add_option("--trials", o.trials, "number of trials")->check(CLI::PositiveNumber);
  coupling->add_option("--seed", o.seed, "64-bit seed");
  coupling->add_option("--statistic", o.statistic, "T or Tstar (paired walk)")->check(CLI::IsMember({"T", "Tstar"}));
  coupling->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  coupling->add_option("--out", o.out, "output path ('-' for stdout)");

  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
  selftest->add_option("--only", o.only, "run a single criterion by number");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help(app.get_subcommands().empty() ? "" : app.get_subcommands().front()->get_name());
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "wreathwalk: " << e.what() << "\n";
    return 2;
  }

  try {
    return run(app, o, out, err);
  } catch (const UsageError& e) {
    err << "wreathwalk: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    err << "wreathwalk: cap exceeded: " << e.what() << "\n";
    return 1;
  } catch (const ValidationError& e) {
    err << "wreathwalk: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "wreathwalk: " << e.what() << "\n";
    return 1;
  }
}

int dispatch(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return dispatch(args, std::cout, std::cerr);
}

}  // namespace wreath
