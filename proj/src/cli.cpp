#include "presmin/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "presmin/report.hpp"
#include "presmin/sources.hpp"

namespace presmin {

namespace {

std::string braces(const std::vector<Natural>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + std::to_string(xs[i]);
  return s + "}";
}

std::string cell(const Lookup& l) {
  switch (l.status) {
    case Status::defined: return std::to_string(l.value);
    case Status::provably_undefined: return "-";
    case Status::undefined_at_horizon: return "?";
  }
  return "";
}

std::string optional_text(const std::optional<Natural>& v) {
  return v ? std::to_string(*v) : "none";
}

struct Options {
  std::string format = "text";
  std::string formula;
  std::vector<std::string> sets;
  Natural n_max = 0;
  std::optional<Natural> b;
  std::optional<Natural> d;
};

bool json_output(const Options& o) { return o.format == "json"; }

int cmd_eval(const Options& o, std::ostream& out) {
  const FormulaPtr f = parse_formula(o.formula);
  const UPSet s = eval(*f);
  const std::string synthesized = print(*synthesize(s));
  if (json_output(o)) {
    out << Json{{"formula", print(*f)}, {"set", to_json(s)}, {"synthesized", synthesized}}.dump(2)
        << "\n";
  } else {
    out << "set: " << s.to_string() << "\n" << "formula: " << synthesized << "\n";
  }
  return kExitPeriodic;
}

int cmd_synth(const Options& o, std::ostream& out) {
  const SetHandle h = resolve(o.sets.front());
  const UPSet* s = h.periodic();
  if (!s) throw DomainError("synth needs an ultimately periodic set, got " + h.describe());
  const std::string formula = print(*synthesize(*s));
  if (json_output(o))
    out << Json{{"set", to_json(*s)}, {"formula", formula}}.dump(2) << "\n";
  else
    out << formula << "\n";
  return kExitPeriodic;
}

int cmd_windows(const Options& o, std::ostream& out) {
  const SetHandle h = resolve(o.sets.front());
  const SearchLimits limits = SearchLimits::from_environment();
  std::optional<Natural> period = o.d;
  if (period && *period == 0) throw DomainError("--d must be at least 1");
  if (!period && o.n_max > 0)
    if (const Lookup d = find_uniform_period(h, o.n_max, limits)) period = *d;
  const WindowProfile p = profile(h, o.n_max, period, limits);
  if (json_output(o)) {
    out << Json{{"set", h.describe()}, {"profile", to_json(p)}}.dump(2) << "\n";
    return kExitPeriodic;
  }
  out << "set: " << h.describe() << "\n";
  out << "alpha period: " << optional_text(period) << "\n";
  out << std::left << std::setw(6) << "n" << std::setw(10) << "dtilde" << std::setw(10) << "D"
      << std::setw(10) << "A" << "alpha\n";
  for (const ProfileEntry& e : p.entries)
    out << std::setw(6) << e.n << std::setw(10) << cell(e.dtilde) << std::setw(10)
        << cell(e.big_d) << std::setw(10) << cell(e.big_a) << cell(e.alpha) << "\n";
  out << "(- provably undefined, ? undefined at the horizon)\n";
  return kExitPeriodic;
}

void print_decomposition(const Decomposition& d, std::ostream& out) {
  out << "points: " << braces(d.points) << "\n";
  for (const Segment& s : d.segments) {
    out << "segment: lo=" << s.lo << " hi="
        << (s.hi ? std::to_string(*s.hi) : d.certified ? "inf" : "horizon") << " d=" << s.modulus
        << " residues=" << braces(s.residues) << "\n";
  }
  out << "set: " << d.to_upset().to_string() << "\n";
  if (d.checked_to) out << "checked on [0, " << *d.checked_to << "]\n";
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const SetHandle h = resolve(o.sets.front());
  const Decomposition d = decompose(h, o.n_max, SearchLimits::from_environment());
  if (json_output(o)) {
    Json j = to_json(d);
    j["set"] = to_json(d.to_upset());
    out << j.dump(2) << "\n";
  } else {
    print_decomposition(d, out);
  }
  return kExitPeriodic;
}

int exit_for(Classification c) {
  switch (c) {
    case Classification::eventually_periodic: return kExitPeriodic;
    case Classification::expanding_evidence: return kExitExpanding;
    case Classification::inconclusive: return kExitInconclusive;
  }
  return kExitInconclusive;
}

constexpr Natural kDefaultPeriodicHorizon = 10000;

int cmd_analyze(const Options& o, std::ostream& out) {
  const SetHandle h = resolve(o.sets.front());
  const Natural b = o.b.value_or(h.horizon().value_or(kDefaultPeriodicHorizon));
  const AnalysisReport r = classify(h, o.n_max, b, SearchLimits::from_environment());
  if (json_output(o)) {
    out << to_json(r).dump(2) << "\n";
    return exit_for(r.classification);
  }
  out << "classification: " << to_string(r.classification) << "\n";
  if (r.decomposition) {
    const Segment& s = r.decomposition->segments.front();
    out << "N: " << s.lo << "\n"
        << "d: " << s.modulus << "\n"
        << "residues: " << braces(s.residues) << "\n"
        << "points: " << braces(r.decomposition->points) << "\n";
  }
  out << "u: " << optional_text(r.u) << "\n" << "v: " << optional_text(r.v) << "\n";
  out << "gaps on [0, " << b << "]: early " << r.witnesses.early_gap << ", late "
      << r.witnesses.late_gap << "\n";
  out << "witnesses:\n";
  for (const WitnessRow& row : r.witnesses.rows)
    out << "  n=" << row.n << " count=" << row.count << " largest=" << braces(row.largest) << "\n";
  return exit_for(r.classification);
}

int cmd_compare(const Options& o, std::ostream& out) {
  const SetHandle a = resolve(o.sets[0]);
  const SetHandle c = resolve(o.sets[1]);
  Natural b = o.b.value_or(std::min(a.horizon().value_or(kDefaultPeriodicHorizon),
                                    c.horizon().value_or(kDefaultPeriodicHorizon)));
  std::optional<Natural> first;
  for (Natural x = 0; x <= b && !first; ++x)
    if (a.contains(x) != c.contains(x)) first = x;
  if (json_output(o)) {
    Json j{{"B", b}, {"equal", !first}, {"first_difference", nullptr}};
    if (first)
      j["first_difference"] =
          Json{{"x", *first}, {"in_first", a.contains(*first)}, {"in_second", c.contains(*first)}};
    out << j.dump(2) << "\n";
  } else if (first) {
    out << "differ at " << *first << ": first " << (a.contains(*first) ? "contains" : "omits")
        << " it, second " << (c.contains(*first) ? "contains" : "omits") << " it\n";
  } else {
    out << "equal on [0," << b << "]\n";
  }
  return first ? kExitDiffer : kExitPeriodic;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Window analysis of subsets of the naturals", "presmin"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto add_set = [&](CLI::App* sub) {
    sub->add_option("--set", o.sets, "Set source (builtin:, file:, formula:, up:)")
        ->required()
        ->expected(1);
  };

  CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate a formula to its canonical set");
  eval_cmd->add_option("formula", o.formula, "Formula in x")->required();
  add_format(eval_cmd);

  CLI::App* synth_cmd = app.add_subcommand("synth", "Quantifier-free formula for a set");
  add_set(synth_cmd);
  add_format(synth_cmd);

  CLI::App* windows_cmd = app.add_subcommand("windows", "Window profile d~, D, A, alpha");
  add_set(windows_cmd);
  windows_cmd->add_option("--nmax", o.n_max, "Largest window size")->required();
  windows_cmd->add_option("--d", o.d, "Period for the alpha column");
  add_format(windows_cmd);

  CLI::App* decompose_cmd = app.add_subcommand("decompose", "Points plus one periodic segment");
  add_set(decompose_cmd);
  decompose_cmd->add_option("--nmax", o.n_max, "Largest window size")
      ->required()
      ->check(CLI::PositiveNumber);
  add_format(decompose_cmd);

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Classify a set");
  add_set(analyze_cmd);
  analyze_cmd->add_option("--nmax", o.n_max, "Largest window size")
      ->required()
      ->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--B", o.b, "Analysis horizon (default: the set's horizon or 10000)");
  add_format(analyze_cmd);

  CLI::App* compare_cmd = app.add_subcommand("compare", "First point where two sets differ");
  compare_cmd->add_option("--set", o.sets, "Set source, given twice")->required()->expected(2);
  compare_cmd->add_option("--B", o.b, "Compare on [0, B]");
  add_format(compare_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (eval_cmd->parsed()) return cmd_eval(o, out);
    if (synth_cmd->parsed()) return cmd_synth(o, out);
    if (windows_cmd->parsed()) return cmd_windows(o, out);
    if (decompose_cmd->parsed()) return cmd_decompose(o, out);
    if (analyze_cmd->parsed()) return cmd_analyze(o, out);
    return cmd_compare(o, out);
  } catch (const HorizonExceeded& e) {
    err << "presmin: " << e.what() << "\n";
    return kExitHorizon;
  } catch (const InferenceFailure& e) {
    err << "presmin: inference failed: " << e.what() << "\n";
    return kExitInference;
  } catch (const ParseError& e) {
    err << "presmin: parse error at offset " << e.position() << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "presmin: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace presmin
