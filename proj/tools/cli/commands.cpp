#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pairstab/chambers.hpp"
#include "pairstab/errors.hpp"
#include "pairstab/gitweights.hpp"

namespace pairstab::cli {

namespace {

constexpr const char* kBogomolovNote =
    "discriminant bound: the stated form -delta1/(4 H^2) and the Hodge-index form -delta1^2/H^2 disagree; both are "
    "reported";
constexpr const char* kMinFormulaNote =
    "interval criterion: the closed-form min bound on delta1 is not evaluated; the integer-free interval conditions "
    "are used instead";

std::vector<Mode> requested_modes(const CommonOptions& options) {
  if (options.mode) return {*options.mode};
  return {Mode::semistable, Mode::stable};
}

bool holds(const Verdict& v, Mode mode) { return mode == Mode::stable ? v.strict : v.satisfied || v.strict; }

std::string margin_text(const Verdict& v) {
  if (const auto* p = std::get_if<Polynomial>(&v.margin)) return to_string(*p);
  return to_string(std::get<Rational>(v.margin));
}

// Both modes from one evaluation: strict answers "stable", non-strict
// "semistable".
Json verdict_json(const Verdict& v, const std::vector<Mode>& modes) {
  Json out;
  for (Mode m : modes) out[to_string(m)] = holds(v, m);
  out["strict"] = v.strict;
  out["margin"] = verdict_to_json(v)["margin"];
  return out;
}

std::string verdict_word(const Verdict& v) {
  return v.strict ? "holds strictly" : (v.satisfied ? "holds with equality" : "fails");
}

Json rationals_json(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(rational_to_json(v));
  return out;
}

std::string join(const std::vector<Rational>& values) {
  std::string out;
  for (const auto& v : values) out += (out.empty() ? "" : ", ") + to_string(v);
  return out;
}

std::string chamber_text(const Chamber& c) {
  return "(" + to_string(c.lo) + ", " + (c.hi ? to_string(*c.hi) : std::string("inf")) + ")";
}

std::string interval_text(const Interval& i) {
  return std::string(i.lo_closed ? "[" : "(") + to_string(i.lo) + ", " + to_string(i.hi) + (i.hi_closed ? "]" : ")");
}

void add_check_section(Report& report, const ProblemFile& file, const CommonOptions& options) {
  const PairProblem& problem = file.problem;
  const auto modes = requested_modes(options);
  Json& results = report.results;
  results["regime"] = to_string(classify_regime(problem));

  if (classify_regime(problem) == Regime::quot_regime) {
    results["summary"] = "all pairs stable; parametrized by Quot scheme";
    report.line("regime: deg delta >= e");
    report.line("all pairs stable; parametrized by Quot scheme");
    return;
  }

  const std::size_t n = file.witnesses.size();
  if (n == 0) report.warn("vacuous: no witnesses supplied, nothing was checked");

  Json witnesses = Json::array();
  std::vector<std::optional<std::string>> first_violator(modes.size());
  bool structural = false;

  for (const auto& w : file.witnesses) {
    Json entry;
    entry["label"] = w.label;
    report.line("witness " + w.label + " (rank " + std::to_string(w.rank) + ", degree " + to_string(w.degree) +
                (w.in_kernel ? ", in Ker alpha" : "") + (w.proper ? "" : ", G = E") + ")");

    const auto violations = validate_witness(problem, w);
    Json vj = Json::array();
    bool unusable = false;
    for (const auto& v : violations) {
      vj.push_back({{"kind", to_string(v.kind)}, {"message", v.message}, {"structural", v.structural}});
      report.line("  violation " + to_string(v.kind) + ": " + v.message);
      unusable = unusable || v.structural;
    }
    entry["violations"] = vj;
    if (unusable) {
      structural = true;
      entry["skipped"] = true;
      witnesses.push_back(entry);
      continue;
    }

    // Reasons this witness destabilizes, per requested mode.
    std::vector<std::optional<std::string>> reason(modes.size());
    const auto blame = [&](const std::string& why, const Verdict* v) {
      for (std::size_t m = 0; m < modes.size(); ++m) {
        if (!reason[m] && (!v || !holds(*v, modes[m]))) reason[m] = why;
      }
    };
    if (!violations.empty()) blame(to_string(violations.front().kind), nullptr);

    const auto chi = effective_chi(problem, w);
    if (chi && (w.proper || !options.mode || options.mode == Mode::semistable)) {
      const Verdict v = check_chi(problem, w, Mode::semistable);
      Json cj = verdict_json(v, modes);
      if (!w.proper) cj.erase("stable");
      entry["chi"] = cj;
      report.line("  chi condition (" + std::string(w.in_kernel ? "1" : "2") + ") " + verdict_word(v) +
                  "; margin " + margin_text(v));
      if (w.proper) {
        blame(std::string("chi condition (") + (w.in_kernel ? "1" : "2") + ")", &v);
      } else if (!v.satisfied) {
        blame("chi condition (2) on G = E", nullptr);
      }
    }

    if (w.proper && w.rank > 0 && (w.in_kernel || w.rank < problem.rank)) {
      const Verdict v = check_mu(problem, w, Mode::semistable);
      entry["mu"] = verdict_json(v, modes);
      report.line("  mu condition (" + std::string(w.in_kernel ? "1" : "2") + ") " + verdict_word(v) + "; margin " +
                  margin_text(v));
      // mu-semistability is necessary for semistability; without chi_G it
      // is the only available test.
      if (!chi && !v.satisfied) blame("mu condition", nullptr);
    }

    if (file.sectional && w.section_count) {
      const Verdict v = check_sectional(problem, w, file.sectional->delta_bar, file.sectional->p, Mode::semistable);
      entry["sectional"] = verdict_json(v, modes);
      report.line("  sectional condition " + verdict_word(v) + "; margin " + margin_text(v));
    }

    Json destab = Json::object();
    for (std::size_t m = 0; m < modes.size(); ++m) {
      destab[to_string(modes[m])] = reason[m] ? Json(*reason[m]) : Json(nullptr);
      if (reason[m] && !first_violator[m]) first_violator[m] = w.label + " (" + *reason[m] + ")";
    }
    entry["destabilizes"] = destab;
    witnesses.push_back(entry);
  }
  results["witnesses"] = witnesses;

  Json overall = Json::object();
  for (std::size_t m = 0; m < modes.size(); ++m) {
    const std::string text = first_violator[m] ? "first violator: " + *first_violator[m]
                                               : "no violation among " + std::to_string(n) + " supplied witnesses";
    overall[to_string(modes[m])] = text;
    report.line(to_string(modes[m]) + ": " + text);
  }
  results["overall"] = overall;
  if (structural) {
    report.warn("some witnesses are structurally inconsistent and were skipped");
    report.exit_code = ExitCode::domain_error;
  }
}

Json wall_payload(const WallSet& walls) {
  Json out;
  out["walls"] = rationals_json(walls.walls);
  out["range_hi"] = rational_to_json(walls.range_hi);
  out["degenerate"] = walls.degenerate;
  return out;
}

void add_series(Report& report, const WallArgs& args) {
  if (args.rank == 2 && is_integer(args.degree) && args.degree < 0) {
    const auto range = series_indices(args.degree);
    report.results["series"] = {{"i_min", range.i_min}, {"i_max", range.i_max}};
    report.line("series indices: " + std::to_string(range.i_min) + " .. " + std::to_string(range.i_max) +
                " (empty from i = " + to_string(-args.degree) + " on)");
  } else {
    report.results["series"] = nullptr;
  }
}

void locate(Report& report, const WallSet& walls, const Rational& delta1) {
  const auto where = chamber_of(walls, delta1);
  if (const auto* wall = std::get_if<OnWall>(&where)) {
    report.results["location"] = {{"on_wall", rational_to_json(wall->value)}};
    report.warn("delta1 = " + to_string(wall->value) + " lies on a wall");
    report.line("delta1 = " + to_string(wall->value) + " is on a wall");
    report.exit_code = ExitCode::on_wall;
    return;
  }
  const auto& c = std::get<Chamber>(where);
  Json loc = chamber_to_json(c);
  loc["index"] = c.index;
  report.results["location"] = loc;
  if (c.beyond_range) report.warn("delta1 is past the enumerated wall range; the chamber is unbounded");
  report.line("delta1 = " + to_string(delta1) + " lies in chamber " + std::to_string(c.index) + " " + chamber_text(c));
}

Json wall_inputs(const WallArgs& args) {
  Json in;
  in["rank"] = args.rank;
  in["degree"] = rational_to_json(args.degree);
  if (args.delta1) in["delta1"] = rational_to_json(*args.delta1);
  return in;
}

void add_bounds_section(Report& report, const ProblemFile& file, std::optional<int> kernel_rank) {
  const PairProblem& problem = file.problem;
  Json& results = report.results;
  try {
    const DeltaBound b = delta_upper_bound(problem, kernel_rank);
    Json bj;
    bj["form"] = b.form;
    bj["bound"] = b.bound ? polynomial_to_json(*b.bound) : Json(nullptr);
    bj["delta1_bound"] = rational_to_json(b.delta1_bound);
    bj["window_empty"] = b.window_empty;
    results["delta_upper_bound"] = bj;
    report.line("delta (<=) " + (b.bound ? to_string(*b.bound) : std::string("?")) + "; delta1 (<=) " +
                to_string(b.delta1_bound) + " [" + b.form + "]");
    if (b.window_empty) report.warn("no admissible delta remains for pairs with nonzero kernel");
  } catch (const OnWallError&) {
    throw;
  } catch (const DomainError& e) {
    results["delta_upper_bound"] = nullptr;
    report.warn(std::string("delta bound unavailable: ") + e.what());
  }

  const Rational delta1 = problem.delta1();
  if (problem.rank >= 2 && delta1 > 0 && classify_regime(problem) == Regime::pair_regime) {
    const bool criterion = mu_interval_criterion(problem.rank, problem.degree, delta1);
    results["mu_interval_criterion"] = criterion;
    report.warn(kMinFormulaNote);
    report.line(std::string("interval criterion: ") + (criterion ? "holds" : "fails"));
  }

  if (!problem.variety.is_curve() && delta1 >= 0) {
    const auto d = discriminant_bound(delta1, problem.variety.h_squared());
    results["discriminant_bound"] = {{"stated", rational_to_json(d.stated)},
                                     {"proof_derived", rational_to_json(d.proof_derived)}};
    report.warn(kBogomolovNote);
    report.line("4 c2 - c1^2 >= " + to_string(d.stated) + " (stated), >= " + to_string(d.proof_derived) +
                " (Hodge index)");
  }
}

}  // namespace

void Report::warn(const std::string& message) {
  if (std::find(warnings.begin(), warnings.end(), message) == warnings.end()) warnings.push_back(message);
}

std::string Report::render(bool json) const {
  if (json) {
    Json out;
    out["command"] = command;
    out["inputs"] = inputs;
    out["results"] = results;
    out["warnings"] = warnings;
    return out.dump(2) + "\n";
  }
  std::string out;
  for (const auto& l : text) out += l + "\n";
  for (const auto& w : warnings) out += "warning: " + w + "\n";
  return out;
}

Report cmd_check(const ProblemFile& file, const CommonOptions& options) {
  Report report;
  report.command = "check";
  report.inputs = problem_file_to_json(file);
  add_check_section(report, file, options);
  return report;
}

Report cmd_walls(const WallArgs& args) {
  Report report;
  report.command = "walls";
  report.inputs = wall_inputs(args);
  const WallSet walls = wall_set(args.rank, args.degree);
  report.results = wall_payload(walls);
  Json ch = Json::array();
  for (const auto& c : chambers(walls)) ch.push_back(chamber_to_json(c));
  report.results["chambers"] = ch;
  report.results["label"] = "coarse walls";
  report.line("coarse walls: {" + join(walls.walls) + "}");
  if (walls.degenerate) {
    report.warn("the wall range [0, -d/(r-1)) is empty");
  } else {
    report.line("range: [0, " + to_string(walls.range_hi) + ")");
  }
  add_series(report, args);
  if (args.delta1) locate(report, walls, *args.delta1);
  return report;
}

Report cmd_chambers(const WallArgs& args) {
  Report report;
  report.command = "chambers";
  report.inputs = wall_inputs(args);
  const WallSet walls = wall_set(args.rank, args.degree);
  report.results = wall_payload(walls);
  Json ch = Json::array();
  if (args.rank == 2 && is_integer(args.degree) && args.degree < 0) {
    report.results["label"] = "rank-2 chambers";
    const auto range = series_indices(args.degree);
    for (long i = range.i_min; i <= range.i_max; ++i) {
      const Chamber c = rank2_chamber(static_cast<int>(i), args.degree);
      Json cj = chamber_to_json(c);
      cj["i"] = i;
      ch.push_back(cj);
      report.line("rank-2 chamber i = " + std::to_string(i) + ": " + chamber_text(c));
    }
  } else {
    report.results["label"] = "coarse walls";
    report.warn("rank-2 chambers need r = 2 and an integral d < 0; listing coarse chambers");
    for (const auto& c : chambers(walls)) {
      ch.push_back(chamber_to_json(c));
      report.line("coarse chamber " + std::to_string(c.index) + ": " + chamber_text(c));
    }
  }
  report.results["chambers"] = ch;
  add_series(report, args);
  if (args.delta1) locate(report, walls, *args.delta1);
  return report;
}

Report cmd_bounds(const BoundArgs& args) {
  Report report;
  report.command = "bounds";
  if (args.file) {
    report.inputs = problem_file_to_json(*args.file);
    if (args.kernel_rank) report.inputs["kernel_rank"] = *args.kernel_rank;
    add_bounds_section(report, *args.file, args.kernel_rank);
    return report;
  }
  if (!args.delta1 || !args.h_squared) throw InputError("bounds needs --input, or --delta1 with --h-squared");
  report.inputs = {{"delta1", rational_to_json(*args.delta1)}, {"h_squared", rational_to_json(*args.h_squared)}};
  const auto d = discriminant_bound(*args.delta1, *args.h_squared);
  report.results["discriminant_bound"] = {{"stated", rational_to_json(d.stated)},
                                          {"proof_derived", rational_to_json(d.proof_derived)}};
  report.warn(kBogomolovNote);
  report.line("4 c2 - c1^2 >= " + to_string(d.stated) + " (stated), >= " + to_string(d.proof_derived) +
              " (Hodge index)");
  return report;
}

Report cmd_restrict(const RestrictArgs& args) {
  Report report;
  report.command = "restrict";
  report.inputs = {{"degree", rational_to_json(args.degree)},     {"c1_squared", rational_to_json(args.c1_squared)},
                   {"c2", rational_to_json(args.c2)},             {"delta1", rational_to_json(args.delta1)},
                   {"h_squared", rational_to_json(args.h_squared)}};
  const auto r = restriction_degree(args.degree, args.c1_squared, args.c2, args.delta1, args.h_squared);
  report.results = {{"n0", r.n0}, {"epsilon", rational_to_json(r.epsilon)}, {"threshold", rational_to_json(r.threshold)}};
  report.line("n0 = " + std::to_string(r.n0) + " (threshold " + to_string(r.threshold) + ", epsilon " +
              to_string(r.epsilon) + ")");
  return report;
}

FramedComponent parse_framed_component(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw InputError("framed component must look like a:nu1,nu2,...");
  FramedComponent c;
  const Rational a = parse_rational(text.substr(0, colon));
  if (!is_integer(a)) throw InputError("framed component multiplicity must be an integer");
  c.multiplicity = static_cast<int>(to_long(a));
  std::stringstream rest(text.substr(colon + 1));
  std::string item;
  while (std::getline(rest, item, ',')) c.nu.push_back(parse_rational(item));
  return c;
}

Report cmd_framed(const FramedArgs& args) {
  Report report;
  report.command = "framed";
  Json comps = Json::array();
  for (const auto& c : args.components) comps.push_back({{"multiplicity", c.multiplicity}, {"nu", rationals_json(c.nu)}});
  report.inputs = {{"rank", args.rank}, {"c_dot_h", rational_to_json(args.c_dot_h)}, {"components", comps}};
  const auto w = framed_delta_window(args.rank, args.c_dot_h, args.components);
  report.results = {{"lower_raw", rational_to_json(w.lower_raw)},
                    {"window", interval_to_json(w.window)},
                    {"empty", w.empty}};
  if (w.empty) {
    report.line("delta1 window " + interval_text(w.window) + " is empty");
    report.warn("the framed delta1 window is empty");
  } else {
    report.line("delta1 window " + interval_text(w.window));
  }
  return report;
}

Report cmd_level(const LevelArgs& args) {
  Report report;
  report.command = "level";
  report.inputs = {{"rank", args.rank}, {"length", args.length}, {"genus", rational_to_json(args.genus)}};
  if (args.delta) report.inputs["delta"] = rational_to_json(*args.delta);
  if (args.genus < 2) report.warn("the existence window assumes genus at least 2");
  const Interval window = level_structure_window(args.rank, args.length);
  const Rational dim = level_structure_dimension(args.rank, args.genus, args.length);
  report.results = {{"window", interval_to_json(window)}, {"dimension", rational_to_json(dim)}};
  report.line("semistable pairs exist for delta in " + interval_text(window));
  report.line("dimension " + to_string(dim));
  if (args.rank == 2 && args.length == 1) {
    const Rational sss = rank2_point_strictly_semistable_dimension(args.genus);
    report.results["strictly_semistable_dimension"] = rational_to_json(sss);
    report.line("strictly semistable locus at delta = 1 has dimension " + to_string(sss));
  }
  if (args.delta) {
    const bool inside = window.contains(*args.delta);
    report.results["delta_inside"] = inside;
    report.line("delta = " + to_string(*args.delta) + (inside ? " is inside the window" : " is outside the window"));
  }
  return report;
}

Report cmd_git(const GitArgs& args, const CommonOptions& options) {
  Report report;
  report.command = "git";
  const BasisProfile& pr = args.profile;
  pr.validate();
  if (args.eta.has_value() == args.delta_bar.has_value()) throw InputError("git needs exactly one of --eta and --delta-bar");
  const Rational eta = args.eta ? *args.eta
                                : eta_delta_conversion(pr.p, pr.r, *args.delta_bar, Conversion::delta_bar_to_eta);
  const Rational delta_bar = args.delta_bar ? *args.delta_bar
                                            : eta_delta_conversion(pr.p, pr.r, eta, Conversion::eta_to_delta_bar);
  Json K = Json::array();
  for (int k : pr.K) K.push_back(k);
  report.inputs = {{"p", pr.p}, {"r", pr.r}, {"ell", pr.ell}, {"K", K}};
  if (args.eta) report.inputs["eta"] = rational_to_json(*args.eta);
  if (args.delta_bar) report.inputs["delta_bar"] = rational_to_json(*args.delta_bar);
  report.inputs["oracle"] = args.oracle;

  const auto modes = requested_modes(options);
  const WeightVerdict table = hilbert_verdict(pr, eta, Mode::semistable);
  report.results["eta"] = rational_to_json(eta);
  report.results["delta_bar"] = rational_to_json(delta_bar);
  Json verdict;
  for (Mode m : modes) verdict[to_string(m)] = m == Mode::stable ? table.strict : table.satisfied;
  const std::string word = table.strict ? "stable" : (table.satisfied ? "semistable, not stable" : "unstable");
  verdict["summary"] = word;
  report.results["verdict"] = verdict;
  report.results["table"] = weight_verdict_to_json(table);
  report.line("eta = " + to_string(eta) + ", delta_bar = " + to_string(delta_bar));
  for (const auto& row : table.rows) {
    report.line("  condition (" + std::to_string(row.condition) + "), j = " + std::to_string(row.j) + ": " +
                to_string(row.value));
  }
  report.line("verdict: " + word + " (minimum row " + to_string(table.minimum) + ")");

  if (args.oracle) {
    const int bound = args.bound.value_or(pr.p);
    const WeightVerdict brute = brute_force_verdict(pr, eta, bound, Mode::semistable);
    const bool agrees = brute.satisfied == table.satisfied && brute.strict == table.strict;
    Json oj = weight_verdict_to_json(brute);
    oj["bound"] = bound;
    oj["agrees"] = agrees;
    report.results["oracle"] = oj;
    report.line("oracle: " + std::string(agrees ? "agrees" : "DISAGREES") + " (" +
                std::to_string(brute.vectors_checked) + " weight vectors, minimum mu_hat " + to_string(brute.minimum) +
                ")");
    if (!agrees) {
      report.warn("condition table and brute-force oracle disagree; the oracle is authoritative");
      for (Mode m : modes) verdict[to_string(m)] = m == Mode::stable ? brute.strict : brute.satisfied;
      report.results["verdict"] = verdict;
    }
  }
  return report;
}

Report cmd_report(const ProblemFile& file, const CommonOptions& options) {
  Report report;
  report.command = "report";
  report.inputs = problem_file_to_json(file);
  const PairProblem& problem = file.problem;

  Json out;
  report.line("== witnesses");
  add_check_section(report, file, options);
  out["check"] = report.results;
  report.results = Json::object();

  report.line("== bounds");
  add_bounds_section(report, file, std::nullopt);
  out["bounds"] = report.results;
  report.results = Json::object();

  const Rational delta1 = problem.delta1();
  if (problem.rank >= 2 && classify_regime(problem) == Regime::pair_regime) {
    report.line("== walls");
    const WallSet walls = wall_set(problem.rank, problem.degree);
    report.results = wall_payload(walls);
    report.line("coarse walls: {" + join(walls.walls) + "}");
    if (delta1 > 0) {
      const auto where = chamber_of(walls, delta1);
      if (const auto* wall = std::get_if<OnWall>(&where)) {
        report.results["location"] = {{"on_wall", rational_to_json(wall->value)}};
        report.warn("delta1 = " + to_string(wall->value) + " lies on a coarse wall");
      } else {
        const auto& c = std::get<Chamber>(where);
        report.results["location"] = chamber_to_json(c);
        report.line("delta1 = " + to_string(delta1) + " lies in " + chamber_text(c));
      }
    }
    out["walls"] = report.results;
  }
  if (problem.variety.is_curve() && problem.target.level_length) {
    report.line("== level structure");
    const int l = *problem.target.level_length;
    const Interval window = level_structure_window(problem.rank, l);
    out["level"] = {{"window", interval_to_json(window)},
                    {"dimension", rational_to_json(level_structure_dimension(problem.rank, problem.variety.genus(), l))},
                    {"delta_inside", problem.delta.degree() == 0 && window.contains(problem.delta.coefficient(0))}};
    report.line("window " + interval_text(window));
  }
  report.results = out;
  return report;
}

namespace {

Rational rational_arg(const std::string& text, const char* name) {
  try {
    return parse_rational(text);
  } catch (const InputError& e) {
    throw InputError(std::string("--") + name + ": " + e.what());
  }
}

std::optional<Rational> optional_rational(const std::string& text, const char* name) {
  if (text.empty()) return std::nullopt;
  return rational_arg(text, name);
}

ProblemFile load_problem(const std::string& path) {
  if (path.empty()) throw InputError("--input FILE is required");
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return problem_file_from_text(buffer.str());
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact stability calculus for pairs on curves and surfaces", "pairstab"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  std::string input;
  std::string mode_text;
  app.add_flag("--json", json, "Emit canonical JSON");
  app.add_option("--input", input, "Problem file (JSON, schema pairstab/1)");
  app.add_option("--mode", mode_text, "semistable or stable (default: both)");

  auto* check = app.add_subcommand("check", "Evaluate the stability conditions on every supplied witness");
  auto* report_cmd = app.add_subcommand("report", "Witness verdicts, bounds, walls and level data for a problem file");

  std::string rank_text = "2", degree_text, delta1_text;
  auto* walls = app.add_subcommand("walls", "Coarse wall set for delta1");
  auto* chambers_cmd = app.add_subcommand("chambers", "Chambers for delta1 (rank-2 series when applicable)");
  for (auto* sub : {walls, chambers_cmd}) {
    sub->add_option("--rank", rank_text, "rank r >= 2");
    sub->add_option("--degree", degree_text, "degree d")->required();
    sub->add_option("--delta1", delta1_text, "locate this delta1");
  }

  auto* bounds = app.add_subcommand("bounds", "Upper bounds for delta and the discriminant bound");
  std::string kernel_text, h2_text;
  bounds->add_option("--kernel-rank", kernel_text, "rk Ker alpha, for a general target");
  bounds->add_option("--delta1", delta1_text, "delta1, without a problem file");
  bounds->add_option("--h-squared", h2_text, "H^2, without a problem file");

  auto* restrict_cmd = app.add_subcommand("restrict", "Restriction degree n0 for curves in |nH|");
  std::string c1_text, c2_text;
  restrict_cmd->add_option("--degree", degree_text, "degree d")->required();
  restrict_cmd->add_option("--c1-squared", c1_text, "c1^2")->required();
  restrict_cmd->add_option("--c2", c2_text, "c2")->required();
  restrict_cmd->add_option("--delta1", delta1_text, "delta1")->required();
  restrict_cmd->add_option("--h-squared", h2_text, "H^2")->required();

  auto* framed = app.add_subcommand("framed", "delta1 window for framed bundles");
  std::string cdoth_text;
  std::vector<std::string> component_texts;
  framed->add_option("--rank", rank_text, "rank r >= 2");
  framed->add_option("--c-dot-h", cdoth_text, "C.H")->required();
  framed->add_option("--component", component_texts, "a:nu_1,...,nu_{r-1} (repeatable)");

  auto* level = app.add_subcommand("level", "Level-structure window and dimension");
  std::string length_text = "1", genus_text, delta_text;
  level->add_option("--rank", rank_text, "rank r");
  level->add_option("--length", length_text, "l(D)");
  level->add_option("--genus", genus_text, "genus g")->required();
  level->add_option("--delta", delta_text, "test this delta against the window");

  auto* git = app.add_subcommand("git", "Hilbert-Mumford verdict for a basis profile");
  std::string p_text, r_text = "1", ell_text = "1", eta_text, delta_bar_text, bound_text;
  std::vector<std::string> k_texts;
  bool oracle = false;
  git->add_option("--p", p_text, "dim V")->required();
  git->add_option("--r", r_text, "rank r");
  git->add_option("--ell", ell_text, "first index with a(v_ell) != 0");
  git->add_option("--K", k_texts, "rank jump indices k_1 < ... < k_r")->delimiter(',')->required();
  git->add_option("--eta", eta_text, "eta > 0");
  git->add_option("--delta-bar", delta_bar_text, "delta_bar in (0, p)");
  git->add_flag("--oracle", oracle, "Cross-check with the brute-force oracle");
  git->add_option("--bound", bound_text, "oracle enumeration bound (default p)");

  std::vector<std::string> argv_storage{"pairstab"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::input_error;
  }

  const auto int_arg = [](const std::string& text, const char* name) {
    const Rational v = rational_arg(text, name);
    if (!is_integer(v) || !v.get_num().fits_sint_p()) throw InputError(std::string("--") + name + " must be an integer");
    return static_cast<int>(v.get_num().get_si());
  };

  try {
    CommonOptions options;
    options.json = json;
    if (!mode_text.empty()) options.mode = parse_mode(mode_text);

    Report report;
    if (check->parsed()) {
      report = cmd_check(load_problem(input), options);
    } else if (report_cmd->parsed()) {
      report = cmd_report(load_problem(input), options);
    } else if (walls->parsed() || chambers_cmd->parsed()) {
      WallArgs w{int_arg(rank_text, "rank"), rational_arg(degree_text, "degree"), optional_rational(delta1_text, "delta1")};
      report = walls->parsed() ? cmd_walls(w) : cmd_chambers(w);
    } else if (bounds->parsed()) {
      BoundArgs b;
      if (!input.empty()) b.file = load_problem(input);
      if (!kernel_text.empty()) b.kernel_rank = int_arg(kernel_text, "kernel-rank");
      b.delta1 = optional_rational(delta1_text, "delta1");
      b.h_squared = optional_rational(h2_text, "h-squared");
      report = cmd_bounds(b);
    } else if (restrict_cmd->parsed()) {
      report = cmd_restrict({rational_arg(degree_text, "degree"), rational_arg(c1_text, "c1-squared"),
                             rational_arg(c2_text, "c2"), rational_arg(delta1_text, "delta1"),
                             rational_arg(h2_text, "h-squared")});
    } else if (framed->parsed()) {
      FramedArgs f{int_arg(rank_text, "rank"), rational_arg(cdoth_text, "c-dot-h"), {}};
      for (const auto& c : component_texts) f.components.push_back(parse_framed_component(c));
      report = cmd_framed(f);
    } else if (level->parsed()) {
      report = cmd_level({int_arg(rank_text, "rank"), int_arg(length_text, "length"), rational_arg(genus_text, "genus"),
                          optional_rational(delta_text, "delta")});
    } else if (git->parsed()) {
      GitArgs g;
      g.profile.p = int_arg(p_text, "p");
      g.profile.r = int_arg(r_text, "r");
      g.profile.ell = int_arg(ell_text, "ell");
      for (const auto& k : k_texts) g.profile.K.push_back(int_arg(k, "K"));
      g.eta = optional_rational(eta_text, "eta");
      g.delta_bar = optional_rational(delta_bar_text, "delta-bar");
      g.oracle = oracle;
      if (!bound_text.empty()) g.bound = int_arg(bound_text, "bound");
      report = cmd_git(g, options);
    }
    out << report.render(json);
    return report.exit_code;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return ExitCode::input_error;
  } catch (const OnWallError& e) {
    err << "on wall: " << e.what() << "\n";
    return ExitCode::on_wall;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return ExitCode::domain_error;
  }
}

}  // namespace pairstab::cli
