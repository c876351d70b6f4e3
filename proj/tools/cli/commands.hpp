#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pairstab/serialization.hpp"
#include "pairstab/stability.hpp"

namespace pairstab::cli {

enum ExitCode : int { ok = 0, input_error = 2, domain_error = 3, on_wall = 4 };

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  std::vector<std::string> warnings;
  std::vector<std::string> text;
  int exit_code = ExitCode::ok;

  // Ignores a warning that is already present.
  void warn(const std::string& message);
  void line(const std::string& text_line) { text.push_back(text_line); }

  std::string render(bool json) const;
};

struct CommonOptions {
  bool json = false;
  std::optional<Mode> mode;  // both modes when unset
};

Report cmd_check(const ProblemFile& file, const CommonOptions& options);

struct WallArgs {
  int rank = 2;
  Rational degree;
  std::optional<Rational> delta1;
};
Report cmd_walls(const WallArgs& args);
Report cmd_chambers(const WallArgs& args);

struct BoundArgs {
  std::optional<ProblemFile> file;
  std::optional<int> kernel_rank;
  std::optional<Rational> delta1;
  std::optional<Rational> h_squared;
};
Report cmd_bounds(const BoundArgs& args);

struct RestrictArgs {
  Rational degree;
  Rational c1_squared;
  Rational c2;
  Rational delta1;
  Rational h_squared;
};
Report cmd_restrict(const RestrictArgs& args);

struct FramedArgs {
  int rank = 2;
  Rational c_dot_h;
  std::vector<FramedComponent> components;
};
Report cmd_framed(const FramedArgs& args);
// "a:nu_1,nu_2,...": multiplicity then the r-1 values nu_s.
FramedComponent parse_framed_component(const std::string& text);

struct LevelArgs {
  int rank = 2;
  int length = 1;
  Rational genus;
  std::optional<Rational> delta;
};
Report cmd_level(const LevelArgs& args);

struct GitArgs {
  BasisProfile profile;
  std::optional<Rational> eta;
  std::optional<Rational> delta_bar;
  bool oracle = false;
  std::optional<int> bound;
};
Report cmd_git(const GitArgs& args, const CommonOptions& options);

Report cmd_report(const ProblemFile& file, const CommonOptions& options);

// Parses argv-style arguments (without the program name), runs the
// subcommand and writes the rendered report. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pairstab::cli
