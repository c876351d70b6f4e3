#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pairstab/chambers.hpp"
#include "pairstab/gitweights.hpp"
#include "pairstab/model.hpp"
#include "pairstab/polynomial.hpp"
#include "pairstab/rational.hpp"
#include "pairstab/stability.hpp"

namespace pairstab {

// Key order is preserved so that identical inputs print identically.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "pairstab/1";

/// Sectional parameters (p = chi(0), delta_bar = delta(0)) attached to a problem.
struct SectionalParameters {
  Rational p;
  Rational delta_bar;

  friend bool operator==(const SectionalParameters&, const SectionalParameters&) = default;
};

/// Everything a problem file holds.
struct ProblemFile {
  PairProblem problem;
  std::vector<SubobjectWitness> witnesses;
  std::optional<SectionalParameters> sectional;

  friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

// Rationals are "num/den" strings (JSON integers are accepted on input,
// floating point numbers are rejected). All parse errors are InputError.
Json rational_to_json(const Rational& value);
Rational rational_from_json(const Json& value, const std::string& where);

// Coefficient strings, lowest degree first.
Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& value, const std::string& where);

Json variety_to_json(const VarietyContext& ctx);
VarietyContext variety_from_json(const Json& value);

Json target_to_json(const TargetSheaf& target);
TargetSheaf target_from_json(const Json& value);

Json witness_to_json(const SubobjectWitness& witness);
SubobjectWitness witness_from_json(const Json& value, std::size_t index);

// Schema errors are InputError; a well-formed file describing an
// inadmissible problem raises DomainError.
Json problem_file_to_json(const ProblemFile& file);
ProblemFile problem_file_from_json(const Json& value);
ProblemFile problem_file_from_text(const std::string& text);

Json verdict_to_json(const Verdict& verdict);
Json weight_verdict_to_json(const WeightVerdict& verdict);
Json chamber_to_json(const Chamber& chamber);
Json interval_to_json(const Interval& interval);

}  // namespace pairstab
