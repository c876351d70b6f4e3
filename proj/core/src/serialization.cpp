#include "pairstab/serialization.hpp"

#include "pairstab/errors.hpp"

namespace pairstab {

namespace {

const Json& require(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw InputError(where + " must be a JSON object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw InputError(where + " is missing \"" + key + "\"");
  return *it;
}

const Json* optional_field(const Json& obj, const char* key) {
  const auto it = obj.find(key);
  return it == obj.end() || it->is_null() ? nullptr : &*it;
}

int int_from_json(const Json& value, const std::string& where) {
  if (!value.is_number_integer()) throw InputError(where + " must be an integer");
  const auto v = value.get<long long>();
  if (v < -(1LL << 30) || v > (1LL << 30)) throw InputError(where + " is out of range");
  return static_cast<int>(v);
}

bool bool_from_json(const Json& value, const std::string& where) {
  if (!value.is_boolean()) throw InputError(where + " must be true or false");
  return value.get<bool>();
}

std::string string_from_json(const Json& value, const std::string& where) {
  if (!value.is_string()) throw InputError(where + " must be a string");
  return value.get<std::string>();
}

void reject_unknown_keys(const Json& obj, std::initializer_list<const char*> known, const std::string& where) {
  for (const auto& item : obj.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || item.key() == k;
    if (!ok) throw InputError(where + " has unknown key \"" + item.key() + "\"");
  }
}

std::vector<Rational> rationals_from_json(const Json& value, const std::string& where) {
  if (!value.is_array()) throw InputError(where + " must be an array");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(rational_from_json(value[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

}  // namespace

Json rational_to_json(const Rational& value) { return to_string(value); }

Rational rational_from_json(const Json& value, const std::string& where) {
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  if (value.is_number_integer()) {
    return value.is_number_unsigned() ? Rational(Integer(std::to_string(value.get<unsigned long long>())))
                                      : Rational(Integer(std::to_string(value.get<long long>())));
  }
  if (value.is_number_float()) throw InputError(where + ": floating point numbers are not exact; use \"num/den\"");
  throw InputError(where + " must be a rational string \"num/den\"");
}

Json polynomial_to_json(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(rational_to_json(c));
  return out;
}

Polynomial polynomial_from_json(const Json& value, const std::string& where) {
  return Polynomial(rationals_from_json(value, where));
}

Json variety_to_json(const VarietyContext& ctx) {
  Json out;
  out["dimension"] = ctx.dimension;
  out["degree"] = rational_to_json(ctx.degree);
  if (ctx.is_curve()) {
    out["genus"] = rational_to_json(ctx.genus());
  } else {
    out["canonical_degree"] = rational_to_json(ctx.canonical_degree);
    out["h_squared"] = rational_to_json(ctx.h_squared());
  }
  return out;
}

VarietyContext variety_from_json(const Json& value) {
  const std::string where = "variety";
  if (!value.is_object()) throw InputError(where + " must be a JSON object");
  reject_unknown_keys(value, {"dimension", "degree", "genus", "canonical_degree", "h_squared"}, where);
  VarietyContext ctx;
  ctx.dimension = int_from_json(require(value, "dimension", where), where + ".dimension");
  if (ctx.dimension != 1 && ctx.dimension != 2) throw InputError("variety.dimension must be 1 or 2");
  const Json* degree = optional_field(value, "degree");
  const Json* h2 = optional_field(value, "h_squared");
  if (ctx.dimension == 2 && !degree && h2) degree = h2;
  ctx.degree = degree ? rational_from_json(*degree, where + ".degree") : Rational(1);
  if (ctx.dimension == 2 && h2 && rational_from_json(*h2, where + ".h_squared") != ctx.degree) {
    throw InputError("variety.h_squared must equal variety.degree on a surface");
  }
  const Json* genus = optional_field(value, "genus");
  const Json* canonical = optional_field(value, "canonical_degree");
  if (genus && canonical) throw InputError("variety: give either genus or canonical_degree, not both");
  if (genus) {
    if (ctx.dimension != 1) throw InputError("variety.genus is only meaningful on a curve");
    ctx.canonical_degree = 2 * rational_from_json(*genus, where + ".genus") - 2;
  } else if (canonical) {
    ctx.canonical_degree = rational_from_json(*canonical, where + ".canonical_degree");
  } else {
    throw InputError("variety needs genus (curve) or canonical_degree");
  }
  ctx.validate();
  return ctx;
}

Json target_to_json(const TargetSheaf& target) {
  Json out;
  out["kind"] = to_string(target.kind);
  out["rank"] = target.rank;
  out["degree"] = rational_to_json(target.degree);
  if (target.chi) out["chi"] = polynomial_to_json(*target.chi);
  if (target.h0) out["h0"] = *target.h0;
  if (target.level_length) out["level_length"] = *target.level_length;
  return out;
}

TargetSheaf target_from_json(const Json& value) {
  const std::string where = "target";
  if (!value.is_object()) throw InputError(where + " must be a JSON object");
  reject_unknown_keys(value, {"kind", "rank", "degree", "chi", "h0", "level_length"}, where);
  TargetSheaf t;
  t.kind = parse_target_kind(string_from_json(require(value, "kind", where), where + ".kind"));
  const Json* rank = optional_field(value, "rank");
  t.rank = rank ? int_from_json(*rank, where + ".rank") : (t.kind == TargetKind::torsion_on_divisor ? 0 : 1);
  if (const Json* d = optional_field(value, "degree")) t.degree = rational_from_json(*d, where + ".degree");
  if (const Json* c = optional_field(value, "chi")) t.chi = polynomial_from_json(*c, where + ".chi");
  if (const Json* h = optional_field(value, "h0")) t.h0 = int_from_json(*h, where + ".h0");
  if (const Json* l = optional_field(value, "level_length")) t.level_length = int_from_json(*l, where + ".level_length");
  t.validate();
  return t;
}

Json witness_to_json(const SubobjectWitness& w) {
  Json out;
  out["label"] = w.label;
  out["rank"] = w.rank;
  out["degree"] = rational_to_json(w.degree);
  if (w.chi) out["chi"] = polynomial_to_json(*w.chi);
  out["in_kernel"] = w.in_kernel;
  if (w.section_count) out["section_count"] = *w.section_count;
  out["proper"] = w.proper;
  return out;
}

SubobjectWitness witness_from_json(const Json& value, std::size_t index) {
  const std::string where = "witnesses[" + std::to_string(index) + "]";
  if (!value.is_object()) throw InputError(where + " must be a JSON object");
  reject_unknown_keys(value, {"label", "rank", "degree", "chi", "in_kernel", "section_count", "proper"}, where);
  SubobjectWitness w;
  const Json* label = optional_field(value, "label");
  w.label = label ? string_from_json(*label, where + ".label") : "G" + std::to_string(index + 1);
  w.rank = int_from_json(require(value, "rank", where), where + ".rank");
  w.degree = rational_from_json(require(value, "degree", where), where + ".degree");
  if (const Json* c = optional_field(value, "chi")) w.chi = polynomial_from_json(*c, where + ".chi");
  if (const Json* k = optional_field(value, "in_kernel")) w.in_kernel = bool_from_json(*k, where + ".in_kernel");
  if (const Json* s = optional_field(value, "section_count")) {
    w.section_count = int_from_json(*s, where + ".section_count");
    if (*w.section_count < 0) throw InputError(where + ".section_count must be nonnegative");
  }
  if (const Json* p = optional_field(value, "proper")) w.proper = bool_from_json(*p, where + ".proper");
  return w;
}

Json problem_file_to_json(const ProblemFile& file) {
  const PairProblem& pr = file.problem;
  Json out;
  out["schema"] = kSchemaVersion;
  out["variety"] = variety_to_json(pr.variety);
  Json pair;
  pair["rank"] = pr.rank;
  pair["degree"] = rational_to_json(pr.degree);
  Json lower = Json::array();
  for (int k = 0; k <= pr.variety.dimension - 2; ++k) lower.push_back(rational_to_json(pr.chi.coefficient(k)));
  pair["lower"] = lower;
  if (pr.c1_squared) pair["c1_squared"] = rational_to_json(*pr.c1_squared);
  if (pr.c2) pair["c2"] = rational_to_json(*pr.c2);
  pair["integral_degrees"] = pr.integral_degrees;
  out["pair"] = pair;
  out["delta"] = polynomial_to_json(pr.delta);
  out["target"] = target_to_json(pr.target);
  Json witnesses = Json::array();
  for (const auto& w : file.witnesses) witnesses.push_back(witness_to_json(w));
  out["witnesses"] = witnesses;
  if (file.sectional) {
    out["sectional"] = {{"p", rational_to_json(file.sectional->p)},
                        {"delta_bar", rational_to_json(file.sectional->delta_bar)}};
  }
  return out;
}

ProblemFile problem_file_from_json(const Json& value) {
  if (!value.is_object()) throw InputError("problem file must be a JSON object");
  reject_unknown_keys(value, {"schema", "variety", "pair", "delta", "target", "witnesses", "sectional"}, "problem");
  if (const Json* schema = optional_field(value, "schema")) {
    const std::string s = string_from_json(*schema, "schema");
    if (s != kSchemaVersion) throw InputError("unsupported schema \"" + s + "\", expected " + kSchemaVersion);
  }

  ProblemFile file;
  const VarietyContext ctx = variety_from_json(require(value, "variety", "problem"));

  const Json& pair = require(value, "pair", "problem");
  if (!pair.is_object()) throw InputError("pair must be a JSON object");
  reject_unknown_keys(pair, {"rank", "degree", "lower", "c1_squared", "c2", "integral_degrees"}, "pair");
  const int rank = int_from_json(require(pair, "rank", "pair"), "pair.rank");
  const Rational degree = rational_from_json(require(pair, "degree", "pair"), "pair.degree");
  std::vector<Rational> lower;
  if (const Json* l = optional_field(pair, "lower")) lower = rationals_from_json(*l, "pair.lower");
  if (lower.size() != static_cast<std::size_t>(ctx.dimension - 1)) {
    throw InputError("pair.lower must hold " + std::to_string(ctx.dimension - 1) + " coefficient(s)");
  }

  const Polynomial delta = polynomial_from_json(require(value, "delta", "problem"), "delta");
  TargetSheaf target = target_from_json(require(value, "target", "problem"));

  file.problem = PairProblem::make(ctx, rank, degree, lower, delta, std::move(target));
  if (const Json* c = optional_field(pair, "c1_squared")) file.problem.c1_squared = rational_from_json(*c, "pair.c1_squared");
  if (const Json* c = optional_field(pair, "c2")) file.problem.c2 = rational_from_json(*c, "pair.c2");
  if (const Json* b = optional_field(pair, "integral_degrees")) {
    file.problem.integral_degrees = bool_from_json(*b, "pair.integral_degrees");
  }

  if (const Json* ws = optional_field(value, "witnesses")) {
    if (!ws->is_array()) throw InputError("witnesses must be an array");
    for (std::size_t i = 0; i < ws->size(); ++i) file.witnesses.push_back(witness_from_json((*ws)[i], i));
  }

  if (const Json* s = optional_field(value, "sectional")) {
    if (!s->is_object()) throw InputError("sectional must be a JSON object");
    reject_unknown_keys(*s, {"p", "delta_bar"}, "sectional");
    file.sectional = SectionalParameters{rational_from_json(require(*s, "p", "sectional"), "sectional.p"),
                                         rational_from_json(require(*s, "delta_bar", "sectional"), "sectional.delta_bar")};
  }
  return file;
}

ProblemFile problem_file_from_text(const std::string& text) {
  Json value;
  try {
    value = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return problem_file_from_json(value);
}

Json verdict_to_json(const Verdict& verdict) {
  Json out;
  out["satisfied"] = verdict.satisfied;
  out["strict"] = verdict.strict;
  if (const auto* p = std::get_if<Polynomial>(&verdict.margin)) {
    out["margin"] = polynomial_to_json(*p);
  } else {
    out["margin"] = rational_to_json(std::get<Rational>(verdict.margin));
  }
  return out;
}

Json weight_verdict_to_json(const WeightVerdict& verdict) {
  Json out;
  out["satisfied"] = verdict.satisfied;
  out["strict"] = verdict.strict;
  out["minimum"] = rational_to_json(verdict.minimum);
  if (!verdict.rows.empty()) {
    Json rows = Json::array();
    for (const auto& row : verdict.rows) {
      rows.push_back({{"condition", row.condition}, {"j", row.j}, {"value", rational_to_json(row.value)}});
    }
    out["rows"] = rows;
  }
  if (!verdict.minimizer.empty()) {
    Json m = Json::array();
    for (const auto& g : verdict.minimizer) m.push_back(rational_to_json(g));
    out["minimizer"] = m;
    out["vectors_checked"] = verdict.vectors_checked;
  }
  return out;
}

Json chamber_to_json(const Chamber& chamber) {
  Json out;
  out["lo"] = rational_to_json(chamber.lo);
  out["hi"] = chamber.hi ? rational_to_json(*chamber.hi) : Json("inf");
  return out;
}

Json interval_to_json(const Interval& interval) {
  Json out;
  out["lo"] = rational_to_json(interval.lo);
  out["hi"] = rational_to_json(interval.hi);
  out["lo_closed"] = interval.lo_closed;
  out["hi_closed"] = interval.hi_closed;
  return out;
}

}  // namespace pairstab
