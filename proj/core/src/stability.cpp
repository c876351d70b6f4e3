#include "pairstab/stability.hpp"

#include "pairstab/errors.hpp"

namespace pairstab {

namespace {

Verdict make_verdict(int margin_sign, Mode mode) {
  Verdict v;
  v.strict = margin_sign > 0;
  v.satisfied = mode == Mode::stable ? v.strict : margin_sign >= 0;
  return v;
}

void require_proper_in_stable_mode(const SubobjectWitness& witness, Mode mode) {
  if (!witness.proper && mode == Mode::stable) {
    throw DomainError("G = E is only tested in semistable mode");
  }
}

}  // namespace

std::string to_string(Mode mode) { return mode == Mode::stable ? "stable" : "semistable"; }

Mode parse_mode(const std::string& text) {
  if (text == "semistable") return Mode::semistable;
  if (text == "stable") return Mode::stable;
  throw InputError("mode must be \"semistable\" or \"stable\", got \"" + text + "\"");
}

Polynomial standard_polynomial(const PairProblem& problem, int rho, int eps) {
  if (rho < 0 || rho > problem.rank) throw DomainError("rho must lie in [0, r]");
  if (eps != 0 && eps != 1) throw DomainError("eps must be 0 or 1");
  return (problem.chi - problem.delta) * ratio(rho, problem.rank) + problem.delta * eps;
}

Verdict check_chi(const PairProblem& problem, const SubobjectWitness& witness, Mode mode) {
  if (classify_regime(problem) == Regime::quot_regime) {
    throw DomainError("deg delta >= e: every pair is stable and the chi-conditions are vacuous");
  }
  require_proper_in_stable_mode(witness, mode);
  const auto chi = effective_chi(problem, witness);
  if (!chi) throw DomainError("witness \"" + witness.label + "\" has no Hilbert polynomial chi_G");
  if (witness.rank < 0 || witness.rank > problem.rank) throw DomainError("witness rank outside [0, r]");

  Polynomial margin = standard_polynomial(problem, witness.rank, witness.epsilon()) - *chi;
  Verdict v = make_verdict(eventual_sign(margin), mode);
  v.margin = std::move(margin);
  return v;
}

Verdict check_mu(const PairProblem& problem, const SubobjectWitness& witness, Mode mode) {
  if (witness.rank <= 0) throw DomainError("mu-conditions are undefined for rank-0 witnesses");
  if (witness.rank > problem.rank) throw DomainError("witness rank exceeds rk E");
  if (!witness.in_kernel && witness.rank >= problem.rank) {
    throw DomainError("condition (2) of mu-stability only concerns rk G < rk E");
  }
  const Rational delta1 = problem.delta1();
  Rational margin = ratio(witness.rank, problem.rank) * (problem.degree - delta1) - witness.degree;
  if (!witness.in_kernel) margin += delta1;
  Verdict v = make_verdict(sgn(margin), mode);
  v.margin = margin;
  return v;
}

Verdict check_sectional(const PairProblem& problem, const SubobjectWitness& witness, const Rational& delta_bar,
                        const Rational& p, Mode mode) {
  if (!witness.section_count) throw DomainError("witness \"" + witness.label + "\" has no section count");
  if (!(0 < delta_bar && delta_bar < p)) throw DomainError("delta_bar must lie in (0, p)");
  require_proper_in_stable_mode(witness, mode);
  Rational margin = ratio(witness.rank, problem.rank) * (p - delta_bar) - *witness.section_count;
  if (!witness.in_kernel) margin += delta_bar;
  Verdict v = make_verdict(sgn(margin), mode);
  v.margin = margin;
  return v;
}

ChainReport implication_chain(const PairProblem& problem, const SubobjectWitness& witness) {
  if (witness.rank <= 0 || witness.rank >= problem.rank) {
    throw DomainError("the implication chain is checked on witnesses with 0 < rk G < rk E");
  }
  ChainReport report;
  report.mu = check_mu(problem, witness, Mode::semistable);
  report.chi = check_chi(problem, witness, Mode::semistable);
  if (report.mu.strict && !report.chi.strict) {
    report.violations.push_back("mu-stable inequality holds strictly but the chi inequality is not strict");
  }
  if (report.chi.satisfied && !report.mu.satisfied) {
    report.violations.push_back("chi-semistable inequality holds but the mu-semistable one fails");
  }
  return report;
}

Rational curve_threshold(int r, const Rational& genus, const Rational& delta) {
  if (r < 1) throw DomainError("rank must be at least 1");
  return r * (2 * genus - 1) + delta;
}

}  // namespace pairstab
