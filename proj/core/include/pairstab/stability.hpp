#pragma once

#include <string>
#include <variant>
#include <vector>

#include "pairstab/model.hpp"
#include "pairstab/polynomial.hpp"
#include "pairstab/rational.hpp"

namespace pairstab {

enum class Mode { semistable, stable };

std::string to_string(Mode mode);
Mode parse_mode(const std::string& text);

/// Outcome of one stability inequality LHS (<=) RHS on one witness.
///
/// `margin` is RHS - LHS written in the normalized form "G-side <= bound"
/// (i.e. after dividing the rank-weighted inequality by rk E): a polynomial
/// for chi-level checks, a rational for degree- and section-level checks.
/// `strict` records whether the strict inequality holds, so one evaluation
/// answers both modes; `satisfied` is the answer for the requested mode.
struct Verdict {
  bool satisfied = false;
  bool strict = false;
  std::variant<Polynomial, Rational> margin;
};

// P(rho, eps) = (rho / r) * (chi - delta) + eps * delta.
Polynomial standard_polynomial(const PairProblem& problem, int rho, int eps);

// chi_G (<=) P(rk G, eps(G)) in the eventual order. Requires the pair
// regime and a Hilbert polynomial for the witness; witnesses with
// proper == false (G = E) are accepted in semistable mode only.
Verdict check_chi(const PairProblem& problem, const SubobjectWitness& witness, Mode mode);

// Degree-level shadow: deg G (<=) rk G (d - delta1) / r + eps * delta1.
// Kernel witnesses use condition (1) at any positive rank; the others use
// condition (2), which only concerns 0 < rk G < r.
Verdict check_mu(const PairProblem& problem, const SubobjectWitness& witness, Mode mode);

// Section count version with scalar parameter delta_bar in (0, p):
// dim(V cap H^0 G) (<=) rk G (p - delta_bar) / r + eps * delta_bar.
Verdict check_sectional(const PairProblem& problem, const SubobjectWitness& witness, const Rational& delta_bar,
                        const Rational& p, Mode mode);

struct ChainReport {
  Verdict mu;
  Verdict chi;
  // Descriptions of violated implications; empty when the verdicts are
  // consistent with mu-stable => stable => semistable => mu-semistable.
  std::vector<std::string> violations;

  bool consistent() const { return violations.empty(); }
};

// Evaluates check_mu and check_chi on one witness with 0 < rk G < r and
// checks that strict mu implies strict chi and semistable chi implies
// semistable mu.
ChainReport implication_chain(const PairProblem& problem, const SubobjectWitness& witness);

// r (2g - 1) + delta: above this degree a pair on a curve is (semi)stable
// iff it is sectional (semi)stable.
Rational curve_threshold(int r, const Rational& genus, const Rational& delta);

}  // namespace pairstab
