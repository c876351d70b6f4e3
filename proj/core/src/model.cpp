#include "pairstab/model.hpp"

#include <utility>

#include "pairstab/errors.hpp"

namespace pairstab {

VarietyContext VarietyContext::curve(const Rational& genus, const Rational& degree) {
  VarietyContext ctx{1, degree, 2 * genus - 2};
  ctx.validate();
  return ctx;
}

VarietyContext VarietyContext::surface(const Rational& h_squared, const Rational& canonical_degree) {
  VarietyContext ctx{2, h_squared, canonical_degree};
  ctx.validate();
  return ctx;
}

Rational VarietyContext::genus() const {
  if (!is_curve()) throw DomainError("genus is only defined here for curves");
  return 1 + canonical_degree / 2;
}

Rational VarietyContext::h_squared() const {
  if (dimension != 2) throw DomainError("H^2 is only defined for surfaces");
  return degree;
}

void VarietyContext::validate() const {
  if (dimension != 1 && dimension != 2) {
    throw DomainError("variety dimension must be 1 or 2, got " + std::to_string(dimension));
  }
  if (degree <= 0) throw DomainError("deg X must be positive");
}

Polynomial hilbert_polynomial(const VarietyContext& ctx, const Rational& r, const Rational& d,
                              std::span<const Rational> lower) {
  return hilbert_polynomial(ctx.dimension, ctx.degree, ctx.canonical_degree, r, d, lower);
}

std::string to_string(TargetKind kind) {
  switch (kind) {
    case TargetKind::structure_sheaf: return "structure_sheaf";
    case TargetKind::torsion_on_divisor: return "torsion_on_divisor";
    case TargetKind::general: return "general";
  }
  return "general";
}

TargetKind parse_target_kind(const std::string& text) {
  if (text == "structure_sheaf") return TargetKind::structure_sheaf;
  if (text == "torsion_on_divisor") return TargetKind::torsion_on_divisor;
  if (text == "general") return TargetKind::general;
  throw InputError("unknown target kind \"" + text + "\"");
}

void TargetSheaf::validate() const {
  if (rank < 0) throw DomainError("target rank must be nonnegative");
  if (kind == TargetKind::structure_sheaf && rank != 1) throw DomainError("the structure sheaf has rank 1");
  if (kind == TargetKind::torsion_on_divisor && rank != 0) {
    throw DomainError("a sheaf supported on a divisor has rank 0 on X");
  }
  if (h0 && *h0 < 0) throw DomainError("h0 of the target must be nonnegative");
  if (level_length && *level_length < 1) throw DomainError("level length l(D) must be at least 1");
}

PairProblem PairProblem::make(const VarietyContext& variety, int rank, const Rational& degree,
                              std::span<const Rational> lower, Polynomial delta, TargetSheaf target) {
  PairProblem problem;
  problem.variety = variety;
  problem.rank = rank;
  problem.degree = degree;
  problem.chi = hilbert_polynomial(variety, rank, degree, lower);
  problem.delta = std::move(delta);
  problem.target = std::move(target);
  problem.validate();
  return problem;
}

Rational PairProblem::delta1() const { return delta.coefficient(variety.dimension - 1); }

void PairProblem::validate() const {
  variety.validate();
  target.validate();
  if (rank < 1) throw DomainError("rank of E must be at least 1");
  if (eventual_sign(delta) <= 0) throw DomainError("delta must be positive for large n");
  const int e = variety.dimension;
  const Rational factorial = e == 1 ? 1 : 2;
  if (chi.degree() > e || chi.coefficient(e) != variety.degree * rank / factorial) {
    throw DomainError("chi = " + to_string(chi) + " does not have leading term deg X * r / e!");
  }
  if (chi.coefficient(e - 1) != degree - variety.canonical_degree * rank / 2) {
    throw DomainError("chi = " + to_string(chi) + " is inconsistent with degree " + to_string(degree));
  }
}

std::optional<Polynomial> effective_chi(const PairProblem& problem, const SubobjectWitness& witness) {
  if (witness.chi) return witness.chi;
  if (problem.variety.is_curve()) return hilbert_polynomial(problem.variety, witness.rank, witness.degree);
  return std::nullopt;
}

std::string to_string(Regime regime) {
  return regime == Regime::quot_regime ? "quot_regime" : "pair_regime";
}

Regime classify_regime(const PairProblem& problem) {
  return problem.delta.degree() >= problem.variety.dimension ? Regime::quot_regime : Regime::pair_regime;
}

std::string to_string(Violation::Kind kind) {
  using K = Violation::Kind;
  switch (kind) {
    case K::rank_out_of_range: return "rank_out_of_range";
    case K::leading_coefficient_mismatch: return "leading_coefficient_mismatch";
    case K::degree_mismatch: return "degree_mismatch";
    case K::kernel_torsion: return "kernel_torsion";
    case K::full_rank_kernel: return "full_rank_kernel";
    case K::quotient_length: return "quotient_length";
    case K::torsion_length: return "torsion_length";
    case K::improper_witness: return "improper_witness";
  }
  return "unknown";
}

std::vector<Violation> validate_witness(const PairProblem& problem, const SubobjectWitness& witness) {
  using K = Violation::Kind;
  std::vector<Violation> out;
  const auto add = [&](K kind, std::string message, bool structural) {
    out.push_back({kind, std::move(message), structural});
  };

  if (witness.rank < 0 || witness.rank > problem.rank) {
    add(K::rank_out_of_range,
        "rank " + std::to_string(witness.rank) + " outside [0, " + std::to_string(problem.rank) + "]", true);
    return out;
  }

  const int e = problem.variety.dimension;
  const Rational factorial = e == 1 ? 1 : 2;
  const auto chi = effective_chi(problem, witness);
  if (witness.chi) {
    if (witness.chi->degree() > e || witness.chi->coefficient(e) != problem.variety.degree * witness.rank / factorial) {
      add(K::leading_coefficient_mismatch,
          "chi_G = " + to_string(*witness.chi) + " must have leading term deg X * rk G / e!", true);
    } else if (witness.chi->coefficient(e - 1) !=
               witness.degree - problem.variety.canonical_degree * witness.rank / 2) {
      add(K::degree_mismatch, "chi_G = " + to_string(*witness.chi) + " disagrees with deg G = " +
                                  to_string(witness.degree), true);
    }
  }

  if (!witness.proper) {
    if (witness.rank != problem.rank || witness.in_kernel || witness.degree != problem.degree ||
        (chi && *chi != problem.chi)) {
      add(K::improper_witness, "a witness marked G = E must carry the invariants of E and lie outside Ker alpha",
          true);
    }
    return out;
  }
  if (!out.empty()) return out;

  // The remaining checks are necessary conditions for semistability coming
  // from rank-0 and full-rank subsheaves, where the slope bookkeeping
  // degenerates to a length comparison.
  if (witness.rank == 0) {
    if (witness.in_kernel) {
      const bool nonzero = chi ? !chi->is_zero() : witness.degree != 0;
      if (nonzero) add(K::kernel_torsion, "Ker alpha must be torsion free, but this rank-0 witness is nonzero", false);
    } else if (chi && eventually_lt(problem.delta, *chi)) {
      add(K::torsion_length,
          "torsion witness with chi_G = " + to_string(*chi) + " exceeds delta = " + to_string(problem.delta), false);
    }
  }

  if (witness.rank == problem.rank && witness.in_kernel) {
    if (problem.target.kind == TargetKind::structure_sheaf) {
      add(K::full_rank_kernel, "a full-rank kernel forces alpha = 0 for a torsion-free target", false);
    }
    if (chi) {
      const Polynomial quotient = problem.chi - *chi;
      if (eventual_sign(quotient) < 0) {
        add(K::quotient_length, "E/G would have negative Hilbert polynomial " + to_string(quotient), true);
      } else if (eventually_lt(quotient, problem.delta)) {
        add(K::quotient_length,
            "E/Ker alpha has Hilbert polynomial " + to_string(quotient) + " below delta = " + to_string(problem.delta),
            false);
      }
      if (problem.target.kind == TargetKind::torsion_on_divisor && problem.target.h0 && quotient.degree() <= 0 &&
          quotient.coefficient(0) > *problem.target.h0) {
        add(K::quotient_length, "E/Ker alpha is longer than h0(E0) = " + std::to_string(*problem.target.h0), true);
      }
    }
  }
  return out;
}

}  // namespace pairstab
