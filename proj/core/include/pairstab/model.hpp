#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pairstab/polynomial.hpp"
#include "pairstab/rational.hpp"

namespace pairstab {

/// Numerical invariants of the polarized ambient variety.
struct VarietyContext {
  int dimension = 1;             // e, 1 for a curve and 2 for a surface
  Rational degree = 1;           // deg X = H^e
  Rational canonical_degree = 0; // deg K_X = K_X . H^(e-1); 2g - 2 on a curve

  static VarietyContext curve(const Rational& genus, const Rational& degree = 1);
  static VarietyContext surface(const Rational& h_squared, const Rational& canonical_degree);

  bool is_curve() const { return dimension == 1; }
  Rational genus() const;      // curves only
  Rational h_squared() const;  // surfaces only; equals `degree`

  // Throws DomainError on e outside {1, 2} or deg X <= 0.
  void validate() const;

  friend bool operator==(const VarietyContext&, const VarietyContext&) = default;
};

Polynomial hilbert_polynomial(const VarietyContext& ctx, const Rational& r, const Rational& d,
                              std::span<const Rational> lower = {});

enum class TargetKind { structure_sheaf, torsion_on_divisor, general };

std::string to_string(TargetKind kind);
TargetKind parse_target_kind(const std::string& text);

/// Descriptor of the fixed target sheaf E0 of the homomorphism.
struct TargetSheaf {
  TargetKind kind = TargetKind::structure_sheaf;
  int rank = 1;
  Rational degree = 0;
  std::optional<Polynomial> chi;
  std::optional<int> h0;
  std::optional<int> level_length;  // l(D) for level structures on a curve

  void validate() const;

  friend bool operator==(const TargetSheaf&, const TargetSheaf&) = default;
};

/// The numerical datum of a moduli problem of pairs (E, alpha: E -> E0).
struct PairProblem {
  VarietyContext variety;
  int rank = 1;
  Rational degree = 0;
  Polynomial chi;
  Polynomial delta;
  TargetSheaf target;
  std::optional<Rational> c1_squared;
  std::optional<Rational> c2;
  bool integral_degrees = true;

  // Builds chi from (rank, degree, lower) and validates the result.
  static PairProblem make(const VarietyContext& variety, int rank, const Rational& degree,
                          std::span<const Rational> lower, Polynomial delta, TargetSheaf target);

  // Coefficient of z^(e-1) in delta.
  Rational delta1() const;

  // Throws DomainError when delta is not eventually positive, rank < 1, or
  // chi does not have the Hilbert polynomial shape for (rank, degree).
  void validate() const;

  friend bool operator==(const PairProblem&, const PairProblem&) = default;
};

/// Numerical shadow of one candidate subsheaf G of E.
struct SubobjectWitness {
  std::string label;
  int rank = 0;
  Rational degree = 0;
  std::optional<Polynomial> chi;
  bool in_kernel = false;  // epsilon(G) = 0
  std::optional<int> section_count;  // dim(V intersected with H^0(G))
  bool proper = true;  // G != E

  int epsilon() const { return in_kernel ? 0 : 1; }

  friend bool operator==(const SubobjectWitness&, const SubobjectWitness&) = default;
};

// chi_G if the witness carries it; on a curve the Hilbert polynomial is
// determined by (rank, degree) and is derived when absent.
std::optional<Polynomial> effective_chi(const PairProblem& problem, const SubobjectWitness& witness);

enum class Regime { pair_regime, quot_regime };

std::string to_string(Regime regime);

// quot_regime iff deg delta >= e: alpha is then injective, every pair is
// stable and the stability predicates are vacuous.
Regime classify_regime(const PairProblem& problem);

struct Violation {
  enum class Kind {
    rank_out_of_range,
    leading_coefficient_mismatch,
    degree_mismatch,
    kernel_torsion,
    full_rank_kernel,
    quotient_length,
    torsion_length,
    improper_witness,
  };
  Kind kind;
  std::string message;
  // Structural violations make the witness unusable for any predicate.
  bool structural = false;

  friend bool operator==(const Violation&, const Violation&) = default;
};

std::string to_string(Violation::Kind kind);

// Structural checks (rank bounds, Hilbert polynomial shape, G = E flags)
// plus the necessary conditions every semistable pair imposes on rank-0 and
// full-rank witnesses: torsion in the kernel must vanish, rank-0 witnesses
// outside the kernel have length at most delta, and a full-rank kernel
// leaves a quotient E/G of length at least delta.
std::vector<Violation> validate_witness(const PairProblem& problem, const SubobjectWitness& witness);

}  // namespace pairstab
