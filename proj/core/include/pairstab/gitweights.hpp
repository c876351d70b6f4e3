#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pairstab/rational.hpp"
#include "pairstab/stability.hpp"

namespace pairstab {

/// Weights gamma_1 <= ... <= gamma_p of a one-parameter subgroup of SL(V):
/// nondecreasing, summing to zero, and not all equal.
class WeightVector {
 public:
  // Throws DomainError if the invariants fail.
  explicit WeightVector(std::vector<Rational> gamma);

  std::size_t size() const { return gamma_.size(); }
  const Rational& operator[](std::size_t i) const { return gamma_[i]; }  // 0-based
  const std::vector<Rational>& values() const { return gamma_; }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<Rational> gamma_;
};

/// What the weight calculus needs to know about a basis v_1..v_p of V:
/// ell is the first index with a(v_ell) != 0 and k_1 < ... < k_r are the
/// indices where the rank of the generated subsheaf jumps. All 1-based.
struct BasisProfile {
  int p = 2;
  int r = 1;
  int ell = 1;
  std::vector<int> K;

  // Throws DomainError unless 1 <= r <= p, p >= 2, 1 <= ell <= p and K is a
  // strictly increasing sequence of r indices in [1, p].
  void validate() const;

  friend bool operator==(const BasisProfile&, const BasisProfile&) = default;
};

// mu_hat = eta * mu + mu' = -(gamma_K + eta * gamma_ell).
Rational mu_hat(const BasisProfile& profile, const WeightVector& gamma, const Rational& eta);

// gamma^(i) = (i - p, ..., i - p, i, ..., i) with i leading entries i - p.
WeightVector special_weight_vector(int p, int i);

// c_i = (gamma_{i+1} - gamma_i) / p, so gamma = sum_i c_i gamma^(i).
std::vector<Rational> cone_coefficients(const WeightVector& gamma);

// mu^(i) = p (max{j : k_j <= i} + eta [ell <= i]) - i (r + eta), the value
// of mu_hat on gamma^(i).
Rational critical_mu(const BasisProfile& profile, const Rational& eta, int i);

// {ell - 1} union {k_j - 1}, restricted to [1, p - 1], sorted.
std::vector<int> critical_indices(const BasisProfile& profile);

struct ConditionRow {
  int condition = 1;  // 1: rows driven by ell_j = min{k_j, ell}; 2: rows driven by k_j
  int j = 1;
  Rational value;     // the row requires 0 (<=) value
};

// The tabulated conditions
//   (1) 0 (<=) p (j - 1) - (ell_j - 1)(r + eta)      for 1 <= j <= r + 1 with ell_j > 1,
//   (2) 0 (<=) p (j - 1 + eta) - (k_j - 1)(r + eta)  for 1 <= j <= r,
// with ell_j = min{k_j, ell} and k_{r+1} = p + 1.
std::vector<ConditionRow> condition_rows(const BasisProfile& profile, const Rational& eta);

struct WeightVerdict {
  bool satisfied = false;
  bool strict = false;
  // Table path: the smallest row value. Oracle path: the smallest mu_hat met.
  Rational minimum;
  std::vector<ConditionRow> rows;
  // Oracle path: a weight vector attaining `minimum`.
  std::vector<Rational> minimizer;
  std::size_t vectors_checked = 0;
};

// Hilbert-Mumford verdict for the point described by `profile` from the
// condition table. Requires eta > 0.
WeightVerdict hilbert_verdict(const BasisProfile& profile, const Rational& eta, Mode mode);

// Oracle: evaluates mu_hat on every nondecreasing integer vector with
// entries in [-bound * p, bound * p], zero sum and gamma_1 < gamma_p.
WeightVerdict brute_force_verdict(const BasisProfile& profile, const Rational& eta, int bound, Mode mode);

// Lemma-style criterion on one subspace W of V:
//   W inside Ker a:  dim W (r + eta) (<=) p rk E_(W)
//   otherwise:       dim W (r + eta) (<=) p (rk E_(W) + eta)
// margin = right side - left side; W = 0 is not subject to the criterion.
Verdict subspace_criterion(int p, int r, const Rational& eta, int dim_w, int rank_ew, bool in_ker_a, Mode mode);

enum class Conversion { eta_to_delta_bar, delta_bar_to_eta };

// delta_bar = p eta / (r + eta), eta = r delta_bar / (p - delta_bar).
Rational eta_delta_conversion(int p, int r, const Rational& value, Conversion direction);

}  // namespace pairstab
