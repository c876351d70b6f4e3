#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "pairstab/rational.hpp"

namespace pairstab {

/// Univariate polynomial in z with exact rational coefficients.
///
/// Coefficients are stored lowest degree first and the highest stored
/// coefficient is always nonzero; the zero polynomial has no coefficients.
/// Hilbert polynomials, the stability parameter and the comparison
/// polynomials P(rho, eps) are all values of this type.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, int degree);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  // Zero for the zero polynomial.
  Rational leading() const;
  // Coefficient of z^power; zero beyond the degree.
  Rational coefficient(int power) const;
  std::span<const Rational> coefficients() const { return coeffs_; }

  Rational operator()(const Rational& z) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);
  Polynomial& operator/=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator/(Polynomial a, const Rational& s) { return a /= s; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

Rational evaluate(const Polynomial& p, const Rational& n);

// Delta p(z) = p(z) - p(z - 1).
Polynomial difference(const Polynomial& p);

// Sign of q(n) for all sufficiently large integers n: the sign of the
// leading coefficient, 0 for the zero polynomial.
int eventual_sign(const Polynomial& q);

// p(n) <= q(n) for all large integers n. Decided on the coefficients of
// q - p from the top down; never by sampling.
bool eventually_leq(const Polynomial& p, const Polynomial& q);
// p(n) < q(n) for all large integers n.
bool eventually_lt(const Polynomial& p, const Polynomial& q);

// Hilbert polynomial shape on a variety of dimension e:
//   deg_x * r * z^e / e! + (d - canonical_degree * r / 2) * z^(e-1) + lower terms,
// where `lower` holds the e - 1 trailing coefficients, lowest degree first
// (empty on a curve, the constant term on a surface).
// Throws DomainError unless e is 1 or 2 and lower has e - 1 entries.
Polynomial hilbert_polynomial(int e, const Rational& deg_x, const Rational& canonical_degree,
                              const Rational& r, const Rational& d, std::span<const Rational> lower);

// "a*z^2 + b*z + c" with exact fractions, highest degree first; "0" for zero.
std::string to_string(const Polynomial& p);

}  // namespace pairstab
