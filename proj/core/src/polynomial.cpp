#include "pairstab/polynomial.hpp"

#include <algorithm>
#include <utility>

#include "pairstab/errors.hpp"

namespace pairstab {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Polynomial::Polynomial(std::initializer_list<Rational> coefficients)
    : Polynomial(std::vector<Rational>(coefficients)) {}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
  if (degree < 0) throw DomainError("monomial degree must be nonnegative");
  std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = c;
  return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

Rational Polynomial::coefficient(int power) const {
  if (power < 0 || power > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(power)];
}

Rational Polynomial::operator()(const Rational& z) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= z;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Polynomial& Polynomial::operator/=(const Rational& scalar) {
  if (scalar == 0) throw DomainError("polynomial division by zero");
  for (auto& c : coeffs_) c /= scalar;
  return *this;
}

Rational evaluate(const Polynomial& p, const Rational& n) { return p(n); }

Polynomial difference(const Polynomial& p) {
  // p(z - 1) via repeated synthetic division (Taylor shift by -1).
  std::vector<Rational> shifted(p.coefficients().begin(), p.coefficients().end());
  const auto n = shifted.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) shifted[j - 1] -= shifted[j];
  }
  return p - Polynomial(std::move(shifted));
}

int eventual_sign(const Polynomial& q) { return sgn(q.leading()); }

bool eventually_leq(const Polynomial& p, const Polynomial& q) { return eventual_sign(q - p) >= 0; }

bool eventually_lt(const Polynomial& p, const Polynomial& q) { return eventual_sign(q - p) > 0; }

Polynomial hilbert_polynomial(int e, const Rational& deg_x, const Rational& canonical_degree,
                              const Rational& r, const Rational& d, std::span<const Rational> lower) {
  if (e != 1 && e != 2) throw DomainError("Hilbert polynomials are only modelled on curves and surfaces");
  if (lower.size() != static_cast<std::size_t>(e - 1)) {
    throw DomainError("expected " + std::to_string(e - 1) + " lower-order coefficient(s), got " +
                      std::to_string(lower.size()));
  }
  const Rational factorial = e == 1 ? 1 : 2;
  std::vector<Rational> coeffs(lower.begin(), lower.end());
  coeffs.push_back(d - canonical_degree * r / 2);
  coeffs.push_back(deg_x * r / factorial);
  return Polynomial(std::move(coeffs));
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c = p.coefficient(k);
    if (c == 0) continue;
    if (!out.empty()) {
      out += c < 0 ? " - " : " + ";
      c = abs(c);
    } else if (c < 0) {
      out += "-";
      c = abs(c);
    }
    const std::string term = k == 0 ? "" : (k == 1 ? "z" : "z^" + std::to_string(k));
    if (k == 0) {
      out += to_string(c);
    } else if (c == 1) {
      out += term;
    } else {
      out += to_string(c) + "·" + term;
    }
  }
  return out;
}

}  // namespace pairstab
