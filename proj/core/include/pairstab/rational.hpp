#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pairstab {

// All arithmetic in this library is exact; mpq_class is kept canonical
// (reduced, positive denominator) by every helper below.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "n", "-n", "n/d" with optional surrounding whitespace.
// Throws InputError on anything else (including d == 0).
Rational parse_rational(std::string_view text);

// Canonical text: "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& value);

Integer floor(const Rational& value);
Integer ceil(const Rational& value);

// num / den in lowest terms; mpq_class(num, den) alone does not reduce.
inline Rational ratio(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

inline int sign(const Rational& value) { return sgn(value); }

// Narrowing with a range check; throws DomainError if `value` is not an
// integer representable as long.
long to_long(const Rational& value);

}  // namespace pairstab
