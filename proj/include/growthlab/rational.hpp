#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace growthlab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown for malformed input or violated preconditions (CLI exit code 2).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a requested certification cannot be established (CLI exit code 3).
class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text);

/// Exact `base^exp` for exp >= 0.
Rational pow(const Rational& base, unsigned exp);
Integer pow(const Integer& base, unsigned exp);

/// 2^-bits as a rational.
Rational dyadic_epsilon(unsigned bits);

/// "p/q" (or "p" when q == 1).
std::string to_exact_string(const Rational& q);

/// Decimal rendering rounded half-up to `places` digits, computed exactly.
std::string to_decimal(const Rational& q, unsigned places);

/// Smallest integer >= q.
Integer ceil(const Rational& q);
/// Largest integer <= q.
Integer floor(const Rational& q);

}  // namespace growthlab
