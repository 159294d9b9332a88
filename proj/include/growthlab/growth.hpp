#pragma once

#include <string>
#include <vector>

#include "growthlab/digits.hpp"
#include "growthlab/polynomial.hpp"
#include "growthlab/rational.hpp"
#include "growthlab/sequence.hpp"

namespace growthlab {

/// Certified bracket [lo, hi] around the unique root of `poly` in (1, inf).
struct RootEnclosure {
  IntPoly poly;
  Rational lo;
  Rational hi;
  unsigned bits = 0;  ///< target width 2^-bits

  bool exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  /// Midpoint rounded to `places` decimals.
  std::string decimal(unsigned places = 6) const;
  /// True when lo and hi round to the same `places`-decimal string.
  bool decimal_certain(unsigned places = 6) const;
};

/// t_m = sum_n c_{m-n}(a_n): the lengths enumerated by a digit sequence.
EnumSequence digit_seq_to_enum(const DigitSequence& a);

/// c_1..c_N with c_0 = 1 and c_n = sum_{i=1..n} s_i c_{n-i}.
std::vector<Integer> class_counts(const EnumSequence& s, std::size_t N);

/// Primitive integer polynomial whose roots in (1, inf) are exactly the
/// gamma with sum s_n gamma^-n = 1. Requires a positive sequence.
IntPoly char_polynomial(const EnumSequence& s);

/// Growth rate of the sum closure of a class enumerated by s, to width 2^-bits.
RootEnclosure growth_rate(const EnumSequence& s, unsigned bits = 40);

/// Encloses the unique root of `poly` in (1, inf); throws CertificationError
/// if there is not exactly one.
RootEnclosure enclose_root_above_one(const IntPoly& poly, unsigned bits = 40);

/// Refines an enclosure in place to width <= 2^-bits.
void refine(RootEnclosure& e, unsigned bits);

struct NamedConstant {
  std::string name;
  IntPoly poly;
  RootEnclosure root;
};

/// phi, kappa, xi_A, theta_B, lambda_B, lambda_A, in increasing order.
std::vector<NamedConstant> named_constants(unsigned bits = 40);

/// Least m with 2^m >= c (c+1)^2 / eps: sequences bounded by c that agree on
/// their first m terms have growth rates within eps of each other.
unsigned agreement_bound(long c, const Rational& eps);

}  // namespace growthlab
