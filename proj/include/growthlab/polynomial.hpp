#pragma once

#include <string>
#include <vector>

#include "growthlab/rational.hpp"

namespace growthlab {

/// Dense univariate polynomial with integer coefficients.
///
/// Coefficients are stored lowest degree first; the zero polynomial has no
/// coefficients. Trailing (leading-degree) zeros are always trimmed.
class IntPoly {
 public:
  IntPoly() = default;
  /// Lowest degree first.
  explicit IntPoly(std::vector<Integer> coeffs);
  static IntPoly from_ints(std::initializer_list<long> lowest_first);
  /// Highest degree first, as in the text form.
  static IntPoly from_descending(const std::vector<long>& highest_first);
  static IntPoly monomial(const Integer& c, unsigned degree);

  /// Parses "1 -2 0 -1" or "1,-2,0,-1" (highest degree first).
  static IntPoly parse(const std::string& text);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Integer& coeff(unsigned i) const;
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  const Integer& leading() const { return coeffs_.back(); }

  Rational eval(const Rational& x) const;
  /// Sign of p(x), computed in integers without forming the rational value.
  int sign_at(const Rational& x) const;

  IntPoly derivative() const;
  /// x^deg p(1/x) for deg >= degree().
  IntPoly reversed(unsigned deg) const;
  IntPoly shifted(unsigned k) const;  ///< x^k p(x)

  Integer content() const;
  /// Divides by the content and makes the leading coefficient positive.
  IntPoly primitive() const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const Integer& c, const IntPoly& b);
  IntPoly operator-() const;
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator<(const IntPoly& a, const IntPoly& b);

  /// Highest degree first, comma separated.
  std::string to_string() const;
  /// Human form such as "x^4 - 2x^3 - x^2 - 1".
  std::string to_pretty(char var = 'x') const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);
/// Exact quotient a / b; throws if b does not divide a over Z.
IntPoly exact_divide(const IntPoly& a, const IntPoly& b);
/// Primitive gcd with positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);
IntPoly squarefree_part(const IntPoly& p);
/// Removes every linear factor with a rational root (including x itself),
/// returning the primitive square-free remainder.
IntPoly strip_rational_roots(const IntPoly& p);

/// A closed bracket [lo, hi] that holds exactly one real root of some
/// polynomial; lo == hi marks an exact rational root.
struct RootBracket {
  Rational lo;
  Rational hi;
  Rational width() const { return hi - lo; }
  bool exact() const { return lo == hi; }
};

/// Sturm chain of the square-free part of a polynomial. Counts and isolates
/// distinct real roots exactly.
class SturmChain {
 public:
  explicit SturmChain(const IntPoly& p);

  const IntPoly& squarefree() const { return chain_.front(); }
  /// Number of distinct real roots in the half-open interval (a, b].
  int count(const Rational& a, const Rational& b) const;
  /// Isolating brackets for every root in (a, b], in increasing order.
  std::vector<RootBracket> isolate(const Rational& a, const Rational& b) const;
  /// Shrinks a bracket holding a single root until its width is <= width.
  void refine(RootBracket& r, const Rational& width) const;
  /// Halves a bracket once (or collapses it to an exact root).
  void bisect(RootBracket& r) const;

 private:
  int variations(const Rational& x) const;
  std::vector<IntPoly> chain_;
};

}  // namespace growthlab
