#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "growthlab/polynomial.hpp"
#include "growthlab/rational.hpp"

namespace growthlab {

/// A generalised digit c0.c1...ck, worth c0 + c1/b + ... + ck/b^k in base b.
///
/// Representations are kept verbatim: 1.2 and 1.20 are distinct digits with
/// equal value at every base.
class GeneralisedDigit {
 public:
  GeneralisedDigit() : sub_{0} {}
  explicit GeneralisedDigit(std::vector<long> subdigits);
  GeneralisedDigit(long integer) : sub_{integer} {}  // NOLINT: integers are digits

  /// "1.221", "0.00000011", "17.[1,12,3]" (bracket form for subdigits >= 10).
  static GeneralisedDigit parse(const std::string& text);

  const std::vector<long>& subdigits() const { return sub_; }
  /// Number of subdigits (k + 1).
  std::size_t length() const { return sub_.size(); }
  long lead() const { return sub_.front(); }

  /// Value as a polynomial in x = 1/b (lowest degree first).
  IntPoly value_poly() const;
  Rational value(const Rational& beta) const;

  /// Drops trailing zero subdigits (keeps at least c0).
  GeneralisedDigit trimmed() const;
  /// Adds `n` to the leading subdigit.
  GeneralisedDigit plus(long n) const;
  /// Subdigit-wise sum.
  friend GeneralisedDigit operator+(const GeneralisedDigit& a, const GeneralisedDigit& b);

  std::string to_string() const;

  friend bool operator==(const GeneralisedDigit&, const GeneralisedDigit&) = default;
  friend auto operator<=>(const GeneralisedDigit&, const GeneralisedDigit&) = default;

 private:
  std::vector<long> sub_;
};

using DigitSet = std::vector<GeneralisedDigit>;

/// Sorts, removes duplicates, validates non-emptiness.
DigitSet make_digit_set(std::vector<GeneralisedDigit> digits);

/// Eventually periodic sequence of finite digit sets D_1, D_2, ...
struct DigitSetSequence {
  std::vector<DigitSet> preperiod;
  std::vector<DigitSet> period;

  DigitSetSequence() = default;
  DigitSetSequence(std::vector<DigitSet> pre, std::vector<DigitSet> per);

  /// 1-based.
  const DigitSet& at(std::size_t n) const;
  /// Positions 1..preperiod+period: every distinct case of the sequence.
  std::size_t distinct_positions() const { return preperiod.size() + period.size(); }
};

/// Eventually periodic sequence of generalised digits a_1, a_2, ...
struct DigitSequence {
  std::vector<GeneralisedDigit> preperiod;
  std::vector<GeneralisedDigit> period{GeneralisedDigit(0)};

  const GeneralisedDigit& at(std::size_t n) const;
  static DigitSequence constant(GeneralisedDigit d) { return {{}, {std::move(d)}}; }
  static DigitSequence finite(std::vector<GeneralisedDigit> digits) { return {std::move(digits), {GeneralisedDigit(0)}}; }
};

/// c0 + c1/beta + ... ; beta must exceed 1.
Rational digit_value(const GeneralisedDigit& d, const Rational& beta);

struct DigitStats {
  Rational ell;    ///< least value
  Rational u;      ///< greatest value
  Rational Delta;  ///< u - ell
  Rational delta;  ///< largest gap between consecutive values (0 for singletons)
};

DigitStats digit_stats(const DigitSet& set, const Rational& beta);

/// Exact sum of a_n beta^-n with the periodic tail in closed form.
Rational series_value(const DigitSequence& a, const Rational& beta);

/// Per-position least / greatest digits at beta, as digit sequences.
DigitSequence lower_digits(const DigitSetSequence& D, const Rational& beta);
DigitSequence upper_digits(const DigitSetSequence& D, const Rational& beta);

struct GreedyExpansion {
  std::vector<GeneralisedDigit> digits;  ///< a_1..a_N
  /// The prefix followed by the least digit at every later position.
  DigitSequence completed;
  /// |x - value(completed)|, exactly.
  Rational error;
  /// sum_{m>N} Delta_m beta^-m: the bound the gap inequalities guarantee
  /// for x in the representable range.
  Rational error_bound;
};

/// Greedy expansion of x: each a_n is the greatest element of D_n (by value
/// at beta) for which the partial sum plus the least possible tail still
/// does not exceed x. Throws InputError when x lies outside
/// [(l_n)_beta, (u_n)_beta].
GreedyExpansion greedy_expansion(const Rational& x, const DigitSetSequence& D, const Rational& beta,
                                 std::size_t n_terms);

/// sum_{i>=1} Delta_{n+i} beta^-i, exactly.
Rational gap_tail(const DigitSetSequence& D, std::size_t n, const Rational& beta);

/// delta_n <= sum_{i>=1} Delta_{n+i} beta^-i at the single position n.
bool gap_inequality_at(const DigitSetSequence& D, std::size_t n, const Rational& beta);

/// First violated position (1-based), if any, checking every distinct case.
std::optional<std::size_t> first_violated_gap(const DigitSetSequence& D, const Rational& beta);

inline bool gap_inequalities_hold(const DigitSetSequence& D, const Rational& beta) {
  return !first_violated_gap(D, beta).has_value();
}

/// For D1 at position 1, Dk at positions k, k+2, k+4, ... (k >= 3 odd) and
/// {0} elsewhere, the gap inequalities reduce to
/// (b^2 - 1) delta_k <= Delta_k and (b^(k-1) - b^(k-3)) delta_1 <= Delta_k.
bool corollary_gap_bounds(int k, const DigitSet& D1, const DigitSet& Dk, const Rational& beta);

/// The full sequence those two inequalities describe.
DigitSetSequence corollary_sequence(int k, const DigitSet& D1, const DigitSet& Dk);

/// A bracket [lo, hi] across which a predicate changes value.
struct SignChange {
  Rational lo;
  Rational hi;
  bool value_at_lo;
};

/// Scans consecutive probes of an increasing grid for changes in the
/// predicate and bisects each change down to the requested width. No
/// monotonicity is assumed: every change on the grid is reported.
std::vector<SignChange> threshold_brackets(const std::function<bool(const Rational&)>& pred,
                                           const std::vector<Rational>& probes, const Rational& width);

}  // namespace growthlab
