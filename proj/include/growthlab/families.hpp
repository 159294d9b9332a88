#pragma once

#include <optional>
#include <string>
#include <vector>

#include "growthlab/digits.hpp"
#include "growthlab/gap_sweep.hpp"
#include "growthlab/growth.hpp"
#include "growthlab/perm.hpp"
#include "growthlab/poset.hpp"
#include "growthlab/sequence.hpp"

namespace growthlab {

/// One collection U, L: downsets of (down-closure of U) \ Q^{r,s} containing L.
struct Collection {
  std::vector<Permutation> U;
  std::vector<Permutation> L;
};

/// A family of sum-closed classes: Q^{r,s}, one downset of R_n^{r,s} for
/// every odd n >= k, and (if collections are given) one extra set H drawn
/// from their union.
struct FamilySpec {
  std::string name;
  int r = 5;
  int s = 3;
  int k = 5;
  std::vector<Collection> collections;

  /// Throws InputError unless r >= 3, s >= 2 and k >= 5 is odd.
  void validate() const;
};

/// The named permutations pi_0..pi_8 and mu_1..mu_5.
Permutation named_permutation(const std::string& name);

/// "A".."E", "Example", or "Theorem1:<k>".
FamilySpec builtin_family(const std::string& name);
std::vector<std::string> builtin_family_names();

/// Reads {"name", "r", "s", "k", "collections": [{"U": [...], "L": [...]}]}; entries
/// are one-line permutations or names such as "pi1".
FamilySpec load_family_config(const std::string& path);
FamilySpec parse_family_config(const std::string& json_text);

/// The extra sets H, deduplicated across collections. Checks that no
/// element lies in Q^{r,s} or in an R cell with odd n >= k.
std::vector<std::vector<Permutation>> extra_sets(const FamilySpec& spec);

/// Distinct profiles of the extra sets, from length 1 (just {0} when the
/// family has no collections).
std::vector<EnumProfile> h_profiles(const FamilySpec& spec);

/// Distinct profiles of the F family for (r, s).
std::vector<EnumProfile> f_profiles(int r, int s);

/// D_1 = {q_1 + h}, D_n = {q_n + f} for odd n >= k + 2, {q_n} elsewhere.
DigitSetSequence family_digit_sets(const FamilySpec& spec);

struct BoundSequences {
  DigitSequence ell_digits;
  DigitSequence u_digits;
  EnumSequence ell;
  EnumSequence u;
};

/// Least and greatest digit at every position, by value at the probe.
BoundSequences bound_sequences(const DigitSetSequence& D, const Rational& gamma_probe);
BoundSequences bound_sequences(const FamilySpec& spec, const Rational& gamma_probe);

struct IntervalReport {
  std::string name;
  int r = 0, s = 0, k = 0;
  std::size_t h_profile_count = 0;
  std::size_t f_profile_count = 0;
  std::vector<EnumProfile> h_profiles;
  /// Where the least and greatest digits were chosen; inside [gr_lo, gr_hi]
  /// unless no such point was found.
  Rational probe;
  EnumSequence ell_seq;
  EnumSequence u_seq;
  RootEnclosure gr_lo;
  RootEnclosure gr_hi;
  /// Nearest boundaries of the gap inequalities above and below gr_lo.
  std::optional<GapBoundary> gamma_max;
  std::optional<GapBoundary> gamma_min;
  Rational search_hi;  ///< window searched above
  Rational search_lo;  ///< window searched below
  bool feasible = false;
  std::optional<std::size_t> violated_position;
  /// The least and greatest digits are the same at the probe, at both
  /// endpoints and at their midpoint.
  bool extremes_stable = false;
  /// Least/greatest extra-set profile by value at the probe and by plain
  /// lexicographic order of the counts; equal unless the orders disagree.
  std::string h_min_value, h_max_value, h_min_lex, h_max_lex;
};

struct IntervalOptions {
  unsigned bits = 40;
  Rational probe = make_rational(12, 5);
  Rational search_hi = Rational(4);
  Rational search_lo = Rational(2);
};

IntervalReport family_interval(const FamilySpec& spec, const IntervalOptions& opts = {});

struct Theorem1Row {
  int k = 0;
  IntervalReport interval;
  Rational predicted_eps;  ///< c (c+1)^2 / 2^(k+1), the agreement bound for k+1 shared terms
  bool nonempty = false;
  bool within_predicted = false;
  bool ok = false;
};

struct Theorem1Report {
  RootEnclosure theta_B;
  std::vector<Theorem1Row> rows;
  bool ok = false;
};

Theorem1Report verify_theorem1(const std::vector<int>& k_list, unsigned bits = 40);

struct ChainLink {
  std::string description;
  Rational margin;  ///< certified lower bound on (left - right); positive means the link holds
  bool ok = false;
};

struct Theorem2Report {
  std::vector<IntervalReport> families;
  RootEnclosure lambda_B;
  RootEnclosure lambda_A;
  std::vector<ChainLink> chain;
  bool ok = false;
};

Theorem2Report verify_theorem2(unsigned bits = 40);

}  // namespace growthlab
