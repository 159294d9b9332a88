#pragma once

#include <compare>
#include <string>
#include <vector>

#include "growthlab/digits.hpp"
#include "growthlab/perm.hpp"
#include "growthlab/sequence.hpp"

namespace growthlab {

/// Counts of a finite set of permutations by length, starting at a base
/// length. counts[i] is the number of elements of length base_length + i.
struct EnumProfile {
  int base_length = 1;
  std::vector<long> counts;  ///< no trailing zeros

  /// The counts read as a generalised digit c0.c1c2...
  GeneralisedDigit digit() const;
  std::string to_string() const { return digit().to_string(); }

  friend bool operator==(const EnumProfile&, const EnumProfile&) = default;
  friend auto operator<=>(const EnumProfile&, const EnumProfile&) = default;
};

EnumProfile enum_profile(const std::vector<Permutation>& elements, int base_length);

/// A finite set of permutations ordered by containment.
class PermPoset {
 public:
  PermPoset() = default;
  /// Sorts and deduplicates the ground set (shorter first), which makes the
  /// index order a linear extension.
  explicit PermPoset(std::vector<Permutation> ground);

  const std::vector<Permutation>& ground() const { return ground_; }
  std::size_t size() const { return ground_.size(); }
  /// ground[i] <= ground[j].
  bool leq(std::size_t i, std::size_t j) const { return below_[j][i]; }
  /// Index of p in the ground set; throws if absent.
  std::size_t index_of(const Permutation& p) const;

  /// Covering pairs (lower, upper).
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;
  /// Every downward-closed subset containing `required`, as sorted index lists.
  std::vector<std::vector<std::size_t>> downsets_containing(const std::vector<std::size_t>& required) const;
  bool is_downset(const std::vector<std::size_t>& set) const;
  std::vector<std::size_t> maximal(const std::vector<std::size_t>& set) const;
  /// Indices of elements below some element of `set`.
  std::vector<std::size_t> down_closure(const std::vector<std::size_t>& set) const;

  /// Hasse diagram in DOT, drawn bottom to top.
  std::string to_dot(const std::string& name) const;

 private:
  std::vector<Permutation> ground_;
  std::vector<std::vector<bool>> below_;  // below_[j][i]: ground[i] <= ground[j]
};

/// A collection of downsets over a common ground set, with the length at
/// which profiles start.
struct DownsetCollection {
  PermPoset poset;
  std::vector<std::vector<std::size_t>> downsets;
  int base_length = 1;

  std::vector<Permutation> elements(std::size_t i) const;
  EnumProfile profile(std::size_t i) const;
  /// Sorted, deduplicated.
  std::vector<EnumProfile> distinct_profiles() const;
  /// {"ground": [...], "downsets": [{"maximal": [...], "profile": "..."}]}
  std::string to_json() const;
};

/// {omega_n^{u,v} : 2 <= u <= r, 2 <= v <= s}.
std::vector<Permutation> r_set(int n, int r, int s);

/// The downsets of R_n^{r,s} that contain omega_n^{3,2}; profiles start at n+2.
DownsetCollection f_family(int n, int r, int s);

/// Number of distinct profiles over f_family (independent of n).
long distinct_profiles(int r, int s);
/// sum_{i=first}^{s-1} (s-i) C(r-2, i) - 2.
long distinct_profiles_formula(int r, int s, int first_index = 0);

/// Sequence enumerating Q^{r,s}, from the count of each constituent shape.
EnumSequence q_sequence(int r, int s);
/// The same sequence written out in its two closed-form cases (r = s and r > s).
EnumSequence q_sequence_closed_form(int r, int s);

/// Elements of Q^{r,s} of length <= max_len, built from the five shapes.
std::vector<Permutation> q_set(int r, int s, int max_len);
/// Structural membership test for Q^{r,s}.
bool in_q(const Permutation& sigma, int r, int s);
/// Whether sigma is omega_n^{u,v} for some odd n >= min_n, 2 <= u <= r, 2 <= v <= s.
bool in_r_cells(const Permutation& sigma, int r, int s, int min_n);

/// Indecomposable patterns contained in sigma (including sigma when it is
/// indecomposable), found by repeated single-point deletion.
std::vector<Permutation> indecomposable_patterns(const Permutation& sigma);

/// All downsets of (down-closure of U) \ Q^{r,s} that contain L.
DownsetCollection downset_collection(const std::vector<Permutation>& U, const std::vector<Permutation>& L, int r,
                                     int s);

}  // namespace growthlab
