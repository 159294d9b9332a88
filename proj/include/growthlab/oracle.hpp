#pragma once

#include <vector>

#include "growthlab/perm.hpp"

// Deliberately naive engines used to cross-check the fast paths. They share
// no code with the poset, growth or digits modules beyond the Permutation
// type, and refuse oversized inputs rather than truncating.
namespace growthlab::oracle {

/// Largest n accepted by all_permutations: 10, or lower if the environment
/// variable GROWTHLAB_MAX_ORACLE_N says so.
int max_permutation_length();

/// All n! permutations in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// Counts by length 1..N of every direct sum of elements of S.
std::vector<long> brute_subclosure_counts(const std::vector<Permutation>& S, int N);

/// Distinct indecomposable patterns of sigma, by subset enumeration.
std::vector<Permutation> brute_indec_subperms(const Permutation& sigma);

/// Containment by trying every subsequence of the right length.
bool brute_contains(const Permutation& sigma, const Permutation& pattern);

/// All downward-closed subsets of ground that contain `required`, each
/// sorted; the collection is sorted too.
std::vector<std::vector<Permutation>> brute_downsets(const std::vector<Permutation>& ground,
                                                     const std::vector<Permutation>& required);

/// Length profiles of the downsets of the grid [2..r] x [2..s] (product
/// order) that contain (3,2), one per downset. A downset is a staircase of
/// non-increasing column heights; entry i of a profile counts cells with
/// u + v = 4 + i.
std::vector<std::vector<long>> grid_downset_profiles(int r, int s);

}  // namespace growthlab::oracle
