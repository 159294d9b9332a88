#include <cstdlib>

#include "doctest.h"
#include "growthlab/oracle.hpp"
#include "growthlab/rational.hpp"

using namespace growthlab;

TEST_CASE("all permutations") {
  long fact = 1;
  for (int n = 1; n <= 8; ++n) {
    fact *= n;
    const auto ps = oracle::all_permutations(n);
    REQUIRE(static_cast<long>(ps.size()) == fact);
    REQUIRE(std::is_sorted(ps.begin(), ps.end()));
  }
  CHECK_THROWS_AS(oracle::all_permutations(0), InputError);
  CHECK_THROWS_AS(oracle::all_permutations(11), InputError);
}

TEST_CASE("the size guard reads the environment") {
  ::setenv("GROWTHLAB_MAX_ORACLE_N", "4", 1);
  CHECK(oracle::max_permutation_length() == 4);
  CHECK_THROWS_AS(oracle::all_permutations(5), InputError);
  ::setenv("GROWTHLAB_MAX_ORACLE_N", "lots", 1);
  CHECK_THROWS_AS(oracle::max_permutation_length(), InputError);
  ::unsetenv("GROWTHLAB_MAX_ORACLE_N");
  CHECK(oracle::max_permutation_length() == 10);
}

TEST_CASE("subclosure counts") {
  CHECK(oracle::brute_subclosure_counts({Permutation{1}}, 6) == std::vector<long>{1, 1, 1, 1, 1, 1});
  CHECK(oracle::brute_subclosure_counts({Permutation{1}, Permutation{2, 1}}, 7) ==
        std::vector<long>{1, 2, 3, 5, 8, 13, 21});
  CHECK(oracle::brute_subclosure_counts({Permutation{1}, Permutation{2, 1}, Permutation{2, 3, 1}, Permutation{3, 1, 2}}, 5) ==
        std::vector<long>{1, 2, 5, 9, 18});
}

TEST_CASE("indecomposable subpermutations") {
  const auto p = oracle::brute_indec_subperms(Permutation::parse("2413"));
  CHECK(p == std::vector<Permutation>{Permutation{1}, Permutation{2, 1}, Permutation{2, 3, 1}, Permutation{3, 1, 2},
                                      Permutation::parse("2413")});
  CHECK(oracle::brute_indec_subperms(Permutation::parse("123")) == std::vector<Permutation>{Permutation{1}});
}

TEST_CASE("containment") {
  CHECK(oracle::brute_contains(Permutation::parse("2413"), Permutation::parse("21")));
  CHECK_FALSE(oracle::brute_contains(Permutation::parse("2413"), Permutation::parse("321")));
  CHECK_FALSE(oracle::brute_contains(Permutation::parse("21"), Permutation::parse("213")));
}

TEST_CASE("downsets") {
  const std::vector<Permutation> ground{Permutation{2, 1}, Permutation{2, 3, 1}, Permutation{3, 1, 2}, Permutation::parse("2413")};
  // 21 below everything; 2413 above 231 and 312
  const auto all = oracle::brute_downsets(ground, {});
  CHECK(all.size() == 6);
  const auto with = oracle::brute_downsets(ground, {Permutation{2, 3, 1}});
  CHECK(with.size() == 3);
  for (const auto& d : with) CHECK(std::find(d.begin(), d.end(), Permutation{2, 1}) != d.end());
  CHECK_THROWS_AS(oracle::brute_downsets(ground, {Permutation{1}}), InputError);
}

TEST_CASE("grid profiles") {
  const auto g = oracle::grid_downset_profiles(4, 3);
  CHECK(g.size() == 7);
  CHECK(oracle::grid_downset_profiles(3, 2) == std::vector<std::vector<long>>{{1, 1}});
}
