#include <map>
#include <set>

#include "doctest.h"
#include "growthlab/oracle.hpp"
#include "growthlab/osc.hpp"
#include "growthlab/poset.hpp"

using namespace growthlab;

namespace {

Permutation W(int n, int u, int v) { return osc::inflated_oscillation(n, u, v); }

long binomial(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<Permutation> elements_of(const DownsetCollection& c, std::size_t i) { return c.elements(i); }

}  // namespace

TEST_CASE("R cells") {
  auto r = r_set(7, 4, 3);
  REQUIRE(r.size() == 6);
  std::set<Permutation> got(r.begin(), r.end());
  for (const char* s : {"4 1 2 6 3 9 5 7 8", "4 1 2 6 3 10 5 7 8 9", "5 1 2 3 7 4 10 6 8 9", "5 1 2 3 7 4 11 6 8 9 10",
                        "6 1 2 3 4 8 5 11 7 9 10", "6 1 2 3 4 8 5 12 7 9 10 11"})
    CHECK(got.count(Permutation::parse(s)));
  CHECK(r_set(5, 2, 2) == std::vector<Permutation>{W(5, 2, 2)});
  CHECK(r_set(9, 5, 4).size() == 12);
  CHECK_THROWS_AS(r_set(6, 3, 3), InputError);
  CHECK_THROWS_AS(r_set(5, 1, 3), InputError);
}

TEST_CASE("the seven downsets of F^{4,3}") {
  for (int n : {5, 7}) {
    const auto F = f_family(n, 4, 3);
    REQUIRE(F.downsets.size() == 7);
    std::map<std::set<Permutation>, std::string> by_max;
    for (std::size_t i = 0; i < F.downsets.size(); ++i) {
      std::set<Permutation> mx;
      for (auto j : F.poset.maximal(F.downsets[i])) mx.insert(F.poset.ground()[j]);
      by_max[mx] = F.profile(i).to_string();
    }
    const std::vector<std::pair<std::set<Permutation>, const char*>> expect{
        {{W(n, 3, 2)}, "1.1"},
        {{W(n, 3, 2), W(n, 2, 3)}, "1.2"},
        {{W(n, 3, 3)}, "1.21"},
        {{W(n, 4, 2)}, "1.11"},
        {{W(n, 4, 2), W(n, 2, 3)}, "1.21"},
        {{W(n, 4, 2), W(n, 3, 3)}, "1.22"},
        {{W(n, 4, 3)}, "1.221"}};
    for (const auto& [mx, digit] : expect) {
      REQUIRE(by_max.count(mx));
      CHECK(by_max[mx] == digit);
    }
  }
  CHECK(f_family(5, 3, 2).downsets.size() == 1);
  CHECK(enum_profile({}, 7).counts.empty());
}

TEST_CASE("F family sizes match the closed count and the brute-force enumeration") {
  for (int r = 3; r <= 6; ++r)
    for (int s = 2; s <= 5; ++s) {
      const auto F = f_family(5, r, s);
      const long expect = binomial(r + s - 2, r - 1) - s;
      REQUIRE(static_cast<long>(F.downsets.size()) == expect);
      const auto brute = oracle::brute_downsets(r_set(5, r, s), {W(5, 3, 2)});
      REQUIRE(brute.size() == F.downsets.size());
      std::set<std::vector<Permutation>> fast;
      for (std::size_t i = 0; i < F.downsets.size(); ++i) {
        auto e = elements_of(F, i);
        std::sort(e.begin(), e.end());
        fast.insert(e);
      }
      REQUIRE(fast == std::set<std::vector<Permutation>>(brute.begin(), brute.end()));
    }
  // (9,8) against lattice paths through the grid
  CHECK(f_family(5, 9, 8).downsets.size() == 6427);
  CHECK(oracle::grid_downset_profiles(9, 8).size() == 6427);
}

TEST_CASE("distinct profiles") {
  CHECK(distinct_profiles(5, 3) == 10);
  CHECK(distinct_profiles(5, 5) == 26);
  CHECK(distinct_profiles(9, 8) == 574);
  std::vector<std::string> digits;
  for (const auto& p : f_family(7, 5, 3).distinct_profiles()) digits.push_back(p.to_string());
  CHECK(digits == std::vector<std::string>{"1.1", "1.11", "1.111", "1.2", "1.21", "1.211", "1.22", "1.221", "1.222", "1.2221"});

  for (int r = 3; r <= 7; ++r)
    for (int s = 2; s <= 6; ++s) {
      const long brute = distinct_profiles(r, s);
      if (s <= r) CHECK(brute == distinct_profiles_formula(r, s, 0));
      std::set<std::vector<long>> grid;
      for (auto& p : oracle::grid_downset_profiles(r, s)) grid.insert(p);
      CHECK(static_cast<long>(grid.size()) == brute);
    }
  // the sum started at i = 1 undercounts by s (the i = 0 term)
  CHECK(distinct_profiles_formula(5, 3, 1) == 7);
  CHECK(distinct_profiles_formula(9, 8, 1) == 566);
}

TEST_CASE("Q sequences") {
  CHECK(q_sequence(5, 3) == EnumSequence::parse("1,1,2,3,5,7;8"));
  CHECK(q_sequence(9, 8) == EnumSequence::parse("1,1,2,3,5,7,9,11,13,15;17"));
  CHECK(q_sequence(5, 5) == EnumSequence::parse("1,1,2,3,5,7,9;10"));
  CHECK(q_sequence(3, 5) == q_sequence(5, 3));
  for (int r = 2; r <= 9; ++r)
    for (int s = 2; s <= r; ++s) CHECK(q_sequence(r, s) == q_sequence_closed_form(r, s));
}

TEST_CASE("Q sets") {
  for (int r = 2; r <= 5; ++r)
    for (int s = 2; s <= 5; ++s) {
      const auto q = q_set(r, s, 14);
      const auto seq = q_sequence(r, s);
      std::vector<long> by_len(15, 0);
      for (const auto& p : q) ++by_len[static_cast<std::size_t>(p.size())];
      for (std::size_t n = 1; n <= 14; ++n) REQUIRE(by_len[n] == seq[n]);
      for (const auto& p : q) REQUIRE(in_q(p, r, s));
    }
  std::set<Permutation> six;
  for (const auto& p : q_set(4, 3, 6))
    if (p.size() == 6) six.insert(p);
  std::set<Permutation> listed;
  for (const char* s : {"315264", "241635", "612345", "512364", "412635", "316245", "261345"})
    listed.insert(Permutation::parse(s));
  CHECK(six == listed);
  CHECK(q_set(5, 3, 3) == std::vector<Permutation>{Permutation{1}, Permutation{2, 1}, Permutation{2, 3, 1}, Permutation{3, 1, 2}});
}

TEST_CASE("indecomposable patterns of an end-inflated oscillation are Q or R") {
  for (int n : {5, 7}) {
    const auto w = W(n, 5, 3);
    const auto brute = oracle::brute_indec_subperms(w);
    const auto fast = indecomposable_patterns(w);
    CHECK(brute == fast);
    const auto R = r_set(n, 5, 3);
    const std::set<Permutation> Rs(R.begin(), R.end());
    std::size_t in_r = 0;
    for (const auto& p : brute) {
      const bool q = in_q(p, 5, 3);
      const bool r = Rs.count(p) > 0;
      REQUIRE(q != r);
      in_r += r;
    }
    CHECK(in_r == R.size());
  }
}

TEST_CASE("extra-set collections") {
  const auto c = downset_collection({W(5, 7, 1)}, {osc::star(7)}, 5, 3);
  CHECK(c.poset.size() == 6);
  CHECK(c.downsets.size() == 9);
  std::vector<std::string> digits;
  for (const auto& p : c.distinct_profiles()) digits.push_back(EnumProfile{1, p.counts}.to_string());
  CHECK(digits == std::vector<std::string>{"0.0000001", "0.00000011", "0.000000111", "0.00000012", "0.000000121",
                                           "0.000000122", "0.0000001221"});
  CHECK(oracle::brute_downsets(c.poset.ground(), {osc::star(7)}).size() == 9);
  CHECK(oracle::brute_downsets(c.poset.ground(), c.poset.ground()).size() == 1);

  // U = {omega_n^{r,s}}, L = {omega_n^{3,2}} gives back the F family
  const auto f = downset_collection({W(5, 4, 3)}, {W(5, 3, 2)}, 4, 3);
  CHECK(f.downsets.size() == f_family(5, 4, 3).downsets.size());
  CHECK(f.distinct_profiles().size() == f_family(5, 4, 3).distinct_profiles().size());

  CHECK_THROWS_AS(downset_collection({Permutation{1, 2}}, {}, 5, 3), InputError);
  CHECK_THROWS_AS(downset_collection({W(5, 7, 1)}, {Permutation{2, 1}}, 5, 3), InputError);  // 21 is in Q
  CHECK_THROWS_AS(downset_collection({W(5, 7, 1)}, {W(7, 2, 2)}, 5, 3), InputError);        // not below U
}

TEST_CASE("every returned set is closed downward") {
  for (int r = 3; r <= 5; ++r)
    for (int s = 2; s <= 4; ++s) {
      const auto F = f_family(7, r, s);
      for (std::size_t i = 0; i < F.downsets.size(); ++i) {
        REQUIRE(F.poset.is_downset(F.downsets[i]));
        const auto e = elements_of(F, i);
        for (const auto& a : e)
          for (const auto& b : F.poset.ground())
            if (oracle::brute_contains(a, b)) REQUIRE(std::find(e.begin(), e.end(), b) != e.end());
      }
    }
}

TEST_CASE("exports") {
  const auto c = downset_collection({W(5, 7, 1)}, {osc::star(7)}, 5, 3);
  const std::string dot = c.poset.to_dot("H");
  CHECK(dot.find("digraph \"H\"") != std::string::npos);
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  CHECK(std::count(dot.begin(), dot.end(), '>') >= static_cast<long>(c.poset.covers().size()));
  const std::string json = c.to_json();
  CHECK(json.find("\"ground\"") != std::string::npos);
  CHECK(json.find("\"downsets\"") != std::string::npos);
  CHECK(json.find("\"maximal\"") != std::string::npos);
}
