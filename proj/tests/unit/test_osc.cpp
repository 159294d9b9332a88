#include "doctest.h"
#include "growthlab/osc.hpp"
#include "growthlab/perm.hpp"
#include "growthlab/rational.hpp"

using namespace growthlab;
using osc::Kind;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

// Path on n-2 vertices, r pendants at one end, s at the other: degree
// multiset {1 x (r+s), r+1, s+1, 2 x (n-4)} for n >= 5.
std::vector<int> expected_degrees(int n, int r, int s) {
  std::vector<int> d(static_cast<std::size_t>(r + s), 1);
  d.push_back(r + 1);
  d.push_back(s + 1);
  for (int i = 0; i < n - 4; ++i) d.push_back(2);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_CASE("primary and secondary oscillations") {
  CHECK(osc::primary_oscillation(6) == P("315264"));
  CHECK(osc::primary_oscillation(7) == P("3152746"));
  CHECK(osc::primary_oscillation(1) == P("1"));
  CHECK(osc::primary_oscillation(2) == P("21"));
  CHECK(osc::secondary_oscillation(6) == P("241635"));
  CHECK(osc::secondary_oscillation(7) == P("2416375"));
  CHECK(osc::secondary_oscillation(2) == P("21"));
  CHECK_THROWS_AS(osc::primary_oscillation(0), InputError);
  CHECK_THROWS_AS(osc::secondary_oscillation(-1), InputError);

  for (int n = 2; n <= 20; ++n) {
    const auto p = osc::primary_oscillation(n);
    const auto q = osc::secondary_oscillation(n);
    REQUIRE(graph(p).is_path());
    REQUIRE(graph(q).is_path());
    // the least entry / the first entry is a path end
    int least = 0;
    for (int i = 1; i <= n; ++i)
      if (p(i) == 1) least = i;
    CHECK(graph(p).degrees()[static_cast<std::size_t>(least - 1)] == 1);
    CHECK(graph(q).degrees()[0] == 1);
  }
}

TEST_CASE("inflated oscillations reproduce the R_7^{4,3} panels") {
  CHECK(osc::inflated_oscillation(7, 2, 2) == P("4 1 2 6 3 9 5 7 8"));
  CHECK(osc::inflated_oscillation(7, 2, 3) == P("4 1 2 6 3 10 5 7 8 9"));
  CHECK(osc::inflated_oscillation(7, 3, 2) == P("5 1 2 3 7 4 10 6 8 9"));
  CHECK(osc::inflated_oscillation(7, 3, 3) == P("5 1 2 3 7 4 11 6 8 9 10"));
  CHECK(osc::inflated_oscillation(7, 4, 2) == P("6 1 2 3 4 8 5 11 7 9 10"));
  CHECK(osc::inflated_oscillation(7, 4, 3) == P("6 1 2 3 4 8 5 12 7 9 10 11"));
  CHECK(osc::inflated_oscillation(5, 7, 1) == P("9 1 2 3 4 5 6 7 11 8 10"));
  CHECK(osc::inflated_oscillation(7, 9, 1) == P("11 1 2 3 4 5 6 7 8 9 13 10 15 12 14"));
}

TEST_CASE("inflated oscillation shape and length") {
  for (int n = 5; n <= 11; n += 2)
    for (int r = 2; r <= 5; ++r)
      for (int s = 2; s <= 5; ++s) {
        const auto p = osc::inflated_oscillation(n, r, s);
        REQUIRE(p.size() == n - 2 + r + s);
        auto d = graph(p).degrees();
        std::sort(d.begin(), d.end());
        REQUIRE(d == expected_degrees(n, r, s));
        REQUIRE(graph(p).is_connected());
      }
  for (int n = 5; n <= 15; n += 2) CHECK(osc::inflated_oscillation(n, 1, 1) == osc::primary_oscillation(n));
  CHECK_THROWS_AS(osc::inflated_oscillation(3, 2, 2), InputError);
  CHECK_THROWS_AS(osc::inflated_oscillation(5, 0, 2), InputError);
}

TEST_CASE("size-6 shapes of Q^{4,3}") {
  CHECK(osc::inflated_oscillation(4, 3, 1) == P("512364"));
  CHECK(osc::inflated_oscillation(5, 2, 1) == P("412635"));
  CHECK(osc::inflated_oscillation(5, 1, 2) == P("316245"));
  CHECK(osc::inflated_oscillation(4, 1, 3, Kind::secondary) == P("261345"));
}

TEST_CASE("stars") {
  CHECK(osc::star(5) == P("612345"));
  CHECK(osc::star(7) == P("81234567"));
  CHECK(osc::star(2) == P("312"));
  CHECK_THROWS_AS(osc::star(1), InputError);
  for (int u = 2; u <= 10; ++u) {
    const auto d = graph(osc::star(u)).degrees();
    CHECK(d[0] == u);
    CHECK(std::count(d.begin(), d.end(), 1) == u);
  }
}

TEST_CASE("end-inflated oscillations of different lengths are incomparable") {
  for (int n = 4; n <= 9; ++n)
    for (int m = 4; m <= 9; ++m) {
      if (n == m) continue;
      for (int r = 2; r <= 3; ++r)
        for (int s = 2; s <= 3; ++s)
          for (int u = 2; u <= 3; ++u)
            for (int v = 2; v <= 3; ++v) {
              const auto a = osc::inflated_oscillation(n, r, s);
              const auto b = osc::inflated_oscillation(m, u, v);
              REQUIRE_FALSE(contains(a, b));
              REQUIRE_FALSE(contains(b, a));
            }
    }
}

TEST_CASE("inflation is monotone") {
  for (int n : {5, 7})
    for (int r = 2; r <= 4; ++r)
      for (int s = 2; s <= 4; ++s)
        for (int u = 2; u <= r; ++u)
          for (int v = 2; v <= s; ++v)
            REQUIRE(contains(osc::inflated_oscillation(n, r, s), osc::inflated_oscillation(n, u, v)));
}
