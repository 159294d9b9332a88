// Checks each acceptance criterion and prints one PASS/FAIL line per
// criterion. Exits non-zero if any criterion fails.

#include <algorithm>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>

#include "growthlab/families.hpp"
#include "growthlab/oracle.hpp"
#include "growthlab/osc.hpp"

using namespace growthlab;

namespace {

Rational R(long p, long q = 1) { return make_rational(p, q); }
Rational dec(const std::string& s) { return parse_rational(s); }
IntPoly P(std::vector<long> desc) { return IntPoly::from_descending(desc); }

// Every point of the enclosure lies within tol of the expected value.
bool near(const RootEnclosure& e, const std::string& expected, const Rational& tol) {
  const Rational v = dec(expected);
  return abs(e.lo - v) <= tol && abs(e.hi - v) <= tol;
}

Rational ten_to_minus(unsigned k) { return 1 / pow(Rational(10), k); }

// Collects failure notes for one criterion.
struct Check {
  std::vector<std::string> notes;
  void expect(bool ok, const std::string& what) {
    if (!ok) notes.push_back(what);
  }
  bool ok() const { return notes.empty(); }
};

int failures = 0;

void report(int number, const std::string& title, const Check& c, const std::string& detail = "") {
  std::cout << (c.ok() ? "PASS" : "FAIL") << "  criterion " << number << ": " << title;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  for (const auto& n : c.notes) std::cout << "      " << n << "\n";
  if (!c.ok()) ++failures;
}

// Runs a criterion, turning exceptions into failures.
void criterion(int number, const std::string& title, const std::function<std::string(Check&)>& body) {
  Check c;
  std::string detail;
  try {
    detail = body(c);
  } catch (const std::exception& e) {
    c.notes.push_back(std::string("exception: ") + e.what());
  }
  report(number, title, c, detail);
}

DigitSet set_of(std::initializer_list<const char*> xs) {
  std::vector<GeneralisedDigit> ds;
  for (const char* x : xs) ds.push_back(GeneralisedDigit::parse(x));
  return make_digit_set(std::move(ds));
}

DigitSetSequence odd_only(const DigitSet& odd) { return DigitSetSequence({}, {odd, DigitSet{GeneralisedDigit(0)}}); }

std::vector<Rational> grid(long from_hundredths, long to_hundredths) {
  std::vector<Rational> g;
  for (long i = from_hundredths; i <= to_hundredths; ++i) g.push_back(R(i, 100));
  return g;
}

long binomial(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

template <class T>
std::set<T> as_set(const std::vector<T>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

int main() {
  // Shared by criteria 2, 3 and 6.
  const Theorem2Report t2 = verify_theorem2(40);
  std::map<std::string, const IntervalReport*> fam;
  for (const auto& f : t2.families) fam[f.name] = &f;

  criterion(1, "named constants", [](Check& c) {
    const auto cs = named_constants(40);
    const std::vector<std::pair<std::string, std::string>> expect{{"phi", "1.61803"},     {"kappa", "2.20557"},
                                                                  {"xi_A", "2.30522"},    {"theta_B", "2.35526"},
                                                                  {"lambda_B", "2.35698"}, {"lambda_A", "2.48187"}};
    c.expect(cs.size() == expect.size(), "six constants");
    for (std::size_t i = 0; i < std::min(cs.size(), expect.size()); ++i) {
      c.expect(cs[i].name == expect[i].first, "name " + cs[i].name);
      c.expect(near(cs[i].root, expect[i].second, ten_to_minus(5)), cs[i].name + " = " + cs[i].root.decimal(8));
      if (i + 1 < cs.size()) c.expect(cs[i].root.hi < cs[i + 1].root.lo, cs[i].name + " < " + cs[i + 1].name);
    }
    return "ordering certified by disjoint enclosures";
  });

  criterion(2, "polynomial identities", [&](Check& c) {
    c.expect(char_polynomial(EnumSequence::parse("1,1,2,3,5,7;8")) == P({1, -2, 0, -1, -1, -2, -2, -1}),
             "char_polynomial(1,1,2,3,5,7,8bar)");
    c.expect(char_polynomial(EnumSequence::parse("1,1,2,3,5,7,8;9")) == P({1, -2, 0, -1, -1, -2, -2, -1, -1}),
             "char_polynomial(1,1,2,3,5,7,8,9bar)");
    for (const char* f : {"A", "B", "D"}) {
      const auto& g = fam.at(f)->gamma_max;
      c.expect(g.has_value() && g->where.poly == P({1, -2, -1, 0, -1}), std::string("gamma_max polynomial of ") + f);
    }
    return "exact";
  });

  criterion(3, "family interval table", [&](Check& c) {
    const std::vector<std::tuple<std::string, std::string, std::string>> table{{"A", "2.356983", "2.359320"},
                                                                               {"B", "2.359304", "2.375872"},
                                                                               {"C", "2.373983", "2.389043"},
                                                                               {"D", "2.389038", "2.430059"},
                                                                               {"E", "2.422247", "2.485938"}};
    for (const auto& [name, lo, hi] : table) {
      const auto& r = *fam.at(name);
      c.expect(near(r.gr_lo, lo, ten_to_minus(6)), name + " lower " + r.gr_lo.decimal(8));
      c.expect(near(r.gr_hi, hi, ten_to_minus(6)), name + " upper " + r.gr_hi.decimal(8));
      c.expect(r.feasible, name + " gap inequalities");
    }
    for (const auto& link : t2.chain) c.expect(link.ok, "chain link " + link.description);
    c.expect(t2.ok, "chain certified");
    // The equality link A.lo = lambda_B carries margin 0; the rest are strict.
    std::optional<Rational> least;
    for (const auto& link : t2.chain)
      if (link.margin > 0 && (!least || link.margin < *least)) least = link.margin;
    return "10 endpoints within 1e-6, " + std::to_string(t2.chain.size()) + " chain links, least inequality margin " +
           (least ? to_decimal(*least, 9) : std::string("none"));
  });

  criterion(4, "example family", [](Check& c) {
    const auto spec = builtin_family("Example");
    const auto r = family_interval(spec);
    c.expect(near(r.gr_lo, "2.36028", ten_to_minus(5)), "lower " + r.gr_lo.decimal(8));
    c.expect(near(r.gr_hi, "2.36420", ten_to_minus(5)), "upper " + r.gr_hi.decimal(8));
    const auto dc = downset_collection(spec.collections[0].U, spec.collections[0].L, spec.r, spec.s);
    c.expect(dc.downsets.size() == 9, "nine downsets");
    std::vector<std::string> got;
    for (const auto& p : h_profiles(spec)) got.push_back(p.to_string());
    const std::vector<std::string> expected{"0.0000001",   "0.00000011",  "0.000000111", "0.00000012",
                                           "0.000000121", "0.000000122", "0.0000001221"};
    c.expect(got == expected, "seven profiles");
    return "9 downsets, 7 profiles";
  });

  criterion(5, "shrinking intervals", [](Check& c) {
    std::vector<int> ks;
    for (int k = 5; k <= 21; k += 2) ks.push_back(k);
    const auto t1 = verify_theorem1(ks, 40);
    c.expect(t1.rows.size() == ks.size(), "one row per k");
    const Rational tol6 = ten_to_minus(6);
    for (const auto& row : t1.rows) {
      const auto& iv = row.interval;
      const std::string k = "k=" + std::to_string(row.k);
      c.expect(row.nonempty && iv.feasible, k + " nonempty and feasible");
      c.expect(iv.gamma_max && near(iv.gamma_max->where, "2.470979", tol6), k + " gamma_max");
      if (row.k == 5) c.expect(near(iv.gr_hi, "2.362008", tol6), "k=5 upper " + iv.gr_hi.decimal(8));
      if (row.k == 21) {
        const Rational theta = t1.theta_B.midpoint();
        const Rational gap = std::max<Rational>(abs(iv.gr_lo.lo - theta), abs(iv.gr_hi.hi - theta)) + t1.theta_B.width();
        c.expect(gap <= ten_to_minus(3), "k=21 within 1e-3 of theta_B");
      }
      c.expect(row.within_predicted, k + " within the agreement bound");
    }
    const auto& last = t1.rows.back().interval;
    return "k=21: [" + last.gr_lo.decimal(6) + ", " + last.gr_hi.decimal(6) + "]";
  });

  criterion(6, "combinatorial counts", [&](Check& c) {
    for (int r = 3; r <= 6; ++r)
      for (int s = 2; s <= 5; ++s) {
        const auto brute =
            oracle::brute_downsets(r_set(5, r, s), {osc::inflated_oscillation(5, 3, 2)}).size();
        const long expect = binomial(r + s - 2, r - 1) - s;
        c.expect(static_cast<long>(brute) == expect, "|F^{" + std::to_string(r) + "," + std::to_string(s) + "}|");
        c.expect(f_family(5, r, s).downsets.size() == brute, "f_family size");
      }
    c.expect(distinct_profiles(5, 3) == 10, "(5,3) profiles");
    c.expect(distinct_profiles(5, 5) == 26, "(5,5) profiles");
    c.expect(distinct_profiles(9, 8) == 574, "(9,8) profiles");
    const std::map<std::string, std::size_t> h{{"A", 47}, {"B", 29}, {"C", 19}, {"D", 37}, {"E", 61}};
    for (const auto& [name, count] : h)
      c.expect(fam.at(name)->h_profile_count == count, name + " H profiles " + std::to_string(fam.at(name)->h_profile_count));
    return "F sizes, 10/26/574, 47/29/19/37/61";
  });

  criterion(7, "Q sequences", [](Check& c) {
    for (auto [r, s] : std::vector<std::pair<int, int>>{{3, 2}, {4, 3}, {5, 3}, {5, 5}}) {
      const auto formula = q_sequence_closed_form(r, s);
      std::vector<long> by_len(15, 0);
      for (const auto& p : q_set(r, s, 14)) ++by_len[static_cast<std::size_t>(p.size())];
      for (std::size_t n = 1; n <= 14; ++n)
        c.expect(by_len[n] == formula[n], "Q^{" + std::to_string(r) + "," + std::to_string(s) + "} length " + std::to_string(n));
    }
    std::set<Permutation> six;
    for (const auto& p : q_set(4, 3, 6))
      if (p.size() == 6) six.insert(p);
    std::set<Permutation> expected;
    for (const char* s : {"315264", "241635", "612345", "512364", "412635", "316245", "261345"})
      expected.insert(Permutation::parse(s));
    c.expect(six == expected, "the seven size-6 elements of Q^{4,3}");
    return "4 parameter pairs through length 14";
  });

  criterion(8, "feasibility thresholds", [](Check& c) {
    const Rational width = ten_to_minus(9);
    const DigitSetSequence ints({}, {set_of({"1", "4"}), set_of({"1", "3", "5", "7", "9"})});
    const auto G6 = odd_only(set_of({"1.1", "1.11", "1.12", "1.2", "1.21", "1.22"}));
    struct Case {
      std::string name;
      std::function<bool(const Rational&)> pred;
      std::vector<Rational> probes;
      IntPoly poly;
    };
    const std::vector<Case> cases{
        {"(4+sqrt34)/3", [&](const Rational& b) { return gap_inequality_at(ints, 1, b); }, grid(300, 340), P({3, -8, -6})},
        {"(3+sqrt89)/4", [&](const Rational& b) { return gap_inequalities_hold(ints, b); }, grid(300, 340), P({2, -3, -10})},
        {"(1+sqrt13)/2", [&](const Rational& b) { return gap_inequalities_hold(G6, b); }, grid(150, 300), P({1, -1, -3})}};
    for (const auto& k : cases) {
      const auto br = threshold_brackets(k.pred, k.probes, width);
      c.expect(br.size() == 1, k.name + " single change");
      if (br.empty()) continue;
      c.expect(br[0].value_at_lo && !k.pred(br[0].hi), k.name + " feasible below, infeasible above");
      c.expect(br[0].hi - br[0].lo <= width, k.name + " width");
      c.expect(k.poly.sign_at(br[0].lo) * k.poly.sign_at(br[0].hi) < 0, k.name + " bracket holds the root");
    }
    const auto foot = odd_only(set_of({"0.5", "0.501", "0.502", "0.51", "0.511", "0.512", "0.52", "0.521", "1.3"}));
    c.expect(!gap_inequalities_hold(foot, R(28, 10)), "non-interval example infeasible at 2.8");
    c.expect(gap_inequalities_hold(foot, R(29, 10)), "non-interval example feasible at 2.9");
    return "brackets of width 1e-9";
  });

  criterion(9, "greedy expansions and incomparability", [](Check& c) {
    std::mt19937_64 rng(20240601);
    struct Case {
      std::string name;
      DigitSetSequence D;
      Rational beta;
    };
    const std::vector<Case> cases{
        {"integer digits", DigitSetSequence({}, {set_of({"1", "4"}), set_of({"1", "3", "5", "7", "9"})}), R(3)},
        {"Theorem1:5", family_digit_sets(builtin_family("Theorem1:5")), R(12, 5)}};
    int trips = 0;
    for (const auto& k : cases) {
      c.expect(gap_inequalities_hold(k.D, k.beta), k.name + " gap inequalities");
      const Rational lo = series_value(lower_digits(k.D, k.beta), k.beta);
      const Rational hi = series_value(upper_digits(k.D, k.beta), k.beta);
      const Rational tol = 1 / pow(k.beta, 38);
      for (int t = 0; t < 50; ++t, ++trips) {
        Rational frac(Integer(std::to_string(rng() >> 11)), Integer(1) << 53);
        frac.canonicalize();
        const auto g = greedy_expansion(lo + frac * (hi - lo), k.D, k.beta, 40);
        c.expect(g.error <= tol, k.name + " round trip " + std::to_string(t));
      }
    }
    std::vector<GeneralisedDigit> decimal;
    for (long i = 0; i <= 9; ++i) decimal.emplace_back(i);
    const auto g = greedy_expansion(R(1, 2), DigitSetSequence({}, {make_digit_set(decimal)}), R(10), 20);
    bool tie = g.error == 0 && g.digits[0] == GeneralisedDigit(5);
    for (std::size_t i = 1; i < g.digits.size(); ++i) tie = tie && g.digits[i] == GeneralisedDigit(0);
    c.expect(tie, "1/2 at base 10 is 0.5000...");

    int pairs = 0;
    for (int n = 4; n <= 9; ++n)
      for (int m = 4; m <= 9; ++m) {
        if (n == m) continue;
        for (int r = 2; r <= 3; ++r)
          for (int s = 2; s <= 3; ++s)
            for (int u = 2; u <= 3; ++u)
              for (int v = 2; v <= 3; ++v) {
                const auto a = osc::inflated_oscillation(n, r, s);
                const auto b = osc::inflated_oscillation(m, u, v);
                c.expect(!contains(a, b) && !contains(b, a), "omega_" + std::to_string(n) + " vs omega_" + std::to_string(m));
                ++pairs;
              }
      }
    return std::to_string(trips) + " round trips within beta^-38, " + std::to_string(pairs) + " incomparable pairs";
  });

  criterion(10, "oracle equivalence", [](Check& c) {
    // For each built-in family, pick the smallest and the largest choice of
    // extra set and of R-cell downsets, list the indecomposables up to length
    // 10, and compare class_counts on the digit enumeration against brute
    // force direct sums.
    constexpr int N = 10;
    int classes = 0;
    auto names = builtin_family_names();
    names.push_back("Theorem1:5");
    for (const auto& name : names) {
      const auto spec = builtin_family(name);
      auto extras = spec.collections.empty() ? std::vector<std::vector<Permutation>>{{}} : extra_sets(spec);
      const auto q = q_sequence(spec.r, spec.s);
      for (bool largest : {false, true}) {
        const auto& H = largest ? extras.back() : extras.front();
        std::vector<Permutation> gens = q_set(spec.r, spec.s, N);
        std::vector<GeneralisedDigit> digits;
        for (int n = 1; n <= N; ++n) digits.emplace_back(q[static_cast<std::size_t>(n)]);
        for (const auto& p : H)
          if (p.size() <= N) gens.push_back(p);
        digits[0] = digits[0] + enum_profile(H, 1).digit();
        for (int m = spec.k; m + 2 <= N; m += 2) {
          const auto F = f_family(m, spec.r, spec.s);
          std::size_t pick = 0;
          for (std::size_t i = 1; i < F.downsets.size(); ++i) {
            const bool bigger = F.downsets[i].size() > F.downsets[pick].size();
            const bool smaller = F.downsets[i].size() < F.downsets[pick].size();
            if (largest ? bigger : smaller) pick = i;
          }
          for (const auto& p : F.elements(pick))
            if (p.size() <= N) gens.push_back(p);
          digits[static_cast<std::size_t>(m + 1)] = digits[static_cast<std::size_t>(m + 1)] + F.profile(pick).digit();
        }
        const auto fast = class_counts(digit_seq_to_enum(DigitSequence::finite(digits)), N);
        const auto brute = oracle::brute_subclosure_counts(gens, N);
        for (int n = 0; n < N; ++n)
          c.expect(fast[static_cast<std::size_t>(n)] == brute[static_cast<std::size_t>(n)],
                   name + (largest ? " largest" : " smallest") + " length " + std::to_string(n + 1));
        ++classes;
      }
    }

    // R cells: (5,3) and (5,5) by subset enumeration, (9,8) by lattice paths.
    int cells = 0;
    for (auto [r, s] : std::vector<std::pair<int, int>>{{5, 3}, {5, 5}})
      for (int n : {5, 7}) {
        const auto F = f_family(n, r, s);
        std::set<std::vector<Permutation>> fast;
        for (std::size_t i = 0; i < F.downsets.size(); ++i) {
          auto e = F.elements(i);
          std::sort(e.begin(), e.end());
          fast.insert(e);
        }
        c.expect(fast == as_set(oracle::brute_downsets(r_set(n, r, s), {osc::inflated_oscillation(n, 3, 2)})),
                 "F cell " + std::to_string(r) + "," + std::to_string(s));
        ++cells;
      }
    {
      const auto F = f_family(5, 9, 8);
      std::multiset<std::vector<long>> fast, grid;
      for (std::size_t i = 0; i < F.downsets.size(); ++i) fast.insert(F.profile(i).counts);
      for (auto p : oracle::grid_downset_profiles(9, 8)) {
        while (!p.empty() && p.back() == 0) p.pop_back();
        grid.insert(p);
      }
      c.expect(fast == grid, "F cell 9,8 against lattice paths");
      ++cells;
    }
    // Extra-set ground sets of every collection.
    for (const auto& name : builtin_family_names()) {
      const auto spec = builtin_family(name);
      for (const auto& col : spec.collections) {
        const auto dc = downset_collection(col.U, col.L, spec.r, spec.s);
        std::set<std::vector<Permutation>> fast;
        for (std::size_t i = 0; i < dc.downsets.size(); ++i) {
          auto e = dc.elements(i);
          std::sort(e.begin(), e.end());
          fast.insert(e);
        }
        c.expect(fast == as_set(oracle::brute_downsets(dc.poset.ground(), col.L)), name + " extra-set downsets");
        ++cells;
      }
    }
    return std::to_string(classes) + " classes through length 10, " + std::to_string(cells) + " downset collections";
  });

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << "\n";
  return failures == 0 ? 0 : 1;
}
