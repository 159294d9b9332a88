#include "growthlab/families.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <future>
#include <map>
#include <set>
#include <sstream>

#include "growthlab/osc.hpp"
#include "json.hpp"

namespace growthlab {

namespace {

using Json = nlohmann::json;

const std::map<std::string, std::string>& named_one_line() {
  static const std::map<std::string, std::string> table{
      {"pi2", "2 9 1 3 4 5 6 7 10 8"}, {"pi3", "3 1 8 2 4 5 6 10 7 9"}, {"pi4", "314562"},
      {"pi5", "281345697"},           {"pi6", "3412"},                  {"pi7", "2613475"},
      {"pi8", "31456827"},            {"mu2", "251364"},                {"mu3", "2341"},
      {"mu4", "23451"},               {"mu5", "23514"},
  };
  return table;
}

std::vector<Permutation> perms(std::initializer_list<const char*> names) {
  std::vector<Permutation> out;
  for (const char* n : names) out.push_back(named_permutation(n));
  return out;
}

bool same_digits(const DigitSequence& a, const DigitSequence& b) {
  return a.preperiod == b.preperiod && a.period == b.period;
}

// Certified lower bound on x - y for enclosed x, y.
Rational margin(const RootEnclosure& x, const RootEnclosure& y) { return x.lo - y.hi; }

// Whether two enclosures pin the same algebraic number: a common factor with
// exactly one root in the overlap of the two brackets, and no other root of
// either polynomial there.
bool same_root(const RootEnclosure& x, const RootEnclosure& y) {
  const Rational lo = std::max(x.lo, y.lo);
  const Rational hi = std::min(x.hi, y.hi);
  if (lo > hi) return false;
  const IntPoly g = gcd(x.poly, y.poly);
  if (g.degree() < 1) return false;
  if (x.exact() || y.exact()) return g.sign_at(x.exact() ? x.lo : y.lo) == 0;
  // Both brackets hold exactly one root of their polynomial, so a root of the
  // common factor in the overlap is that root for both.
  return SturmChain(g).count(lo, hi) + (g.sign_at(lo) == 0 ? 1 : 0) >= 1;
}

}  // namespace

void FamilySpec::validate() const {
  if (r < 3 || s < 2) throw InputError("family " + name + ": need r >= 3 and s >= 2");
  if (k < 5 || k % 2 == 0) throw InputError("family " + name + ": k must be odd and >= 5");
  for (const auto& c : collections)
    if (c.U.empty()) throw InputError("family " + name + ": every collection needs a non-empty U");
}

Permutation named_permutation(const std::string& name) {
  if (name == "pi0") return osc::inflated_oscillation(5, 7, 1);
  if (name == "pi1") return osc::inflated_oscillation(7, 9, 1);
  if (name == "mu1") return osc::star(7);
  auto it = named_one_line().find(name);
  if (it == named_one_line().end()) throw InputError("unknown permutation name: " + name);
  return Permutation::parse(it->second);
}

std::vector<std::string> builtin_family_names() { return {"A", "B", "C", "D", "E", "Example"}; }

FamilySpec builtin_family(const std::string& name) {
  if (name == "A") return {"A", 5, 3, 7, {{perms({"pi1"}), perms({"mu1"})}}};
  if (name == "B") return {"B", 5, 3, 5, {{perms({"pi2"}), {}}}};
  if (name == "C") return {"C", 9, 8, 5, {{perms({"pi3"}), perms({"mu2"})}}};
  if (name == "D") return {"D", 5, 3, 5, {{perms({"pi4", "pi5"}), perms({"mu3"})}}};
  if (name == "E")
    return {"E", 5, 5, 5,
            {{perms({"pi6", "pi7", "pi8"}), perms({"pi6", "mu3"})},
             {perms({"pi6", "pi7", "pi8"}), perms({"mu2", "mu4", "mu5"})}}};
  if (name == "Example") return {"Example", 5, 3, 5, {{perms({"pi0"}), {osc::star(7)}}}};
  const std::string prefix = "Theorem1:";
  if (name.rfind(prefix, 0) == 0) {
    int k = 0;
    try {
      std::size_t used = 0;
      k = std::stoi(name.substr(prefix.size()), &used);
      if (used != name.size() - prefix.size()) throw InputError("");
    } catch (const std::exception&) {
      throw InputError("bad family name: " + name);
    }
    FamilySpec spec{name, 5, 3, k, {}};
    spec.validate();
    return spec;
  }
  throw InputError("unknown family: " + name);
}

namespace {

// A config entry is a one-line permutation or one of the named ones.
Permutation config_permutation(const std::string& text) {
  if (!text.empty() && std::isalpha(static_cast<unsigned char>(text.front()))) return named_permutation(text);
  return Permutation::parse(text);
}

}  // namespace

FamilySpec parse_family_config(const std::string& json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const Json::exception& e) {
    throw InputError(std::string("family config is not valid JSON: ") + e.what());
  }
  try {
    FamilySpec spec;
    spec.name = j.at("name").get<std::string>();
    spec.r = j.at("r").get<int>();
    spec.s = j.at("s").get<int>();
    spec.k = j.at("k").get<int>();
    for (const auto& c : j.value("collections", Json::array())) {
      Collection col;
      for (const auto& p : c.at("U")) col.U.push_back(config_permutation(p.get<std::string>()));
      for (const auto& p : c.value("L", Json::array())) col.L.push_back(config_permutation(p.get<std::string>()));
      spec.collections.push_back(std::move(col));
    }
    spec.validate();
    return spec;
  } catch (const Json::exception& e) {
    throw InputError(std::string("family config: ") + e.what());
  }
}

FamilySpec load_family_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read family config " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_family_config(text.str());
}

std::vector<std::vector<Permutation>> extra_sets(const FamilySpec& spec) {
  spec.validate();
  std::set<std::vector<Permutation>> sets;
  for (const auto& c : spec.collections) {
    DownsetCollection dc = downset_collection(c.U, c.L, spec.r, spec.s);
    for (const auto& p : dc.poset.ground())
      if (in_r_cells(p, spec.r, spec.s, spec.k))
        throw InputError("family " + spec.name + ": " + p.to_string() + " lies in an R cell");
    for (std::size_t i = 0; i < dc.downsets.size(); ++i) sets.insert(dc.elements(i));
  }
  return {sets.begin(), sets.end()};
}

std::vector<EnumProfile> h_profiles(const FamilySpec& spec) {
  if (spec.collections.empty()) {
    spec.validate();
    return {EnumProfile{1, {}}};
  }
  std::set<EnumProfile> out;
  for (const auto& h : extra_sets(spec)) out.insert(enum_profile(h, 1));
  return {out.begin(), out.end()};
}

std::vector<EnumProfile> f_profiles(int r, int s) { return f_family(5, r, s).distinct_profiles(); }

DigitSetSequence family_digit_sets(const FamilySpec& spec) {
  spec.validate();
  const EnumSequence q = q_sequence(spec.r, spec.s);
  std::vector<GeneralisedDigit> h_digits;
  for (const auto& p : h_profiles(spec)) h_digits.push_back(p.digit());
  std::vector<GeneralisedDigit> f_digits;
  for (const auto& p : f_profiles(spec.r, spec.s)) f_digits.push_back(p.digit());

  // Past position a, q is constant and the sets alternate with parity.
  std::size_t a = std::max<std::size_t>(q.preperiod().size(), static_cast<std::size_t>(spec.k + 1));
  if (a % 2 == 1) ++a;
  auto set_at = [&](std::size_t n) {
    const long qn = q[n];
    std::vector<GeneralisedDigit> ds;
    if (n == 1) {
      for (const auto& h : h_digits) ds.push_back(h.plus(qn));
    } else if (n % 2 == 1 && n >= static_cast<std::size_t>(spec.k + 2)) {
      for (const auto& f : f_digits) ds.push_back(f.plus(qn));
    } else {
      ds.emplace_back(qn);
    }
    return make_digit_set(std::move(ds));
  };
  std::vector<DigitSet> pre, per;
  for (std::size_t n = 1; n <= a; ++n) pre.push_back(set_at(n));
  per.push_back(set_at(a + 1));
  per.push_back(set_at(a + 2));
  return DigitSetSequence(std::move(pre), std::move(per));
}

BoundSequences bound_sequences(const DigitSetSequence& D, const Rational& gamma_probe) {
  if (gamma_probe <= 1) throw InputError("probe must exceed 1");
  BoundSequences b;
  b.ell_digits = lower_digits(D, gamma_probe);
  b.u_digits = upper_digits(D, gamma_probe);
  b.ell = digit_seq_to_enum(b.ell_digits);
  b.u = digit_seq_to_enum(b.u_digits);
  return b;
}

BoundSequences bound_sequences(const FamilySpec& spec, const Rational& gamma_probe) {
  return bound_sequences(family_digit_sets(spec), gamma_probe);
}

IntervalReport family_interval(const FamilySpec& spec, const IntervalOptions& opts) {
  if (opts.bits < 20) throw InputError("precision must be at least 20 bits");
  IntervalReport rep;
  rep.name = spec.name;
  rep.r = spec.r;
  rep.s = spec.s;
  rep.k = spec.k;
  rep.h_profiles = h_profiles(spec);
  rep.h_profile_count = rep.h_profiles.size();
  rep.f_profile_count = f_profiles(spec.r, spec.s).size();
  rep.search_hi = opts.search_hi;
  rep.search_lo = opts.search_lo;

  const DigitSetSequence D = family_digit_sets(spec);
  // The extremes are chosen by value, so the probe has to sit inside the
  // interval it produces. Re-probe at the midpoint until that holds.
  Rational probe = opts.probe;
  BoundSequences b;
  for (int round = 0; round < 8; ++round) {
    b = bound_sequences(D, probe);
    rep.gr_lo = growth_rate(b.ell, opts.bits);
    rep.gr_hi = growth_rate(b.u, opts.bits);
    if (probe >= rep.gr_lo.lo && probe <= rep.gr_hi.hi) break;
    probe = (rep.gr_lo.lo + rep.gr_hi.hi) / 2;
  }
  rep.probe = probe;
  rep.ell_seq = b.ell;
  rep.u_seq = b.u;

  // Extreme profiles by value and by lexicographic order of the counts.
  {
    auto by_value = [&](const EnumProfile& x, const EnumProfile& y) {
      return x.digit().value(probe) < y.digit().value(probe);
    };
    auto [vmin, vmax] = std::minmax_element(rep.h_profiles.begin(), rep.h_profiles.end(), by_value);
    auto lex = [](const EnumProfile& x, const EnumProfile& y) { return x.counts < y.counts; };
    auto [lmin, lmax] = std::minmax_element(rep.h_profiles.begin(), rep.h_profiles.end(), lex);
    rep.h_min_value = vmin->to_string();
    rep.h_max_value = vmax->to_string();
    rep.h_min_lex = lmin->to_string();
    rep.h_max_lex = lmax->to_string();
  }

  rep.extremes_stable = true;
  for (const Rational& g : {rep.gr_lo.lo, rep.gr_hi.hi, Rational((rep.gr_lo.lo + rep.gr_hi.hi) / 2)}) {
    if (!same_digits(lower_digits(D, g), b.ell_digits) || !same_digits(upper_digits(D, g), b.u_digits))
      rep.extremes_stable = false;
  }

  const Rational start = rep.gr_lo.lo;
  if (auto bad = first_violated_gap(D, start)) {
    rep.feasible = false;
    rep.violated_position = bad;
    return rep;
  }
  if (opts.search_hi > start)
    rep.gamma_max = next_gap_boundary(D, start, opts.search_hi, SweepDirection::up, opts.bits);
  if (opts.search_lo < start)
    rep.gamma_min = next_gap_boundary(D, start, opts.search_lo, SweepDirection::down, opts.bits);

  rep.feasible = true;
  if (rep.gamma_max) {
    // Tighten both sides until the boundary is separated from gr_hi.
    unsigned bits = opts.bits;
    while (rep.gamma_max->where.hi >= rep.gr_hi.lo && rep.gamma_max->where.lo <= rep.gr_hi.hi && bits < 400) {
      bits += 40;
      refine(rep.gamma_max->where, bits);
      refine(rep.gr_hi, bits);
    }
    if (rep.gamma_max->where.lo <= rep.gr_hi.hi) {
      rep.feasible = false;
      rep.violated_position = rep.gamma_max->position;
    }
  }
  return rep;
}

Theorem1Report verify_theorem1(const std::vector<int>& k_list, unsigned bits) {
  Theorem1Report rep;
  for (const auto& c : named_constants(bits))
    if (c.name == "theta_B") rep.theta_B = c.root;

  std::vector<std::future<Theorem1Row>> jobs;
  for (int k : k_list) {
    if (k < 5 || k % 2 == 0) throw InputError("k must be odd and >= 5");
    jobs.push_back(std::async(std::launch::async, [k, bits, theta = rep.theta_B] {
      Theorem1Row row;
      row.k = k;
      IntervalOptions opts;
      opts.bits = bits;
      row.interval = family_interval(builtin_family("Theorem1:" + std::to_string(k)), opts);
      const auto& iv = row.interval;
      row.nonempty = iv.gr_lo.hi < iv.gr_hi.lo;
      // l and u agree with q on positions 1..k+1, so the agreement bound
      // for k+1 shared terms caps both distances to theta_B.
      const long c = iv.u_seq.max();
      row.predicted_eps = Rational(c * (c + 1) * (c + 1)) / Rational(pow(Integer(2), static_cast<unsigned>(k + 1)));
      auto dist = [&](const RootEnclosure& e) { return std::max(e.hi - theta.lo, theta.hi - e.lo); };
      row.within_predicted = dist(iv.gr_lo) <= row.predicted_eps && dist(iv.gr_hi) <= row.predicted_eps;
      row.ok = row.nonempty && row.within_predicted && iv.feasible && iv.extremes_stable;
      return row;
    }));
  }
  rep.ok = true;
  for (auto& j : jobs) {
    rep.rows.push_back(j.get());
    rep.ok = rep.ok && rep.rows.back().ok;
  }
  return rep;
}

Theorem2Report verify_theorem2(unsigned bits) {
  if (bits < 30) throw InputError("precision must be at least 30 bits");
  Theorem2Report rep;
  for (const auto& c : named_constants(bits)) {
    if (c.name == "lambda_B") rep.lambda_B = c.root;
    if (c.name == "lambda_A") rep.lambda_A = c.root;
  }
  std::vector<std::future<IntervalReport>> jobs;
  for (const char* name : {"A", "B", "C", "D", "E"})
    jobs.push_back(std::async(std::launch::async, [name, bits] {
      IntervalOptions opts;
      opts.bits = bits;
      return family_interval(builtin_family(name), opts);
    }));
  for (auto& j : jobs) rep.families.push_back(j.get());

  const auto& F = rep.families;
  rep.ok = true;
  for (const auto& f : F)
    if (!f.feasible || !f.extremes_stable) rep.ok = false;

  {
    ChainLink link{"A.lo = lambda_B", Rational(0), same_root(F[0].gr_lo, rep.lambda_B)};
    if (!link.ok) link.margin = -abs(F[0].gr_lo.midpoint() - rep.lambda_B.midpoint());
    rep.chain.push_back(link);
  }
  const char* names = "ABCDE";
  for (std::size_t i = 0; i + 1 < F.size(); ++i) {
    ChainLink link;
    link.description = std::string(1, names[i]) + ".hi >= " + std::string(1, names[i + 1]) + ".lo";
    link.margin = margin(F[i].gr_hi, F[i + 1].gr_lo);
    link.ok = link.margin > 0;
    rep.chain.push_back(link);
  }
  {
    ChainLink link{"E.hi > lambda_A", margin(F[4].gr_hi, rep.lambda_A), false};
    link.ok = link.margin > 0;
    rep.chain.push_back(link);
  }
  for (const auto& l : rep.chain) rep.ok = rep.ok && l.ok;
  return rep;
}

}  // namespace growthlab
