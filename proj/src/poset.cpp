#include "growthlab/poset.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "growthlab/osc.hpp"
#include "growthlab/rational.hpp"
#include "json.hpp"

namespace growthlab {

GeneralisedDigit EnumProfile::digit() const {
  if (counts.empty()) return GeneralisedDigit(0);
  return GeneralisedDigit(counts);
}

EnumProfile enum_profile(const std::vector<Permutation>& elements, int base_length) {
  EnumProfile p;
  p.base_length = base_length;
  for (const auto& e : elements) {
    const int i = e.size() - base_length;
    if (i < 0) throw InputError("element " + e.to_string() + " is shorter than the profile base");
    if (static_cast<std::size_t>(i) >= p.counts.size()) p.counts.resize(i + 1, 0);
    ++p.counts[i];
  }
  return p;
}

PermPoset::PermPoset(std::vector<Permutation> ground) : ground_(std::move(ground)) {
  std::sort(ground_.begin(), ground_.end());
  ground_.erase(std::unique(ground_.begin(), ground_.end()), ground_.end());
  const std::size_t n = ground_.size();
  below_.assign(n, std::vector<bool>(n, false));
  for (std::size_t j = 0; j < n; ++j) {
    below_[j][j] = true;
    for (std::size_t i = 0; i < j; ++i)
      if (ground_[i].size() < ground_[j].size() && contains(ground_[j], ground_[i])) below_[j][i] = true;
  }
}

std::size_t PermPoset::index_of(const Permutation& p) const {
  auto it = std::lower_bound(ground_.begin(), ground_.end(), p);
  if (it == ground_.end() || !(*it == p)) throw InputError(p.to_string() + " is not in the ground set");
  return static_cast<std::size_t>(it - ground_.begin());
}

std::vector<std::pair<std::size_t, std::size_t>> PermPoset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = size();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      if (!leq(i, j)) continue;
      bool direct = true;
      for (std::size_t k = i + 1; k < j && direct; ++k)
        if (leq(i, k) && leq(k, j)) direct = false;
      if (direct) out.emplace_back(i, j);
    }
  return out;
}

std::vector<std::size_t> PermPoset::down_closure(const std::vector<std::size_t>& set) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (std::any_of(set.begin(), set.end(), [&](std::size_t j) { return leq(i, j); })) out.push_back(i);
  return out;
}

std::vector<std::vector<std::size_t>> PermPoset::downsets_containing(const std::vector<std::size_t>& required) const {
  const std::size_t n = size();
  std::vector<bool> forced(n, false);
  for (std::size_t i : down_closure(required)) forced[i] = true;
  std::vector<bool> in(n, false);
  std::vector<std::vector<std::size_t>> out;
  // Index order is a linear extension, so everything below i is decided
  // before i; no branch dead-ends.
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      std::vector<std::size_t> d;
      for (std::size_t k = 0; k < n; ++k)
        if (in[k]) d.push_back(k);
      out.push_back(std::move(d));
      return;
    }
    if (!forced[i]) rec(i + 1);
    bool can = true;
    for (std::size_t k = 0; k < i && can; ++k)
      if (leq(k, i) && !in[k]) can = false;
    if (can) {
      in[i] = true;
      rec(i + 1);
      in[i] = false;
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

bool PermPoset::is_downset(const std::vector<std::size_t>& set) const {
  std::vector<bool> in(size(), false);
  for (std::size_t i : set) in.at(i) = true;
  for (std::size_t j : set)
    for (std::size_t i = 0; i < size(); ++i)
      if (leq(i, j) && !in[i]) return false;
  return true;
}

std::vector<std::size_t> PermPoset::maximal(const std::vector<std::size_t>& set) const {
  std::vector<std::size_t> out;
  for (std::size_t i : set) {
    bool top = std::none_of(set.begin(), set.end(), [&](std::size_t j) { return j != i && leq(i, j); });
    if (top) out.push_back(i);
  }
  return out;
}

std::string PermPoset::to_dot(const std::string& name) const {
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (std::size_t i = 0; i < size(); ++i) out << "  n" << i << " [label=\"" << ground_[i].to_string() << "\"];\n";
  for (auto [i, j] : covers()) out << "  n" << i << " -> n" << j << " [arrowhead=none];\n";
  out << "}\n";
  return out.str();
}

std::vector<Permutation> DownsetCollection::elements(std::size_t i) const {
  std::vector<Permutation> out;
  for (std::size_t k : downsets.at(i)) out.push_back(poset.ground()[k]);
  return out;
}

EnumProfile DownsetCollection::profile(std::size_t i) const { return enum_profile(elements(i), base_length); }

std::vector<EnumProfile> DownsetCollection::distinct_profiles() const {
  std::set<EnumProfile> seen;
  for (std::size_t i = 0; i < downsets.size(); ++i) seen.insert(profile(i));
  return {seen.begin(), seen.end()};
}

std::string DownsetCollection::to_json() const {
  nlohmann::json j;
  j["ground"] = nlohmann::json::array();
  for (const auto& p : poset.ground()) j["ground"].push_back(p.to_string());
  j["base_length"] = base_length;
  j["downsets"] = nlohmann::json::array();
  for (std::size_t i = 0; i < downsets.size(); ++i) {
    nlohmann::json d;
    d["maximal"] = nlohmann::json::array();
    for (std::size_t k : poset.maximal(downsets[i])) d["maximal"].push_back(poset.ground()[k].to_string());
    d["profile"] = profile(i).to_string();
    j["downsets"].push_back(d);
  }
  return j.dump(2);
}

std::vector<Permutation> r_set(int n, int r, int s) {
  if (n < 4 || n % 2 == 0) throw InputError("R cells need odd n >= 5");
  if (r < 2 || s < 2) throw InputError("R cells need r, s >= 2");
  std::vector<Permutation> out;
  for (int u = 2; u <= r; ++u)
    for (int v = 2; v <= s; ++v) out.push_back(osc::inflated_oscillation(n, u, v));
  std::sort(out.begin(), out.end());
  return out;
}

DownsetCollection f_family(int n, int r, int s) {
  if (n < 5 || n % 2 == 0) throw InputError("F families need odd n >= 5");
  if (r < 3 || s < 2) throw InputError("F families need r >= 3, s >= 2");
  DownsetCollection c;
  c.poset = PermPoset(r_set(n, r, s));
  c.base_length = n + 2;
  c.downsets = c.poset.downsets_containing({c.poset.index_of(osc::inflated_oscillation(n, 3, 2))});
  return c;
}

long distinct_profiles(int r, int s) { return static_cast<long>(f_family(5, r, s).distinct_profiles().size()); }

long distinct_profiles_formula(int r, int s, int first_index) {
  if (r < 3 || s < 2) throw InputError("need r >= 3, s >= 2");
  long total = 0;
  for (int i = first_index; i <= s - 1; ++i) {
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(r - 2), static_cast<unsigned long>(i));
    total += (s - i) * c.get_si();
  }
  return total - 2;
}

EnumSequence q_sequence(int r, int s) {
  if (r < 2 || s < 2) throw InputError("Q needs r, s >= 2");
  if (r < s) std::swap(r, s);
  // Terms from length 4 on: primary and secondary oscillations (1 each),
  // one star while n <= r+2, and the two single-end inflations.
  std::vector<long> pre{1, 1, 2};
  auto term = [&](int n) { return 2L + (n <= r + 2 ? 1 : 0) + std::min(n - 4, r - 1) + std::min(n - 4, s - 1); };
  for (int n = 4; n <= r + 3; ++n) pre.push_back(term(n));
  return EnumSequence(std::move(pre), {static_cast<long>(r + s)});
}

EnumSequence q_sequence_closed_form(int r, int s) {
  if (r < 2 || s < 2) throw InputError("Q needs r, s >= 2");
  if (r < s) std::swap(r, s);
  std::vector<long> pre{1, 1, 2};
  if (r == s) {
    for (int j = 1; j <= r - 1; ++j) pre.push_back(2 * j + 1);
    return EnumSequence(std::move(pre), {2L * r});
  }
  for (int j = 1; j <= s; ++j) pre.push_back(2 * j + 1);
  for (long v = 2L * s + 2; v < r + s; ++v) pre.push_back(v);
  return EnumSequence(std::move(pre), {static_cast<long>(r + s)});
}

namespace {

// Every Q shape of exactly the given length.
std::vector<Permutation> q_shapes_of_length(int r, int s, int len) {
  std::vector<Permutation> out;
  out.push_back(osc::primary_oscillation(len));
  if (len >= 3) out.push_back(osc::secondary_oscillation(len));
  const int u_star = len - 1;
  if (u_star >= 3 && u_star <= std::max(r, s) + 1) out.push_back(osc::star(u_star));
  for (int u = 2; u <= r; ++u) {
    const int m = len - u + 1;
    if (m >= 4) out.push_back(osc::inflated_oscillation(m, u, 1, osc::Kind::primary));
  }
  for (int v = 2; v <= s; ++v) {
    const int m = len - v + 1;
    if (m >= 4)
      out.push_back(osc::inflated_oscillation(m, 1, v, m % 2 == 1 ? osc::Kind::primary : osc::Kind::secondary));
  }
  return out;
}

}  // namespace

std::vector<Permutation> q_set(int r, int s, int max_len) {
  if (r < 2 || s < 2) throw InputError("Q needs r, s >= 2");
  std::vector<Permutation> out;
  for (int len = 1; len <= max_len; ++len) {
    auto shapes = q_shapes_of_length(r, s, len);
    out.insert(out.end(), shapes.begin(), shapes.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool in_q(const Permutation& sigma, int r, int s) {
  for (const auto& p : q_shapes_of_length(r, s, sigma.size()))
    if (p == sigma) return true;
  return false;
}

bool in_r_cells(const Permutation& sigma, int r, int s, int min_n) {
  const int len = sigma.size();
  for (int n = std::max(5, min_n | 1); n + 2 <= len; n += 2)
    for (int u = 2; u <= r; ++u) {
      const int v = len - n + 2 - u;
      if (v >= 2 && v <= s && osc::inflated_oscillation(n, u, v) == sigma) return true;
    }
  return false;
}

std::vector<Permutation> indecomposable_patterns(const Permutation& sigma) {
  std::set<Permutation> all{sigma};
  std::set<Permutation> level{sigma};
  std::vector<int> seq;
  for (int len = sigma.size(); len > 1; --len) {
    std::set<Permutation> next;
    for (const auto& p : level) {
      seq.assign(static_cast<std::size_t>(len - 1), 0);
      for (int skip = 0; skip < len; ++skip) {
        for (int i = 0, j = 0; i < len; ++i)
          if (i != skip) seq[static_cast<std::size_t>(j++)] = p.values()[static_cast<std::size_t>(i)];
        next.insert(Permutation::standardize(seq));
      }
    }
    all.insert(next.begin(), next.end());
    level = std::move(next);
  }
  std::vector<Permutation> out;
  for (const auto& p : all)
    if (is_indecomposable(p)) out.push_back(p);
  return out;
}

DownsetCollection downset_collection(const std::vector<Permutation>& U, const std::vector<Permutation>& L, int r,
                                     int s) {
  if (U.empty()) throw InputError("U must be non-empty");
  std::set<Permutation> below;
  for (const auto& u : U) {
    if (!is_indecomposable(u)) throw InputError(u.to_string() + " in U is not indecomposable");
    auto pats = indecomposable_patterns(u);
    below.insert(pats.begin(), pats.end());
  }
  for (const auto& l : L) {
    if (!is_indecomposable(l)) throw InputError(l.to_string() + " in L is not indecomposable");
    if (!below.count(l)) throw InputError(l.to_string() + " in L is not below any element of U");
    if (in_q(l, r, s)) throw InputError(l.to_string() + " in L belongs to Q");
  }
  std::vector<Permutation> ground;
  for (const auto& p : below)
    if (!in_q(p, r, s)) ground.push_back(p);
  DownsetCollection c;
  c.poset = PermPoset(std::move(ground));
  c.base_length = 1;
  std::vector<std::size_t> req;
  for (const auto& l : L) req.push_back(c.poset.index_of(l));
  c.downsets = c.poset.downsets_containing(req);
  return c;
}

}  // namespace growthlab
