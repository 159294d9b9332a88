#include "growthlab/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>
#include <string>

#include "growthlab/rational.hpp"

namespace growthlab::oracle {

namespace {

constexpr int kPermutationCap = 10;
constexpr int kSubclosureCap = 12;
constexpr int kSubpermCap = 15;
constexpr std::size_t kGroundCap = 24;

Permutation pattern_of(const std::vector<int>& seq) { return Permutation::standardize(seq); }

bool indecomposable(const Permutation& p) {
  // A proper prefix that is a permutation of 1..i splits p.
  int m = 0;
  for (int i = 1; i < p.size(); ++i) {
    m = std::max(m, p(i));
    if (m == i) return false;
  }
  return true;
}

Permutation sum_of(const Permutation& a, const Permutation& b) {
  std::vector<int> v;
  for (int i = 1; i <= a.size(); ++i) v.push_back(a(i));
  for (int i = 1; i <= b.size(); ++i) v.push_back(b(i) + a.size());
  return Permutation(std::move(v));
}

}  // namespace

int max_permutation_length() {
  int cap = kPermutationCap;
  if (const char* env = std::getenv("GROWTHLAB_MAX_ORACLE_N")) {
    try {
      cap = std::min(cap, std::stoi(env));
    } catch (const std::exception&) {
      throw InputError(std::string("bad GROWTHLAB_MAX_ORACLE_N: ") + env);
    }
  }
  return cap;
}

std::vector<Permutation> all_permutations(int n) {
  if (n < 1) throw InputError("n must be >= 1");
  if (n > max_permutation_length()) throw InputError("all_permutations: n exceeds the oracle size guard");
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<long> brute_subclosure_counts(const std::vector<Permutation>& S, int N) {
  if (N < 1) throw InputError("N must be >= 1");
  if (N > kSubclosureCap) throw InputError("brute_subclosure_counts: N exceeds the oracle size guard");
  for (const auto& s : S)
    if (!indecomposable(s)) throw InputError(s.to_string() + " is not indecomposable");
  std::vector<std::set<Permutation>> by_len(static_cast<std::size_t>(N + 1));
  for (int len = 1; len <= N; ++len) {
    for (const auto& s : S) {
      if (s.size() > len) continue;
      if (s.size() == len) {
        by_len[len].insert(s);
        continue;
      }
      for (const auto& p : by_len[len - s.size()]) by_len[len].insert(sum_of(p, s));
    }
  }
  std::vector<long> out;
  for (int len = 1; len <= N; ++len) out.push_back(static_cast<long>(by_len[len].size()));
  return out;
}

std::vector<Permutation> brute_indec_subperms(const Permutation& sigma) {
  const int n = sigma.size();
  if (n > kSubpermCap) throw InputError("brute_indec_subperms: length exceeds the oracle size guard");
  std::set<Permutation> found;
  std::vector<int> seq;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    seq.clear();
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) seq.push_back(sigma(i + 1));
    Permutation p = pattern_of(seq);
    if (indecomposable(p)) found.insert(p);
  }
  return {found.begin(), found.end()};
}

bool brute_contains(const Permutation& sigma, const Permutation& pattern) {
  const int n = sigma.size();
  const int k = pattern.size();
  if (k > n) return false;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<int> seq(static_cast<std::size_t>(k));
  while (true) {
    for (int i = 0; i < k; ++i) seq[i] = sigma(idx[i] + 1);
    if (pattern_of(seq) == pattern) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<std::vector<Permutation>> brute_downsets(const std::vector<Permutation>& ground,
                                                     const std::vector<Permutation>& required) {
  std::vector<Permutation> g(ground);
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  const std::size_t n = g.size();
  if (n > kGroundCap) throw InputError("brute_downsets: ground set exceeds the oracle size guard");
  std::vector<std::uint32_t> below(n, 0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (i != j && brute_contains(g[j], g[i])) below[j] |= 1u << i;
  std::uint32_t need = 0;
  for (const auto& r : required) {
    auto it = std::find(g.begin(), g.end(), r);
    if (it == g.end()) throw InputError(r.to_string() + " is not in the ground set");
    need |= 1u << (it - g.begin());
  }
  std::vector<std::vector<Permutation>> out;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < total; ++m) {
    const auto mask = static_cast<std::uint32_t>(m);
    if ((mask & need) != need) continue;
    bool closed = true;
    for (std::size_t j = 0; j < n && closed; ++j)
      if ((mask >> j & 1u) && (below[j] & ~mask)) closed = false;
    if (!closed) continue;
    std::vector<Permutation> d;
    for (std::size_t j = 0; j < n; ++j)
      if (mask >> j & 1u) d.push_back(g[j]);
    out.push_back(std::move(d));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<long>> grid_downset_profiles(int r, int s) {
  if (r < 3 || s < 2) throw InputError("grid needs r >= 3, s >= 2");
  // Column u (2..r) holds cells v = 2..h_u+1; heights never increase with u.
  const int cols = r - 1;
  std::vector<int> h(static_cast<std::size_t>(cols), 0);
  std::vector<std::vector<long>> out;
  std::function<void(int, int)> rec = [&](int c, int cap) {
    if (c == cols) {
      if (h[1] < 1) return;  // (3,2) must be present
      std::vector<long> prof(static_cast<std::size_t>(r + s - 3), 0);
      for (int i = 0; i < cols; ++i)
        for (int v = 2; v <= h[i] + 1; ++v) ++prof[static_cast<std::size_t>(i + 2 + v - 4)];
      while (!prof.empty() && prof.back() == 0) prof.pop_back();
      out.push_back(std::move(prof));
      return;
    }
    for (int height = 0; height <= cap; ++height) {
      h[c] = height;
      rec(c + 1, height);
    }
  };
  rec(0, s - 1);
  return out;
}

}  // namespace growthlab::oracle
