#include "growthlab/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "growthlab/rational.hpp"

namespace growthlab {

namespace {

constexpr int kMaxLength = 255;

}  // namespace

Permutation::Permutation(std::vector<int> values) {
  const int n = static_cast<int>(values.size());
  if (n < 1) throw InputError("permutation must have length >= 1");
  if (n > kMaxLength) throw InputError("permutation too long");
  std::vector<bool> seen(n + 1, false);
  for (int v : values) {
    if (v < 1 || v > n || seen[v]) throw InputError("not a permutation of 1..n");
    seen[v] = true;
  }
  values_.assign(values.begin(), values.end());
}

Permutation Permutation::parse(const std::string& text) {
  std::string t = text;
  std::replace(t.begin(), t.end(), ',', ' ');
  std::istringstream in(t);
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  if (tokens.empty()) throw InputError("empty permutation");

  std::vector<int> values;
  if (tokens.size() == 1 && tokens[0].size() > 1) {
    // compact digit string, only meaningful for n <= 9
    for (char c : tokens[0]) {
      if (c < '1' || c > '9') throw InputError("bad permutation: " + text);
      values.push_back(c - '0');
    }
  } else {
    for (const auto& tok : tokens) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw InputError("bad permutation entry: " + tok);
      }
      if (used != tok.size()) throw InputError("bad permutation entry: " + tok);
      values.push_back(v);
    }
  }
  return Permutation(std::move(values));
}

Permutation Permutation::standardize(std::span<const int> seq) {
  std::vector<int> idx(seq.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return seq[a] < seq[b]; });
  std::vector<value_type> out(seq.size());
  for (std::size_t rank = 0; rank < idx.size(); ++rank) out[idx[rank]] = static_cast<value_type>(rank + 1);
  return Permutation(std::move(out), Unchecked{});
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

std::string Permutation::to_string() const {
  std::string s;
  const bool compact = size() <= 9;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!compact && i > 0) s += ' ';
    s += std::to_string(values_[i]);
  }
  return s;
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return a.values_ <=> b.values_;
}

Permutation direct_sum(const Permutation& sigma, const Permutation& tau) {
  std::vector<int> v;
  v.reserve(sigma.size() + tau.size());
  for (int i = 1; i <= sigma.size(); ++i) v.push_back(sigma(i));
  for (int i = 1; i <= tau.size(); ++i) v.push_back(sigma.size() + tau(i));
  return Permutation(std::move(v));
}

namespace {

// Depth-first embedding search. Position k of the pattern is placed after
// the text position used for k-1; relative order against all earlier
// placements is checked incrementally.
bool embed(const std::vector<Permutation::value_type>& text, const std::vector<Permutation::value_type>& pat,
           std::vector<int>& where, std::size_t k, std::size_t start) {
  if (k == pat.size()) return true;
  const std::size_t remaining = pat.size() - k;
  for (std::size_t p = start; p + remaining <= text.size(); ++p) {
    bool ok = true;
    for (std::size_t j = 0; j < k; ++j) {
      if ((pat[j] < pat[k]) != (text[where[j]] < text[p])) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    where[k] = static_cast<int>(p);
    if (embed(text, pat, where, k + 1, p + 1)) return true;
  }
  return false;
}

}  // namespace

bool contains(const Permutation& sigma, const Permutation& pattern) {
  if (pattern.size() > sigma.size()) return false;
  if (pattern.size() == sigma.size()) return pattern == sigma;
  const int n = sigma.size();
  if (n - pattern.size() == 1) {
    // Long increasing runs make the search backtrack; deleting one point is direct.
    std::vector<int> seq(static_cast<std::size_t>(n - 1));
    for (int skip = 0; skip < n; ++skip) {
      for (int i = 0, j = 0; i < n; ++i)
        if (i != skip) seq[static_cast<std::size_t>(j++)] = sigma.values()[static_cast<std::size_t>(i)];
      if (Permutation::standardize(seq) == pattern) return true;
    }
    return false;
  }
  std::vector<int> where(pattern.size());
  return embed(sigma.values(), pattern.values(), where, 0, 0);
}

bool is_indecomposable(const Permutation& sigma) {
  int running_max = 0;
  for (int i = 1; i < sigma.size(); ++i) {
    running_max = std::max(running_max, sigma(i));
    if (running_max == i) return false;
  }
  return true;
}

std::vector<Permutation> sum_components(const Permutation& sigma) {
  std::vector<Permutation> out;
  int running_max = 0;
  int start = 0;  // 0-based start of the current block
  for (int i = 1; i <= sigma.size(); ++i) {
    running_max = std::max(running_max, sigma(i));
    if (running_max == i) {
      std::vector<int> block;
      for (int j = start + 1; j <= i; ++j) block.push_back(sigma(j) - start);
      out.emplace_back(std::move(block));
      start = i;
    }
  }
  return out;
}

OrderedGraph graph(const Permutation& sigma) {
  OrderedGraph g;
  g.n = sigma.size();
  for (int i = 1; i <= g.n; ++i)
    for (int j = i + 1; j <= g.n; ++j)
      if (sigma(i) > sigma(j)) g.edges.emplace_back(i, j);
  return g;
}

bool OrderedGraph::is_connected() const {
  if (n <= 1) return n == 1;
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = n;
  for (auto [a, b] : edges) {
    int ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return components == 1;
}

std::vector<int> OrderedGraph::degrees() const {
  std::vector<int> d(static_cast<std::size_t>(n), 0);
  for (auto [a, b] : edges) {
    ++d[a - 1];
    ++d[b - 1];
  }
  return d;
}

bool OrderedGraph::is_path() const {
  if (n == 1) return edges.empty();
  if (static_cast<int>(edges.size()) != n - 1 || !is_connected()) return false;
  auto d = degrees();
  return std::all_of(d.begin(), d.end(), [](int x) { return x >= 1 && x <= 2; });
}

Permutation restrict_to(const Permutation& sigma, std::span<const int> positions) {
  std::vector<int> seq;
  seq.reserve(positions.size());
  for (int p : positions) seq.push_back(sigma.values()[p]);
  return Permutation::standardize(seq);
}

}  // namespace growthlab

std::size_t std::hash<growthlab::Permutation>::operator()(const growthlab::Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto v : p.values()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}
