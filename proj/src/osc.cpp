#include "growthlab/osc.hpp"

#include <algorithm>

#include "growthlab/rational.hpp"

namespace growthlab::osc {

namespace {

// Entries of the pair pattern 3,1,5,2,7,4,9,6,...: pair j is (2j+1, 2j-2)
// with the first pair's second entry clamped to 1.
void push_primary_pair(std::vector<int>& v, int j) {
  v.push_back(2 * j + 1);
  v.push_back(std::max(1, 2 * j - 2));
}

// 2,4,1,6,3,8,5,...: a leading 2, then pairs (2j+2, 2j-1).
void push_secondary_pair(std::vector<int>& v, int j) {
  v.push_back(2 * j + 2);
  v.push_back(2 * j - 1);
}

}  // namespace

Permutation primary_oscillation(int n) {
  if (n <= 0) throw InputError("oscillation length must be positive");
  if (n == 1) return Permutation{1};
  if (n == 2) return Permutation{2, 1};
  std::vector<int> v;
  if (n % 2 == 0) {
    for (int j = 1; j <= n / 2 - 1; ++j) push_primary_pair(v, j);
    v.push_back(n);
    v.push_back(n - 2);
  } else {
    for (int j = 1; j <= (n - 1) / 2; ++j) push_primary_pair(v, j);
    v.back() = std::max(1, n - 3);  // last pair is (n, n-3)
    v.push_back(n - 1);
  }
  return Permutation(std::move(v));
}

Permutation secondary_oscillation(int n) {
  if (n <= 0) throw InputError("oscillation length must be positive");
  if (n == 1) return Permutation{1};
  if (n == 2) return Permutation{2, 1};
  std::vector<int> v{2};
  if (n % 2 == 0) {
    for (int j = 1; j <= (n - 2) / 2; ++j) push_secondary_pair(v, j);
    v.push_back(n - 1);
  } else {
    for (int j = 1; j <= (n - 3) / 2; ++j) push_secondary_pair(v, j);
    v.push_back(n);
    v.push_back(n - 2);
  }
  return Permutation(std::move(v));
}

Permutation inflate_point(const Permutation& sigma, int pos, int len) {
  if (pos < 1 || pos > sigma.size() || len < 1) throw InputError("bad inflation");
  const int pivot = sigma(pos);
  std::vector<int> v;
  v.reserve(sigma.size() + len - 1);
  for (int i = 1; i <= sigma.size(); ++i) {
    int x = sigma(i);
    if (i == pos) {
      for (int t = 0; t < len; ++t) v.push_back(pivot + t);
    } else {
      v.push_back(x > pivot ? x + len - 1 : x);
    }
  }
  return Permutation(std::move(v));
}

Permutation inflated_oscillation(int n, int r, int s, Kind kind) {
  if (n < 4) throw InputError("inflated oscillation needs n >= 4");
  if (r < 1 || s < 1) throw InputError("inflation lengths must be >= 1");
  const Permutation base = kind == Kind::primary ? primary_oscillation(n) : secondary_oscillation(n);

  // Locate the two path ends by degree, then pick the lower one by kind.
  const auto deg = graph(base).degrees();
  std::vector<int> ends;
  for (int i = 1; i <= n; ++i)
    if (deg[i - 1] == 1) ends.push_back(i);
  int lower = 0;
  if (kind == Kind::primary) {
    lower = static_cast<int>(std::find(base.values().begin(), base.values().end(), 1) - base.values().begin()) + 1;
  } else {
    lower = 1;
  }
  const int upper = ends[0] == lower ? ends[1] : ends[0];

  // Inflate the later position first so the earlier index stays valid.
  Permutation out = base;
  if (upper > lower) {
    out = inflate_point(out, upper, s);
    out = inflate_point(out, lower, r);
  } else {
    out = inflate_point(out, lower, r);
    out = inflate_point(out, upper, s);
  }
  return out;
}

Permutation star(int u) {
  if (u <= 1) throw InputError("star needs u >= 2");
  std::vector<int> v{u + 1};
  for (int i = 1; i <= u; ++i) v.push_back(i);
  return Permutation(std::move(v));
}

}  // namespace growthlab::osc
