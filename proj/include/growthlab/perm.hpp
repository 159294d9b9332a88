#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace growthlab {

/// A permutation of {1..n} in one-line notation. Immutable value type.
class Permutation {
 public:
  using value_type = std::uint8_t;

  /// Validates that `values` is a bijection on {1..n}, n >= 1.
  explicit Permutation(std::vector<int> values);
  Permutation(std::initializer_list<int> values) : Permutation(std::vector<int>(values)) {}

  /// One-line text form: "2413", "2 4 1 3" or "2,4,1,3".
  static Permutation parse(const std::string& text);
  /// Order-isomorphic pattern of an arbitrary sequence of distinct integers.
  static Permutation standardize(std::span<const int> seq);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(values_.size()); }
  /// 1-based access, as in the usual sigma(i).
  int operator()(int i) const { return values_[i - 1]; }
  const std::vector<value_type>& values() const { return values_; }

  /// Digit string when n <= 9, space separated otherwise.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  /// Shorter permutations first, then lexicographic.
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b);

 private:
  struct Unchecked {};
  Permutation(std::vector<value_type> v, Unchecked) : values_(std::move(v)) {}
  std::vector<value_type> values_;
};

/// Inversion graph on vertices 1..n: edge (i, j), i < j, iff sigma(i) > sigma(j).
struct OrderedGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  ///< sorted, i < j

  bool is_connected() const;
  /// Entry i - 1 is the degree of vertex i.
  std::vector<int> degrees() const;
  bool is_path() const;
  friend bool operator==(const OrderedGraph&, const OrderedGraph&) = default;
};

Permutation direct_sum(const Permutation& sigma, const Permutation& tau);

/// True iff `pattern` <= `sigma` in the subpermutation order.
bool contains(const Permutation& sigma, const Permutation& pattern);

bool is_indecomposable(const Permutation& sigma);

/// The unique decomposition into indecomposable summands, left to right.
std::vector<Permutation> sum_components(const Permutation& sigma);

OrderedGraph graph(const Permutation& sigma);

/// Pattern of sigma restricted to the given (increasing) 0-based positions.
Permutation restrict_to(const Permutation& sigma, std::span<const int> positions);

}  // namespace growthlab

template <>
struct std::hash<growthlab::Permutation> {
  std::size_t operator()(const growthlab::Permutation& p) const noexcept;
};
