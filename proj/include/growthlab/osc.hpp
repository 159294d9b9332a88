#pragma once

#include "growthlab/perm.hpp"

namespace growthlab::osc {

/// Which end of the path is pinned: primary oscillations have their least
/// entry at a path end, secondary ones their first entry.
enum class Kind { primary, secondary };

struct OscillationSpec {
  int n = 4;
  int r = 1;  ///< lower-end inflation
  int s = 1;  ///< upper-end inflation
  Kind kind = Kind::primary;

  int length() const { return n - 2 + r + s; }
};

/// omega_n: 1, 21, 312, 3142, 31524, 315264, 3152746, ...
Permutation primary_oscillation(int n);
/// bar-omega_n: 1, 21, 231, 2413, 24153, 241635, 2416375, ...
Permutation secondary_oscillation(int n);

/// The oscillation of the given kind with its lower end replaced by an
/// increasing run of length r and its upper end by one of length s.
/// Lower end: the least entry (primary) or the first entry (secondary).
Permutation inflated_oscillation(int n, int r, int s, Kind kind = Kind::primary);
inline Permutation inflated_oscillation(const OscillationSpec& spec) {
  return inflated_oscillation(spec.n, spec.r, spec.s, spec.kind);
}

/// psi_u = (u+1) 1 2 ... u; its graph is the star K_{1,u}.
Permutation star(int u);

/// Replaces the entry at 1-based position `pos` by an increasing run of `len`.
Permutation inflate_point(const Permutation& sigma, int pos, int len);

}  // namespace growthlab::osc
