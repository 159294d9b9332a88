#pragma once

#include <optional>

#include "growthlab/digits.hpp"
#include "growthlab/growth.hpp"

namespace growthlab {

/// A point where the gap inequalities stop holding.
struct GapBoundary {
  /// Enclosure of the boundary; `poly` is the binding constraint with its
  /// rational roots removed (a linear factor when the boundary is rational).
  RootEnclosure where;
  /// The constraint as first found, before stripping.
  IntPoly raw_constraint;
  /// First violated position just past the boundary.
  std::size_t position = 0;
};

enum class SweepDirection { up, down };

/// Moves from `start` (where the gap inequalities must hold) towards `limit`
/// and returns the first base at which they fail, or nothing if they hold on
/// the whole closed range. Exact: between consecutive changes of digit order
/// every inequality is a fixed integer polynomial sign condition whose roots
/// are isolated by Sturm sequences.
std::optional<GapBoundary> next_gap_boundary(const DigitSetSequence& D, const Rational& start,
                                             const Rational& limit, SweepDirection dir, unsigned bits = 40);

}  // namespace growthlab
