#pragma once

#include <vector>

#include "arrgr/matrix.hpp"

namespace arrgr {

enum class Side { Positive, Negative };

/// One strict half-space condition: sign(a·v + c) must equal `side`.
struct StrictConstraint {
  RatVector linear;
  Rational constant;
  Side side = Side::Positive;
};

/// Decides exactly whether some v in Q^d satisfies every strict constraint.
/// Fourier–Motzkin elimination; each step combines pairs with opposite
/// coefficient signs, and positive combinations of strict inequalities stay
/// strict. Throws InputError when rows have different lengths.
bool strict_feasible(const std::vector<StrictConstraint>& constraints);

}  // namespace arrgr
