#pragma once

#include <string>

#include "slotdesign/domain.hpp"

namespace slotdesign {

struct GroupBounds {
  double lower = 0.0;
  double upper = 0.0;
  double m_min = 0.0;
  double m_max = 0.0;
  double sigma_max = 0.0;
  double p_bar_min = 0.0;  ///< largest ball mass on the smallest-mean members
  double p_bar_max = 0.0;  ///< largest ball mass on the largest-mean members
};

GroupBounds group_bounds(const Group& group, const ModeSet& modes, const CostParams& costs);
double lower_bound(const Group& group, const ModeSet& modes, const CostParams& costs);
double upper_bound(const Group& group, const ModeSet& modes, const CostParams& costs);

enum class Boundary { None, ForcedZero, ForcedHorizon };

struct BoundaryCheck {
  Boundary outcome = Boundary::None;
  double zero_lhs = 0.0;   ///< Σ p (1-s)(σ/m)²
  double zero_rhs = 0.0;   ///< 2q/(b+q)
  bool horizon_defined = false;
  double horizon_lhs = 0.0;  ///< 2b/(b+q)
  double horizon_rhs = 0.0;  ///< Σ p H(T)
  std::string diagnostic;
};

/// Closed-form tests for an optimum pinned at 0 or at T, using nominal weights.
BoundaryCheck boundary_conditions(const Group& group, const ModeSet& modes, const CostParams& costs);

}  // namespace slotdesign
