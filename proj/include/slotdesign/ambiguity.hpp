#pragma once

#include <span>
#include <vector>

#include "slotdesign/domain.hpp"
#include "slotdesign/piecewise.hpp"

namespace slotdesign {

/// Probability vectors within total-variation distance `radius` of `center`.
struct TVBall {
  std::vector<double> center;
  double radius = 0.0;
};

/// argmax of p·values over the ball. Moves min(radius/2, movable) mass from the
/// cheapest members to the costliest; ties resolved by ascending index.
std::vector<double> worst_case_probs(const TVBall& ball, std::span<const double> values);

/// The members of one group with their closed forms and nominal weights.
class GroupModel {
 public:
  GroupModel(const Group& group, const ModeSet& modes, const CostParams& costs);

  const Group& members() const noexcept { return members_; }
  std::span<const PiecewiseWorstCase> curves() const noexcept { return curves_; }
  std::span<const double> center() const noexcept { return center_; }
  double radius() const noexcept { return radius_; }
  double horizon() const noexcept { return horizon_; }

  /// Π of every member at t.
  std::vector<double> member_values(double t) const;
  /// Nominal mixture Σ p̂ Π(t).
  double nominal(double t) const;
  /// Worst mixture over the ball; a singleton returns its own Π.
  double omega(double t) const;

 private:
  Group members_;
  std::vector<PiecewiseWorstCase> curves_;
  std::vector<double> center_;
  double radius_;
  double horizon_;
};

double omega(const Group& group, const ModeSet& modes, const CostParams& costs, double t);

}  // namespace slotdesign
