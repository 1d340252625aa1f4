#pragma once

#include <array>
#include <utility>
#include <vector>

#include "slotdesign/domain.hpp"

namespace slotdesign {

struct Atom {
  double support = 0.0;
  double prob = 0.0;
};

/// Finite distribution on [0, inf).
struct DiscreteDistribution {
  std::vector<Atom> atoms;

  double total_prob() const;
  double mean() const;
  double variance() const;
  /// Normalized semivariance about the distribution's own mean.
  double semivariance() const;
  double expected_cost(double t, double overtime_rate, double idle_rate) const;
};

/// Worst-case expected idle+overtime cost of a slot of length t over all
/// distributions with the given mean, variance and semivariance. Five pieces
/// separated by four breakpoints.
class PiecewiseWorstCase {
 public:
  /// Throws InfeasibleStats when the stats are not realizable.
  PiecewiseWorstCase(const ModeStats& stats, const CostParams& costs);

  const ModeStats& stats() const noexcept { return stats_; }
  double overtime_rate() const noexcept { return q_; }
  double idle_rate() const noexcept { return b_; }
  double horizon() const noexcept { return horizon_; }
  double w1() const noexcept { return w1_; }  ///< upper semi second moment
  double w2() const noexcept { return w2_; }  ///< lower semi second moment
  double beta() const noexcept { return beta_; }
  /// Breakpoints before clamping, strictly positive and nondecreasing.
  const std::array<double, 4>& raw_breakpoints() const noexcept { return raw_; }
  /// Breakpoints clamped to [0, T]; a piece starting at or past T is empty.
  std::array<double, 4> breakpoints() const;

  /// Piece (1..5) whose half-open interval [start, end) contains t.
  int piece_at(double t) const;
  /// Piece formula k evaluated at t, without range checks.
  double piece_value(int k, double t) const;
  double piece_slope(int k, double t) const;

  /// Π(t) for t in [0, T]; throws OutOfRange otherwise.
  double value(double t) const;
  /// One-sided derivatives (left, right). At t=0 and t=T both equal the inner side.
  std::pair<double, double> slopes(double t) const;
  /// A two- or three-point distribution attaining value(t).
  DiscreteDistribution witness(double t) const;

 private:
  void check_range(double t) const;

  ModeStats stats_;
  double q_, b_, horizon_;
  double w1_, w2_, beta_;
  std::array<double, 4> raw_{};
};

inline PiecewiseWorstCase build(const ModeStats& stats, const CostParams& costs) {
  return PiecewiseWorstCase(stats, costs);
}
inline double eval_pi(const PiecewiseWorstCase& pw, double t) { return pw.value(t); }
inline std::pair<double, double> eval_pi_derivative(const PiecewiseWorstCase& pw, double t) {
  return pw.slopes(t);
}
inline DiscreteDistribution witness_distribution(const PiecewiseWorstCase& pw, double t) {
  return pw.witness(t);
}

}  // namespace slotdesign
