#pragma once

#include <span>
#include <vector>

#include "slotdesign/domain.hpp"
#include "slotdesign/piecewise.hpp"

namespace slotdesign {

/// maximize objective·x  s.t.  eq_rows x = eq_rhs,  le_rows x <= le_rhs,  x >= 0.
struct LinearProgram {
  std::vector<double> objective;
  std::vector<std::vector<double>> eq_rows;
  std::vector<double> eq_rhs;
  std::vector<std::vector<double>> le_rows;
  std::vector<double> le_rhs;

  std::size_t num_vars() const noexcept { return objective.size(); }
  void add_eq(std::vector<double> row, double rhs);
  void add_le(std::vector<double> row, double rhs);
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  std::vector<double> x;
  double value = 0.0;
  double max_residual = 0.0;  ///< worst constraint violation of x in the original scaling
  int pivots = 0;
};

/// Dense two-phase simplex with Bland's rule.
LpResult lp_solve(const LinearProgram& lp);

struct OracleConfig {
  double support_max = 2000.0;
  double grid_step = 1.0;
  double moment_band = 1e-3;  ///< relative band on mean, variance and semivariance
};

struct OracleResult {
  double value = 0.0;
  DiscreteDistribution distribution;  ///< atoms with positive weight
};

/// Worst-case expected cost over distributions on a uniform grid whose moments
/// lie within the band. Throws LpInfeasible when the band is too narrow for the grid.
OracleResult worst_case_discrete(const ModeStats& stats, const CostParams& costs, double t,
                                 const OracleConfig& config = {});

/// max values·p over the TV ball, solved as an LP with explicit deviation variables.
double tv_lp(std::span<const double> center, std::span<const double> values, double radius);

}  // namespace slotdesign
