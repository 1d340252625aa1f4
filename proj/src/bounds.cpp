#include "slotdesign/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "slotdesign/ambiguity.hpp"
#include "slotdesign/piecewise.hpp"

namespace slotdesign {

GroupBounds group_bounds(const Group& group, const ModeSet& modes, const CostParams& costs) {
  if (group.empty()) throw Error(ErrorKind::InvalidArgument, "group_bounds: empty group");
  GroupBounds gb;
  gb.m_min = gb.m_max = modes[group.front()].mean;
  for (int l : group) {
    gb.m_min = std::min(gb.m_min, modes[l].mean);
    gb.m_max = std::max(gb.m_max, modes[l].mean);
    gb.sigma_max = std::max(gb.sigma_max, modes[l].std_dev);
  }
  const double q = costs.overtime_rate, b = costs.idle_rate;
  gb.upper = std::max(b, q) * (gb.sigma_max + (gb.m_max - gb.m_min) / 2.0);

  const TVBall ball{conditional_probs(group, modes), costs.tv_radius};
  auto reachable_mass = [&](double target) {
    std::vector<double> indicator;
    for (int l : group) indicator.push_back(modes[l].mean == target ? 1.0 : 0.0);
    const auto p = worst_case_probs(ball, indicator);
    double mass = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) mass += p[i] * indicator[i];
    return mass;
  };
  gb.p_bar_min = reachable_mass(gb.m_min);
  gb.p_bar_max = reachable_mass(gb.m_max);

  const double denom = b * gb.p_bar_min + q * gb.p_bar_max;
  if (denom > 0.0 && gb.m_max > gb.m_min)
    gb.lower = b * gb.p_bar_min * q * gb.p_bar_max / denom * (gb.m_max - gb.m_min);
  return gb;
}

double lower_bound(const Group& group, const ModeSet& modes, const CostParams& costs) {
  return group_bounds(group, modes, costs).lower;
}

double upper_bound(const Group& group, const ModeSet& modes, const CostParams& costs) {
  return group_bounds(group, modes, costs).upper;
}

BoundaryCheck boundary_conditions(const Group& group, const ModeSet& modes, const CostParams& costs) {
  const double q = costs.overtime_rate, b = costs.idle_rate, T = costs.horizon;
  const auto p = conditional_probs(group, modes);
  BoundaryCheck out;

  out.zero_rhs = 2.0 * q / (b + q);
  for (std::size_t i = 0; i < group.size(); ++i) {
    const auto& st = modes[group[i]];
    const double cv = st.std_dev / st.mean;
    out.zero_lhs += p[i] * (1.0 - st.semivariance) * cv * cv;
  }
  if (out.zero_lhs >= out.zero_rhs) {
    out.outcome = Boundary::ForcedZero;
    return out;
  }

  out.horizon_lhs = 2.0 * b / (b + q);
  out.horizon_defined = true;
  for (std::size_t i = 0; i < group.size(); ++i) {
    const PiecewiseWorstCase pw(modes[group[i]], costs);
    if (T <= pw.raw_breakpoints()[3]) {
      out.horizon_defined = false;
      std::ostringstream os;
      os << "horizon condition undefined: T=" << T << " does not exceed the last breakpoint "
         << pw.raw_breakpoints()[3] << " of mode " << group[i] + 1;
      out.diagnostic = os.str();
      break;
    }
    const double m = pw.stats().mean, beta = pw.beta();
    const double gap = T - m;
    const double s_term = beta * (beta + pw.w1() / (gap * gap) - 2.0 * pw.w2() / (m * gap));
    const double root = std::sqrt(s_term);
    const double h = beta - root + beta / root * (pw.w1() / (gap * gap) - pw.w2() / (m * gap));
    out.horizon_rhs += p[i] * h;
  }
  // With no idle cost every Π is nonincreasing, so T is optimal whatever the breakpoints.
  if (b == 0.0 || (out.horizon_defined && out.horizon_lhs <= out.horizon_rhs))
    out.outcome = Boundary::ForcedHorizon;
  return out;
}

}  // namespace slotdesign
