#include "slotdesign/ambiguity.hpp"

#include <algorithm>
#include <numeric>

namespace slotdesign {

std::vector<double> worst_case_probs(const TVBall& ball, std::span<const double> values) {
  const std::size_t n = ball.center.size();
  if (values.size() != n) throw Error(ErrorKind::InvalidArgument, "worst_case_probs: size mismatch");
  std::vector<double> p = ball.center;
  double budget = std::min(ball.radius / 2.0, 1.0);
  if (budget <= 0.0 || n < 2) return p;

  std::vector<std::size_t> drain(n), fill(n);
  std::iota(drain.begin(), drain.end(), 0);
  std::iota(fill.begin(), fill.end(), 0);
  std::stable_sort(drain.begin(), drain.end(), [&](auto a, auto b) { return values[a] < values[b]; });
  std::stable_sort(fill.begin(), fill.end(), [&](auto a, auto b) { return values[a] > values[b]; });

  std::size_t i = 0, j = 0;
  while (budget > 0.0 && i < n && j < n) {
    const std::size_t from = drain[i], to = fill[j];
    if (!(values[from] < values[to])) break;
    const double room = 1.0 - p[to];
    if (p[from] <= 0.0) { ++i; continue; }
    if (room <= 0.0) { ++j; continue; }
    const double moved = std::min({budget, p[from], room});
    p[from] -= moved;
    p[to] += moved;
    budget -= moved;
  }
  return p;
}

GroupModel::GroupModel(const Group& group, const ModeSet& modes, const CostParams& costs)
    : members_(group),
      center_(conditional_probs(group, modes)),
      radius_(costs.tv_radius),
      horizon_(costs.horizon) {
  curves_.reserve(group.size());
  for (int l : group) curves_.emplace_back(modes[l], costs);
}

std::vector<double> GroupModel::member_values(double t) const {
  std::vector<double> v;
  v.reserve(curves_.size());
  for (const auto& c : curves_) v.push_back(c.value(t));
  return v;
}

double GroupModel::nominal(double t) const {
  double s = 0.0;
  for (std::size_t i = 0; i < curves_.size(); ++i) s += center_[i] * curves_[i].value(t);
  return s;
}

double GroupModel::omega(double t) const {
  const auto v = member_values(t);
  if (v.size() == 1) return v.front();
  const auto p = worst_case_probs(TVBall{center_, radius_}, v);
  return std::inner_product(p.begin(), p.end(), v.begin(), 0.0);
}

double omega(const Group& group, const ModeSet& modes, const CostParams& costs, double t) {
  return GroupModel(group, modes, costs).omega(t);
}

}  // namespace slotdesign
