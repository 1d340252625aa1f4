#include "slotdesign/eval.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace slotdesign {

EvalReport empirical_cost(const Partition& partition, std::span<const double> durations,
                          const std::vector<std::vector<double>>& samples_per_mode,
                          std::span<const double> nominal_probs, const CostParams& costs) {
  if (durations.size() != partition.size())
    throw Error(ErrorKind::InvalidArgument, "empirical_cost: one duration per group required");
  if (samples_per_mode.size() != partition.mode_count() || nominal_probs.size() != partition.mode_count())
    throw Error(ErrorKind::InvalidArgument, "empirical_cost: per-mode inputs do not match the partition");

  const double q = costs.overtime_rate, b = costs.idle_rate;
  EvalReport rep;
  const double k = static_cast<double>(partition.size());
  rep.activation = costs.activation_cost * k;
  for (std::size_t g = 0; g < partition.size(); ++g) {
    const auto& members = partition[g];
    const double t = durations[g];
    double mass = 0.0;
    for (int l : members) mass += nominal_probs[l];
    GroupEval ge;
    ge.duration = t;
    for (int l : members) {
      const auto& xs = samples_per_mode[l];
      if (xs.empty()) {
        std::ostringstream os;
        os << "empirical_cost: mode " << l + 1 << " has no samples";
        throw Error(ErrorKind::MissingSamples, os.str());
      }
      double idle = 0.0, over = 0.0;
      for (double x : xs) {
        idle += std::max(t - x, 0.0);
        over += std::max(x - t, 0.0);
      }
      const double n = static_cast<double>(xs.size());
      const double w = nominal_probs[l] / mass;
      ge.idle_minutes += w * idle / n;
      ge.overtime_minutes += w * over / n;
    }
    ge.mean_cost = q * ge.overtime_minutes + b * ge.idle_minutes;
    rep.groups.push_back(ge);
    rep.idle_minutes_mean += ge.idle_minutes / k;
    rep.overtime_minutes_mean += ge.overtime_minutes / k;
  }
  double sum = 0.0;
  for (const auto& ge : rep.groups) sum += ge.mean_cost;
  rep.total_cost = rep.activation + sum / k;
  return rep;
}

EvalReport empirical_cost(const Solution& solution, const std::vector<std::vector<double>>& samples_per_mode,
                          std::span<const double> nominal_probs, const CostParams& costs) {
  std::vector<double> durations;
  for (const auto& g : solution.groups) durations.push_back(g.duration);
  return empirical_cost(solution.partition, durations, samples_per_mode, nominal_probs, costs);
}

double TemplateAllocation::used_minutes() const {
  double s = 0.0;
  for (const auto& l : lines) s += l.duration * l.slots;
  return s;
}

TemplateAllocation allocate_slots(double capacity_minutes, std::span<const double> durations,
                                  std::span<const double> shares) {
  if (durations.size() != shares.size() || durations.empty())
    throw Error(ErrorKind::InvalidArgument, "allocate_slots: one share per duration required");
  double share_sum = 0.0;
  for (std::size_t g = 0; g < durations.size(); ++g) {
    if (!(durations[g] > 0.0)) throw Error(ErrorKind::InvalidArgument, "allocate_slots: durations must be positive");
    if (!(shares[g] >= 0.0)) throw Error(ErrorKind::InvalidArgument, "allocate_slots: shares must be nonnegative");
    share_sum += shares[g];
  }
  if (std::abs(share_sum - 1.0) > 1e-9) throw Error(ErrorKind::InvalidArgument, "allocate_slots: shares must sum to 1");

  TemplateAllocation out;
  out.capacity_minutes = capacity_minutes;
  for (std::size_t g = 0; g < durations.size(); ++g)
    out.lines.push_back({durations[g], static_cast<int>(std::floor(shares[g] * capacity_minutes / durations[g] + 1e-9))});

  double left = capacity_minutes - out.used_minutes();
  while (true) {
    std::size_t best = durations.size();
    for (std::size_t g = 0; g < durations.size(); ++g)
      if (durations[g] <= left + 1e-9 && (best == durations.size() || durations[g] < durations[best])) best = g;
    if (best == durations.size()) break;
    ++out.lines[best].slots;
    left -= durations[best];
  }
  for (std::size_t g = 0; g < out.lines.size(); ++g)
    if (out.lines[g].slots == 0) {
      std::ostringstream os;
      os << "allocate_slots: capacity " << capacity_minutes << " leaves group " << g + 1 << " without a slot";
      throw Error(ErrorKind::CapacityTooSmall, os.str());
    }
  return out;
}

OverrideReport count_overrides(const TemplateAllocation& allocation, std::span<const DemandRecord> demand,
                               bool per_day_indicator) {
  OverrideReport rep;
  rep.per_group.assign(allocation.lines.size(), 0);
  for (const auto& d : demand) {
    if (d.group < 0 || static_cast<std::size_t>(d.group) >= allocation.lines.size())
      throw Error(ErrorKind::OutOfRange, "count_overrides: demand names an unknown group");
    const long shortfall = std::max(0, d.count - allocation.lines[d.group].slots);
    const long add = per_day_indicator ? (shortfall > 0 ? 1 : 0) : shortfall;
    rep.per_group[d.group] += add;
    rep.total += add;
  }
  return rep;
}

}  // namespace slotdesign
