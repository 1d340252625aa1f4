#pragma once

#include <span>
#include <string>
#include <vector>

#include "slotdesign/solver.hpp"

namespace slotdesign {

struct GroupEval {
  double duration = 0.0;
  double mean_cost = 0.0;
  double idle_minutes = 0.0;
  double overtime_minutes = 0.0;
};

struct EvalReport {
  double total_cost = 0.0;
  double activation = 0.0;
  double idle_minutes_mean = 0.0;
  double overtime_minutes_mean = 0.0;
  std::vector<GroupEval> groups;
};

/// Out-of-sample cost of a fixed template. Each mode's sample mean is weighted by
/// its conditional nominal probability inside the group.
EvalReport empirical_cost(const Partition& partition, std::span<const double> durations,
                          const std::vector<std::vector<double>>& samples_per_mode,
                          std::span<const double> nominal_probs, const CostParams& costs);
EvalReport empirical_cost(const Solution& solution, const std::vector<std::vector<double>>& samples_per_mode,
                          std::span<const double> nominal_probs, const CostParams& costs);

struct SlotLine {
  double duration = 0.0;
  int slots = 0;
};

struct TemplateAllocation {
  double capacity_minutes = 0.0;
  std::vector<SlotLine> lines;

  double used_minutes() const;
  bool feasible() const { return used_minutes() <= capacity_minutes + 1e-9; }
};

/// Floor of each group's share of capacity in whole slots, then leftover minutes
/// go one slot at a time to the shortest duration that still fits.
TemplateAllocation allocate_slots(double capacity_minutes, std::span<const double> durations,
                                  std::span<const double> shares);

struct DemandRecord {
  std::string date;
  int group = 0;  ///< 0-based
  int count = 0;
};

struct OverrideReport {
  long total = 0;
  std::vector<long> per_group;
};

/// Shortfall units summed over days; with `per_day_indicator` each (day, group)
/// with any shortfall counts once.
OverrideReport count_overrides(const TemplateAllocation& allocation, std::span<const DemandRecord> demand,
                               bool per_day_indicator = false);

}  // namespace slotdesign
