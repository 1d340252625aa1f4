#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "slotdesign/ambiguity.hpp"
#include "slotdesign/bounds.hpp"
#include "slotdesign/domain.hpp"

namespace slotdesign {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

struct GroupSolution {
  double duration = 0.0;
  double worst_cost = 0.0;
  int interval_id = 0;  ///< index into merged_intervals; -1 when a boundary shortcut fired
  GroupBounds bounds;
};

struct Solution {
  Partition partition;
  std::vector<GroupSolution> groups;  ///< aligned with partition groups
  double objective = 0.0;
};

struct SolverOptions {
  double golden_tol_frac = 1e-6;  ///< golden-section abscissa tolerance as a fraction of T
  unsigned threads = 0;           ///< 0 means default_thread_count()
};

/// SLOTDESIGN_THREADS if set and positive, else hardware concurrency.
unsigned default_thread_count();

std::vector<Interval> merged_intervals(const GroupModel& model);
std::vector<Interval> merged_intervals(const Group& group, const ModeSet& modes, const CostParams& costs);

/// Minimizes the nominal mixture by derivative bisection on each merged interval.
GroupSolution optimize_group_rho0(const Group& group, const ModeSet& modes, const CostParams& costs);
/// Minimizes the ball worst case by golden-section search on each merged interval.
/// Singletons and a zero radius defer to optimize_group_rho0.
GroupSolution optimize_group(const Group& group, const ModeSet& modes, const CostParams& costs,
                             const SolverOptions& options = {});
/// Dispatches on the radius.
GroupSolution solve_group(const Group& group, const ModeSet& modes, const CostParams& costs,
                          const SolverOptions& options = {});

/// c·|P| + mean of the group worst costs.
double partition_objective(double activation_cost, std::span<const GroupSolution> groups);

/// Calls `visit` with each restricted-growth string of length L in lexicographic order.
/// Throws TooLarge for L > 15.
void enumerate_partitions(int L, const std::function<void(std::span<const int>)>& visit);
std::vector<Partition> enumerate_partitions(int L);
std::size_t bell_number(int L);

/// Solves every group of a fixed partition.
Solution solve_partition(const Partition& partition, const ModeSet& modes, const CostParams& costs,
                         const SolverOptions& options = {});
/// Exhaustive search over all set partitions; ties go to the lexicographically smallest RGS.
Solution solve_exact(const ModeSet& modes, const CostParams& costs, const SolverOptions& options = {});

constexpr int kMaxEnumerationModes = 15;

}  // namespace slotdesign
