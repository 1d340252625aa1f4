#include "slotdesign/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

namespace slotdesign {

unsigned default_thread_count() {
  if (const char* env = std::getenv("SLOTDESIGN_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<Interval> merged_intervals(const GroupModel& model) {
  const double T = model.horizon();
  std::vector<double> pts{0.0, T};
  for (const auto& c : model.curves())
    for (double tau : c.breakpoints())
      if (tau > 0.0 && tau < T) pts.push_back(tau);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<Interval> out;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) out.push_back({pts[i], pts[i + 1]});
  return out;
}

std::vector<Interval> merged_intervals(const Group& group, const ModeSet& modes, const CostParams& costs) {
  return merged_intervals(GroupModel(group, modes, costs));
}

namespace {

struct Candidate {
  double t;
  double cost;
  int interval;
};

// Lowest cost, then smallest t among costs within 1e-9 relative of the lowest.
Candidate pick(const std::vector<Candidate>& cands) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& c : cands) best = std::min(best, c.cost);
  const double tol = 1e-9 * std::max(1.0, std::abs(best));
  const Candidate* chosen = nullptr;
  for (const auto& c : cands)
    if (c.cost <= best + tol && (!chosen || c.t < chosen->t)) chosen = &c;
  return *chosen;
}

GroupSolution pinned(const GroupModel& model, double t, bool worst_case) {
  GroupSolution gs;
  gs.duration = t;
  gs.worst_cost = worst_case ? model.omega(t) : model.nominal(t);
  gs.interval_id = -1;
  return gs;
}

GroupSolution optimize_rho0(const GroupModel& model, const BoundaryCheck& boundary) {
  if (boundary.outcome == Boundary::ForcedZero) return pinned(model, 0.0, false);
  if (boundary.outcome == Boundary::ForcedHorizon) return pinned(model, model.horizon(), false);

  const auto curves = model.curves();
  const auto p = model.center();
  const auto intervals = merged_intervals(model);
  std::vector<Candidate> cands;
  for (std::size_t j = 0; j < intervals.size(); ++j) {
    const auto [a, b] = intervals[j];
    const double mid = 0.5 * (a + b);
    std::vector<int> piece(curves.size());
    for (std::size_t i = 0; i < curves.size(); ++i) piece[i] = curves[i].piece_at(mid);
    auto slope = [&](double t) {
      double s = 0.0;
      for (std::size_t i = 0; i < curves.size(); ++i) s += p[i] * curves[i].piece_slope(piece[i], t);
      return s;
    };
    const int id = static_cast<int>(j);
    cands.push_back({a, model.nominal(a), id});
    cands.push_back({b, model.nominal(b), id});
    if (slope(a) < 0.0 && slope(b) > 0.0) {
      double lo = a, hi = b;
      for (int it = 0; it < 200 && hi - lo > 1e-13 * std::max(1.0, hi); ++it) {
        const double m = 0.5 * (lo + hi);
        (slope(m) < 0.0 ? lo : hi) = m;
      }
      cands.push_back({hi, model.nominal(hi), id});
    }
  }
  const auto c = pick(cands);
  GroupSolution gs;
  gs.duration = c.t;
  gs.worst_cost = c.cost;
  gs.interval_id = c.interval;
  return gs;
}

GroupSolution optimize_ball(const GroupModel& model, const SolverOptions& options) {
  const double T = model.horizon();
  const auto& front = model.curves().front();
  if (front.overtime_rate() == 0.0) return pinned(model, 0.0, true);
  if (front.idle_rate() == 0.0) return pinned(model, T, true);

  const double tol = options.golden_tol_frac * T;
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  const auto intervals = merged_intervals(model);
  std::vector<Candidate> cands;
  for (std::size_t j = 0; j < intervals.size(); ++j) {
    const int id = static_cast<int>(j);
    double a = intervals[j].lo, b = intervals[j].hi;
    cands.push_back({a, model.omega(a), id});
    cands.push_back({b, model.omega(b), id});
    double x1 = b - ratio * (b - a), x2 = a + ratio * (b - a);
    double f1 = model.omega(x1), f2 = model.omega(x2);
    Candidate best = f1 <= f2 ? Candidate{x1, f1, id} : Candidate{x2, f2, id};
    while (b - a > tol) {
      if (f1 <= f2) {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - ratio * (b - a);
        f1 = model.omega(x1);
        if (f1 <= best.cost) best = {x1, f1, id};
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + ratio * (b - a);
        f2 = model.omega(x2);
        if (f2 < best.cost) best = {x2, f2, id};
      }
    }
    cands.push_back(best);
  }
  const auto c = pick(cands);
  GroupSolution gs;
  gs.duration = c.t;
  gs.worst_cost = c.cost;
  gs.interval_id = c.interval;
  return gs;
}

}  // namespace

GroupSolution optimize_group_rho0(const Group& group, const ModeSet& modes, const CostParams& costs) {
  costs.validate();
  const GroupModel model(group, modes, costs);
  auto gs = optimize_rho0(model, boundary_conditions(group, modes, costs));
  gs.bounds = group_bounds(group, modes, CostParams{costs.overtime_rate, costs.idle_rate,
                                                    costs.activation_cost, costs.horizon, 0.0});
  return gs;
}

GroupSolution optimize_group(const Group& group, const ModeSet& modes, const CostParams& costs,
                             const SolverOptions& options) {
  costs.validate();
  if (group.size() == 1 || costs.tv_radius == 0.0) return optimize_group_rho0(group, modes, costs);
  const GroupModel model(group, modes, costs);
  auto gs = optimize_ball(model, options);
  gs.bounds = group_bounds(group, modes, costs);
  return gs;
}

GroupSolution solve_group(const Group& group, const ModeSet& modes, const CostParams& costs,
                          const SolverOptions& options) {
  return optimize_group(group, modes, costs, options);
}

double partition_objective(double activation_cost, std::span<const GroupSolution> groups) {
  double total = 0.0;
  for (const auto& g : groups) total += g.worst_cost;
  const double k = static_cast<double>(groups.size());
  return activation_cost * k + total / k;
}

std::size_t bell_number(int L) {
  if (L < 0) throw Error(ErrorKind::InvalidArgument, "bell_number: negative size");
  std::vector<std::size_t> row{1};
  for (int i = 0; i < L; ++i) {
    std::vector<std::size_t> next{row.back()};
    for (std::size_t x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

void enumerate_partitions(int L, const std::function<void(std::span<const int>)>& visit) {
  if (L < 1) throw Error(ErrorKind::InvalidArgument, "enumerate_partitions: need at least one mode");
  if (L > kMaxEnumerationModes) {
    std::ostringstream os;
    os << "enumerate_partitions: " << L << " modes exceeds the limit of " << kMaxEnumerationModes;
    throw Error(ErrorKind::TooLarge, os.str());
  }
  std::vector<int> rgs(L, 0), ceiling(L, 1);  // ceiling[i] = max(rgs[0..i-1]) + 1
  ceiling[0] = 0;
  while (true) {
    visit(rgs);
    int i = L - 1;
    while (i > 0 && rgs[i] == ceiling[i]) --i;
    if (i == 0) return;
    ++rgs[i];
    for (int j = i + 1; j < L; ++j) {
      rgs[j] = 0;
      ceiling[j] = std::max(ceiling[j - 1], rgs[j - 1] + 1);
    }
  }
}

std::vector<Partition> enumerate_partitions(int L) {
  std::vector<Partition> out;
  enumerate_partitions(L, [&](std::span<const int> rgs) { out.push_back(Partition::from_labels(rgs)); });
  return out;
}

Solution solve_partition(const Partition& partition, const ModeSet& modes, const CostParams& costs,
                         const SolverOptions& options) {
  Solution sol;
  sol.partition = partition;
  for (const auto& g : partition.groups()) sol.groups.push_back(solve_group(g, modes, costs, options));
  sol.objective = partition_objective(costs.activation_cost, sol.groups);
  return sol;
}

Solution solve_exact(const ModeSet& modes, const CostParams& costs, const SolverOptions& options) {
  costs.validate();
  const int L = static_cast<int>(modes.size());
  if (L > kMaxEnumerationModes) {
    std::ostringstream os;
    os << "solve_exact: " << L << " modes exceeds the limit of " << kMaxEnumerationModes;
    throw Error(ErrorKind::TooLarge, os.str());
  }
  for (const auto& m : modes.modes()) require_feasible(m);

  // Every nonempty subset is a candidate group; solve each once, in parallel.
  const std::size_t n_masks = std::size_t{1} << L;
  std::vector<GroupSolution> table(n_masks);
  std::atomic<std::size_t> next{1};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t mask = next++; mask < n_masks && !failed; mask = next++) {
      Group g;
      for (int l = 0; l < L; ++l)
        if (mask >> l & 1u) g.push_back(l);
      try {
        table[mask] = solve_group(g, modes, costs, options);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
      }
    }
  };
  const unsigned n_threads = std::min<std::size_t>(options.threads ? options.threads : default_thread_count(), n_masks);
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n_threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);

  double best = std::numeric_limits<double>::infinity();
  std::vector<int> best_rgs;
  std::vector<std::size_t> masks;
  enumerate_partitions(L, [&](std::span<const int> rgs) {
    const int k = *std::max_element(rgs.begin(), rgs.end()) + 1;
    masks.assign(k, 0);
    for (int l = 0; l < L; ++l) masks[rgs[l]] |= std::size_t{1} << l;
    double total = 0.0;
    for (std::size_t m : masks) total += table[m].worst_cost;
    const double obj = costs.activation_cost * k + total / k;
    if (best_rgs.empty() || obj < best - 1e-9 * std::max(1.0, std::abs(best))) {
      best = obj;
      best_rgs.assign(rgs.begin(), rgs.end());
    }
  });

  Solution sol;
  sol.partition = Partition::from_labels(best_rgs);
  for (const auto& g : sol.partition.groups()) {
    std::size_t mask = 0;
    for (int l : g) mask |= std::size_t{1} << l;
    sol.groups.push_back(table[mask]);
  }
  sol.objective = partition_objective(costs.activation_cost, sol.groups);
  return sol;
}

}  // namespace slotdesign
