#include "slotdesign/domain.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace slotdesign {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InfeasibleStats: return "infeasible_stats";
    case ErrorKind::DegenerateSample: return "degenerate_sample";
    case ErrorKind::InvalidArgument: return "invalid_argument";
    case ErrorKind::OutOfRange: return "out_of_range";
    case ErrorKind::UndefinedWitness: return "undefined_witness";
    case ErrorKind::TooLarge: return "too_large";
    case ErrorKind::InsufficientSamples: return "insufficient_samples";
    case ErrorKind::MissingSamples: return "missing_samples";
    case ErrorKind::CapacityTooSmall: return "capacity_too_small";
    case ErrorKind::LpInfeasible: return "lp_infeasible";
    case ErrorKind::LpUnbounded: return "lp_unbounded";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

FeasibilityReport check_feasibility(const ModeStats& stats) {
  FeasibilityReport r;
  const double m = stats.mean, sd = stats.std_dev, s = stats.semivariance;
  if (!(m > 0.0)) {
    r.ok = false;
    r.violated = "mean must be > 0";
    r.slack = m;
    return r;
  }
  if (!(sd > 0.0)) {
    r.ok = false;
    r.violated = "std must be > 0";
    r.slack = sd;
    return r;
  }
  r.semivariance_lower = (sd * sd - m * m) / (sd * sd + m * m);
  if (!(s < 1.0)) {
    r.ok = false;
    r.violated = "semivariance must be < 1";
    r.slack = 1.0 - s;
  } else if (!(s >= r.semivariance_lower)) {
    r.ok = false;
    r.violated = "semivariance must be >= (std^2-mean^2)/(std^2+mean^2)";
    r.slack = s - r.semivariance_lower;
  } else {
    r.slack = std::min(1.0 - s, s - r.semivariance_lower);
  }
  return r;
}

void require_feasible(const ModeStats& stats) {
  const auto r = check_feasibility(stats);
  if (!r.ok) {
    std::ostringstream os;
    os << "mode";
    if (!stats.name.empty()) os << " '" << stats.name << "'";
    os << " (mean=" << stats.mean << ", std=" << stats.std_dev
       << ", semivariance=" << stats.semivariance << "): " << r.violated
       << " (slack " << r.slack << ")";
    throw Error(ErrorKind::InfeasibleStats, os.str());
  }
}

ModeStats estimate_moments(std::span<const double> samples, double nominal_prob) {
  if (samples.empty()) throw Error(ErrorKind::InvalidArgument, "estimate_moments: empty sample");
  for (double x : samples)
    if (!(x >= 0.0)) throw Error(ErrorKind::InvalidArgument, "estimate_moments: negative or NaN sample");

  const double n = static_cast<double>(samples.size());
  const double m = std::accumulate(samples.begin(), samples.end(), 0.0) / n;
  double upper = 0.0, lower = 0.0;
  for (double x : samples) {
    const double d = x - m;
    (d > 0.0 ? upper : lower) += d * d;
  }
  const double var = (upper + lower) / n;
  if (!(var > 0.0)) throw Error(ErrorKind::DegenerateSample, "estimate_moments: zero variance");

  ModeStats out;
  out.mean = m;
  out.std_dev = std::sqrt(var);
  out.semivariance = (upper - lower) / (n * var);
  out.nominal_prob = nominal_prob;
  return out;
}

ModeSet::ModeSet(std::vector<ModeStats> modes) : modes_(std::move(modes)) {
  if (modes_.empty()) throw Error(ErrorKind::InvalidArgument, "mode set must be nonempty");
  double total = 0.0;
  for (const auto& m : modes_) {
    if (!(m.nominal_prob > 0.0 && m.nominal_prob <= 1.0))
      throw Error(ErrorKind::InvalidArgument, "nominal probability must lie in (0, 1]");
    total += m.nominal_prob;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    std::ostringstream os;
    os << "nominal probabilities sum to " << total << ", expected 1";
    throw Error(ErrorKind::InvalidArgument, os.str());
  }
  for (auto& m : modes_) m.nominal_prob /= total;
}

void CostParams::validate() const {
  if (!(overtime_rate >= 0.0) || !(idle_rate >= 0.0))
    throw Error(ErrorKind::InvalidArgument, "cost rates must be nonnegative");
  if (!(overtime_rate + idle_rate > 0.0))
    throw Error(ErrorKind::InvalidArgument, "overtime_rate + idle_rate must be positive");
  if (!(activation_cost >= 0.0))
    throw Error(ErrorKind::InvalidArgument, "activation cost must be nonnegative");
  if (!(horizon > 0.0)) throw Error(ErrorKind::InvalidArgument, "horizon must be positive");
  if (!(tv_radius >= 0.0 && tv_radius <= 2.0))
    throw Error(ErrorKind::InvalidArgument, "tv radius must lie in [0, 2]");
}

Partition::Partition(std::vector<Group> groups, std::size_t mode_count)
    : groups_(std::move(groups)), mode_count_(mode_count) {
  std::vector<int> seen(mode_count, 0);
  for (auto& g : groups_) {
    if (g.empty()) throw Error(ErrorKind::InvalidArgument, "partition has an empty group");
    std::sort(g.begin(), g.end());
    for (int l : g) {
      if (l < 0 || static_cast<std::size_t>(l) >= mode_count)
        throw Error(ErrorKind::InvalidArgument, "partition index out of range");
      if (seen[l]++) throw Error(ErrorKind::InvalidArgument, "partition groups overlap");
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw Error(ErrorKind::InvalidArgument, "partition does not cover every mode");
  std::sort(groups_.begin(), groups_.end(),
            [](const Group& a, const Group& b) { return a.front() < b.front(); });
}

Partition Partition::from_labels(std::span<const int> labels) {
  std::map<int, Group> by_label;
  for (std::size_t l = 0; l < labels.size(); ++l) by_label[labels[l]].push_back(static_cast<int>(l));
  std::vector<Group> groups;
  for (auto& [_, g] : by_label) groups.push_back(std::move(g));
  return Partition(std::move(groups), labels.size());
}

std::vector<int> Partition::rgs() const {
  std::vector<int> out(mode_count_, -1);
  // groups_ is sorted by smallest member, which is exactly first-appearance order
  for (std::size_t g = 0; g < groups_.size(); ++g)
    for (int l : groups_[g]) out[l] = static_cast<int>(g);
  return out;
}

int Partition::group_of(int l) const {
  for (std::size_t g = 0; g < groups_.size(); ++g)
    if (std::binary_search(groups_[g].begin(), groups_[g].end(), l)) return static_cast<int>(g);
  throw Error(ErrorKind::OutOfRange, "mode not in partition");
}

std::vector<double> conditional_probs(const Group& group, const ModeSet& modes) {
  if (group.empty()) throw Error(ErrorKind::InvalidArgument, "conditional_probs: empty group");
  double total = 0.0;
  for (int l : group) total += modes[l].nominal_prob;
  std::vector<double> out;
  out.reserve(group.size());
  for (int l : group) out.push_back(modes[l].nominal_prob / total);
  return out;
}

}  // namespace slotdesign
