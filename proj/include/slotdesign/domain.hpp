#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "slotdesign/error.hpp"

namespace slotdesign {

/// Moment description of one patient type: mean, standard deviation,
/// normalized semivariance and nominal probability.
struct ModeStats {
  double mean = 0.0;
  double std_dev = 0.0;
  double semivariance = 0.0;  ///< (upper - lower semi second moment) / variance
  double nominal_prob = 1.0;
  std::string name;
};

struct FeasibilityReport {
  bool ok = true;
  double semivariance_lower = 0.0;  ///< (σ²-m²)/(σ²+m²)
  std::string violated;             ///< empty when ok
  double slack = 0.0;               ///< signed distance to the violated bound, negative when violated
};

/// Realizability check for a (mean, std, semivariance) triple.
FeasibilityReport check_feasibility(const ModeStats& stats);

/// Throws ErrorKind::InfeasibleStats with the report text when infeasible.
void require_feasible(const ModeStats& stats);

/// Population moments of a sample; throws DegenerateSample when the spread is zero.
ModeStats estimate_moments(std::span<const double> samples, double nominal_prob);

class ModeSet {
 public:
  ModeSet() = default;
  /// Renormalizes probabilities within 1e-9 of summing to one; rejects otherwise.
  explicit ModeSet(std::vector<ModeStats> modes);

  std::size_t size() const noexcept { return modes_.size(); }
  const ModeStats& operator[](std::size_t i) const { return modes_[i]; }
  std::span<const ModeStats> modes() const noexcept { return modes_; }

 private:
  std::vector<ModeStats> modes_;
};

struct CostParams {
  double overtime_rate = 30.0;    ///< q
  double idle_rate = 20.0;        ///< b
  double activation_cost = 80.0;  ///< per activated group
  double horizon = 720.0;         ///< T
  double tv_radius = 0.0;         ///< ρ

  void validate() const;
};

using Group = std::vector<int>;  ///< 0-based mode indices, ascending

/// Set partition of 0..L-1. Groups are kept sorted by their smallest member.
class Partition {
 public:
  Partition() = default;
  /// Validates coverage and disjointness over 0..mode_count-1.
  Partition(std::vector<Group> groups, std::size_t mode_count);
  /// Builds from a label per mode; labels need not be contiguous.
  static Partition from_labels(std::span<const int> labels);

  std::size_t size() const noexcept { return groups_.size(); }
  const Group& operator[](std::size_t g) const { return groups_[g]; }
  std::span<const Group> groups() const noexcept { return groups_; }
  std::size_t mode_count() const noexcept { return mode_count_; }
  /// Restricted-growth string: label of each mode in order of first appearance.
  std::vector<int> rgs() const;
  /// Index of the group containing mode l.
  int group_of(int l) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<Group> groups_;
  std::size_t mode_count_ = 0;
};

/// p̂ renormalized within the group, in group order.
std::vector<double> conditional_probs(const Group& group, const ModeSet& modes);

}  // namespace slotdesign
