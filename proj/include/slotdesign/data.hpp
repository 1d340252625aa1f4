#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "slotdesign/domain.hpp"

namespace slotdesign {

/// Log-scale parameters of one mode's duration law.
struct LogNormalLaw {
  double log_mean = 0.0;
  double log_std = 1.0;
};

struct GenConfig {
  int modes = 5;
  std::pair<double, double> logmean_range{4.605170185988092, 6.396929655216146};  // ln 100, ln 600
  std::pair<double, double> logstd_range{0.5, 1.5};
  int n_train = 100;
  int n_test = 1000;
  double clip_max = 720.0;
  int min_samples_per_mode = 1;
  std::uint64_t seed = 1;

  void validate() const;
};

/// Ground truth of a synthetic instance.
struct InstanceLaw {
  std::vector<LogNormalLaw> laws;
  std::vector<double> probs;
};

struct SampleSet {
  std::vector<std::vector<double>> train;  ///< per mode
  std::vector<std::vector<double>> test;   ///< per mode
  std::vector<double> nominal_probs;       ///< the drawn probability vector
  std::vector<double> realized_train_share;
  InstanceLaw truth;

  std::size_t mode_count() const noexcept { return train.size(); }
};

/// Draws per-mode log parameters and a uniform point on the simplex.
InstanceLaw draw_law(const GenConfig& config);

/// Largest-remainder split of `total` by `probs`, with at least `floor` per entry.
std::vector<int> allocate_counts(int total, const std::vector<double>& probs, int floor);

/// Samples train and test sets from a law, clipping to [0, clip_max].
SampleSet sample(const InstanceLaw& law, const GenConfig& config);
/// Test samples come from `test_law` (e.g. a perturbed copy) while train uses `law`.
SampleSet sample(const InstanceLaw& law, const InstanceLaw& test_law, const GenConfig& config);
/// draw_law followed by sample; deterministic per seed.
SampleSet generate(const GenConfig& config);

/// Scales every log-mean and log-std by (1+eps).
InstanceLaw perturb(const InstanceLaw& law, double eps);

/// Moments estimated from the training samples, with the drawn nominal probabilities.
ModeSet estimate_mode_set(const SampleSet& samples);
ModeSet estimate_mode_set(const std::vector<std::vector<double>>& per_mode, const std::vector<double>& probs);

/// Summary statistics of seven clinic patient types (30 to 360 minute bookings).
ModeSet clinic_modes();

}  // namespace slotdesign
