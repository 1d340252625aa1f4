#include "slotdesign/data.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace slotdesign {

void GenConfig::validate() const {
  if (modes < 1) throw Error(ErrorKind::InvalidArgument, "GenConfig: need at least one mode");
  if (!(logmean_range.first <= logmean_range.second) || !(logstd_range.first <= logstd_range.second))
    throw Error(ErrorKind::InvalidArgument, "GenConfig: ranges must be ordered");
  if (!(logstd_range.first > 0.0)) throw Error(ErrorKind::InvalidArgument, "GenConfig: log std must be positive");
  if (n_train < 1 || n_test < 1) throw Error(ErrorKind::InvalidArgument, "GenConfig: counts must be >= 1");
  if (min_samples_per_mode < 0 || static_cast<long>(min_samples_per_mode) * modes > std::min(n_train, n_test))
    throw Error(ErrorKind::InvalidArgument, "GenConfig: per-mode floor exceeds the sample budget");
  if (!(clip_max > 0.0)) throw Error(ErrorKind::InvalidArgument, "GenConfig: clip_max must be positive");
}

InstanceLaw draw_law(const GenConfig& config) {
  config.validate();
  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> mu(config.logmean_range.first, config.logmean_range.second);
  std::uniform_real_distribution<double> sd(config.logstd_range.first, config.logstd_range.second);
  std::exponential_distribution<double> expo(1.0);
  InstanceLaw law;
  for (int l = 0; l < config.modes; ++l) law.laws.push_back({mu(rng), sd(rng)});
  // Normalized unit exponentials are uniform on the simplex.
  for (int l = 0; l < config.modes; ++l) law.probs.push_back(expo(rng));
  const double total = std::accumulate(law.probs.begin(), law.probs.end(), 0.0);
  for (double& p : law.probs) p /= total;
  return law;
}

std::vector<int> allocate_counts(int total, const std::vector<double>& probs, int floor) {
  const std::size_t n = probs.size();
  std::vector<int> counts(n);
  std::vector<double> remainder(n);
  int used = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double target = total * probs[i];
    counts[i] = static_cast<int>(std::floor(target));
    remainder[i] = target - counts[i];
    used += counts[i];
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return remainder[a] > remainder[b]; });
  for (std::size_t k = 0; used < total; k = (k + 1) % n, ++used) ++counts[order[k]];

  // Raise entries below the floor, taking from the largest counts.
  for (std::size_t i = 0; i < n; ++i) {
    while (counts[i] < floor) {
      auto donor = std::max_element(counts.begin(), counts.end()) - counts.begin();
      if (counts[donor] <= floor) throw Error(ErrorKind::InvalidArgument, "allocate_counts: floor infeasible");
      --counts[donor];
      ++counts[i];
    }
  }
  return counts;
}

namespace {

std::vector<std::vector<double>> draw_samples(const InstanceLaw& law, const std::vector<int>& counts,
                                              double clip_max, std::mt19937_64& rng) {
  std::vector<std::vector<double>> out(law.laws.size());
  for (std::size_t l = 0; l < law.laws.size(); ++l) {
    std::lognormal_distribution<double> dist(law.laws[l].log_mean, law.laws[l].log_std);
    out[l].reserve(counts[l]);
    for (int k = 0; k < counts[l]; ++k) out[l].push_back(std::clamp(dist(rng), 0.0, clip_max));
  }
  return out;
}

}  // namespace

SampleSet sample(const InstanceLaw& law, const InstanceLaw& test_law, const GenConfig& config) {
  config.validate();
  if (law.laws.size() != static_cast<std::size_t>(config.modes) || test_law.laws.size() != law.laws.size())
    throw Error(ErrorKind::InvalidArgument, "sample: law size does not match the config");
  // Separate streams so the training draw does not depend on the test law.
  std::mt19937_64 train_rng(config.seed ^ 0x9e3779b97f4a7c15ULL);
  std::mt19937_64 test_rng(config.seed ^ 0xc2b2ae3d27d4eb4fULL);
  SampleSet s;
  s.truth = law;
  s.nominal_probs = law.probs;
  const auto train_counts = allocate_counts(config.n_train, law.probs, config.min_samples_per_mode);
  const auto test_counts = allocate_counts(config.n_test, law.probs, config.min_samples_per_mode);
  s.train = draw_samples(law, train_counts, config.clip_max, train_rng);
  s.test = draw_samples(test_law, test_counts, config.clip_max, test_rng);
  for (int c : train_counts) s.realized_train_share.push_back(static_cast<double>(c) / config.n_train);
  return s;
}

SampleSet sample(const InstanceLaw& law, const GenConfig& config) { return sample(law, law, config); }

SampleSet generate(const GenConfig& config) { return sample(draw_law(config), config); }

InstanceLaw perturb(const InstanceLaw& law, double eps) {
  if (!(eps >= 0.0)) throw Error(ErrorKind::InvalidArgument, "perturb: eps must be >= 0");
  InstanceLaw out = law;
  for (auto& l : out.laws) {
    l.log_mean *= 1.0 + eps;
    l.log_std *= 1.0 + eps;
  }
  return out;
}

ModeSet estimate_mode_set(const std::vector<std::vector<double>>& per_mode, const std::vector<double>& probs) {
  if (per_mode.size() != probs.size()) throw Error(ErrorKind::InvalidArgument, "estimate_mode_set: size mismatch");
  std::vector<ModeStats> modes;
  for (std::size_t l = 0; l < per_mode.size(); ++l) {
    auto st = estimate_moments(per_mode[l], probs[l]);
    st.name = "type-" + std::to_string(l + 1);
    modes.push_back(std::move(st));
  }
  return ModeSet(std::move(modes));
}

ModeSet estimate_mode_set(const SampleSet& samples) {
  return estimate_mode_set(samples.train, samples.nominal_probs);
}

ModeSet clinic_modes() {
  return ModeSet({
      {48.70, 31.15, 0.59, 0.1383, "30-min"},
      {73.24, 39.65, 0.47, 0.1518, "60-min"},
      {133.88, 42.98, 0.33, 0.1369, "120-min"},
      {182.87, 47.20, 0.07, 0.2774, "180-min"},
      {223.34, 57.07, 0.07, 0.1117, "240-min"},
      {258.78, 65.27, -0.005, 0.0961, "300-min"},
      {336.29, 66.66, -0.25, 0.0878, "360-min"},
  });
}

}  // namespace slotdesign
