#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "slotdesign/solver.hpp"

namespace slotdesign {

struct FeatureSpec {
  bool mean = true;
  bool std_dev = false;
  bool semivariance = true;
  bool standardize = true;

  /// Parses a comma list over {m, sigma|std, s}, e.g. "m,s".
  static FeatureSpec parse(std::string_view list, bool standardize = true);
  std::string to_string() const;
  std::size_t dimension() const { return mean + std_dev + semivariance; }
};

enum class ClusterMethod { KMeans, KMedoids };

ClusterMethod parse_method(std::string_view name);
std::string_view to_string(ClusterMethod method);
/// (m, s) for k-means, (m, σ, s) for k-medoids.
FeatureSpec default_features(ClusterMethod method);

struct ClusterConfig {
  int k = 1;
  int restarts = 10;
  int max_iters = 100;
  std::uint64_t seed = 1;
};

using FeatureMatrix = std::vector<std::vector<double>>;  ///< one row per mode

FeatureMatrix build_features(const ModeSet& modes, const FeatureSpec& spec);

struct ClusterResult {
  Partition partition;
  double objective = 0.0;      ///< WCSS (k-means) or total dissimilarity (k-medoids)
  std::vector<double> trace;   ///< objective after each iteration of the winning restart
};

ClusterResult kmeans(const FeatureMatrix& features, const ClusterConfig& config);
ClusterResult kmedoids(const FeatureMatrix& features, const ClusterConfig& config);
ClusterResult cluster(ClusterMethod method, const FeatureMatrix& features, const ClusterConfig& config);

struct CrossValidation {
  int best_k = 1;
  std::vector<int> ks;
  std::vector<double> mean_cost;  ///< aligned with ks
};

/// Fold split over samples within each mode; picks the K with the lowest mean
/// held-out cost, ties to the smaller K.
CrossValidation crossvalidate_k(const std::vector<std::vector<double>>& samples_per_mode,
                                const std::vector<double>& nominal_probs, const CostParams& costs,
                                const FeatureSpec& spec, ClusterMethod method, int folds,
                                const std::vector<int>& k_range, std::uint64_t seed,
                                const SolverOptions& options = {});

/// Clusters the modes into config.k groups, then optimizes each group's duration.
Solution solve_heuristic(const ModeSet& modes, const CostParams& costs, const FeatureSpec& spec,
                         ClusterMethod method, const ClusterConfig& config, const SolverOptions& options = {});

}  // namespace slotdesign
