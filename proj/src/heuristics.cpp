#include "slotdesign/heuristics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include "slotdesign/eval.hpp"

namespace slotdesign {

FeatureSpec FeatureSpec::parse(std::string_view list, bool standardize) {
  FeatureSpec spec{false, false, false, standardize};
  std::size_t pos = 0;
  while (pos <= list.size()) {
    const auto comma = std::min(list.find(',', pos), list.size());
    const auto token = list.substr(pos, comma - pos);
    if (token == "m" || token == "mean") spec.mean = true;
    else if (token == "sigma" || token == "std") spec.std_dev = true;
    else if (token == "s" || token == "semivariance") spec.semivariance = true;
    else throw Error(ErrorKind::InvalidArgument, "unknown feature '" + std::string(token) + "'");
    pos = comma + 1;
  }
  if (spec.dimension() == 0) throw Error(ErrorKind::InvalidArgument, "feature set is empty");
  return spec;
}

std::string FeatureSpec::to_string() const {
  std::string out;
  auto add = [&](const char* name) { out += (out.empty() ? "" : ",") + std::string(name); };
  if (mean) add("m");
  if (std_dev) add("sigma");
  if (semivariance) add("s");
  return out;
}

ClusterMethod parse_method(std::string_view name) {
  if (name == "kmeans") return ClusterMethod::KMeans;
  if (name == "kmedoids") return ClusterMethod::KMedoids;
  throw Error(ErrorKind::InvalidArgument, "unknown clustering method '" + std::string(name) + "'");
}

std::string_view to_string(ClusterMethod method) {
  return method == ClusterMethod::KMeans ? "kmeans" : "kmedoids";
}

FeatureSpec default_features(ClusterMethod method) {
  return method == ClusterMethod::KMeans ? FeatureSpec{true, false, true, true}
                                         : FeatureSpec{true, true, true, true};
}

FeatureMatrix build_features(const ModeSet& modes, const FeatureSpec& spec) {
  if (spec.dimension() == 0) throw Error(ErrorKind::InvalidArgument, "feature set is empty");
  FeatureMatrix x;
  for (const auto& m : modes.modes()) {
    std::vector<double> row;
    if (spec.mean) row.push_back(m.mean);
    if (spec.std_dev) row.push_back(m.std_dev);
    if (spec.semivariance) row.push_back(m.semivariance);
    x.push_back(std::move(row));
  }
  if (spec.standardize) {
    const double n = static_cast<double>(x.size());
    for (std::size_t c = 0; c < spec.dimension(); ++c) {
      double mu = 0.0, ss = 0.0;
      for (const auto& r : x) mu += r[c];
      mu /= n;
      for (const auto& r : x) ss += (r[c] - mu) * (r[c] - mu);
      const double sd = std::sqrt(ss / n);
      for (auto& r : x) r[c] = sd > 0.0 ? (r[c] - mu) / sd : 0.0;
    }
  }
  return x;
}

namespace {

double sq_dist(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return s;
}

void check_k(const FeatureMatrix& x, const ClusterConfig& c) {
  if (x.empty()) throw Error(ErrorKind::InvalidArgument, "clustering needs at least one point");
  if (c.k < 1 || static_cast<std::size_t>(c.k) > x.size())
    throw Error(ErrorKind::InvalidArgument, "cluster count must lie in [1, L]");
  if (c.restarts < 1 || c.max_iters < 1) throw Error(ErrorKind::InvalidArgument, "restarts and max_iters must be >= 1");
}

std::vector<std::size_t> random_distinct(std::size_t n, int k, std::uint64_t seed, int restart) {
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(restart) + 1);
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::shuffle(idx.begin(), idx.end(), rng);
  idx.resize(k);
  return idx;
}

std::vector<int> nearest(const FeatureMatrix& x, const FeatureMatrix& centers) {
  std::vector<int> labels(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < centers.size(); ++c) {
      const double d = sq_dist(x[i], centers[c]);
      if (d < best) {
        best = d;
        labels[i] = static_cast<int>(c);
      }
    }
  }
  return labels;
}

FeatureMatrix centroids(const FeatureMatrix& x, const std::vector<int>& labels, int k) {
  FeatureMatrix c(k, std::vector<double>(x.front().size(), 0.0));
  std::vector<int> n(k, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    ++n[labels[i]];
    for (std::size_t d = 0; d < x[i].size(); ++d) c[labels[i]][d] += x[i][d];
  }
  for (int j = 0; j < k; ++j)
    if (n[j] > 0)
      for (double& v : c[j]) v /= n[j];
  return c;
}

double wcss(const FeatureMatrix& x, const std::vector<int>& labels, const FeatureMatrix& centers) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += sq_dist(x[i], centers[labels[i]]);
  return s;
}

// Moves the point farthest from its centroid into each empty cluster.
void repair_empty(const FeatureMatrix& x, std::vector<int>& labels, int k) {
  while (true) {
    std::vector<int> sizes(k, 0);
    for (int l : labels) ++sizes[l];
    const auto empty = std::find(sizes.begin(), sizes.end(), 0);
    if (empty == sizes.end()) return;
    const auto centers = centroids(x, labels, k);
    std::size_t far = x.size();
    double far_d = -1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (sizes[labels[i]] < 2) continue;
      const double d = sq_dist(x[i], centers[labels[i]]);
      if (d > far_d) {
        far_d = d;
        far = i;
      }
    }
    labels[far] = static_cast<int>(empty - sizes.begin());
  }
}

}  // namespace

ClusterResult kmeans(const FeatureMatrix& x, const ClusterConfig& config) {
  check_k(x, config);
  const int k = config.k;
  ClusterResult best;
  best.objective = std::numeric_limits<double>::infinity();
  for (int r = 0; r < config.restarts; ++r) {
    FeatureMatrix seeds;
    for (auto i : random_distinct(x.size(), k, config.seed, r)) seeds.push_back(x[i]);
    auto labels = nearest(x, seeds);
    std::vector<double> trace;
    for (int it = 0; it < config.max_iters; ++it) {
      repair_empty(x, labels, k);
      const auto centers = centroids(x, labels, k);
      trace.push_back(wcss(x, labels, centers));
      auto next = nearest(x, centers);
      if (next == labels) break;
      labels = std::move(next);
    }
    if (trace.back() < best.objective) {
      best.objective = trace.back();
      best.trace = std::move(trace);
      best.partition = Partition::from_labels(labels);
    }
  }
  return best;
}

ClusterResult kmedoids(const FeatureMatrix& x, const ClusterConfig& config) {
  check_k(x, config);
  const std::size_t n = x.size();
  const int k = config.k;
  std::vector<std::vector<double>> dist(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) dist[i][j] = std::sqrt(sq_dist(x[i], x[j]));

  ClusterResult best;
  best.objective = std::numeric_limits<double>::infinity();
  for (int r = 0; r < config.restarts; ++r) {
    auto medoids = random_distinct(n, k, config.seed, r);
    std::vector<int> labels(n);
    std::vector<double> trace;
    for (int it = 0; it < config.max_iters; ++it) {
      for (std::size_t i = 0; i < n; ++i) {
        double bd = std::numeric_limits<double>::infinity();
        for (int c = 0; c < k; ++c)
          if (dist[i][medoids[c]] < bd) {
            bd = dist[i][medoids[c]];
            labels[i] = c;
          }
      }
      for (int c = 0; c < k; ++c) labels[medoids[c]] = c;  // coincident points keep their own medoid

      auto next = medoids;
      double total = 0.0;
      for (int c = 0; c < k; ++c) {
        double bc = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) {
          if (labels[i] != c) continue;
          double s = 0.0;
          for (std::size_t j = 0; j < n; ++j)
            if (labels[j] == c) s += dist[i][j];
          if (s < bc - 1e-12) {
            bc = s;
            next[c] = i;
          }
        }
        total += bc;
      }
      trace.push_back(total);
      if (next == medoids) break;
      medoids = std::move(next);
    }
    if (trace.back() < best.objective) {
      best.objective = trace.back();
      best.trace = std::move(trace);
      best.partition = Partition::from_labels(labels);
    }
  }
  return best;
}

ClusterResult cluster(ClusterMethod method, const FeatureMatrix& features, const ClusterConfig& config) {
  return method == ClusterMethod::KMeans ? kmeans(features, config) : kmedoids(features, config);
}

Solution solve_heuristic(const ModeSet& modes, const CostParams& costs, const FeatureSpec& spec,
                         ClusterMethod method, const ClusterConfig& config, const SolverOptions& options) {
  const auto clusters = cluster(method, build_features(modes, spec), config);
  return solve_partition(clusters.partition, modes, costs, options);
}

CrossValidation crossvalidate_k(const std::vector<std::vector<double>>& samples_per_mode,
                                const std::vector<double>& nominal_probs, const CostParams& costs,
                                const FeatureSpec& spec, ClusterMethod method, int folds,
                                const std::vector<int>& k_range, std::uint64_t seed,
                                const SolverOptions& options) {
  const std::size_t L = samples_per_mode.size();
  if (folds < 2) throw Error(ErrorKind::InvalidArgument, "crossvalidate_k: need at least two folds");
  if (k_range.empty()) throw Error(ErrorKind::InvalidArgument, "crossvalidate_k: empty K range");
  for (std::size_t l = 0; l < L; ++l)
    if (samples_per_mode[l].size() < static_cast<std::size_t>(folds)) {
      std::ostringstream os;
      os << "crossvalidate_k: mode " << l + 1 << " has " << samples_per_mode[l].size() << " samples, fewer than "
         << folds << " folds";
      throw Error(ErrorKind::InsufficientSamples, os.str());
    }

  // fold_of[l][i]: fold of the i-th sample of mode l
  std::vector<std::vector<int>> fold_of(L);
  std::mt19937_64 rng(seed);
  for (std::size_t l = 0; l < L; ++l) {
    std::vector<std::size_t> order(samples_per_mode[l].size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    fold_of[l].resize(order.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos) fold_of[l][order[pos]] = static_cast<int>(pos % folds);
  }

  CrossValidation cv;
  for (int k : k_range) {
    if (k < 1 || static_cast<std::size_t>(k) > L) continue;
    double total = 0.0;
    for (int f = 0; f < folds; ++f) {
      std::vector<std::vector<double>> train(L), held(L);
      for (std::size_t l = 0; l < L; ++l)
        for (std::size_t i = 0; i < samples_per_mode[l].size(); ++i)
          (fold_of[l][i] == f ? held : train)[l].push_back(samples_per_mode[l][i]);
      std::vector<ModeStats> stats;
      for (std::size_t l = 0; l < L; ++l) stats.push_back(estimate_moments(train[l], nominal_probs[l]));
      const ModeSet modes(std::move(stats));
      ClusterConfig cc;
      cc.k = k;
      cc.seed = seed;
      const auto sol = solve_heuristic(modes, costs, spec, method, cc, options);
      total += empirical_cost(sol, held, nominal_probs, costs).total_cost;
    }
    cv.ks.push_back(k);
    cv.mean_cost.push_back(total / folds);
  }
  if (cv.ks.empty()) throw Error(ErrorKind::InvalidArgument, "crossvalidate_k: no admissible K in range");
  std::size_t best = 0;
  for (std::size_t i = 1; i < cv.ks.size(); ++i)
    if (cv.mean_cost[i] < cv.mean_cost[best] || (cv.mean_cost[i] == cv.mean_cost[best] && cv.ks[i] < cv.ks[best]))
      best = i;
  cv.best_k = cv.ks[best];
  return cv;
}

}  // namespace slotdesign
