#include <doctest.h>

#include <random>

#include "../common/random_instances.hpp"
#include "slotdesign/data.hpp"
#include "slotdesign/heuristics.hpp"

using namespace slotdesign;

namespace {

FeatureMatrix column(std::initializer_list<double> xs) {
  FeatureMatrix f;
  for (double x : xs) f.push_back({x});
  return f;
}

const CostParams kCosts{30.0, 20.0, 80.0, 720.0, 0.0};

}  // namespace

TEST_CASE("feature spec parsing") {
  const auto f = FeatureSpec::parse("m,sigma,s");
  CHECK(f.dimension() == 3);
  CHECK(FeatureSpec::parse("m,std", false).standardize == false);
  CHECK(FeatureSpec::parse("s").dimension() == 1);
  CHECK_THROWS_AS(FeatureSpec::parse("m,x"), Error);
  CHECK_THROWS_AS(FeatureSpec::parse(""), Error);
  CHECK(default_features(ClusterMethod::KMeans).to_string() == "m,s");
  CHECK(default_features(ClusterMethod::KMedoids).dimension() == 3);
  CHECK(parse_method("kmedoids") == ClusterMethod::KMedoids);
  CHECK_THROWS_AS(parse_method("dbscan"), Error);
}

TEST_CASE("clustering small configurations") {
  const auto f = column({10, 11, 100, 101});
  const Partition split({{0, 1}, {2, 3}}, 4);
  for (auto method : {ClusterMethod::KMeans, ClusterMethod::KMedoids}) {
    INFO(to_string(method));
    CHECK(cluster(method, f, {2, 10, 100, 1}).partition == split);
    const auto all = cluster(method, f, {4, 10, 100, 1});
    CHECK(all.partition.size() == 4);
    CHECK(all.objective == doctest::Approx(0.0));
    CHECK(cluster(method, f, {1, 10, 100, 1}).partition.size() == 1);
  }
  SUBCASE("outlier isolated") {
    const FeatureMatrix g{{0, 0}, {1, 0}, {0, 1}, {1, 1}, {50, 50}};
    const Partition expect({{0, 1, 2, 3}, {4}}, 5);
    CHECK(kmedoids(g, {2, 10, 100, 3}).partition == expect);
    CHECK(kmeans(g, {2, 10, 100, 3}).partition == expect);
  }
  CHECK_THROWS_AS(kmeans(f, {5, 1, 10, 1}), Error);
}

TEST_CASE("objective traces never increase") {
  std::mt19937_64 rng(61);
  std::normal_distribution<double> n(0.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    FeatureMatrix f(15, std::vector<double>(3));
    for (auto& row : f)
      for (double& x : row) x = n(rng);
    for (auto method : {ClusterMethod::KMeans, ClusterMethod::KMedoids}) {
      const auto r = cluster(method, f, {4, 5, 100, static_cast<std::uint64_t>(trial)});
      REQUIRE_FALSE(r.trace.empty());
      for (std::size_t i = 1; i < r.trace.size(); ++i) CHECK(r.trace[i] <= r.trace[i - 1] + 1e-12);
      CHECK(r.objective == doctest::Approx(r.trace.back()));
    }
  }
}

TEST_CASE("standardization removes per-feature scale") {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 20; ++trial) {
    const auto ms = testing::random_mode_set(rng, 7);
    const auto spec = FeatureSpec::parse("m,sigma,s");
    const auto f = build_features(ms, spec);
    auto scaled = f;
    for (auto& row : scaled) row[0] *= 37.0;
    // Rescaled raw columns must standardize to the same matrix.
    std::vector<ModeStats> v;
    for (const auto& m : ms.modes()) {
      auto c = m;
      c.mean *= 37.0;
      c.std_dev *= 37.0;
      v.push_back(c);
    }
    const auto f2 = build_features(ModeSet(v), spec);
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = 0; j < 3; ++j) CHECK(f[i][j] == doctest::Approx(f2[i][j]));
    CHECK(kmeans(f, {3, 10, 100, 9}).partition == kmeans(f2, {3, 10, 100, 9}).partition);
    CHECK(kmedoids(f, {3, 10, 100, 9}).partition == kmedoids(f2, {3, 10, 100, 9}).partition);
  }
}

TEST_CASE("heuristic solutions") {
  std::mt19937_64 rng(63);
  SUBCASE("one cluster per mode reproduces the singleton partition") {
    const auto ms = testing::random_mode_set(rng, 5);
    const auto h = solve_heuristic(ms, kCosts, default_features(ClusterMethod::KMeans), ClusterMethod::KMeans,
                                   {5, 10, 100, 1});
    const Partition singles({{0}, {1}, {2}, {3}, {4}}, 5);
    CHECK(h.partition == singles);
    CHECK(h.objective == doctest::Approx(solve_partition(singles, ms, kCosts).objective));
  }
  SUBCASE("never beats the exact search") {
    for (int trial = 0; trial < 10; ++trial) {
      const auto ms = testing::random_mode_set(rng, 5);
      const double exact = solve_exact(ms, kCosts).objective;
      for (int k = 1; k <= 5; ++k)
        for (auto method : {ClusterMethod::KMeans, ClusterMethod::KMedoids}) {
          const auto h = solve_heuristic(ms, kCosts, default_features(method), method, {k, 5, 100, 1});
          CHECK(h.objective >= exact - 1e-9);
        }
    }
  }
  SUBCASE("clinic statistics with four k-means clusters") {
    const auto h = solve_heuristic(clinic_modes(), kCosts, default_features(ClusterMethod::KMeans),
                                   ClusterMethod::KMeans, {4, 10, 100, 1});
    CHECK(h.partition == Partition({{0, 1}, {2}, {3, 4, 5}, {6}}, 7));
    CHECK(std::abs(h.objective - 1409.32) <= 2.0);
  }
}

TEST_CASE("cross-validated cluster count") {
  GenConfig gen;
  gen.modes = 5;
  gen.min_samples_per_mode = 5;
  gen.seed = 7;
  const auto data = generate(gen);
  const auto spec = default_features(ClusterMethod::KMeans);

  SUBCASE("single candidate") {
    const auto cv = crossvalidate_k(data.train, data.nominal_probs, kCosts, spec, ClusterMethod::KMeans, 5, {5}, 1);
    CHECK(cv.best_k == 5);
  }
  SUBCASE("one mode") {
    const std::vector<std::vector<double>> one{data.train[0]};
    const auto cv = crossvalidate_k(one, {1.0}, kCosts, spec, ClusterMethod::KMeans, 5, {1}, 1);
    CHECK(cv.best_k == 1);
  }
  SUBCASE("chosen K validates no worse than one group per mode") {
    const auto cv = crossvalidate_k(data.train, data.nominal_probs, kCosts, spec, ClusterMethod::KMeans, 5,
                                    {1, 2, 3, 4, 5}, 1);
    REQUIRE(cv.ks.size() == 5);
    CHECK(cv.mean_cost[cv.best_k - 1] <= cv.mean_cost[4]);
    for (double c : cv.mean_cost) CHECK(cv.mean_cost[cv.best_k - 1] <= c);
  }
  SUBCASE("too few samples for the folds") {
    auto thin = data.train;
    thin[2].resize(3);
    try {
      crossvalidate_k(thin, data.nominal_probs, kCosts, spec, ClusterMethod::KMeans, 5, {1, 2}, 1);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InsufficientSamples);
    }
  }
}
