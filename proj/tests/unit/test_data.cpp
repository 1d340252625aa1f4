#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "slotdesign/data.hpp"

using namespace slotdesign;

TEST_CASE("count allocation") {
  CHECK(allocate_counts(100, {0.3, 0.7}, 0) == std::vector<int>{30, 70});
  CHECK(allocate_counts(10, {1.0 / 3, 1.0 / 3, 1.0 / 3}, 0) == std::vector<int>{4, 3, 3});
  CHECK(allocate_counts(10, {0.98, 0.01, 0.01}, 2) == std::vector<int>{6, 2, 2});
  CHECK_THROWS_AS(allocate_counts(5, {0.5, 0.5}, 3), Error);

  std::mt19937_64 rng(71);
  std::exponential_distribution<double> e(1.0);
  std::uniform_int_distribution<int> size(1, 12), total(12, 2000);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<double> p(size(rng));
    for (double& x : p) x = e(rng);
    const double s = std::accumulate(p.begin(), p.end(), 0.0);
    for (double& x : p) x /= s;
    const int n = total(rng);
    const auto k = allocate_counts(n, p, 0);
    CHECK(std::accumulate(k.begin(), k.end(), 0) == n);
    for (std::size_t i = 0; i < p.size(); ++i) CHECK(std::abs(k[i] - n * p[i]) < 1.0);
  }
}

TEST_CASE("sampling") {
  GenConfig cfg;
  cfg.seed = 5;
  const auto a = generate(cfg);
  const auto b = generate(cfg);
  CHECK(a.train == b.train);
  CHECK(a.test == b.test);
  CHECK(a.nominal_probs == b.nominal_probs);

  int train_total = 0;
  for (const auto& xs : a.train) {
    train_total += static_cast<int>(xs.size());
    CHECK(xs.size() >= 1);
    for (double x : xs) {
      CHECK(x >= 0.0);
      CHECK(x <= 720.0);
    }
  }
  CHECK(train_total == 100);
  CHECK(std::accumulate(a.nominal_probs.begin(), a.nominal_probs.end(), 0.0) == doctest::Approx(1.0));

  cfg.seed = 6;
  CHECK(generate(cfg).train != a.train);
}

TEST_CASE("clipping at the horizon") {
  GenConfig cfg;
  cfg.modes = 1;
  cfg.logmean_range = {std::log(5000.0), std::log(5000.0)};
  cfg.n_train = 50;
  cfg.n_test = 50;
  const auto s = generate(cfg);
  int at_cap = 0;
  for (double x : s.train[0]) at_cap += x == 720.0;
  CHECK(at_cap > 40);
}

TEST_CASE("perturbation arithmetic") {
  const InstanceLaw law{{{5.0, 1.0}, {4.0, 0.5}}, {0.5, 0.5}};
  const auto same = perturb(law, 0.0);
  CHECK(same.laws[0].log_mean == 5.0);
  CHECK(same.laws[1].log_std == 0.5);
  const auto up = perturb(law, 0.2);
  CHECK(up.laws[0].log_mean == doctest::Approx(6.0));
  CHECK(perturb(law, 0.5).laws[0].log_std == doctest::Approx(1.5));
  CHECK(up.probs == law.probs);
  CHECK_THROWS_AS(perturb(law, -0.1), Error);
}

TEST_CASE("sample means match the clipped lognormal mean") {
  // E[min(X, c)] for X ~ LN(μ, σ²): e^{μ+σ²/2} Φ((ln c − μ − σ²)/σ) + c (1 − Φ((ln c − μ)/σ)).
  const auto phi = [](double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); };
  for (auto [mu, sigma] : {std::pair{5.0, 0.6}, std::pair{6.2, 1.2}}) {
    GenConfig cfg;
    cfg.modes = 1;
    cfg.logmean_range = {mu, mu};
    cfg.logstd_range = {sigma, sigma};
    cfg.n_train = 40000;
    cfg.n_test = 1;
    cfg.seed = 99;
    const auto s = generate(cfg);
    const double c = 720.0, lc = std::log(c);
    const double expect = std::exp(mu + sigma * sigma / 2) * phi((lc - mu - sigma * sigma) / sigma) +
                          c * (1 - phi((lc - mu) / sigma));
    const auto& xs = s.train[0];
    const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
    double var = 0.0;
    for (double x : xs) var += (x - mean) * (x - mean);
    const double se = std::sqrt(var / xs.size()) / std::sqrt(static_cast<double>(xs.size()));
    CHECK(std::abs(mean - expect) <= 3.0 * se);
  }
}

TEST_CASE("estimated mode set") {
  GenConfig cfg;
  cfg.min_samples_per_mode = 5;
  const auto s = generate(cfg);
  const auto ms = estimate_mode_set(s);
  CHECK(ms.size() == 5);
  for (std::size_t l = 0; l < ms.size(); ++l) CHECK(ms[l].nominal_prob == doctest::Approx(s.nominal_probs[l]));
}

TEST_CASE("clinic patient types") {
  const auto ms = clinic_modes();
  REQUIRE(ms.size() == 7);
  CHECK(ms[0].mean == 48.70);
  CHECK(ms[0].name == "30-min");
}
