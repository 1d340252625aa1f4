#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "../common/random_instances.hpp"
#include "slotdesign/ambiguity.hpp"
#include "slotdesign/oracle.hpp"

using namespace slotdesign;

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

}  // namespace

TEST_CASE("worst-case probabilities on two modes") {
  const std::vector<double> v{1.0, 2.0};
  SUBCASE("zero radius returns the center") {
    const TVBall ball{{0.3, 0.7}, 0.0};
    CHECK(worst_case_probs(ball, v) == ball.center);
  }
  SUBCASE("partial transfer") {
    const auto p = worst_case_probs({{0.5, 0.5}, 0.2}, v);
    CHECK(p[0] == doctest::Approx(0.4));
    CHECK(p[1] == doctest::Approx(0.6));
    CHECK(dot(p, v) == doctest::Approx(1.6));
  }
  SUBCASE("transfer capped by available mass") {
    const auto p = worst_case_probs({{0.5, 0.5}, 1.0}, v);
    CHECK(p[0] == doctest::Approx(0.0));
    CHECK(p[1] == doctest::Approx(1.0));
    CHECK(dot(p, v) == doctest::Approx(2.0));
  }
  SUBCASE("constant values leave the center alone") {
    const std::vector<double> flat{3.0, 3.0, 3.0};
    const TVBall ball{{0.2, 0.3, 0.5}, 0.8};
    CHECK(dot(worst_case_probs(ball, flat), flat) == doctest::Approx(3.0));
  }
}

TEST_CASE("greedy matches the TV linear program") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> size(1, 8);
  std::exponential_distribution<double> e(1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = size(rng);
    TVBall ball;
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      // a few exact zeros exercise empty donors
      ball.center.push_back(trial % 7 == 0 && i == 0 && n > 1 ? 0.0 : e(rng));
      total += ball.center.back();
    }
    for (double& c : ball.center) c /= total;
    ball.radius = 2.0 * u(rng);
    std::vector<double> values(n);
    for (double& x : values) x = 1000.0 * u(rng);
    if (trial % 11 == 0 && n > 1) values[1] = values[0];  // ties

    const auto p = worst_case_probs(ball, values);
    const double greedy = dot(p, values);
    const double lp = tv_lp(ball.center, values, ball.radius);
    INFO("trial " << trial);
    CHECK(std::abs(greedy - lp) <= 1e-9 * std::max(1.0, std::abs(lp)));
    CHECK(greedy >= dot(ball.center, values) - 1e-12);
    double tv = 0.0, mass = 0.0;
    for (int i = 0; i < n; ++i) {
      tv += std::abs(p[i] - ball.center[i]);
      mass += p[i];
      CHECK(p[i] >= 0.0);
    }
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(tv <= ball.radius + 1e-12);
  }
}

TEST_CASE("omega") {
  const CostParams costs{30.0, 20.0, 80.0, 720.0, 0.5};
  const ModeSet modes({{100, 30, 0, 0.5, ""}, {200, 40, 0, 0.5, ""}});

  SUBCASE("singleton ignores the radius") {
    const PiecewiseWorstCase pw(modes[0], costs);
    for (double t : {0.0, 60.0, 150.0, 720.0}) CHECK(omega({0}, modes, costs, t) == pw.value(t));
  }
  SUBCASE("zero radius is the nominal mixture") {
    CostParams c0 = costs;
    c0.tv_radius = 0.0;
    const GroupModel g({0, 1}, modes, c0);
    const double t = 150.0;
    const auto v = g.member_values(t);
    CHECK(g.omega(t) == doctest::Approx(0.5 * v[0] + 0.5 * v[1]));
    CHECK(g.omega(t) == doctest::Approx(g.nominal(t)));
  }
  SUBCASE("two-mode group against the LP") {
    const GroupModel g({0, 1}, modes, costs);
    const auto v = g.member_values(150.0);
    const double lp = tv_lp(g.center(), v, 0.5);
    CHECK(std::abs(g.omega(150.0) - lp) <= 1e-9);
    // Π₂(150) > Π₁(150), so a quarter of the mass moves to the second mode.
    CHECK(g.omega(150.0) == doctest::Approx(0.25 * v[0] + 0.75 * v[1]));
  }
}

TEST_CASE("omega is nondecreasing in the radius and convex in t") {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const auto modes = testing::random_mode_set(rng, 4);
    auto costs = testing::random_costs(rng);
    const Group g = testing::full_group(4);
    const double t = 720.0 * u(rng);
    double prev = -1.0;
    for (double rho : {0.0, 0.1, 0.3, 0.7, 1.0, 1.5}) {
      costs.tv_radius = rho;
      const double w = omega(g, modes, costs, t);
      CHECK(w >= prev - 1e-9);
      prev = w;
    }
    costs.tv_radius = 0.5 * u(rng) + 0.01;
    const GroupModel model(g, modes, costs);
    double ts[3] = {720.0 * u(rng), 720.0 * u(rng), 720.0 * u(rng)};
    std::sort(ts, ts + 3);
    if (ts[2] - ts[0] < 1e-9) continue;
    const double lam = (ts[2] - ts[1]) / (ts[2] - ts[0]);
    CHECK(model.omega(ts[1]) <= lam * model.omega(ts[0]) + (1 - lam) * model.omega(ts[2]) + 1e-9);
  }
}
