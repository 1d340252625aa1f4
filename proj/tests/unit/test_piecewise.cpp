#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "../common/random_instances.hpp"
#include "slotdesign/oracle.hpp"
#include "slotdesign/piecewise.hpp"

using namespace slotdesign;

namespace {

const ModeStats kSymmetric{100.0, 30.0, 0.0, 1.0, ""};
const CostParams kCosts{30.0, 20.0, 80.0, 720.0, 0.0};

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

// Horizon long enough that the last piece covers about a third of [0,T].
double tail_horizon(const ModeStats& st) {
  const double tau4 = st.mean + st.mean * (1 + st.semivariance) / (2 * (1 - st.semivariance));
  return 1.5 * std::min(tau4, 1e5);
}

}  // namespace

TEST_CASE("breakpoints of a symmetric mode") {
  const PiecewiseWorstCase pw(kSymmetric, kCosts);
  const auto bp = pw.breakpoints();
  CHECK(bp[0] == doctest::Approx(50.0));
  CHECK(bp[1] == doctest::Approx(85.0));
  CHECK(bp[2] == doctest::Approx(115.0));
  CHECK(bp[3] == doctest::Approx(150.0));
  CHECK(pw.w1() == doctest::Approx(450.0));
  CHECK(pw.w2() == doctest::Approx(450.0));
  CHECK(pw.beta() == doctest::Approx(1.0 - 450.0 / 1e4));
}

TEST_CASE("breakpoints of the first clinic row") {
  const PiecewiseWorstCase pw({48.70, 31.15, 0.59, 1.0, ""}, kCosts);
  CHECK(pw.breakpoints()[0] == doctest::Approx(24.35));
  CHECK(pw.breakpoints()[1] == doctest::Approx(48.70 - 15.575 * std::sqrt(0.41 / 1.59)));
  CHECK(pw.breakpoints()[1] == doctest::Approx(40.79).epsilon(1e-3));

  // The oracle curve has its kinks where the closed form changes piece: the LP value
  // tracks the closed form on both sides of the second breakpoint.
  const double tau = pw.breakpoints()[1];
  for (double t : {tau - 3.0, tau + 3.0}) {
    const double lp = worst_case_discrete(pw.stats(), kCosts, t).value;
    CHECK(rel(lp, pw.value(t)) <= 0.01);
  }
}

TEST_CASE("clamping leaves the last piece empty") {
  const PiecewiseWorstCase pw({600.0, 50.0, 0.0, 1.0, ""}, kCosts);
  CHECK(pw.raw_breakpoints()[3] == doctest::Approx(900.0));
  CHECK(pw.breakpoints()[3] == 720.0);
  CHECK(pw.piece_at(720.0) == 4);
}

TEST_CASE("values against the discretized LP") {
  const PiecewiseWorstCase pw(kSymmetric, kCosts);
  CHECK(pw.value(0.0) == doctest::Approx(30.0 * 100.0));
  CHECK(pw.value(100.0) == doctest::Approx(750.0));
  CHECK(pw.value(20.0) == doctest::Approx(2445.0));
  for (double t : {20.0, 100.0}) {
    const double lp = worst_case_discrete(kSymmetric, kCosts, t).value;
    CHECK(rel(lp, pw.value(t)) <= 0.01);
  }
  CHECK_THROWS_AS(pw.value(-1.0), Error);
  CHECK_THROWS_AS(pw.value(721.0), Error);
}

TEST_CASE("slopes") {
  const ModeStats st{80.0, 35.0, 0.3, 1.0, ""};
  const PiecewiseWorstCase pw(st, kCosts);
  const double q = 30, b = 20, s = 0.3, var = 35.0 * 35.0;
  const auto bp = pw.breakpoints();

  SUBCASE("linear pieces") {
    const auto [l1, r1] = pw.slopes(bp[0] / 2);
    CHECK(l1 == doctest::Approx((b + q) * (1 - s) * var / (2 * 80.0 * 80.0) - q));
    CHECK(r1 == l1);
    const auto [l3, r3] = pw.slopes(0.5 * (bp[1] + bp[2]));
    CHECK(l3 == doctest::Approx(-((q - b) - (q + b) * s) / 2));
    CHECK(r3 == l3);
  }
  SUBCASE("one-sided slopes at the second breakpoint") {
    const double t = bp[1];
    const auto [left, right] = pw.slopes(t);
    CHECK(left == doctest::Approx((b + q) * (1 - s) * var / (8 * (80.0 - t) * (80.0 - t)) - q));
    CHECK(left <= right + 1e-9);
    const double h = 1e-5;
    CHECK(rel((pw.value(t) - pw.value(t - h)) / h, left) <= 1e-4);
    CHECK(rel((pw.value(t + h) - pw.value(t)) / h, right) <= 1e-4);
  }
  SUBCASE("central differences inside every piece") {
    const double probes[] = {bp[0] * 0.5, 0.5 * (bp[0] + bp[1]), 0.5 * (bp[1] + bp[2]), 0.5 * (bp[2] + bp[3]),
                             bp[3] + 50.0};
    for (double t : probes) {
      const double h = 1e-5;
      const double fd = (pw.value(t + h) - pw.value(t - h)) / (2 * h);
      INFO("t=" << t << " piece " << pw.piece_at(t));
      CHECK(std::abs(fd - pw.slopes(t).first) <= 1e-4 * std::max(1.0, std::abs(fd)));
    }
  }
}

TEST_CASE("continuity at breakpoints on random instances") {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto st = testing::random_stats(rng);
    auto costs = testing::random_costs(rng);
    costs.horizon = 1e6;  // keep every piece reachable
    const PiecewiseWorstCase pw(st, costs);
    const auto& tau = pw.raw_breakpoints();
    for (int i = 0; i < 4; ++i) {
      const double a = pw.piece_value(i + 1, tau[i]);
      const double b = pw.piece_value(i + 2, tau[i]);
      INFO("trial " << trial << " breakpoint " << i + 1);
      CHECK(std::abs(a - b) <= 1e-8 * (1.0 + std::abs(a)));
      ++checked;
    }
  }
  CHECK(checked == 4000);
}

TEST_CASE("convexity on random triples") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(0.0, 720.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto st = testing::random_stats(rng);
    const auto costs = testing::random_costs(rng);
    const PiecewiseWorstCase pw(st, costs);
    double t[3] = {u(rng), u(rng), u(rng)};
    std::sort(t, t + 3);
    if (t[2] - t[0] < 1e-9) continue;
    const double lam = (t[2] - t[1]) / (t[2] - t[0]);
    const double chord = lam * pw.value(t[0]) + (1 - lam) * pw.value(t[2]);
    INFO("trial " << trial);
    CHECK(pw.value(t[1]) <= chord + 1e-9);
    const auto [l, r] = pw.slopes(t[1]);
    CHECK(l <= r + 1e-9);
  }
}

TEST_CASE("value is bracketed by Jensen and the deviation cap") {
  // Jensen below; above, E|X - t| <= |m - t| + σ.
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(0.0, 720.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto st = testing::random_stats(rng);
    const auto c = testing::random_costs(rng);
    const PiecewiseWorstCase pw(st, c);
    const double t = u(rng);
    const double v = pw.value(t);
    const double jensen = c.overtime_rate * std::max(st.mean - t, 0.0) + c.idle_rate * std::max(t - st.mean, 0.0);
    const double cap = std::max(c.overtime_rate, c.idle_rate) * (std::abs(st.mean - t) + st.std_dev);
    CHECK(v >= jensen - 1e-9);
    CHECK(v <= cap + 1e-9);
  }
}

TEST_CASE("witness for the symmetric middle piece") {
  const PiecewiseWorstCase pw(kSymmetric, kCosts);
  const auto w = pw.witness(100.0);
  REQUIRE(w.atoms.size() == 2);
  CHECK(w.atoms[0].support == doctest::Approx(70.0));
  CHECK(w.atoms[1].support == doctest::Approx(130.0));
  CHECK(w.atoms[0].prob == doctest::Approx(0.5));
  CHECK(w.atoms[1].prob == doctest::Approx(0.5));
}

TEST_CASE("witness for the first piece") {
  const PiecewiseWorstCase pw(kSymmetric, kCosts);
  const auto w = pw.witness(20.0);
  REQUIRE(w.atoms.size() == 3);
  CHECK(w.atoms[0].support == 0.0);
  CHECK(w.atoms[0].prob == doctest::Approx(0.045));
  // Direct substitution of the three moment equations.
  double p = 0, m1 = 0, m2 = 0, up = 0, down = 0;
  for (const auto& a : w.atoms) {
    p += a.prob;
    m1 += a.prob * a.support;
  }
  for (const auto& a : w.atoms) {
    const double d = a.support - 100.0;
    m2 += a.prob * d * d;
    (d > 0 ? up : down) += a.prob * d * d;
  }
  CHECK(p == doctest::Approx(1.0));
  CHECK(m1 == doctest::Approx(100.0));
  CHECK(m2 == doctest::Approx(900.0));
  CHECK(up - down == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(w.expected_cost(20.0, 30.0, 20.0) == doctest::Approx(2445.0));
}

TEST_CASE("witnesses attain the closed form on random instances") {
  std::mt19937_64 rng(14);
  int defined = 0, undefined = 0;
  int per_piece[6] = {0, 0, 0, 0, 0, 0};
  for (int trial = 0; trial < 1000; ++trial) {
    const auto st = testing::random_stats(rng);
    auto costs = testing::random_costs(rng);
    costs.horizon = tail_horizon(st);
    const PiecewiseWorstCase pw(st, costs);
    std::uniform_real_distribution<double> u(0.0, costs.horizon);
    const double t = u(rng);
    try {
      const auto w = pw.witness(t);
      ++defined;
      ++per_piece[pw.piece_at(t)];
      INFO("trial " << trial << " piece " << pw.piece_at(t) << " t=" << t);
      CHECK(std::abs(w.total_prob() - 1.0) <= 1e-9);
      CHECK(rel(w.mean(), st.mean) <= 1e-7);
      CHECK(rel(w.variance(), st.std_dev * st.std_dev) <= 1e-7);
      CHECK(std::abs(w.semivariance() - st.semivariance) <= 1e-7);
      CHECK(rel(w.expected_cost(t, costs.overtime_rate, costs.idle_rate), pw.value(t)) <= 1e-6);
      for (const auto& a : w.atoms) {
        CHECK(a.prob >= 0.0);
        CHECK(a.support >= 0.0);
      }
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::UndefinedWitness);
      ++undefined;
    }
  }
  MESSAGE("defined " << defined << ", undefined " << undefined);
  for (int k = 1; k <= 5; ++k) CHECK(per_piece[k] > 0);
  CHECK(undefined <= 10);
}
