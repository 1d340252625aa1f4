#include "slotdesign/piecewise.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace slotdesign {

double DiscreteDistribution::total_prob() const {
  double s = 0.0;
  for (const auto& a : atoms) s += a.prob;
  return s;
}

double DiscreteDistribution::mean() const {
  double s = 0.0;
  for (const auto& a : atoms) s += a.prob * a.support;
  return s / total_prob();
}

double DiscreteDistribution::variance() const {
  const double m = mean();
  double s = 0.0;
  for (const auto& a : atoms) s += a.prob * (a.support - m) * (a.support - m);
  return s / total_prob();
}

double DiscreteDistribution::semivariance() const {
  const double m = mean();
  double up = 0.0, down = 0.0;
  for (const auto& a : atoms) {
    const double d = a.support - m;
    (d > 0.0 ? up : down) += a.prob * d * d;
  }
  return (up - down) / (up + down);
}

double DiscreteDistribution::expected_cost(double t, double overtime_rate, double idle_rate) const {
  double s = 0.0;
  for (const auto& a : atoms)
    s += a.prob * (overtime_rate * std::max(a.support - t, 0.0) + idle_rate * std::max(t - a.support, 0.0));
  return s;
}

PiecewiseWorstCase::PiecewiseWorstCase(const ModeStats& stats, const CostParams& costs)
    : stats_(stats), q_(costs.overtime_rate), b_(costs.idle_rate), horizon_(costs.horizon) {
  require_feasible(stats);
  const double m = stats.mean, sd = stats.std_dev, s = stats.semivariance;
  w1_ = (1.0 + s) * sd * sd / 2.0;
  w2_ = (1.0 - s) * sd * sd / 2.0;
  beta_ = 1.0 - w2_ / (m * m);
  raw_[0] = m / 2.0;
  raw_[1] = m - sd / 2.0 * std::sqrt((1.0 - s) / (1.0 + s));
  raw_[2] = m + sd / 2.0 * std::sqrt((1.0 + s) / (1.0 - s));
  raw_[3] = m + m * (1.0 + s) / (2.0 * (1.0 - s));
  // At the feasibility boundary the first two coincide analytically; keep them ordered.
  raw_[1] = std::max(raw_[1], raw_[0]);
}

std::array<double, 4> PiecewiseWorstCase::breakpoints() const {
  std::array<double, 4> out{};
  for (int i = 0; i < 4; ++i) out[i] = std::clamp(raw_[i], 0.0, horizon_);
  return out;
}

int PiecewiseWorstCase::piece_at(double t) const {
  int k = 1;
  for (double tau : raw_)
    if (t >= tau) ++k;
  return k;
}

double PiecewiseWorstCase::piece_value(int k, double t) const {
  const double m = stats_.mean, sd = stats_.std_dev, s = stats_.semivariance;
  const double bq = b_ + q_;
  switch (k) {
    case 1:
      return (bq * w2_ / (m * m) - q_) * t + q_ * m;
    case 2:
      return bq * w2_ / (4.0 * (m - t)) - q_ * t + q_ * m;
    case 3:
      return bq * sd / 2.0 * std::sqrt(1.0 - s * s) + (m - t) * ((q_ - b_) - bq * s) / 2.0;
    case 4:
      return bq * w1_ / (4.0 * (t - m)) + b_ * t - b_ * m;
    default: {
      const double d = t - m;
      const double quad = beta_ * d * d + w1_ - 2.0 * w2_ * d / m;
      const double g = std::sqrt(std::max(beta_ * quad, 0.0));
      return b_ * t + q_ * m - bq / 2.0 * (m + beta_ * t - g);
    }
  }
}

double PiecewiseWorstCase::piece_slope(int k, double t) const {
  const double m = stats_.mean, s = stats_.semivariance;
  const double bq = b_ + q_;
  switch (k) {
    case 1:
      return bq * w2_ / (m * m) - q_;
    case 2:
      return bq * w2_ / (4.0 * (m - t) * (m - t)) - q_;
    case 3:
      return -((q_ - b_) - bq * s) / 2.0;
    case 4:
      return b_ - bq * w1_ / (4.0 * (t - m) * (t - m));
    default: {
      const double d = t - m;
      const double quad = beta_ * d * d + w1_ - 2.0 * w2_ * d / m;
      const double g = std::sqrt(std::max(beta_ * quad, 0.0));
      const double dg = g > 0.0 ? beta_ * (beta_ * d - w2_ / m) / g : beta_;
      return b_ - bq / 2.0 * (beta_ - dg);
    }
  }
}

void PiecewiseWorstCase::check_range(double t) const {
  if (!(t >= 0.0 && t <= horizon_)) {
    std::ostringstream os;
    os << "slot length " << t << " outside [0, " << horizon_ << "]";
    throw Error(ErrorKind::OutOfRange, os.str());
  }
}

double PiecewiseWorstCase::value(double t) const {
  check_range(t);
  return piece_value(piece_at(t), t);
}

std::pair<double, double> PiecewiseWorstCase::slopes(double t) const {
  check_range(t);
  const int right_piece = piece_at(t);
  int left_piece = 1;
  for (double tau : raw_)
    if (t > tau) ++left_piece;
  double left = piece_slope(left_piece, t);
  double right = piece_slope(right_piece, t);
  if (t == 0.0) left = right;
  if (t == horizon_) right = left;
  return {left, right};
}

namespace {

[[noreturn]] void undefined(int piece, double t, const char* what) {
  std::ostringstream os;
  os << "witness undefined on piece " << piece << " at t=" << t << ": " << what;
  throw Error(ErrorKind::UndefinedWitness, os.str());
}

struct Split {
  double d_lo, p_lo, d_hi, p_hi;
};

// Two offsets d with total mass r, sum p*d = r*mu, sum p*d^2 = r*ed2, both d >= 0
// and d <= d_max. The free weight is fixed at the midpoint of its admissible range.
Split split_offsets(double r, double mu, double ed2, double d_max, int piece, double t) {
  if (!(r > 0.0)) undefined(piece, t, "no mass left for the offset atoms");
  const double sd2 = ed2 - mu * mu;
  if (sd2 < -1e-10 * ed2) undefined(piece, t, "offset variance is negative");
  if (sd2 <= 1e-14 * ed2) return {mu, r / 2.0, mu, r / 2.0};
  const double sd = std::sqrt(sd2);
  const double pi_min = sd2 / ed2;
  double pi_max = 1.0;
  if (std::isfinite(d_max)) {
    const double room = d_max - mu;
    if (room < 0.0) undefined(piece, t, "offset mean exceeds the support bound");
    pi_max = room * room / (room * room + sd2);
  }
  if (pi_max < pi_min) undefined(piece, t, "empty admissible weight interval");
  const double pi = 0.5 * (pi_min + pi_max);
  return {mu - sd * std::sqrt((1.0 - pi) / pi), pi * r, mu + sd * std::sqrt(pi / (1.0 - pi)),
          (1.0 - pi) * r};
}

}  // namespace

DiscreteDistribution PiecewiseWorstCase::witness(double t) const {
  check_range(t);
  const double m = stats_.mean, sd = stats_.std_dev, s = stats_.semivariance;
  const int k = piece_at(t);
  const double inf = std::numeric_limits<double>::infinity();
  DiscreteDistribution out;
  switch (k) {
    case 1: {
      const double p0 = w2_ / (m * m);
      const double r = 1.0 - p0;
      const auto sp = split_offsets(r, w2_ / m / r, w1_ / r, inf, k, t);
      out.atoms = {{0.0, p0}, {m + sp.d_lo, sp.p_lo}, {m + sp.d_hi, sp.p_hi}};
      break;
    }
    case 2: {
      const double gap = m - t;
      const double pa = w2_ / (4.0 * gap * gap);
      const double r = 1.0 - pa;
      const auto sp = split_offsets(r, w2_ / (2.0 * gap) / r, w1_ / r, inf, k, t);
      out.atoms = {{2.0 * t - m, pa}, {m + sp.d_lo, sp.p_lo}, {m + sp.d_hi, sp.p_hi}};
      break;
    }
    case 3: {
      const double up = std::sqrt((1.0 + s) / (1.0 - s));
      out.atoms = {{m - sd / up, (1.0 + s) / 2.0}, {m + sd * up, (1.0 - s) / 2.0}};
      break;
    }
    case 4: {
      const double gap = t - m;
      const double pa = w1_ / (4.0 * gap * gap);
      const double r = 1.0 - pa;
      const auto sp = split_offsets(r, w1_ / (2.0 * gap) / r, w2_ / r, m, k, t);
      out.atoms = {{m - sp.d_lo, sp.p_lo}, {m - sp.d_hi, sp.p_hi}, {2.0 * t - m, pa}};
      break;
    }
    default: {
      const double gap = t - m;
      const double r = beta_;
      const double h2 = gap * gap + (w1_ - 2.0 * gap * w2_ / m) / r;
      if (!(h2 > 0.0)) undefined(k, t, "half-width is not positive");
      const double h = std::sqrt(h2);
      const double diff = (w2_ / m - r * gap) / h;
      out.atoms = {{0.0, 1.0 - r}, {t - h, (r - diff) / 2.0}, {t + h, (r + diff) / 2.0}};
      break;
    }
  }
  const double scale = std::max(m, t);
  for (auto& a : out.atoms) {
    if (a.prob < -1e-12) undefined(k, t, "negative probability");
    if (a.support < -1e-9 * scale) undefined(k, t, "negative support");
    a.prob = std::max(a.prob, 0.0);
    a.support = std::max(a.support, 0.0);
  }
  return out;
}

}  // namespace slotdesign
