#include "slotdesign/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace slotdesign {

void LinearProgram::add_eq(std::vector<double> row, double rhs) {
  eq_rows.push_back(std::move(row));
  eq_rhs.push_back(rhs);
}

void LinearProgram::add_le(std::vector<double> row, double rhs) {
  le_rows.push_back(std::move(row));
  le_rhs.push_back(rhs);
}

namespace {

constexpr double kPivotTol = 1e-11;
constexpr double kCostTol = 1e-10;
constexpr int kMaxPivots = 200000;

// Tableau for: minimize cost·x  s.t.  A x = rhs, x >= 0, with a known feasible basis.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * (cols + 1), 0.0), basis_(rows) {}

  double& at(std::size_t i, std::size_t j) { return a_[i * (cols_ + 1) + j]; }
  double at(std::size_t i, std::size_t j) const { return a_[i * (cols_ + 1) + j]; }
  double& rhs(std::size_t i) { return at(i, cols_); }
  std::vector<std::size_t>& basis() { return basis_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void pivot(std::size_t r, std::size_t c) {
    const double inv = 1.0 / at(r, c);
    for (std::size_t j = 0; j <= cols_; ++j) at(r, j) *= inv;
    at(r, c) = 1.0;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      const double f = at(i, c);
      if (f == 0.0) continue;
      double* dst = &a_[i * (cols_ + 1)];
      const double* src = &a_[r * (cols_ + 1)];
      for (std::size_t j = 0; j <= cols_; ++j) dst[j] -= f * src[j];
      at(i, c) = 0.0;
    }
    basis_[r] = c;
  }

  // Runs Bland's-rule simplex for `cost`; columns with allowed[j]==false never enter.
  // Returns false when unbounded.
  bool minimize(const std::vector<double>& cost, const std::vector<bool>& allowed, int& pivots) {
    std::vector<double> reduced(cols_);
    while (true) {
      for (std::size_t j = 0; j < cols_; ++j) {
        double z = cost[j];
        for (std::size_t i = 0; i < rows_; ++i) z -= cost[basis_[i]] * at(i, j);
        reduced[j] = z;
      }
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < cols_; ++j)
        if (allowed[j] && reduced[j] < -kCostTol) {
          enter = j;
          break;
        }
      if (enter == cols_) return true;

      std::size_t leave = rows_;
      double best_ratio = 0.0;
      for (std::size_t i = 0; i < rows_; ++i) {
        const double aij = at(i, enter);
        if (aij <= kPivotTol) continue;
        const double ratio = std::max(rhs(i), 0.0) / aij;
        if (leave == rows_ || ratio < best_ratio - 1e-12 ||
            (ratio <= best_ratio + 1e-12 && basis_[i] < basis_[leave])) {
          if (leave == rows_ || ratio < best_ratio - 1e-12) best_ratio = ratio;
          leave = i;
        }
      }
      if (leave == rows_) return false;
      pivot(leave, enter);
      if (++pivots > kMaxPivots) throw Error(ErrorKind::InvalidArgument, "lp_solve: pivot limit exceeded");
    }
  }

 private:
  std::size_t rows_, cols_;
  std::vector<double> a_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpResult lp_solve(const LinearProgram& lp) {
  const std::size_t n = lp.num_vars();
  const std::size_t m_eq = lp.eq_rows.size(), m_le = lp.le_rows.size();
  if (lp.eq_rhs.size() != m_eq || lp.le_rhs.size() != m_le)
    throw Error(ErrorKind::InvalidArgument, "lp_solve: rhs size mismatch");
  for (const auto& r : lp.eq_rows)
    if (r.size() != n) throw Error(ErrorKind::InvalidArgument, "lp_solve: row width mismatch");
  for (const auto& r : lp.le_rows)
    if (r.size() != n) throw Error(ErrorKind::InvalidArgument, "lp_solve: row width mismatch");

  const std::size_t m = m_eq + m_le;
  // Columns: originals, one slack per inequality row, then artificials where needed.
  struct RowInfo {
    const std::vector<double>* coef;
    double rhs;
    double sign;   // multiplier that makes rhs nonnegative
    double scale;  // 1 / max |coef|
    long slack;    // slack column or -1
  };
  std::vector<RowInfo> info;
  for (std::size_t i = 0; i < m_eq; ++i) info.push_back({&lp.eq_rows[i], lp.eq_rhs[i], 1.0, 1.0, -1});
  for (std::size_t i = 0; i < m_le; ++i)
    info.push_back({&lp.le_rows[i], lp.le_rhs[i], 1.0, 1.0, static_cast<long>(n + i)});
  std::size_t n_art = 0;
  for (auto& r : info) {
    r.sign = r.rhs < 0.0 ? -1.0 : 1.0;
    double mx = 0.0;
    for (double v : *r.coef) mx = std::max(mx, std::abs(v));
    r.scale = mx > 0.0 ? 1.0 / mx : 1.0;
    const bool slack_is_basis = r.slack >= 0 && r.sign > 0.0;
    if (!slack_is_basis) ++n_art;
  }
  const std::size_t cols = n + m_le + n_art;
  Tableau tab(m, cols);
  std::vector<bool> is_art(cols, false);
  std::size_t next_art = n + m_le;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& r = info[i];
    const double f = r.sign * r.scale;
    for (std::size_t j = 0; j < n; ++j) tab.at(i, j) = f * (*r.coef)[j];
    tab.rhs(i) = f * r.rhs;
    // Slack columns are rescaled to unit entries; slacks are never reported.
    if (r.slack >= 0) tab.at(i, r.slack) = r.sign;
    if (r.slack >= 0 && r.sign > 0.0) {
      tab.basis()[i] = r.slack;
    } else {
      tab.at(i, next_art) = 1.0;
      is_art[next_art] = true;
      tab.basis()[i] = next_art++;
    }
  }

  LpResult res;
  std::vector<bool> allowed(cols, true);
  if (n_art > 0) {
    std::vector<double> cost(cols, 0.0);
    for (std::size_t j = 0; j < cols; ++j)
      if (is_art[j]) cost[j] = 1.0;
    tab.minimize(cost, allowed, res.pivots);
    double infeas = 0.0;
    for (std::size_t i = 0; i < m; ++i)
      if (is_art[tab.basis()[i]]) infeas += std::max(tab.rhs(i), 0.0);
    if (infeas > 1e-9) {
      res.status = LpStatus::Infeasible;
      return res;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (!is_art[tab.basis()[i]]) continue;
      for (std::size_t j = 0; j < cols; ++j)
        if (!is_art[j] && std::abs(tab.at(i, j)) > 1e-9) {
          tab.pivot(i, j);
          break;
        }
    }
    for (std::size_t j = 0; j < cols; ++j)
      if (is_art[j]) allowed[j] = false;
  }

  std::vector<double> cost(cols, 0.0);
  for (std::size_t j = 0; j < n; ++j) cost[j] = -lp.objective[j];
  if (!tab.minimize(cost, allowed, res.pivots)) {
    res.status = LpStatus::Unbounded;
    return res;
  }

  res.status = LpStatus::Optimal;
  res.x.assign(n, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    if (tab.basis()[i] < n) res.x[tab.basis()[i]] = std::max(tab.rhs(i), 0.0);
  for (std::size_t j = 0; j < n; ++j) res.value += lp.objective[j] * res.x[j];

  for (std::size_t i = 0; i < m; ++i) {
    const auto& r = info[i];
    double lhs = 0.0;
    for (std::size_t j = 0; j < n; ++j) lhs += (*r.coef)[j] * res.x[j];
    const double viol = (r.slack >= 0) ? std::max(lhs - r.rhs, 0.0) : std::abs(lhs - r.rhs);
    res.max_residual = std::max(res.max_residual, viol * r.scale);
  }
  return res;
}

OracleResult worst_case_discrete(const ModeStats& stats, const CostParams& costs, double t,
                                 const OracleConfig& config) {
  require_feasible(stats);
  if (!(config.grid_step > 0.0) || !(config.support_max > 0.0) || !(config.moment_band >= 0.0))
    throw Error(ErrorKind::InvalidArgument, "worst_case_discrete: invalid oracle config");
  if (!(t >= 0.0 && t <= costs.horizon))
    throw Error(ErrorKind::OutOfRange, "worst_case_discrete: t outside [0, T]");

  const double m = stats.mean, var = stats.std_dev * stats.std_dev, d = config.moment_band;
  const double sv = stats.semivariance * var;
  const auto n = static_cast<std::size_t>(std::floor(config.support_max / config.grid_step + 1e-9)) + 1;
  std::vector<double> grid(n), ones(n, 1.0), first(n), second(n), signed_second(n);
  LinearProgram lp;
  lp.objective.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double x = static_cast<double>(k) * config.grid_step;
    grid[k] = x;
    lp.objective[k] = costs.overtime_rate * std::max(x - t, 0.0) + costs.idle_rate * std::max(t - x, 0.0);
    first[k] = x;
    second[k] = (x - m) * (x - m);
    signed_second[k] = x >= m ? second[k] : -second[k];
  }
  auto negate = [](std::vector<double> v) {
    for (double& x : v) x = -x;
    return v;
  };
  lp.add_eq(ones, 1.0);
  lp.add_le(first, m * (1.0 + d));
  lp.add_le(negate(first), -m * (1.0 - d));
  lp.add_le(second, var * (1.0 + d));
  lp.add_le(negate(second), -var * (1.0 - d));
  if (sv == 0.0) {
    lp.add_eq(signed_second, 0.0);
  } else {
    const double lo = std::min(sv * (1.0 - d), sv * (1.0 + d));
    const double hi = std::max(sv * (1.0 - d), sv * (1.0 + d));
    lp.add_le(signed_second, hi);
    lp.add_le(negate(signed_second), -lo);
  }

  const auto res = lp_solve(lp);
  if (res.status != LpStatus::Optimal) {
    std::ostringstream os;
    os << "worst_case_discrete: moment band " << d << " infeasible on grid step " << config.grid_step
       << " up to " << config.support_max;
    throw Error(ErrorKind::LpInfeasible, os.str());
  }
  OracleResult out;
  out.value = res.value;
  for (std::size_t k = 0; k < n; ++k)
    if (res.x[k] > 0.0) out.distribution.atoms.push_back({grid[k], res.x[k]});
  return out;
}

double tv_lp(std::span<const double> center, std::span<const double> values, double radius) {
  const std::size_t n = center.size();
  if (values.size() != n) throw Error(ErrorKind::InvalidArgument, "tv_lp: size mismatch");
  // Variables: p[0..n), dev[n..2n).
  LinearProgram lp;
  lp.objective.assign(2 * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) lp.objective[i] = values[i];
  std::vector<double> sum_p(2 * n, 0.0), sum_dev(2 * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    sum_p[i] = 1.0;
    sum_dev[n + i] = 1.0;
    std::vector<double> row(2 * n, 0.0);
    row[i] = 1.0;
    row[n + i] = -1.0;
    lp.add_le(row, center[i]);
    row[i] = -1.0;
    lp.add_le(row, -center[i]);
    std::vector<double> cap(2 * n, 0.0);
    cap[i] = 1.0;
    lp.add_le(std::move(cap), 1.0);
  }
  lp.add_eq(std::move(sum_p), 1.0);
  lp.add_le(std::move(sum_dev), std::min(radius, 2.0));
  const auto res = lp_solve(lp);
  if (res.status != LpStatus::Optimal) throw Error(ErrorKind::LpInfeasible, "tv_lp: ball LP not solvable");
  return res.value;
}

}  // namespace slotdesign
