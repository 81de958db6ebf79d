// Scaling of the ratios with detector separation: the boson deficit at a
// regular point and the boson ratio at a zero both vanish as eps^2.

#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "bunching/csv.hpp"
#include "bunching/joint.hpp"
#include "bunching/spwf.hpp"

namespace bunching {

/// Least-squares slope of log(y) against log(x).
inline double loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("slope fit needs >= 2 paired samples");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw std::domain_error("log-log fit needs positive samples");
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

struct ConvergenceRow {
  double epsilon;
  RatioValue deficit_regular;   // 2 - rho_B at the regular point, from the ratio
  RatioValue deficit_identity;  // |f(eps) - f(-eps)|^2 / (|f(eps)|^2 + |f(-eps)|^2), no cancellation
  RatioValue rho_b_zero;        // rho_B at the zero
};

struct ConvergenceStudy {
  double x_regular;
  std::optional<double> x_zero;
  std::vector<ConvergenceRow> rows;
  std::optional<double> slope_regular;
  std::optional<double> slope_zero;
};

inline void check_eps_list(std::span<const double> eps) {
  if (eps.size() < 3) throw std::invalid_argument("eps list needs at least 3 values");
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (!(eps[i] > 0.0) || !std::isfinite(eps[i])) throw std::invalid_argument("eps values must be positive");
    if (i && !(eps[i] < eps[i - 1])) throw std::invalid_argument("eps values must be strictly decreasing");
  }
}

inline ConvergenceStudy convergence_study(const WaveFunction& psi1, const WaveFunction& psi2, double x_regular,
                                          std::optional<double> x_zero, std::span<const double> eps) {
  check_eps_list(eps);
  ConvergenceStudy s{x_regular, x_zero, {}, {}, {}};
  std::vector<double> e_reg, d_reg, e_zero, r_zero;
  for (double e : eps) {
    ConvergenceRow row{e, {}, {}, {}};
    if (const auto rb = ratio_point(psi1, psi2, Statistics::boson, x_regular, e)) row.deficit_regular = 2.0 - *rb;
    const auto p = pair_amplitudes(psi1, psi2, x_regular, e);
    row.deficit_identity = ratio_of(std::norm(p.direct - p.exchange), std::norm(p.direct) + std::norm(p.exchange));
    if (row.deficit_identity && *row.deficit_identity > 0.0) {
      e_reg.push_back(e);
      d_reg.push_back(*row.deficit_identity);
    }
    if (x_zero) {
      row.rho_b_zero = ratio_point(psi1, psi2, Statistics::boson, *x_zero, e);
      if (row.rho_b_zero && *row.rho_b_zero > 0.0) {
        e_zero.push_back(e);
        r_zero.push_back(*row.rho_b_zero);
      }
    }
    s.rows.push_back(row);
  }
  if (e_reg.size() >= 2) s.slope_regular = loglog_slope(e_reg, d_reg);
  if (e_zero.size() >= 2) s.slope_zero = loglog_slope(e_zero, r_zero);
  return s;
}

/// Rows per eps, then one row with "slope" in the eps column.
inline CsvTable convergence_table(const ConvergenceStudy& s) {
  CsvTable t({"eps", "deficit_regular", "deficit_identity", "rho_b_zero"});
  for (const auto& r : s.rows)
    t.add_row({r.epsilon, cell(r.deficit_regular), cell(r.deficit_identity), cell(r.rho_b_zero)});
  t.add_row({std::string("slope"), cell(s.slope_regular), cell(s.slope_regular), cell(s.slope_zero)});
  return t;
}

}  // namespace bunching
