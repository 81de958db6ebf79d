// Generic ratio laws in the neighbourhood of an amplitude zero.
//
// Near a zero of order n of psi1 (psi1 ~ c (x - x0)^n, psi2 ~ C) the point
// detector ratio no longer depends on c or C. With u = (x - x0)/eps:
//
//   exact   rho = |(u-1)^n + (u+1)^n|^2 / (|u-1|^{2n} + |u+1|^{2n})
//   n = 1   rho_B = 2 u^2 / (u^2 + 1),  rho_F = 2 / (u^2 + 1)
//
// Two length scales govern the shape: delta1 = eps/sqrt(2n) near the zero and
// delta2 = sqrt(2n) eps for the recovery towards 2.

#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bunching/joint.hpp"

namespace bunching {

namespace detail {

inline double scaled_offset(double x, double x0, double epsilon) {
  check_separation(epsilon);
  return (x - x0) / epsilon;
}

inline void check_order(int n) {
  if (n < 1) throw std::invalid_argument("zero order n must be >= 1");
}

}  // namespace detail

inline double lorentzian_boson(double x, double x0, double epsilon) {
  const double u = detail::scaled_offset(x, x0, epsilon);
  const double u2 = u * u;
  if (!std::isfinite(u2)) return 2.0;
  return 2.0 * u2 / (u2 + 1.0);
}

inline double lorentzian_fermion(double x, double x0, double epsilon) {
  const double u = detail::scaled_offset(x, x0, epsilon);
  return 2.0 / (u * u + 1.0);
}

/// Exact order-n law. max(|u-1|, |u+1|)^{2n} is factored out of numerator and
/// denominator so that large n and large |u| do not overflow.
inline double higher_order_exact(double x, double x0, double epsilon, int n) {
  detail::check_order(n);
  const double u = detail::scaled_offset(x, x0, epsilon);
  if (!std::isfinite(u)) return 2.0;
  double a = u - 1.0;
  double b = u + 1.0;
  const double s = std::max(std::abs(a), std::abs(b));
  a /= s;
  b /= s;
  const double an = detail::ipow(a, n);
  const double bn = detail::ipow(b, n);
  return (an + bn) * (an + bn) / (an * an + bn * bn);
}

/// Far-field form, valid for |x - x0| > eps.
inline double higher_order_far(double x, double x0, double epsilon, int n) {
  detail::check_order(n);
  const double u = detail::scaled_offset(x, x0, epsilon);
  const double m = 2.0 * n - 1.0;
  return 2.0 - (2.0 * n / m) / (u * u / (n * m) + 1.0);
}

/// Near-field form, valid for |x - x0| < eps. Uses the combined rational
/// expression; for even n it is exactly 2(1 + n(n-1)u^2)/(1 + n(2n-1)u^2).
inline double higher_order_near(double x, double x0, double epsilon, int n) {
  detail::check_order(n);
  const double u = detail::scaled_offset(x, x0, epsilon);
  const double u2 = u * u;
  const double parity = (n % 2 == 0) ? 2.0 : 0.0;  // (-1)^n + 1
  const double p2 = parity * parity;
  return (p2 + n * (4.0 * n - p2) * u2) / (2.0 + 2.0 * n * (2.0 * n - 1.0) * u2);
}

/// Leading term 2 n^2 u^2 of the near-field form for odd n.
inline double higher_order_near_odd_leading(double x, double x0, double epsilon, int n) {
  detail::check_order(n);
  const double u = detail::scaled_offset(x, x0, epsilon);
  return 2.0 * n * n * u * u;
}

struct LengthScales {
  double delta1;
  double delta2;
};

inline LengthScales length_scales(int n, double epsilon) {
  detail::check_order(n);
  detail::check_separation(epsilon);
  const double r = std::sqrt(2.0 * n);
  return {epsilon / r, r * epsilon};
}

/// Parameters of one zero neighbourhood; bundles the free functions above.
struct ZeroNeighborhood {
  double x0;
  double epsilon;
  int n = 1;

  double exact(double x) const { return higher_order_exact(x, x0, epsilon, n); }
  double near(double x) const { return higher_order_near(x, x0, epsilon, n); }
  double far(double x) const { return higher_order_far(x, x0, epsilon, n); }
  LengthScales scales() const { return length_scales(n, epsilon); }
};

// ---------------------------------------------------------------------------
// Window averages
// ---------------------------------------------------------------------------

namespace detail {

inline void check_average_query(Statistics stats, double epsilon, double delta_x, int n) {
  if (stats == Statistics::distinguishable)
    throw std::invalid_argument("mean ratio is only defined for boson or fermion statistics");
  check_separation(epsilon);
  check_order(n);
  if (!(delta_x > 0.0)) throw std::invalid_argument("delta_x must be positive");
}

}  // namespace detail

/// Mean ratio over a window of length delta_x holding one zero of order n.
/// n = 1: 2(1 - pi eps/dx) for bosons, 2 pi eps/dx for fermions.
/// n > 1: 2 - pi sqrt(2n) eps/dx for bosons, its complement for fermions.
inline double mean_ratio_prediction(Statistics stats, double epsilon, double delta_x, int n = 1) {
  detail::check_average_query(stats, epsilon, delta_x, n);
  const double deficit = (n == 1) ? 2.0 * std::numbers::pi * epsilon / delta_x
                                  : std::numbers::pi * std::sqrt(2.0 * n) * epsilon / delta_x;
  return stats == Statistics::boson ? 2.0 - deficit : deficit;
}

/// Same average with the deficit obtained by integrating the far-field form
/// over the whole line: 2 pi eps n^{3/2} / sqrt(2n - 1). Equals the n = 1
/// prediction at n = 1.
inline double mean_ratio_rederived(Statistics stats, double epsilon, double delta_x, int n = 1) {
  detail::check_average_query(stats, epsilon, delta_x, n);
  const double deficit = 2.0 * std::numbers::pi * epsilon * std::pow(n, 1.5) / std::sqrt(2.0 * n - 1.0) / delta_x;
  return stats == Statistics::boson ? 2.0 - deficit : deficit;
}

/// Trapezoid average of the exact order-n law over a window of length
/// delta_x centred on the zero, `per_eps` samples per eps.
inline double higher_order_window_average(int n, double epsilon, double delta_x, int per_eps = 20) {
  detail::check_order(n);
  detail::check_separation(epsilon);
  if (!(delta_x > 0.0)) throw std::invalid_argument("delta_x must be positive");
  if (per_eps < 1) throw std::invalid_argument("per_eps must be >= 1");
  const auto intervals = static_cast<long long>(std::ceil(delta_x / epsilon * per_eps));
  const double h = delta_x / static_cast<double>(intervals);
  double sum = 0.0;
  for (long long i = 0; i <= intervals; ++i) {
    const double x = -0.5 * delta_x + h * static_cast<double>(i);
    const double w = (i == 0 || i == intervals) ? 0.5 : 1.0;
    sum += w * higher_order_exact(x, 0.0, epsilon, n);
  }
  return sum * h / delta_x;
}

/// Two interleaved sinc zero lattices: mean zero spacing xi/2.
inline double sinc_mean_ratio_prediction(Statistics stats, double epsilon, double xi) {
  return mean_ratio_prediction(stats, epsilon, xi / 2.0, 1);
}

}  // namespace bunching
