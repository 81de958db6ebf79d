// Two-particle joint detection densities for a pair of point detectors at
// x - eps and x + eps, and the identical/distinguishable ratios built on them.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "bunching/spwf.hpp"

namespace bunching {

enum class Statistics { boson, fermion, distinguishable };

inline std::string_view to_string(Statistics s) {
  switch (s) {
    case Statistics::boson: return "boson";
    case Statistics::fermion: return "fermion";
    case Statistics::distinguishable: return "distinguishable";
  }
  return "";
}

/// Ratio of an identical-particle density to the distinguishable one; empty
/// when the distinguishable density is below the floor.
using RatioValue = std::optional<double>;

inline constexpr double kDenominatorFloor = 1e-300;

/// The two ways of routing the pair into the detectors:
///   direct   = psi1(x - eps) psi2(x + eps)
///   exchange = psi2(x - eps) psi1(x + eps)
/// Seen from f(s) = psi1(x - s) psi2(x + s), these are f(eps) and f(-eps).
struct PairAmplitudes {
  Amplitude direct;
  Amplitude exchange;
};

struct JointDensities {
  double distinguishable;
  double boson;
  double fermion;
};

namespace detail {

inline void check_separation(double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw std::invalid_argument("epsilon must be positive");
}

}  // namespace detail

inline PairAmplitudes pair_amplitudes(const WaveFunction& psi1, const WaveFunction& psi2, double x,
                                      double epsilon) {
  detail::check_separation(epsilon);
  return {psi1(x - epsilon) * psi2(x + epsilon), psi2(x - epsilon) * psi1(x + epsilon)};
}

inline double density(const PairAmplitudes& p, Statistics stats) {
  switch (stats) {
    case Statistics::boson: return std::norm(p.direct + p.exchange);
    case Statistics::fermion: return std::norm(p.direct - p.exchange);
    case Statistics::distinguishable: return std::norm(p.direct) + std::norm(p.exchange);
  }
  return 0.0;
}

inline JointDensities joint_densities_point(const WaveFunction& psi1, const WaveFunction& psi2, double x,
                                            double epsilon) {
  const auto p = pair_amplitudes(psi1, psi2, x, epsilon);
  return {density(p, Statistics::distinguishable), density(p, Statistics::boson), density(p, Statistics::fermion)};
}

inline double joint_density_point(const WaveFunction& psi1, const WaveFunction& psi2, Statistics stats, double x,
                                  double epsilon) {
  return density(pair_amplitudes(psi1, psi2, x, epsilon), stats);
}

inline RatioValue ratio_of(double identical, double distinguishable, double floor = kDenominatorFloor) {
  if (!(distinguishable >= floor)) return std::nullopt;
  return identical / distinguishable;
}

inline RatioValue ratio_point(const WaveFunction& psi1, const WaveFunction& psi2, Statistics stats, double x,
                              double epsilon, double floor = kDenominatorFloor) {
  if (stats == Statistics::distinguishable)
    throw std::invalid_argument("ratio is only defined for boson or fermion statistics");
  const auto p = pair_amplitudes(psi1, psi2, x, epsilon);
  return ratio_of(density(p, stats), density(p, Statistics::distinguishable), floor);
}

// ---------------------------------------------------------------------------
// Small-separation expansion at a regular point x0 (neither amplitude zero).
// ---------------------------------------------------------------------------

struct RegularPointExpansion {
  /// 2 - |f(eps) - f(-eps)|^2 / (|f(eps)|^2 + |f(-eps)|^2); equals the boson ratio exactly.
  double exact_identity;
  /// 2 - eps^2 |f'(0)|^2 / (2 |f(0)|^2) with the closed-form derivative.
  double printed;
  /// Same formula with f'(0) from a central difference of step h.
  double printed_fd;
  /// 2 - 2 eps^2 |f'(0)|^2 / |f(0)|^2, the leading Taylor term of exact_identity.
  double rederived;
};

/// f(s) = psi1(x0 - s) psi2(x0 + s); f'(0) = -psi1'(x0) psi2(x0) + psi1(x0) psi2'(x0).
inline RegularPointExpansion regular_point_expansion(const WaveFunction& psi1, const WaveFunction& psi2, double x0,
                                                     double epsilon, std::optional<double> h = std::nullopt) {
  detail::check_separation(epsilon);
  const double step = h.value_or(epsilon / 100.0);
  if (!(step > 0.0)) throw std::invalid_argument("finite-difference step must be positive");

  auto f = [&](double s) { return psi1(x0 - s) * psi2(x0 + s); };
  const Amplitude f0 = f(0.0);
  const Amplitude fp = f(epsilon);
  const Amplitude fm = f(-epsilon);
  const double scale = std::max(std::abs(fp), std::abs(fm));
  if (std::abs(f0) <= 1e-300 || std::abs(f0) <= 1e-12 * scale)
    throw std::domain_error("an amplitude vanishes at x0; the regular-point expansion does not apply");

  const Amplitude df = -psi1.derivative(x0) * psi2(x0) + psi1(x0) * psi2.derivative(x0);
  const Amplitude df_fd = (f(step) - f(-step)) / (2.0 * step);
  const double e2 = epsilon * epsilon;
  const double n0 = std::norm(f0);

  RegularPointExpansion out{};
  out.exact_identity = 2.0 - std::norm(fp - fm) / (std::norm(fp) + std::norm(fm));
  out.printed = 2.0 - e2 * std::norm(df) / (2.0 * n0);
  out.printed_fd = 2.0 - e2 * std::norm(df_fd) / (2.0 * n0);
  out.rederived = 2.0 - 2.0 * e2 * std::norm(df) / n0;
  return out;
}

/// The exact identity alone, at any x (zero points included).
inline RatioValue boson_ratio_identity(const WaveFunction& psi1, const WaveFunction& psi2, double x, double epsilon,
                                       double floor = kDenominatorFloor) {
  const auto p = pair_amplitudes(psi1, psi2, x, epsilon);
  const double den = std::norm(p.direct) + std::norm(p.exchange);
  if (!(den >= floor)) return std::nullopt;
  return 2.0 - std::norm(p.direct - p.exchange) / den;
}

}  // namespace bunching
