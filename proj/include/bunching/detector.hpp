// Finite-width two-particle detector: one detector covering [x - eps, x + eps]
// that registers both particles anywhere inside it.
//
//   identical       = int int |psi1(z) psi2(y) +- psi2(z) psi1(y)|^2 dz dy
//   distinguishable = int int |psi1(z) psi2(y)|^2 + |psi2(z) psi1(y)|^2 dz dy
//
// Both integrals use a tensor-product Gauss-Legendre rule.

#pragma once

#include <complex>
#include <vector>

#include "bunching/joint.hpp"
#include "bunching/quadrature.hpp"
#include "bunching/spwf.hpp"

namespace bunching {

struct FiniteDetectorIntegrals {
  double distinguishable;
  double boson;
  double fermion;
};

inline FiniteDetectorIntegrals finite_detector_integrals(const WaveFunction& psi1, const WaveFunction& psi2,
                                                         double x, double epsilon, const GaussLegendre& rule) {
  detail::check_separation(epsilon);
  const int n = rule.size();
  std::vector<Amplitude> a(n), b(n);
  for (int i = 0; i < n; ++i) {
    const double z = x + epsilon * rule.nodes()[i];
    a[i] = psi1(z);
    b[i] = psi2(z);
  }
  FiniteDetectorIntegrals out{};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double w = rule.weights()[i] * rule.weights()[j];
      const Amplitude direct = a[i] * b[j];
      const Amplitude exchange = b[i] * a[j];
      out.boson += w * std::norm(direct + exchange);
      out.fermion += w * std::norm(direct - exchange);
      out.distinguishable += w * (std::norm(direct) + std::norm(exchange));
    }
  }
  const double jacobian = epsilon * epsilon;
  out.boson *= jacobian;
  out.fermion *= jacobian;
  out.distinguishable *= jacobian;
  return out;
}

inline RatioValue ratio_finite(const WaveFunction& psi1, const WaveFunction& psi2, Statistics stats, double x,
                               double epsilon, const GaussLegendre& rule, double floor = kDenominatorFloor) {
  if (stats == Statistics::distinguishable)
    throw std::invalid_argument("ratio is only defined for boson or fermion statistics");
  const auto in = finite_detector_integrals(psi1, psi2, x, epsilon, rule);
  return ratio_of(stats == Statistics::boson ? in.boson : in.fermion, in.distinguishable, floor);
}

inline RatioValue ratio_finite(const WaveFunction& psi1, const WaveFunction& psi2, Statistics stats, double x,
                               double epsilon, const QuadratureSpec& quad = {}, double floor = kDenominatorFloor) {
  return ratio_finite(psi1, psi2, stats, x, epsilon, GaussLegendre(quad), floor);
}

/// Boson ratio of the finite detector around a simple zero of one amplitude,
/// (1 + 6u^2) / (1 + 3u^2) with u = (x - x0)/eps.
inline double ratio_finite_closed_form(double x, double x0, double epsilon) {
  detail::check_separation(epsilon);
  const double u = (x - x0) / epsilon;
  if (!std::isfinite(u * u)) return 2.0;
  return (1.0 + 6.0 * u * u) / (1.0 + 3.0 * u * u);
}

}  // namespace bunching
