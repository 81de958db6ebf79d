// Gauss-Legendre nodes and weights on [-1, 1].

#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

namespace bunching {

enum class QuadratureRule { gauss_legendre };

struct QuadratureSpec {
  int nodes_per_axis = 32;
  QuadratureRule rule = QuadratureRule::gauss_legendre;
};

class GaussLegendre {
 public:
  explicit GaussLegendre(int n) : nodes_(n), weights_(n) {
    if (n < 2) throw std::invalid_argument("nodes_per_axis must be >= 2");
    // Roots are symmetric; Newton on P_n from the Tricomi initial guess.
    for (int i = 0; i < (n + 1) / 2; ++i) {
      double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) <= 1e-16 * std::abs(x) + 1e-300) break;
      }
      // Re-evaluate the derivative at the converged root for the weight.
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double w = 2.0 / ((1.0 - x * x) * dp * dp);
      nodes_[i] = -x;
      nodes_[n - 1 - i] = x;
      weights_[i] = w;
      weights_[n - 1 - i] = w;
    }
    if (n % 2 == 1) nodes_[n / 2] = 0.0;
  }

  explicit GaussLegendre(const QuadratureSpec& spec) : GaussLegendre(spec.nodes_per_axis) {}

  int size() const { return static_cast<int>(nodes_.size()); }
  std::span<const double> nodes() const { return nodes_; }
  std::span<const double> weights() const { return weights_; }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

}  // namespace bunching
