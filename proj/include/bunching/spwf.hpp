// Single-particle wave functions on a one-dimensional detection screen.
//
// Four closed-form families are supported:
//   Gaussian      (xi*pi)^(-1/4) exp(-(x - center)^2 / (2 xi^2))
//   Sinc          sin(pi (x - center)/xi) / (pi (x - center)/xi)
//   MonomialZero  c (x - x0)^n
//   Constant      C
//
// The Gaussian prefactor is kept exactly as (xi*pi)^(-1/4). Every quantity
// computed downstream is a ratio, so the normalization constant never matters.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace bunching {

using Amplitude = std::complex<double>;

struct Gaussian {
  double xi;
  double center;
};

struct Sinc {
  double xi;
  double center;
};

struct MonomialZero {
  Amplitude c;
  double x0;
  int n;
};

struct Constant {
  Amplitude value;
};

namespace detail {

/// x^n by repeated multiplication; (-x)^n == (-1)^n x^n bit for bit.
template <typename T>
constexpr T ipow(T x, int n) {
  T r{1};
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

inline bool finite(Amplitude a) { return std::isfinite(a.real()) && std::isfinite(a.imag()); }

}  // namespace detail

class WaveFunction {
 public:
  using Family = std::variant<Gaussian, Sinc, MonomialZero, Constant>;

  template <class F>
    requires(std::same_as<F, Gaussian> || std::same_as<F, Sinc> || std::same_as<F, MonomialZero> ||
             std::same_as<F, Constant> || std::same_as<F, Family>)
  WaveFunction(F family) : family_(std::move(family)) {  // NOLINT(google-explicit-constructor)
    validate();
  }

  const Family& family() const { return family_; }

  /// Length scale intrinsic to the family, if it has one (xi for Gaussian and Sinc).
  std::optional<double> intrinsic_scale() const {
    if (const auto* g = std::get_if<Gaussian>(&family_)) return g->xi;
    if (const auto* s = std::get_if<Sinc>(&family_)) return s->xi;
    return std::nullopt;
  }

  Amplitude operator()(double x) const {
    return std::visit([x](const auto& f) { return eval(f, x); }, family_);
  }

  /// Closed-form first derivative.
  Amplitude derivative(double x) const {
    return std::visit([x](const auto& f) { return deriv(f, x); }, family_);
  }

 private:
  void validate() const {
    std::visit(
        [](const auto& f) {
          using F = std::decay_t<decltype(f)>;
          if constexpr (std::is_same_v<F, Gaussian> || std::is_same_v<F, Sinc>) {
            if (!(f.xi > 0.0) || !std::isfinite(f.xi)) throw std::invalid_argument("xi must be positive and finite");
            if (!std::isfinite(f.center)) throw std::invalid_argument("center must be finite");
          } else if constexpr (std::is_same_v<F, MonomialZero>) {
            if (f.n < 1) throw std::invalid_argument("zero order n must be >= 1");
            if (f.c == Amplitude{} || !detail::finite(f.c)) throw std::invalid_argument("coefficient c must be nonzero");
            if (!std::isfinite(f.x0)) throw std::invalid_argument("x0 must be finite");
          } else {
            if (f.value == Amplitude{} || !detail::finite(f.value))
              throw std::invalid_argument("constant amplitude must be nonzero");
          }
        },
        family_);
  }

  static Amplitude eval(const Gaussian& g, double x) {
    const double d = x - g.center;
    return std::pow(g.xi * std::numbers::pi, -0.25) * std::exp(-d * d / (2.0 * g.xi * g.xi));
  }

  static Amplitude eval(const Sinc& s, double x) {
    const double t = std::numbers::pi * (x - s.center) / s.xi;
    if (std::abs(t) < 1e-8) return 1.0 - t * t / 6.0;
    return std::sin(t) / t;
  }

  static Amplitude eval(const MonomialZero& m, double x) { return m.c * detail::ipow(x - m.x0, m.n); }

  static Amplitude eval(const Constant& c, double) { return c.value; }

  static Amplitude deriv(const Gaussian& g, double x) { return -(x - g.center) / (g.xi * g.xi) * eval(g, x); }

  static Amplitude deriv(const Sinc& s, double x) {
    const double k = std::numbers::pi / s.xi;
    const double t = k * (x - s.center);
    if (std::abs(t) < 1e-4) return k * (-t / 3.0 + t * t * t / 30.0);
    return k * (t * std::cos(t) - std::sin(t)) / (t * t);
  }

  static Amplitude deriv(const MonomialZero& m, double x) {
    return m.c * static_cast<double>(m.n) * detail::ipow(x - m.x0, m.n - 1);
  }

  static Amplitude deriv(const Constant&, double) { return {}; }

  Family family_;
};

inline Amplitude evaluate(const WaveFunction& wf, double x) { return wf(x); }

// ---------------------------------------------------------------------------
// Zeros
// ---------------------------------------------------------------------------

struct Interval {
  double lo;
  double hi;
  double width() const { return hi - lo; }
  bool contains(double x) const { return x >= lo && x <= hi; }
};

struct ZeroPoint {
  double location;
  int order;
  int wf_index;  // 1 or 2: which wave function of a pair vanishes here
};

namespace detail {

inline void check_zero_query(const Interval& iv, double tol) {
  if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi) || iv.lo > iv.hi)
    throw std::invalid_argument("interval must be finite and nonempty");
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
}

inline double effective_scale(const WaveFunction& wf, const Interval& iv) {
  if (auto s = wf.intrinsic_scale()) return *s;
  return iv.width() > 0.0 ? iv.width() / 10.0 : 1.0;
}

}  // namespace detail

/// Analytic zero set of `wf` inside `iv`, sorted ascending.
inline std::vector<ZeroPoint> find_zeros(const WaveFunction& wf, Interval iv, double tol, int wf_index = 1) {
  detail::check_zero_query(iv, tol);
  std::vector<ZeroPoint> out;
  if (const auto* s = std::get_if<Sinc>(&wf.family())) {
    const auto m_lo = static_cast<long long>(std::ceil((iv.lo - s->center) / s->xi));
    const auto m_hi = static_cast<long long>(std::floor((iv.hi - s->center) / s->xi));
    for (long long m = m_lo; m <= m_hi; ++m) {
      if (m == 0) continue;
      const double x = s->center + static_cast<double>(m) * s->xi;
      if (iv.contains(x)) out.push_back({x, 1, wf_index});
    }
  } else if (const auto* z = std::get_if<MonomialZero>(&wf.family())) {
    if (iv.contains(z->x0)) out.push_back({z->x0, z->n, wf_index});
  }
  return out;
}

/// Order of the zero at `location` from the log-log slope of |psi| over two
/// decades of distance below scale/10.
inline int classify_zero_order(const WaveFunction& wf, double location, double scale) {
  constexpr int kSamples = 9;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int k = 0; k < kSamples; ++k) {
    const double d = scale / 10.0 * std::pow(10.0, -2.0 * k / (kSamples - 1));
    const double mag = 0.5 * (std::abs(wf(location + d)) + std::abs(wf(location - d)));
    const double lx = std::log(d);
    const double ly = std::log(std::max(mag, 1e-300));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double slope = (kSamples * sxy - sx * sy) / (kSamples * sxx - sx * sx);
  return std::max(1, static_cast<int>(std::lround(slope)));
}

struct BisectionOptions {
  /// Number of sampling intervals; 0 selects 10 * ceil(width / scale).
  int samples = 0;
};

/// Generic zero finder: brackets sign changes of the phase-projected real part
/// (odd orders) and of its derivative (even orders), refines each bracket by
/// bisection to `tol`, and certifies candidates against the sampled maximum.
inline std::vector<ZeroPoint> find_zeros_bisection(const WaveFunction& wf, Interval iv, double tol,
                                                   BisectionOptions opts = {}, int wf_index = 1) {
  detail::check_zero_query(iv, tol);
  std::vector<ZeroPoint> out;
  if (iv.width() == 0.0) {
    if (std::abs(wf(iv.lo)) == 0.0) out.push_back({iv.lo, 1, wf_index});
    return out;
  }
  const double scale = detail::effective_scale(wf, iv);
  const int n = opts.samples > 0 ? opts.samples
                                 : 10 * std::max(1, static_cast<int>(std::ceil(iv.width() / scale)));

  std::vector<double> xs(n + 1);
  std::vector<Amplitude> vals(n + 1);
  for (int i = 0; i <= n; ++i) {
    xs[i] = (iv.lo * (n - i) + iv.hi * i) / n;
    vals[i] = wf(xs[i]);
  }
  const auto peak = std::max_element(vals.begin(), vals.end(),
                                     [](Amplitude a, Amplitude b) { return std::abs(a) < std::abs(b); });
  const double max_abs = std::abs(*peak);
  if (max_abs == 0.0) return out;
  const Amplitude phase = std::conj(*peak / max_abs);
  const double certify = 1e-12 * max_abs;

  auto g = [&](double x) { return (wf(x) * phase).real(); };
  auto dg = [&](double x) { return (wf.derivative(x) * phase).real(); };
  // Runs to machine precision, which is always within tol.
  auto bisect = [](auto&& f, double a, double b) {
    double fa = f(a);
    for (int it = 0; it < 2048; ++it) {
      const double m = 0.5 * (a + b);
      if (m <= a || m >= b) break;
      const double fm = f(m);
      if (fm == 0.0) return m;
      if ((fm < 0.0) == (fa < 0.0)) {
        a = m;
        fa = fm;
      } else {
        b = m;
      }
    }
    return 0.5 * (a + b);
  };

  std::vector<double> candidates;
  std::vector<double> gs(n + 1), dgs(n + 1);
  for (int i = 0; i <= n; ++i) {
    gs[i] = (vals[i] * phase).real();
    dgs[i] = dg(xs[i]);
  }
  for (int i = 0; i <= n; ++i) {
    if (gs[i] == 0.0) candidates.push_back(xs[i]);
  }
  for (int i = 0; i < n; ++i) {
    if (gs[i] != 0.0 && gs[i + 1] != 0.0 && (gs[i] < 0.0) != (gs[i + 1] < 0.0))
      candidates.push_back(bisect(g, xs[i], xs[i + 1]));
    if (dgs[i] != 0.0 && dgs[i + 1] != 0.0 && (dgs[i] < 0.0) != (dgs[i + 1] < 0.0)) {
      const double x = bisect(dg, xs[i], xs[i + 1]);
      if (std::abs(wf(x)) <= certify) candidates.push_back(x);
    }
  }
  std::sort(candidates.begin(), candidates.end());

  const double merge = (iv.hi - iv.lo) / n;
  for (double c : candidates) {
    if (std::abs(wf(c)) > certify) continue;
    if (!out.empty() && c - out.back().location <= merge) {
      if (std::abs(wf(c)) < std::abs(wf(out.back().location))) out.back().location = c;
      continue;
    }
    out.push_back({c, 0, wf_index});
  }
  for (auto& z : out) z.order = classify_zero_order(wf, z.location, scale);
  return out;
}

// ---------------------------------------------------------------------------

/// Width of the source whose far field has width `xi` at distance `l` for
/// mean wave number `k`.
inline double far_field_source_width(double l, double k, double xi) {
  if (!(l > 0.0) || !(k > 0.0) || !(xi > 0.0)) throw std::invalid_argument("l, k and xi must be positive");
  return l / (k * xi);
}

}  // namespace bunching
