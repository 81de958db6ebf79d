// Two-source experiments on a detection screen: far-field wave functions,
// grid sweeps of one- and two-particle densities, window averages and
// per-zero comparisons against the generic laws.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iterator>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

#include "bunching/analytic.hpp"
#include "bunching/csv.hpp"
#include "bunching/detector.hpp"
#include "bunching/joint.hpp"
#include "bunching/quadrature.hpp"
#include "bunching/spwf.hpp"

namespace bunching {

/// Invalid experiment parameter; `field()` names the offending key.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct Grid {
  double x_min = -10.0;
  double x_max = 10.0;
  int points = 4001;

  /// Point i; mirror-exact on symmetric grids (at(i) == -at(points-1-i)).
  double at(int i) const { return (x_min * (points - 1 - i) + x_max * i) / (points - 1); }
  double spacing() const { return (x_max - x_min) / (points - 1); }
  Interval interval() const { return {x_min, x_max}; }

  void validate() const {
    if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_min < x_max))
      throw ConfigError("grid", "x_min must be below x_max");
    if (points < 2) throw ConfigError("grid.points", "must be >= 2");
  }
};

enum class SourceProfile { gaussian, rect };

struct PointPair {};
struct FiniteWidth {
  QuadratureSpec quad;
};
using Detector = std::variant<PointPair, FiniteWidth>;

struct ExperimentConfig {
  SourceProfile source_profile = SourceProfile::rect;
  double xi = 1.0;
  double L = 2.25;  // half the source separation
  double epsilon = 0.02;
  Detector detector = PointPair{};
  Grid grid{};
  std::vector<Statistics> statistics{Statistics::boson, Statistics::fermion};

  bool wants(Statistics s) const { return std::find(statistics.begin(), statistics.end(), s) != statistics.end(); }

  void validate() const {
    if (!(xi > 0.0) || !std::isfinite(xi)) throw ConfigError("xi", "must be positive");
    if (!std::isfinite(L)) throw ConfigError("L", "must be finite");
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw ConfigError("epsilon", "must be positive");
    if (const auto* fw = std::get_if<FiniteWidth>(&detector); fw && fw->quad.nodes_per_axis < 2)
      throw ConfigError("detector.nodes_per_axis", "must be >= 2");
    grid.validate();
  }
};

/// Defaults used for figure data. The rect separation keeps 2L/xi
/// non-integral so that the zero lattices of the two sources interleave.
inline ExperimentConfig default_experiment(SourceProfile profile) {
  ExperimentConfig c;
  c.source_profile = profile;
  c.L = profile == SourceProfile::gaussian ? 2.0 : 2.25;
  return c;
}

struct ExperimentPair {
  WaveFunction psi1;  // centred at +L
  WaveFunction psi2;  // centred at -L
  /// Sinc zeros x = m xi + L and m' xi - L coincide when 2L/xi is an integer.
  bool coincident_zero_lattices = false;
};

inline ExperimentPair build_experiment(const ExperimentConfig& config) {
  config.validate();
  if (config.source_profile == SourceProfile::gaussian)
    return {Gaussian{config.xi, config.L}, Gaussian{config.xi, -config.L}, false};
  const double k = 2.0 * config.L / config.xi;
  const bool coincident = std::abs(k - std::round(k)) <= 1e-12 * std::max(1.0, std::abs(k));
  return {Sinc{config.xi, config.L}, Sinc{config.xi, -config.L}, coincident};
}

/// Equal-weight incoherent mixture of the two sources.
inline double one_particle_density(const WaveFunction& psi1, const WaveFunction& psi2, double x) {
  return 0.5 * (std::norm(psi1(x)) + std::norm(psi2(x)));
}

// ---------------------------------------------------------------------------
// Grid scan
// ---------------------------------------------------------------------------

struct ScanPoint {
  double x = 0.0;
  double p_one = 0.0;
  double p_ni = 0.0;
  std::optional<double> p_boson;
  std::optional<double> p_fermion;
  RatioValue rho_b;
  RatioValue rho_f;
  std::optional<ZeroPoint> nearest_zero;
};

struct ScanResult {
  ExperimentConfig config;
  std::vector<ZeroPoint> zeros;  // both wave functions, ascending
  std::vector<ScanPoint> points;
};

/// Worker count from BUNCHING_THREADS, else hardware concurrency.
inline int threads_from_env() {
  if (const char* s = std::getenv("BUNCHING_THREADS"); s && *s) {
    char* end = nullptr;
    const long v = std::strtol(s, &end, 10);
    if (end && *end == '\0' && v >= 1) return static_cast<int>(v);
    throw std::invalid_argument("BUNCHING_THREADS must be a positive integer");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

inline std::vector<ZeroPoint> pair_zeros(const WaveFunction& psi1, const WaveFunction& psi2, Interval iv) {
  const double tol = 1e-12 * std::max(iv.width(), 1e-300);
  auto zs = find_zeros(psi1, iv, tol, 1);
  auto z2 = find_zeros(psi2, iv, tol, 2);
  zs.insert(zs.end(), z2.begin(), z2.end());
  std::stable_sort(zs.begin(), zs.end(), [](const ZeroPoint& a, const ZeroPoint& b) {
    return a.location < b.location || (a.location == b.location && a.wf_index < b.wf_index);
  });
  return zs;
}

inline std::optional<ZeroPoint> nearest(const std::vector<ZeroPoint>& sorted, double x) {
  if (sorted.empty()) return std::nullopt;
  auto it = std::lower_bound(sorted.begin(), sorted.end(), x,
                             [](const ZeroPoint& z, double v) { return z.location < v; });
  if (it == sorted.end()) return sorted.back();
  if (it == sorted.begin()) return *it;
  const auto prev = std::prev(it);
  return (x - prev->location <= it->location - x) ? *prev : *it;
}

/// Evaluates every grid point. Points are split into contiguous blocks across
/// `threads` workers; each point is computed independently so the result does
/// not depend on the split.
inline ScanResult run_scan(const ExperimentConfig& config, int threads = 1) {
  const auto pair = build_experiment(config);
  ScanResult result{config, pair_zeros(pair.psi1, pair.psi2, config.grid.interval()), {}};
  const int n = config.grid.points;
  result.points.resize(n);

  std::optional<GaussLegendre> rule;
  if (const auto* fw = std::get_if<FiniteWidth>(&config.detector)) rule.emplace(fw->quad);

  const bool want_b = config.wants(Statistics::boson);
  const bool want_f = config.wants(Statistics::fermion);

  auto work = [&](int begin, int end) {
    for (int i = begin; i < end; ++i) {
      ScanPoint& p = result.points[i];
      p.x = config.grid.at(i);
      p.p_one = one_particle_density(pair.psi1, pair.psi2, p.x);
      double ni, b, f;
      if (rule) {
        const auto in = finite_detector_integrals(pair.psi1, pair.psi2, p.x, config.epsilon, *rule);
        ni = in.distinguishable;
        b = in.boson;
        f = in.fermion;
      } else {
        const auto d = joint_densities_point(pair.psi1, pair.psi2, p.x, config.epsilon);
        ni = d.distinguishable;
        b = d.boson;
        f = d.fermion;
      }
      p.p_ni = ni;
      if (want_b) {
        p.p_boson = b;
        p.rho_b = ratio_of(b, ni);
      }
      if (want_f) {
        p.p_fermion = f;
        p.rho_f = ratio_of(f, ni);
      }
      p.nearest_zero = nearest(result.zeros, p.x);
    }
  };

  const int workers = std::clamp(threads, 1, n);
  if (workers == 1) {
    work(0, n);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      const int begin = static_cast<int>(static_cast<long long>(n) * w / workers);
      const int end = static_cast<int>(static_cast<long long>(n) * (w + 1) / workers);
      pool.emplace_back(work, begin, end);
    }
  }
  return result;
}

inline CsvTable scan_table(const ScanResult& r) {
  CsvTable t({"x", "p_one", "p_ni", "p_boson", "p_fermion", "rho_b", "rho_f", "nearest_zero", "zero_order"});
  for (const auto& p : r.points) {
    CsvCell zl, zo;
    if (p.nearest_zero) {
      zl = p.nearest_zero->location;
      zo = static_cast<std::int64_t>(p.nearest_zero->order);
    }
    t.add_row({p.x, p.p_one, p.p_ni, cell(p.p_boson), cell(p.p_fermion), cell(p.rho_b), cell(p.rho_f), zl, zo});
  }
  return t;
}

inline void write_scan_csv(std::ostream& os, const ScanResult& r) { scan_table(r).write(os); }

// ---------------------------------------------------------------------------
// Window average
// ---------------------------------------------------------------------------

struct WindowAverage {
  double value;
  double skipped_fraction;  // grid points in the window with an undefined ratio
  int points;               // grid points in the window
};

/// Trapezoid average of rho over the grid points inside `window`. Segments
/// touching an undefined point are left out of both integral and length.
inline WindowAverage average_ratio_numeric(const ScanResult& result, Interval window, Statistics stats) {
  if (stats == Statistics::distinguishable)
    throw std::invalid_argument("mean ratio is only defined for boson or fermion statistics");
  const auto& g = result.config.grid;
  if (!(window.lo < window.hi) || window.lo < g.x_min || window.hi > g.x_max)
    throw std::out_of_range("averaging window must lie inside the grid");

  std::vector<const ScanPoint*> in;
  for (const auto& p : result.points)
    if (window.contains(p.x)) in.push_back(&p);
  if (in.size() < 100) throw std::invalid_argument("averaging window needs at least 100 grid points");

  auto rho = [stats](const ScanPoint& p) { return stats == Statistics::boson ? p.rho_b : p.rho_f; };
  int undefined = 0;
  for (const auto* p : in)
    if (!rho(*p)) ++undefined;

  double integral = 0.0, length = 0.0;
  for (std::size_t i = 0; i + 1 < in.size(); ++i) {
    const auto a = rho(*in[i]);
    const auto b = rho(*in[i + 1]);
    if (!a || !b) continue;
    const double h = in[i + 1]->x - in[i]->x;
    integral += 0.5 * h * (*a + *b);
    length += h;
  }
  if (!(length > 0.0)) throw std::domain_error("ratio undefined throughout the averaging window");
  return {integral / length, static_cast<double>(undefined) / static_cast<double>(in.size()),
          static_cast<int>(in.size())};
}

// ---------------------------------------------------------------------------
// Per-zero comparison with the generic laws
// ---------------------------------------------------------------------------

enum class ZeroStatus { compared, degenerate, no_model };

inline std::string_view to_string(ZeroStatus s) {
  switch (s) {
    case ZeroStatus::compared: return "ok";
    case ZeroStatus::degenerate: return "degenerate";
    case ZeroStatus::no_model: return "no_model";
  }
  return "";
}

struct OverlaySample {
  double x;
  RatioValue numeric;
  double model;
};

struct ZeroReport {
  ZeroPoint zero;
  ZeroStatus status = ZeroStatus::compared;
  std::vector<OverlaySample> samples;
  double max_deviation = 0.0;
};

inline constexpr int kOverlayHalfWidth = 20;     // in units of epsilon
inline constexpr int kOverlaySamplesPerEps = 10;

/// For every zero of exactly one wave function inside the grid, tabulates the
/// numeric boson ratio over |x - x0| <= 20 eps next to the generic law for the
/// configured detector. Zeros shared by both wave functions are reported as
/// degenerate and not compared.
inline std::vector<ZeroReport> zero_neighborhood_report(const WaveFunction& psi1, const WaveFunction& psi2,
                                                        const ExperimentConfig& config) {
  config.validate();
  const auto zeros = pair_zeros(psi1, psi2, config.grid.interval());

  double peak1 = 0.0, peak2 = 0.0;
  for (int i = 0; i < config.grid.points; ++i) {
    const double x = config.grid.at(i);
    peak1 = std::max(peak1, std::abs(psi1(x)));
    peak2 = std::max(peak2, std::abs(psi2(x)));
  }

  std::optional<GaussLegendre> rule;
  if (const auto* fw = std::get_if<FiniteWidth>(&config.detector)) rule.emplace(fw->quad);

  std::vector<ZeroReport> out;
  for (const auto& z : zeros) {
    // A shared zero appears once per wave function; report it once.
    if (!out.empty() && out.back().zero.location == z.location) continue;
    ZeroReport rep{z, ZeroStatus::compared, {}, 0.0};
    const WaveFunction& other = z.wf_index == 1 ? psi2 : psi1;
    const double other_peak = z.wf_index == 1 ? peak2 : peak1;
    if (std::abs(other(z.location)) <= 1e-10 * other_peak) {
      rep.status = ZeroStatus::degenerate;
      out.push_back(std::move(rep));
      continue;
    }
    if (rule && z.order != 1) {
      rep.status = ZeroStatus::no_model;
      out.push_back(std::move(rep));
      continue;
    }
    const double eps = config.epsilon;
    const int half = kOverlayHalfWidth * kOverlaySamplesPerEps;
    for (int k = -half; k <= half; ++k) {
      const double x = z.location + eps * static_cast<double>(k) / kOverlaySamplesPerEps;
      OverlaySample s{x, {}, 0.0};
      if (rule) {
        s.numeric = ratio_finite(psi1, psi2, Statistics::boson, x, eps, *rule);
        s.model = ratio_finite_closed_form(x, z.location, eps);
      } else {
        s.numeric = ratio_point(psi1, psi2, Statistics::boson, x, eps);
        s.model = z.order == 1 ? lorentzian_boson(x, z.location, eps) : higher_order_exact(x, z.location, eps, z.order);
      }
      if (s.numeric) rep.max_deviation = std::max(rep.max_deviation, std::abs(*s.numeric - s.model));
      rep.samples.push_back(s);
    }
    out.push_back(std::move(rep));
  }
  return out;
}

inline CsvTable zero_report_table(const std::vector<ZeroReport>& reports) {
  CsvTable t({"x0", "owner", "order", "status", "max_deviation", "x", "rho_numeric", "rho_model"});
  for (const auto& r : reports) {
    const CsvCell x0 = r.zero.location;
    const CsvCell owner = static_cast<std::int64_t>(r.zero.wf_index);
    const CsvCell order = static_cast<std::int64_t>(r.zero.order);
    const CsvCell status = std::string(to_string(r.status));
    if (r.samples.empty()) {
      t.add_row({x0, owner, order, status});
      continue;
    }
    for (const auto& s : r.samples) t.add_row({x0, owner, order, status, r.max_deviation, s.x, cell(s.numeric), s.model});
  }
  return t;
}

}  // namespace bunching
