// Data series behind the published figures. Each figure yields one or more
// named CSV panels; plotting is left to external scripts.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bunching/analytic.hpp"
#include "bunching/csv.hpp"
#include "bunching/detector.hpp"
#include "bunching/scan.hpp"

namespace bunching {

struct FigurePanel {
  std::string name;  // empty for single-panel figures
  CsvTable table;
};

inline const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids{"2", "4", "5", "6", "7", "B1"};
  return ids;
}

namespace detail {

/// Local-model curves in units of eps around a zero at the origin.
inline Grid local_grid(double half_width, int points) { return {-half_width, half_width, points}; }

inline FigurePanel ratio_panel(std::string name, const ExperimentConfig& c, Statistics stats, int threads) {
  const auto r = run_scan(c, threads);
  const char* col = stats == Statistics::boson ? "rho_b" : "rho_f";
  CsvTable t({"x", col});
  for (const auto& p : r.points) t.add_row({p.x, cell(stats == Statistics::boson ? p.rho_b : p.rho_f)});
  return {std::move(name), std::move(t)};
}

inline FigurePanel density_panel(const ExperimentConfig& c, int threads) {
  const auto r = run_scan(c, threads);
  CsvTable t({"x", "p_one", "p_ni", "p_boson", "p_fermion"});
  for (const auto& p : r.points) t.add_row({p.x, p.p_one, p.p_ni, cell(p.p_boson), cell(p.p_fermion)});
  return {"", std::move(t)};
}

}  // namespace detail

/// Figure 2: point-pair Lorentzian against the finite-width closed form,
/// x in units of eps with the zero at 0.
/// Figure 4/5: one-particle and joint densities, Gaussian/rect sources.
/// Figure 6/7: boson/fermion ratio, panels "gaussian" and "rect".
/// Figure B1: exact order-n law for n = 4 and n = 5.
inline std::vector<FigurePanel> figure_data(std::string_view id, int threads = 1) {
  const auto gauss = default_experiment(SourceProfile::gaussian);
  const auto rect = default_experiment(SourceProfile::rect);

  if (id == "2") {
    const auto g = detail::local_grid(5.0, 1001);
    CsvTable t({"x", "rho_point", "rho_wide"});
    for (int i = 0; i < g.points; ++i) {
      const double x = g.at(i);
      t.add_row({x, lorentzian_boson(x, 0.0, 1.0), ratio_finite_closed_form(x, 0.0, 1.0)});
    }
    return {{"", std::move(t)}};
  }
  if (id == "4") return {detail::density_panel(gauss, threads)};
  if (id == "5") return {detail::density_panel(rect, threads)};
  if (id == "6" || id == "7") {
    const auto stats = id == "6" ? Statistics::boson : Statistics::fermion;
    return {detail::ratio_panel("gaussian", gauss, stats, threads), detail::ratio_panel("rect", rect, stats, threads)};
  }
  if (id == "B1") {
    const auto g = detail::local_grid(10.0, 2001);
    CsvTable t({"x", "rho_n4", "rho_n5"});
    for (int i = 0; i < g.points; ++i) {
      const double x = g.at(i);
      t.add_row({x, higher_order_exact(x, 0.0, 1.0, 4), higher_order_exact(x, 0.0, 1.0, 5)});
    }
    return {{"", std::move(t)}};
  }
  throw std::invalid_argument("unknown figure id '" + std::string(id) + "'");
}

}  // namespace bunching
