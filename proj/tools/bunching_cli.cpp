// Command-line front end: scans, zero reports, window averages, figure data,
// eps-convergence tables and higher-order zero curves, all as CSV.
//
// Exit codes: 0 success, 2 usage or config error, 3 I/O failure.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bunching/bunching.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw bunching::IoError("cannot open '" + path.string() + "' for writing");
  out << content;
  out.flush();
  if (!out) throw bunching::IoError("write to '" + path.string() + "' failed");
}

void write_table(const std::filesystem::path& path, const bunching::CsvTable& t) {
  std::ostringstream ss;
  t.write(ss);
  write_file(path, ss.str());
}

/// fig.csv + panel "rect" -> fig_rect.csv
std::filesystem::path panel_path(const std::filesystem::path& out, const std::string& panel) {
  if (panel.empty()) return out;
  auto p = out;
  p.replace_filename(out.stem().string() + "_" + panel + out.extension().string());
  return p;
}

std::vector<double> parse_eps_list(const std::string& text) {
  std::vector<double> eps;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("--eps: '" + item + "' is not a number");
    }
    if (used != item.size()) throw std::invalid_argument("--eps: '" + item + "' is not a number");
    eps.push_back(v);
  }
  return eps;
}

int cmd_scan(const std::string& config_path, const std::string& out_path) {
  const auto rc = bunching::load_run_config(config_path);
  const auto result = bunching::run_scan(rc.experiment, bunching::threads_from_env());
  write_table(out_path, bunching::scan_table(result));
  return 0;
}

int cmd_zeros(const std::string& config_path, const std::string& out_path) {
  const auto rc = bunching::load_run_config(config_path);
  const auto pair = bunching::build_experiment(rc.experiment);
  if (pair.coincident_zero_lattices)
    std::cerr << "note: 2L/xi is an integer; the zero lattices of the two sources coincide\n";
  const auto reports = bunching::zero_neighborhood_report(pair.psi1, pair.psi2, rc.experiment);
  write_table(out_path, bunching::zero_report_table(reports));
  return 0;
}

int cmd_average(const std::string& config_path, const std::string& out_path) {
  using bunching::Statistics;
  const auto rc = bunching::load_run_config(config_path);
  const auto& e = rc.experiment;
  const auto result = bunching::run_scan(e, bunching::threads_from_env());
  const auto window = rc.window.value_or(e.grid.interval());

  bunching::CsvTable t({"statistics", "window_lo", "window_hi", "numeric", "predicted", "skipped_fraction", "points"});
  for (const auto stats : {Statistics::boson, Statistics::fermion}) {
    if (!e.wants(stats)) continue;
    const auto avg = bunching::average_ratio_numeric(result, window, stats);
    const double predicted = e.source_profile == bunching::SourceProfile::rect
                                 ? bunching::sinc_mean_ratio_prediction(stats, e.epsilon, e.xi)
                                 : (stats == Statistics::boson ? 2.0 : 0.0);
    t.add_row({std::string(bunching::to_string(stats)), window.lo, window.hi, avg.value, predicted,
               avg.skipped_fraction, static_cast<std::int64_t>(avg.points)});
  }
  write_table(out_path, t);
  return 0;
}

int cmd_figure(const std::string& id, const std::string& out_path) {
  const auto panels = bunching::figure_data(id, bunching::threads_from_env());
  for (const auto& p : panels) write_table(panel_path(out_path, p.name), p.table);
  return 0;
}

int cmd_convergence(const std::string& config_path, const std::string& eps_text, const std::string& out_path) {
  const auto eps = parse_eps_list(eps_text);
  bunching::check_eps_list(eps);
  const auto rc = bunching::load_run_config(config_path);
  const auto pair = bunching::build_experiment(rc.experiment);

  auto x_zero = rc.x_zero;
  if (!x_zero) {
    // First zero of exactly one wave function inside the grid.
    for (const auto& r : bunching::zero_neighborhood_report(pair.psi1, pair.psi2, rc.experiment)) {
      if (r.status != bunching::ZeroStatus::degenerate && r.zero.order == 1) {
        x_zero = r.zero.location;
        break;
      }
    }
  }
  const auto study = bunching::convergence_study(pair.psi1, pair.psi2, rc.x_regular, x_zero, eps);
  write_table(out_path, bunching::convergence_table(study));
  return 0;
}

int cmd_appendix_b(int n, const std::string& config_path, const std::string& out_path) {
  double eps = 1.0;
  if (!config_path.empty()) eps = bunching::load_run_config(config_path).experiment.epsilon;
  const bunching::ZeroNeighborhood zn{0.0, eps, n};
  const auto scales = zn.scales();

  const bunching::Grid g{-20.0 * eps, 20.0 * eps, 4001};
  bunching::CsvTable t({"x", "rho_exact", "rho_near", "rho_far"});
  for (int i = 0; i < g.points; ++i) {
    const double x = g.at(i);
    t.add_row({x, zn.exact(x), zn.near(x), zn.far(x)});
  }
  write_table(out_path, t);

  const double window = 1000.0 * eps;
  const double numeric = bunching::higher_order_window_average(n, eps, window);
  const double printed = bunching::mean_ratio_prediction(bunching::Statistics::boson, eps, window, n);
  const double rederived = bunching::mean_ratio_rederived(bunching::Statistics::boson, eps, window, n);
  std::cout << "n=" << n << " epsilon=" << bunching::format_double(eps)
            << " delta1=" << bunching::format_double(scales.delta1)
            << " delta2=" << bunching::format_double(scales.delta2) << '\n'
            << "window_average=" << bunching::format_double(numeric) << " printed=" << bunching::format_double(printed)
            << " rederived=" << bunching::format_double(rederived) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-particle bunching and anti-bunching near wave-function zeros"};
  app.require_subcommand(1);

  std::string config, out, figure, eps;
  int n = 0;

  auto* scan = app.add_subcommand("scan", "Sweep the configured grid and write the scan CSV");
  scan->add_option("--config", config, "JSON experiment config")->required();
  scan->add_option("--out", out, "Output CSV")->required();

  auto* zeros = app.add_subcommand("zeros", "Compare the boson ratio with the generic law at every zero");
  zeros->add_option("--config", config, "JSON experiment config")->required();
  zeros->add_option("--out", out, "Output CSV")->required();

  auto* average = app.add_subcommand("average", "Window-averaged ratios against the closed-form predictions");
  average->add_option("--config", config, "JSON experiment config")->required();
  average->add_option("--out", out, "Output CSV")->required();

  auto* fig = app.add_subcommand("figure", "Write the data series of one figure");
  fig->add_option("--figure", figure, "Figure id: 2, 4, 5, 6, 7 or B1")->required();
  fig->add_option("--out", out, "Output CSV (multi-panel figures get a _<panel> suffix)")->required();

  auto* conv = app.add_subcommand("convergence", "Tabulate eps-scaling at a regular point and at a zero");
  conv->add_option("--config", config, "JSON experiment config")->required();
  conv->add_option("--eps", eps, "Comma-separated decreasing eps values (>= 3)")->required();
  conv->add_option("--out", out, "Output CSV")->required();

  auto* appb = app.add_subcommand("appendix-b", "Order-n zero curves and window average");
  appb->add_option("--n", n, "Zero order")->required();
  appb->add_option("--config", config, "Optional JSON config supplying epsilon");
  appb->add_option("--out", out, "Output CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*scan) return cmd_scan(config, out);
    if (*zeros) return cmd_zeros(config, out);
    if (*average) return cmd_average(config, out);
    if (*fig) return cmd_figure(figure, out);
    if (*conv) return cmd_convergence(config, eps, out);
    if (*appb) return cmd_appendix_b(n, config, out);
  } catch (const bunching::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
