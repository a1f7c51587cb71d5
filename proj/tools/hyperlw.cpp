// Command-line front end: solve, convergence, bench.
#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "hyperlw/error.hpp"
#include "hyperlw/harness.hpp"
#include "hyperlw/simd/kernels.hpp"

namespace {

constexpr int kConfigExit = 1;
constexpr int kPositivityExit = 2;

std::vector<int> parse_levels(const std::string& s) {
  std::vector<int> levels;
  std::stringstream ss(s);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    try {
      levels.push_back(std::stoi(cell));
    } catch (const std::exception&) {
      throw hyperlw::ConfigError("bad resolution '" + cell + "'");
    }
  }
  return levels;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"High-order WENO Lax-Wendroff solver for hyperbolic conservation laws"};
  app.require_subcommand(1);

  hyperlw::RunConfig cfg;
  std::string scheme = "lwa";
  double cfl = 0.0;
  double tend = 0.0;
  std::string out;
  std::string levels = "40,80,160,320";
  std::vector<std::string> problems = hyperlw::problem_ids();

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--problem", cfg.problem, "Problem id")->required()->check(CLI::IsMember(problems));
    cmd->add_option("--scheme", scheme, "rk3, lw, lwa, lwf or lwaf")->default_val("lwa");
    cmd->add_option("--space-order", cfg.space_order, "WENO order 2r-1")->default_val(5);
    cmd->add_option("--time-order", cfg.time_order, "Lax-Wendroff order R")->default_val(5);
    cmd->add_option("--cfl", cfl, "CFL number (problem default if omitted)");
    cmd->add_option("--tend", tend, "Final time (problem default if omitted)");
    cmd->add_flag("--fluctuation-control", cfg.fluctuation_control, "Use the LWAF/LWF recursion");
  };

  CLI::App* solve = app.add_subcommand("solve", "Run one problem and dump the final field");
  add_common(solve);
  solve->add_option("--nx", cfg.nx, "Nodes along x")->required();
  solve->add_option("--ny", cfg.ny, "Nodes along y");
  solve->add_option("--out", out, "Output directory")->required();
  solve->add_option("--dump-every", cfg.dump_every, "Intermediate dump interval in steps");

  CLI::App* conv = app.add_subcommand("convergence", "Error table over doubling resolutions");
  add_common(conv);
  conv->add_option("--levels", levels, "Comma-separated resolutions")->default_val(levels);
  conv->add_option("--out", out, "CSV file")->required();

  CLI::App* bench = app.add_subcommand("bench", "Time RK3, LWA5 and LWAF5 on the double Mach reflection");
  int bench_nx = 200;
  int bench_ny = 50;
  bench->add_option("--out", out, "CSV file")->required();
  bench->add_option("--nx", bench_nx, "Nodes along x")->default_val(200);
  bench->add_option("--ny", bench_ny, "Nodes along y")->default_val(50);

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.scheme = hyperlw::parse_scheme(scheme);
    if (app.got_subcommand(solve) || app.got_subcommand(conv)) {
      CLI::App* cmd = app.got_subcommand(solve) ? solve : conv;
      if (cmd->count("--cfl")) cfg.cfl = cfl;
      if (cmd->count("--tend")) cfg.t_end = tend;
    }
    if (app.got_subcommand(solve)) {
      cfg.out_dir = out;
      const hyperlw::RunResult r = hyperlw::run(cfg);
      std::printf("%s: %d steps, t = %.17g, %.3f s (simd: %s)\n", r.scheme.c_str(), r.steps, r.u.time(), r.seconds,
                  std::string(hyperlw::simd::backend_name(hyperlw::simd::active_backend())).c_str());
    } else if (app.got_subcommand(conv)) {
      const std::vector<int> n = parse_levels(levels);
      const std::vector<hyperlw::ErrorRow> rows = hyperlw::convergence_study(cfg, n);
      hyperlw::write_convergence_csv(out, rows);
      for (const auto& r : rows) {
        std::printf("%6d  %.3e  %6s  %.3e  %6s\n", r.n, r.err.l1, r.l1_order ? std::to_string(*r.l1_order).c_str() : "",
                    r.err.linf, r.linf_order ? std::to_string(*r.linf_order).c_str() : "");
      }
    } else {
      const std::vector<hyperlw::BenchRow> rows = hyperlw::bench_efficiency(bench_nx, bench_ny);
      hyperlw::write_bench_csv(out, rows);
      for (const auto& r : rows) {
        if (r.completed()) {
          std::printf("%-14s %6d steps %9.3f s  efficiency %.3f\n", r.scheme.c_str(), r.steps, r.seconds, r.efficiency);
        } else {
          std::printf("%-14s aborted: %s\n", r.scheme.c_str(), r.failure.c_str());
        }
      }
    }
  } catch (const hyperlw::PositivityError& e) {
    std::cerr << "positivity abort: " << e.what() << '\n';
    return kPositivityExit;
  } catch (const hyperlw::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kConfigExit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigExit;
  }
  return 0;
}
