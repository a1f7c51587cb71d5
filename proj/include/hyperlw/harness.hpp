#pragma once

#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyperlw/integrator.hpp"
#include "hyperlw/problems.hpp"

namespace hyperlw {

enum class Scheme { LW, LWA, LWF, LWAF, RK3 };

/// Parses rk3, lw, lwa, lwf, lwaf (case-insensitive). Throws ConfigError.
Scheme parse_scheme(std::string_view s);
std::string_view scheme_id(Scheme s);

struct RunConfig {
  std::string problem = "advection";
  Scheme scheme = Scheme::LWA;
  int space_order = 5;  // 2r - 1
  int time_order = 5;   // R, ignored by RK3
  int nx = 100;
  int ny = 0;  // 0 picks the problem default
  std::optional<double> cfl;
  std::optional<double> t_end;
  bool fluctuation_control = false;  // upgrades LW/LWA to LWF/LWAF
  std::filesystem::path out_dir;     // empty disables output
  int dump_every = 0;                // intermediate dumps every K steps

  /// The scheme after applying `fluctuation_control`.
  Scheme effective_scheme() const;
};

/// Integrator for the configured scheme. Throws ConfigError for an
/// unsupported combination, e.g. exact LW on a system.
std::unique_ptr<TimeIntegrator> make_integrator(const EquationSystem& eq, const RunConfig& cfg);

struct RunResult {
  SolutionField u;  // ghosts filled at the final time
  std::string scheme;
  int steps = 0;
  double seconds = 0.0;  // wall time of the time loop only
};

/// Called after every accepted step.
using StepObserver = std::function<void(const SolutionField& u, int step)>;

/// Advances the problem to t_end with delta = CFL-limited step, the last
/// step clipped to land on t_end. Positivity failures are rethrown with the
/// step index and time. Writes dumps to cfg.out_dir when set.
RunResult run(const Problem& p, const RunConfig& cfg, const StepObserver& observer = {});
RunResult run(const RunConfig& cfg);

struct ErrorNorms {
  double l1 = 0.0;
  double linf = 0.0;
};

/// Density-component errors: L1 weighted by the cell volume, and max norm.
/// Throws ConfigError when interiors differ in extent.
ErrorNorms error_norms(const SolutionField& numeric, const SolutionField& reference);

/// Interior nodes of `fine` at indices factor * (i, j), packed into a field
/// shaped like `coarse`. Throws ConfigError unless the extents match.
SolutionField restrict_nodes(const SolutionField& fine, const SolutionField& coarse, int factor);

/// Exact solution sampled at the interior nodes of `like` at time t.
SolutionField sample_exact(const Problem& p, const SolutionField& like, double t);

struct ErrorRow {
  int n = 0;
  ErrorNorms err;
  std::optional<double> l1_order;
  std::optional<double> linf_order;
};

/// Runs `base` at each resolution (nx = ny = n) and measures errors against
/// the exact solution, or, when the problem has none, against a WENO5-LWA5
/// run at `reference_factor` times the finest resolution.
std::vector<ErrorRow> convergence_study(const RunConfig& base, std::span<const int> levels, int reference_factor = 4);

/// CSV with header n,err1,ord1,errinf,ordinf; orders are empty on the first row.
void write_convergence_csv(const std::filesystem::path& file, std::span<const ErrorRow> rows);
std::vector<ErrorRow> read_convergence_csv(const std::filesystem::path& file);

/// exp(-kappa |grad rho| / max |grad rho|) on the interior, row-major with x
/// fastest; gradients by second-order central differences. Needs one ghost
/// layer filled.
std::vector<double> schlieren(const SolutionField& u, double kappa = 15.0);

/// Writes one float64 file per component (`<name>.bin`, row-major, x
/// fastest, rows from low y), an optional schlieren.bin, and meta.json.
void write_dump(const std::filesystem::path& dir, const SolutionField& u, const EquationSystem& eq,
                bool with_schlieren);

struct BenchRow {
  std::string scheme;
  int steps = 0;
  double seconds = 0.0;
  double efficiency = 0.0;  // t_RK3 / t_scheme, NaN unless both completed
  std::string failure;      // positivity message when the run aborted
  bool completed() const { return failure.empty(); }
};

/// Times RK3, LWA5 and LWAF5 on the double Mach reflection, sequentially.
/// A positivity abort is recorded in the row instead of thrown.
std::vector<BenchRow> bench_efficiency(int nx = 200, int ny = 50, double t_end = 0.2);
void write_bench_csv(const std::filesystem::path& file, std::span<const BenchRow> rows);

}  // namespace hyperlw
