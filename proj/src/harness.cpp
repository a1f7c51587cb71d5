#include "hyperlw/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <limits>
#include <sstream>

#include "hyperlw/error.hpp"
#include "hyperlw/lw.hpp"
#include "hyperlw/rk.hpp"

namespace hyperlw {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::string dump_name(int step) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "dump_%06d", step);
  return buf;
}

void write_plane(const std::filesystem::path& file, const std::vector<double>& v) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + file.string());
  out.write(reinterpret_cast<const char*>(v.data()), static_cast<std::streamsize>(v.size() * sizeof(double)));
}

std::vector<double> interior(const SolutionField& u, int c) {
  std::vector<double> v;
  v.reserve(static_cast<std::size_t>(u.nx()) * u.ny());
  for (int j = 0; j < u.ny(); ++j) {
    const double* row = u.data(c) + u.index(0, j);
    v.insert(v.end(), row, row + u.nx());
  }
  return v;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Scheme parse_scheme(std::string_view s) {
  const std::string id = lower(s);
  if (id == "lw") return Scheme::LW;
  if (id == "lwa") return Scheme::LWA;
  if (id == "lwf") return Scheme::LWF;
  if (id == "lwaf") return Scheme::LWAF;
  if (id == "rk3") return Scheme::RK3;
  throw ConfigError("unknown scheme '" + std::string(s) + "'");
}

std::string_view scheme_id(Scheme s) {
  switch (s) {
    case Scheme::LW: return "lw";
    case Scheme::LWA: return "lwa";
    case Scheme::LWF: return "lwf";
    case Scheme::LWAF: return "lwaf";
    case Scheme::RK3: return "rk3";
  }
  return "?";
}

Scheme RunConfig::effective_scheme() const {
  if (!fluctuation_control) return scheme;
  if (scheme == Scheme::LW) return Scheme::LWF;
  if (scheme == Scheme::LWA) return Scheme::LWAF;
  if (scheme == Scheme::RK3) throw ConfigError("fluctuation control applies to Lax-Wendroff schemes only");
  return scheme;
}

std::unique_ptr<TimeIntegrator> make_integrator(const EquationSystem& eq, const RunConfig& cfg) {
  if (cfg.space_order < 3 || cfg.space_order % 2 == 0) throw ConfigError("spatial order must be odd and >= 3");
  WenoConfig weno;
  weno.r = (cfg.space_order + 1) / 2;
  weno.validate();
  const Scheme s = cfg.effective_scheme();
  if (s == Scheme::RK3) return std::make_unique<Rk3Integrator>(eq, weno);
  LwConfig lw;
  lw.time_order = cfg.time_order;
  lw.weno = weno;
  lw.exact = s == Scheme::LW || s == Scheme::LWF;
  lw.fluctuation_control = s == Scheme::LWF || s == Scheme::LWAF;
  return std::make_unique<LaxWendroffIntegrator>(eq, lw);
}

RunResult run(const Problem& p, const RunConfig& cfg, const StepObserver& observer) {
  const double cfl = cfg.cfl.value_or(p.cfl);
  const double t_end = cfg.t_end.value_or(p.t_end);
  if (!(cfl > 0.0)) throw ConfigError("CFL number must be positive");
  if (!(t_end >= 0.0) || !std::isfinite(t_end)) throw ConfigError("final time must be finite and non-negative");
  if (cfg.dump_every < 0) throw ConfigError("dump interval must be non-negative");
  const std::unique_ptr<TimeIntegrator> integrator = make_integrator(*p.eq, cfg);
  const bool two_d = p.axes.size() == 2;
  const bool schlieren_dump = two_d && p.eq->components() == 4;

  RunResult result;
  result.scheme = integrator->name();
  result.u = initial_field(p, integrator->ghost_width());
  SolutionField& u = result.u;

  auto dump = [&](const std::string& name) {
    if (cfg.out_dir.empty()) return;
    fill_ghosts(u, p.bc, *p.eq, u.time());
    write_dump(cfg.out_dir / name, u, *p.eq, schlieren_dump);
  };
  if (cfg.dump_every > 0) dump(dump_name(0));

  const double tol = 1e-13 * std::max(1.0, t_end);
  const auto start = std::chrono::steady_clock::now();
  while (t_end - u.time() > tol) {
    double delta = 0.0;
    try {
      delta = std::min(cfl_time_step(*p.eq, u, cfl), t_end - u.time());
      integrator->step(u, p.bc, delta);
    } catch (const PositivityError& e) {
      std::ostringstream msg;
      msg << result.scheme << " aborted at step " << result.steps + 1 << ", t = " << u.time() << ": " << e.what();
      throw PositivityError(msg.str());
    }
    ++result.steps;
    if (observer) observer(u, result.steps);
    if (cfg.dump_every > 0 && result.steps % cfg.dump_every == 0) dump(dump_name(result.steps));
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  u.set_time(t_end);
  fill_ghosts(u, p.bc, *p.eq, u.time());
  dump("final");
  return result;
}

RunResult run(const RunConfig& cfg) { return run(make_problem(cfg.problem, cfg.nx, cfg.ny), cfg); }

ErrorNorms error_norms(const SolutionField& numeric, const SolutionField& reference) {
  if (numeric.nx() != reference.nx() || numeric.ny() != reference.ny() ||
      numeric.dimension() != reference.dimension()) {
    throw ConfigError("error norms need fields on the same grid");
  }
  double volume = 1.0;
  for (int a = 0; a < numeric.dimension(); ++a) volume *= numeric.spacing(a);
  ErrorNorms e;
  for (int j = 0; j < numeric.ny(); ++j) {
    for (int i = 0; i < numeric.nx(); ++i) {
      const double d = std::abs(numeric(0, i, j) - reference(0, i, j));
      e.l1 += d;
      e.linf = std::max(e.linf, d);
    }
  }
  e.l1 *= volume;
  return e;
}

SolutionField restrict_nodes(const SolutionField& fine, const SolutionField& coarse, int factor) {
  if (factor < 1 || fine.nx() != factor * coarse.nx() ||
      (coarse.dimension() == 2 && fine.ny() != factor * coarse.ny()) || fine.dimension() != coarse.dimension()) {
    throw ConfigError("fine grid is not an exact refinement of the coarse grid");
  }
  SolutionField out = zeros_like(coarse, fine.components());
  const int fy = coarse.dimension() == 2 ? factor : 0;
  for (int c = 0; c < fine.components(); ++c) {
    for (int j = 0; j < coarse.ny(); ++j) {
      for (int i = 0; i < coarse.nx(); ++i) out(c, i, j) = fine(c, factor * i, fy * j);
    }
  }
  out.set_time(fine.time());
  return out;
}

SolutionField sample_exact(const Problem& p, const SolutionField& like, double t) {
  if (!p.exact) throw ConfigError("problem '" + p.id + "' has no closed-form solution");
  SolutionField out = zeros_like(like);
  const bool two_d = like.dimension() == 2;
  for (int j = 0; j < like.ny(); ++j) {
    const double y = two_d ? like.axis(1).coord(j) : 0.0;
    for (int i = 0; i < like.nx(); ++i) out.set_state(i, j, p.exact(like.axis(0).coord(i), y, t));
  }
  out.set_time(t);
  return out;
}

std::vector<ErrorRow> convergence_study(const RunConfig& base, std::span<const int> levels, int reference_factor) {
  if (levels.empty()) throw ConfigError("convergence study needs at least one resolution");
  for (std::size_t k = 1; k < levels.size(); ++k) {
    if (levels[k] != 2 * levels[k - 1]) throw ConfigError("convergence levels must double");
  }
  const Problem probe = make_problem(base.problem, levels.front(), levels.front());
  const double t_end = base.t_end.value_or(probe.t_end);

  std::optional<SolutionField> reference;
  if (!probe.exact) {
    RunConfig ref = base;
    ref.scheme = Scheme::LWA;
    ref.fluctuation_control = false;
    ref.space_order = 5;
    ref.time_order = 5;
    ref.nx = ref.ny = reference_factor * levels.back();
    ref.out_dir.clear();
    ref.dump_every = 0;
    ref.t_end = t_end;
    reference = run(ref).u;
  }

  std::vector<ErrorRow> rows;
  for (int n : levels) {
    RunConfig cfg = base;
    cfg.nx = cfg.ny = n;
    cfg.t_end = t_end;
    cfg.out_dir.clear();
    cfg.dump_every = 0;
    const Problem p = make_problem(cfg.problem, n, n);
    RunResult r;
    try {
      r = run(p, cfg);
    } catch (const PositivityError& e) {
      throw PositivityError("n = " + std::to_string(n) + ": " + e.what());
    }
    const SolutionField ref = reference ? restrict_nodes(*reference, r.u, reference_factor * levels.back() / n)
                                        : sample_exact(p, r.u, t_end);
    ErrorRow row;
    row.n = n;
    row.err = error_norms(r.u, ref);
    if (!rows.empty()) {
      row.l1_order = std::log2(rows.back().err.l1 / row.err.l1);
      row.linf_order = std::log2(rows.back().err.linf / row.err.linf);
    }
    rows.push_back(row);
  }
  return rows;
}

void write_convergence_csv(const std::filesystem::path& file, std::span<const ErrorRow> rows) {
  std::ofstream out(file);
  if (!out) throw ConfigError("cannot write " + file.string());
  out << "n,err1,ord1,errinf,ordinf\n";
  for (const ErrorRow& r : rows) {
    out << r.n << ',' << fmt(r.err.l1) << ',' << (r.l1_order ? fmt(*r.l1_order) : "") << ',' << fmt(r.err.linf)
        << ',' << (r.linf_order ? fmt(*r.linf_order) : "") << '\n';
  }
}

std::vector<ErrorRow> read_convergence_csv(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ConfigError("cannot read " + file.string());
  std::string line;
  std::getline(in, line);
  if (line != "n,err1,ord1,errinf,ordinf") throw ConfigError("unexpected convergence CSV header");
  std::vector<ErrorRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (line.back() == ',') cells.emplace_back();
    if (cells.size() != 5) throw ConfigError("malformed convergence CSV row: " + line);
    ErrorRow r;
    r.n = std::stoi(cells[0]);
    r.err.l1 = std::stod(cells[1]);
    if (!cells[2].empty()) r.l1_order = std::stod(cells[2]);
    r.err.linf = std::stod(cells[3]);
    if (!cells[4].empty()) r.linf_order = std::stod(cells[4]);
    rows.push_back(r);
  }
  return rows;
}

std::vector<double> schlieren(const SolutionField& u, double kappa) {
  if (u.ghost() < 1) throw ConfigError("schlieren needs one ghost layer");
  const bool two_d = u.dimension() == 2;
  const double hx = u.spacing(0);
  const double hy = two_d ? u.spacing(1) : 1.0;
  const std::ptrdiff_t sy = u.stride(1);
  std::vector<double> grad;
  grad.reserve(static_cast<std::size_t>(u.nx()) * u.ny());
  double peak = 0.0;
  for (int j = 0; j < u.ny(); ++j) {
    const double* rho = u.data(0) + u.index(0, j);
    for (int i = 0; i < u.nx(); ++i) {
      const double gx = (rho[i + 1] - rho[i - 1]) / (2.0 * hx);
      const double gy = two_d ? (rho[i + sy] - rho[i - sy]) / (2.0 * hy) : 0.0;
      grad.push_back(std::hypot(gx, gy));
      peak = std::max(peak, grad.back());
    }
  }
  for (double& g : grad) g = peak > 0.0 ? std::exp(-kappa * g / peak) : 1.0;
  return grad;
}

void write_dump(const std::filesystem::path& dir, const SolutionField& u, const EquationSystem& eq,
                bool with_schlieren) {
  std::filesystem::create_directories(dir);
  const std::vector<std::string> names = eq.component_names();
  for (int c = 0; c < u.components(); ++c) write_plane(dir / (names[c] + ".bin"), interior(u, c));
  nlohmann::json fields = names;
  if (with_schlieren) {
    write_plane(dir / "schlieren.bin", schlieren(u));
    fields.push_back("schlieren");
  }
  nlohmann::json domain = nlohmann::json::array();
  nlohmann::json h = nlohmann::json::array();
  for (int a = 0; a < u.dimension(); ++a) {
    domain.push_back({u.axis(a).lo, u.axis(a).hi});
    h.push_back(u.spacing(a));
  }
  const nlohmann::json meta = {
      {"nx", u.nx()},
      {"ny", u.ny()},
      {"h", h},
      {"t", u.time()},
      {"components", names},
      {"fields", fields},
      {"domain", domain},
      {"placement", u.axis(0).placement == NodePlacement::CellCenter ? "cell-center" : "vertex"},
      {"dtype", "float64"},
      {"order", "row-major, x fastest"},
  };
  std::ofstream out(dir / "meta.json");
  out << meta.dump(2) << '\n';
}

std::vector<BenchRow> bench_efficiency(int nx, int ny, double t_end) {
  const std::array<std::pair<Scheme, bool>, 3> schemes{
      {{Scheme::RK3, false}, {Scheme::LWA, false}, {Scheme::LWA, true}}};
  std::vector<BenchRow> rows;
  for (const auto& [scheme, fc] : schemes) {
    RunConfig cfg;
    cfg.problem = "dmr";
    cfg.scheme = scheme;
    cfg.fluctuation_control = fc;
    cfg.nx = nx;
    cfg.ny = ny;
    cfg.t_end = t_end;
    BenchRow row;
    try {
      const RunResult r = run(cfg);
      row = BenchRow{r.scheme, r.steps, r.seconds, 0.0, {}};
    } catch (const PositivityError& e) {
      const Problem p = make_problem("dmr", nx, ny);
      row.scheme = make_integrator(*p.eq, cfg)->name();
      row.seconds = std::numeric_limits<double>::quiet_NaN();
      row.failure = e.what();
    }
    rows.push_back(row);
  }
  const double rk3 = rows.front().completed() ? rows.front().seconds : std::numeric_limits<double>::quiet_NaN();
  for (BenchRow& r : rows) r.efficiency = r.completed() ? rk3 / r.seconds : std::numeric_limits<double>::quiet_NaN();
  return rows;
}

void write_bench_csv(const std::filesystem::path& file, std::span<const BenchRow> rows) {
  std::ofstream out(file);
  if (!out) throw ConfigError("cannot write " + file.string());
  out << "scheme,steps,seconds,efficiency,status\n";
  for (const BenchRow& r : rows) {
    out << r.scheme << ',' << r.steps << ',';
    if (r.completed()) {
      out << fmt(r.seconds) << ',' << fmt(r.efficiency) << ",ok\n";
    } else {
      out << ",,aborted\n";
    }
  }
}

}  // namespace hyperlw
