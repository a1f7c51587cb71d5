#include "hyperlw/equations.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hyperlw/error.hpp"
#include "hyperlw/simd/kernels.hpp"

namespace hyperlw {

namespace {

void check_axis(const EquationSystem& eq, int axis) {
  if (axis < 0 || axis >= eq.dimension()) {
    throw ConfigError("axis " + std::to_string(axis) + " out of range for " +
                      std::string(eq.name()));
  }
}

void require_finite(std::span<const double> state) {
  for (double v : state) {
    if (!std::isfinite(v)) throw InvalidStateError("non-finite state component");
  }
}

}  // namespace

std::size_t EquationSystem::first_inadmissible(const ConstRows& u, std::size_t n) const {
  const int m = components();
  for (std::size_t i = 0; i < n; ++i) {
    for (int c = 0; c < m; ++c) {
      if (!std::isfinite(u[c][i])) return i;
    }
  }
  return n;
}

void EquationSystem::add_fluxes(const ConstRows& u, double scale, const std::array<Rows, 2>& out,
                                std::size_t n) const {
  thread_local std::vector<double> scratch;
  const int m = components();
  scratch.resize(static_cast<std::size_t>(m) * n);
  Rows f{};
  for (int c = 0; c < m; ++c) f[c] = scratch.data() + static_cast<std::size_t>(c) * n;
  for (int a = 0; a < dimension(); ++a) {
    flux(a, u, f, n);
    for (int c = 0; c < m; ++c) {
      double* o = out[a][c];
      for (std::size_t i = 0; i < n; ++i) o[i] += scale * f[c][i];
    }
  }
}

std::vector<double> EquationSystem::flux(std::span<const double> state, int axis) const {
  check_axis(*this, axis);
  if (static_cast<int>(state.size()) != components()) {
    throw ConfigError("state has wrong number of components");
  }
  require_finite(state);
  std::vector<double> out(state.size());
  ConstRows in{};
  Rows f{};
  for (std::size_t c = 0; c < state.size(); ++c) {
    in[c] = &state[c];
    f[c] = &out[c];
  }
  flux(axis, in, f, 1);
  return out;
}

double EquationSystem::max_wave_speed(std::span<const double> state, int axis) const {
  check_axis(*this, axis);
  require_finite(state);
  ConstRows in{};
  for (std::size_t c = 0; c < state.size(); ++c) in[c] = &state[c];
  return max_wave_speed(axis, in, 1);
}

// --- advection ---------------------------------------------------------------

void LinearAdvection::flux(int, const ConstRows& u, const Rows& f, std::size_t n) const {
  const double* in = u[0];
  double* out = f[0];
  for (std::size_t i = 0; i < n; ++i) out[i] = speed_ * in[i];
}

double LinearAdvection::max_wave_speed(int, const ConstRows&, std::size_t) const {
  return std::abs(speed_);
}

// --- Burgers -----------------------------------------------------------------

void Burgers::flux(int, const ConstRows& u, const Rows& f, std::size_t n) const {
  const double* in = u[0];
  double* out = f[0];
  for (std::size_t i = 0; i < n; ++i) out[i] = 0.5 * in[i] * in[i];
}

double Burgers::max_wave_speed(int, const ConstRows& u, std::size_t n) const {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s = std::max(s, std::abs(u[0][i]));
  return s;
}

// --- Euler -------------------------------------------------------------------

Euler::Euler(int dimension, double gamma) : dim_(dimension), gamma_(gamma) {
  if (dimension != 1 && dimension != 2) throw ConfigError("Euler supports d = 1 or 2");
  if (!(gamma > 1.0)) throw ConfigError("gamma must exceed 1");
}

std::vector<std::string> Euler::component_names() const {
  if (dim_ == 1) return {"rho", "mom_x", "E"};
  return {"rho", "mom_x", "mom_y", "E"};
}

void Euler::flux(int axis, const ConstRows& u, const Rows& f, std::size_t n) const {
  simd::euler_flux(dim_, gamma_, axis, u.data(), f.data(), n);
}

void Euler::add_fluxes(const ConstRows& u, double scale, const std::array<Rows, 2>& out, std::size_t n) const {
  simd::euler_add_fluxes(dim_, gamma_, u.data(), scale, out[0].data(), out[1].data(), n);
}

double Euler::max_wave_speed(int axis, const ConstRows& u, std::size_t n) const {
  const double* rho = u[0];
  const double* mn = u[1 + axis];
  const double* en = u[dim_ + 1];
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(rho[i] > kPositivityFloor)) {
      std::ostringstream msg;
      msg << "vacuum state (rho = " << rho[i] << ") in wave-speed evaluation";
      throw PositivityError(msg.str());
    }
    double kinetic = 0.0;
    for (int a = 0; a < dim_; ++a) kinetic += u[1 + a][i] * u[1 + a][i];
    kinetic *= 0.5 / rho[i];
    const double p = std::max(kPositivityFloor, (gamma_ - 1.0) * (en[i] - kinetic));
    const double c = std::sqrt(gamma_ * p / rho[i]);
    s = std::max(s, std::abs(mn[i] / rho[i]) + c);
  }
  return s;
}

std::size_t Euler::first_inadmissible(const ConstRows& u, std::size_t n) const {
  const double* rho = u[0];
  const double* en = u[dim_ + 1];
  for (std::size_t i = 0; i < n; ++i) {
    double kinetic = 0.0;
    for (int a = 0; a < dim_; ++a) kinetic += u[1 + a][i] * u[1 + a][i];
    const double p = (gamma_ - 1.0) * (en[i] - 0.5 * kinetic / rho[i]);
    // Written so that NaN fails the test.
    if (!(rho[i] > 0.0) || !(p > 0.0) || !std::isfinite(p)) return i;
  }
  return n;
}

double Euler::pressure(std::span<const double> s) const {
  double kinetic = 0.0;
  for (int a = 0; a < dim_; ++a) kinetic += s[1 + a] * s[1 + a];
  return (gamma_ - 1.0) * (s[dim_ + 1] - 0.5 * kinetic / s[0]);
}

std::vector<double> Euler::primitive_to_conservative(std::span<const double> prim) const {
  if (static_cast<int>(prim.size()) != components()) throw ConfigError("wrong component count");
  require_finite(prim);
  if (!(prim[0] > 0.0)) throw PositivityError("non-positive density in primitive state");
  std::vector<double> cons(prim.begin(), prim.end());
  for (int a = 0; a < dim_; ++a) cons[1 + a] = prim[0] * prim[1 + a];
  return cons;
}

std::vector<double> Euler::conservative_to_primitive(std::span<const double> cons) const {
  if (static_cast<int>(cons.size()) != components()) throw ConfigError("wrong component count");
  require_finite(cons);
  if (!(cons[0] > 0.0)) throw PositivityError("non-positive density in conservative state");
  std::vector<double> prim(cons.begin(), cons.end());
  for (int a = 0; a < dim_; ++a) prim[1 + a] = cons[1 + a] / cons[0];
  return prim;
}

}  // namespace hyperlw
