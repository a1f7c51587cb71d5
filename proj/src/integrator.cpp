#include "hyperlw/integrator.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "hyperlw/error.hpp"

namespace hyperlw {

double cfl_time_step(const EquationSystem& eq, const SolutionField& u, double cfl) {
  if (!(cfl > 0.0)) throw ConfigError("CFL number must be positive");
  double rate = 0.0;
  for (int a = 0; a < u.dimension(); ++a) rate = std::max(rate, max_wave_speed(eq, u, a) / u.spacing(a));
  if (rate == 0.0) return std::numeric_limits<double>::infinity();
  const double delta = cfl / rate;
  if (!(delta > 0.0)) throw ConfigError("CFL condition yields a non-positive time step");
  return delta;
}

void require_admissible(const EquationSystem& eq, const SolutionField& u, std::string_view stage) {
  const std::array<int, 2> bad = find_inadmissible(eq, u);
  if (bad[0] < 0) return;
  std::ostringstream msg;
  msg << "inadmissible state at node (" << bad[0] << ", " << bad[1] << ") after " << stage << " at t = " << u.time()
      << ": (";
  const std::vector<double> s = u.state(bad[0], bad[1]);
  for (std::size_t c = 0; c < s.size(); ++c) msg << (c ? ", " : "") << s[c];
  msg << ")";
  throw PositivityError(msg.str());
}

}  // namespace hyperlw
