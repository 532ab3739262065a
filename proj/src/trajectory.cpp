#include "painleve/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <cstdlib>
#include <string_view>

namespace painleve {

std::string to_string(Precision p) { return p == Precision::Extended ? "extended" : "double"; }

Precision precision_from_env() {
  const char* v = std::getenv("PAINLEVE_ATLAS_PRECISION");
  if (!v || !*v) return Precision::Double;
  const std::string_view s(v);
  if (s == "double") return Precision::Double;
  if (s == "extended") return Precision::Extended;
  throw Error(ErrorKind::InvalidArgument,
              "PAINLEVE_ATLAS_PRECISION must be 'double' or 'extended', got '" + std::string(s) + "'");
}

std::string to_string(EventKind k) {
  switch (k) {
    case EventKind::ChartSwitch: return "chart_switch";
    case EventKind::PoleCrossing: return "pole_crossing";
    case EventKind::BasePointProximity: return "base_point_proximity";
    case EventKind::Failure: return "failure";
  }
  return "unknown";
}

void PathSpec::validate() const {
  if (waypoints.size() < 2) throw Error(ErrorKind::InvalidArgument, "path needs at least two waypoints");
  for (std::size_t i = 0; i < waypoints.size(); ++i) {
    const complex w = waypoints[i];
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
      throw Error(ErrorKind::InvalidArgument, "path waypoints must be finite");
    if (i > 0 && waypoints[i - 1] == w)
      throw Error(ErrorKind::InvalidArgument, "consecutive path waypoints must differ");
  }
}

double PathSpec::length() const {
  double l = 0.0;
  for (std::size_t i = 1; i < waypoints.size(); ++i) l += std::abs(waypoints[i] - waypoints[i - 1]);
  return l;
}

complex PathSpec::direction_near(complex z) const {
  complex best_dir = 1.0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < waypoints.size(); ++i) {
    const complex a = waypoints[i - 1], b = waypoints[i];
    const complex d = (b - a) / std::abs(b - a);
    const double t = std::clamp(((z - a) * std::conj(d)).real(), 0.0, std::abs(b - a));
    const double dist = std::abs(a + t * d - z);
    if (dist < best) best = dist, best_dir = d;
  }
  return best_dir;
}

}  // namespace painleve
