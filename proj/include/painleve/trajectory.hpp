#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "painleve/types.hpp"

namespace painleve {

enum class Precision { Double, Extended };

std::string to_string(Precision p);
// Reads PAINLEVE_ATLAS_PRECISION ("double" or "extended"); default double.
Precision precision_from_env();

struct PathSpec {
  std::vector<complex> waypoints;

  // At least two waypoints, consecutive ones distinct, all finite.
  void validate() const;
  double length() const;
  // Unit direction of the segment passing closest to z.
  complex direction_near(complex z) const;
};

struct PoleRecord {
  complex z_star;
  RhoBranch rho;
  complex c;  // B3b fibre coordinate at z*
  complex h, k;
};

enum class EventKind { ChartSwitch, PoleCrossing, BasePointProximity, Failure };
std::string to_string(EventKind k);

struct Event {
  EventKind kind = EventKind::ChartSwitch;
  complex z;
  double s = 0.0;  // arc length along the path
  ChartId from, to;                     // ChartSwitch
  std::optional<std::size_t> pole;      // PoleCrossing: index into the pole list
  std::optional<PoleRecord> near_pole;  // BasePointProximity: pole passed at a distance
  std::string message;
};

struct Sample {
  complex z;
  double s = 0.0;
  ChartPoint pt;
};

struct Trajectory {
  std::vector<Sample> samples;
  std::vector<Event> events;
  Parameters params;
  IntegratorConfig config;
  PathSpec path;
  Precision precision = Precision::Double;
};

}  // namespace painleve
