#pragma once

#include <functional>
#include <string>

#include "painleve/atlas.hpp"
#include "painleve/trajectory.hpp"

namespace painleve {

struct ResidualReport {
  std::string name;
  double max_abs = 0.0;  // raw maximum of |residual|
  long sample_count = 0;
  double scale = 1.0;    // normalization; thresholds apply to max_abs / scale
  long skipped = 0;

  double normalized() const { return max_abs / scale; }
};

// w = rho p + rhob q - z against 2ww'' = w'^2 - w^4 - 4zw^3 - (2A + 2B + 3z^2)w^2
// - (1 - A + B)^2 with A = rhob*alpha, B = rho*beta. Uses Base-chart samples
// only; samples with w = 0 are skipped.
ResidualReport p4_residual(const Trajectory& traj, RhoBranch rho, const Parameters& prm);

// |dH/dz - pq| with dH/dz by the chain rule, over Base-chart samples.
ResidualReport hamiltonian_drift(const Trajectory& traj, const Parameters& prm);

// W' + 3(p/q^2)W - (beta p/q + 2 alpha (p/q)^2 + 3 (p/q)^3) over Base-chart
// samples; samples with |q| < 1e-12 are skipped.
ResidualReport w_ode_residual(const Trajectory& traj, const Parameters& prm);

using FieldOverride = std::function<Vec2<double>(ChartId, complex z, Vec2<double> pt)>;

// |f_chart - (J f_base + dPhi/dz)|, relative to the magnitude of the terms of
// J f_base + dPhi/dz. The override, when given, replaces f_chart.
double pushforward_residual(ChartId chart, complex z, Vec2<double> pt, const Parameters& prm,
                            const FieldOverride* field = nullptr);

// A chart field with one coefficient altered, for mutation tests.
FieldOverride corrupted_field(ChartId chart, const Parameters& prm);

// Laurent pair of the pole against the continued solution at 2 x 7 points of
// the annulus 0.02 <= |z - z*| <= 0.08 along the path, both sides. Relative to
// the largest |q|, |p| of the series there.
ResidualReport laurent_match_report(const PoleRecord& pole, const Trajectory& traj, int order,
                                    const Parameters& prm);

// q-residue at the pole: trapezoidal average of (z - z*) q over the circle
// |z - z*| = radius, with q from local re-integration in B3b.
complex residue_estimate(const PoleRecord& pole, const Trajectory& traj, double radius = 0.02,
                         int points = 32);

}  // namespace painleve
