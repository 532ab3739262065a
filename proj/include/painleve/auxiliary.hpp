#pragma once

#include "painleve/trajectory.hpp"
#include "painleve/types.hpp"

namespace painleve {

// W = H + p^2/q with H = (p^3 + q^3)/3 + z p q + alpha p + beta q.
struct WValue {
  complex value{0.0};
  bool infinite = false;
  bool indeterminate = false;

  bool finite() const noexcept { return !infinite && !indeterminate; }
};

WValue eval_W(const ChartPoint& pt, complex z, const Parameters& prm);

// W'/W along solutions, from the chart closed form. Throws ZeroW where the
// denominator polynomial vanishes and SingularLocus where its monomial factor
// does.
complex eval_W_logderiv(const ChartPoint& pt, complex z, const Parameters& prm);

// Largest |W| within distance 0.1 of the pole: over the trajectory samples
// and over 41 equispaced points of the path line through z*, reached by
// local re-integration in B3b.
double w_pole_boundedness(const Trajectory& traj, const PoleRecord& pole, const Parameters& prm);

}  // namespace painleve
