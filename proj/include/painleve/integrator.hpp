#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "painleve/atlas.hpp"
#include "painleve/trajectory.hpp"

namespace painleve {

// Embedded Dormand-Prince 5(4); the fifth-order solution is propagated.
inline constexpr std::string_view kTableauName = "dormand-prince-5(4)";

struct State {
  complex z;
  ChartPoint pt;
};

struct StepResult {
  State state;
  double error = 0.0;      // weighted RMS norm, <= 1 means acceptable
  double error_abs = 0.0;  // max |local error estimate| over both coordinates
};

// One trial step of size dz in the current chart. Never adjusts dz.
StepResult rk_step(const State& state, complex dz, const Parameters& prm,
                   const IntegratorConfig& cfg);

// Thrown by integrate_path; carries what was integrated before the failure,
// with a trailing Failure event.
class IntegrationFailure : public Error {
 public:
  IntegrationFailure(const Error& cause, Trajectory partial, std::vector<PoleRecord> poles);
  const Trajectory& partial() const noexcept { return partial_; }
  const std::vector<PoleRecord>& poles() const noexcept { return poles_; }

 private:
  Trajectory partial_;
  std::vector<PoleRecord> poles_;
};

struct IntegrationResult {
  Trajectory trajectory;
  std::vector<PoleRecord> poles;
};

IntegrationResult integrate_path(complex q0, complex p0, const PathSpec& path,
                                 const Parameters& prm, const IntegratorConfig& cfg,
                                 Precision precision = Precision::Double);

// Newton iteration on z -> x(z) in chart B3b, re-integrating from the given
// state for every iterate. iterations (optional) receives the Newton count.
PoleRecord locate_pole(const State& state, const Parameters& prm, const IntegratorConfig& cfg,
                       int* iterations = nullptr);

// Adaptive integration along the segment z0 -> z1 without leaving the chart.
ChartPoint integrate_in_chart(const ChartPoint& pt, complex z0, complex z1,
                              const Parameters& prm, const IntegratorConfig& cfg);

// Solution value at an arbitrary z close to the trajectory: starts from the
// nearest sample, moves it into `chart` and integrates there.
ChartPoint evaluate_near(const Trajectory& traj, complex z, ChartId chart,
                         const IntegratorConfig& cfg);

// (q, p) at the last sample.
Vec2<double> final_base_value(const Trajectory& traj);

// Ordering and chart-consistency invariants; empty when all hold.
std::vector<std::string> structural_audit(const Trajectory& traj,
                                          const std::vector<PoleRecord>& poles);

}  // namespace painleve
