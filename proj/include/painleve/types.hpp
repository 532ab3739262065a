#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace painleve {

using complex = std::complex<double>;
template <class R>
using Cx = std::complex<R>;

enum class ErrorKind {
  InvalidArgument,
  SingularLocus,
  IndeterminateMap,
  PoleCenter,
  ZeroW,
  Ambiguous,
  StepUnderflow,
  MaxSteps,
  NonPoleDivergence,
  NewtonStall,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct Parameters {
  complex alpha{0.0};
  complex beta{0.0};

  // Rejects infinities and NaNs.
  static Parameters make(complex alpha, complex beta);
};

// Cube root of unity omega^index, omega = (-1 + i sqrt 3)/2.
class RhoBranch {
 public:
  constexpr RhoBranch() = default;
  explicit RhoBranch(int index);

  int index() const noexcept { return index_; }
  complex value() const { return value<double>(); }
  RhoBranch conj() const { return RhoBranch((3 - index_) % 3); }

  template <class R>
  Cx<R> value() const {
    const R h = R(1) / R(2);
    const R s = std::sqrt(R(3)) / R(2);
    switch (index_) {
      case 1: return {-h, s};
      case 2: return {-h, -s};
      default: return {R(1), R(0)};
    }
  }

  friend bool operator==(RhoBranch, RhoBranch) = default;

 private:
  int index_ = 0;
};

enum class ChartKind : std::uint8_t { Base, InfU, InfV, B1a, B1b, B2a, B2b, B3a, B3b };

struct ChartId {
  ChartKind kind = ChartKind::Base;
  int rho = 0;  // meaningful only for the blow-up charts, kept 0 otherwise

  static ChartId base() { return {ChartKind::Base, 0}; }
  static ChartId inf_u() { return {ChartKind::InfU, 0}; }
  static ChartId inf_v() { return {ChartKind::InfV, 0}; }
  static ChartId blowup(ChartKind kind, RhoBranch rho);

  bool has_branch() const noexcept;
  RhoBranch branch() const { return RhoBranch(rho); }
  // 0 for Base/InfU/InfV, 1..3 for the blow-up levels.
  int level() const noexcept;
  bool is_a_chart() const noexcept;

  friend bool operator==(ChartId, ChartId) = default;
};

std::string to_string(ChartId id);
ChartId chart_from_string(std::string_view s);
// All 21 charts in a fixed order.
const std::array<ChartId, 21>& all_charts();

struct ChartPoint {
  ChartId chart;
  complex x{0.0};
  complex y{0.0};
};

template <class R>
struct Vec2 {
  Cx<R> x, y;
};

struct BasePointSpec {
  int level = 0;  // 0: on L, 1: on L1, 2: on L2
  RhoBranch rho;
};

struct IntegratorConfig {
  double rtol = 1e-10;
  double atol = 1e-12;
  double h_init = 1e-2;
  double h_min = 1e-14;
  double h_max = 0.25;
  double R_switch = 10.0;
  double r_back = 4.0;
  double capture_radius = 0.5;
  double newton_tol = 1e-13;
  long max_steps = 1000000;
  // A located root of x in B3b counts as a crossing when it lies this close
  // (relative to max(1,|z*|)) to the traversed segment.
  double pole_path_tol = 1e-8;
  // Coordinates beyond this magnitude in any chart mean the solution left
  // the atlas.
  double divergence_bound = 1e10;

  void validate() const;
};

}  // namespace painleve
