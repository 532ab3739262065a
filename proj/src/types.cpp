#include "painleve/types.hpp"

#include <cmath>

namespace painleve {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::SingularLocus: return "SingularLocus";
    case ErrorKind::IndeterminateMap: return "IndeterminateMap";
    case ErrorKind::PoleCenter: return "PoleCenter";
    case ErrorKind::ZeroW: return "ZeroW";
    case ErrorKind::Ambiguous: return "Ambiguous";
    case ErrorKind::StepUnderflow: return "StepUnderflow";
    case ErrorKind::MaxSteps: return "MaxSteps";
    case ErrorKind::NonPoleDivergence: return "NonPoleDivergence";
    case ErrorKind::NewtonStall: return "NewtonStall";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

namespace {
bool finite(complex v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }
}  // namespace

Parameters Parameters::make(complex alpha, complex beta) {
  if (!finite(alpha) || !finite(beta))
    throw Error(ErrorKind::InvalidArgument, "parameters must be finite");
  return {alpha, beta};
}

RhoBranch::RhoBranch(int index) : index_(index) {
  if (index < 0 || index > 2) throw Error(ErrorKind::InvalidArgument, "rho index must be 0, 1 or 2");
}

ChartId ChartId::blowup(ChartKind kind, RhoBranch rho) {
  ChartId id{kind, rho.index()};
  if (!id.has_branch()) throw Error(ErrorKind::InvalidArgument, "chart carries no branch");
  return id;
}

bool ChartId::has_branch() const noexcept {
  return kind != ChartKind::Base && kind != ChartKind::InfU && kind != ChartKind::InfV;
}

int ChartId::level() const noexcept {
  switch (kind) {
    case ChartKind::B1a:
    case ChartKind::B1b: return 1;
    case ChartKind::B2a:
    case ChartKind::B2b: return 2;
    case ChartKind::B3a:
    case ChartKind::B3b: return 3;
    default: return 0;
  }
}

bool ChartId::is_a_chart() const noexcept {
  return kind == ChartKind::B1a || kind == ChartKind::B2a || kind == ChartKind::B3a;
}

std::string to_string(ChartId id) {
  switch (id.kind) {
    case ChartKind::Base: return "base";
    case ChartKind::InfU: return "inf_u";
    case ChartKind::InfV: return "inf_v";
    default: break;
  }
  static constexpr const char* names[] = {"", "", "", "b1a", "b1b", "b2a", "b2b", "b3a", "b3b"};
  return std::string(names[static_cast<int>(id.kind)]) + ":" + std::to_string(id.rho);
}

ChartId chart_from_string(std::string_view s) {
  if (s == "base") return ChartId::base();
  if (s == "inf_u") return ChartId::inf_u();
  if (s == "inf_v") return ChartId::inf_v();
  for (const ChartId& id : all_charts())
    if (id.has_branch() && to_string(id) == s) return id;
  throw Error(ErrorKind::InvalidArgument, "unknown chart '" + std::string(s) + "'");
}

const std::array<ChartId, 21>& all_charts() {
  static const std::array<ChartId, 21> charts = [] {
    std::array<ChartId, 21> out{};
    out[0] = ChartId::base();
    out[1] = ChartId::inf_u();
    out[2] = ChartId::inf_v();
    std::size_t i = 3;
    for (ChartKind k : {ChartKind::B1a, ChartKind::B1b, ChartKind::B2a, ChartKind::B2b,
                        ChartKind::B3a, ChartKind::B3b})
      for (int r = 0; r < 3; ++r) out[i++] = ChartId{k, r};
    return out;
  }();
  return charts;
}

void IntegratorConfig::validate() const {
  auto bad = [](const char* what) { throw Error(ErrorKind::InvalidArgument, what); };
  if (!(rtol > 0) || !(atol > 0) || !(newton_tol > 0)) bad("tolerances must be positive");
  if (!(h_min > 0) || !(h_min <= h_init) || !(h_init <= h_max))
    bad("need 0 < h_min <= h_init <= h_max");
  if (!(r_back > 0) || !(r_back < R_switch)) bad("need 0 < r_back < R_switch");
  if (!(capture_radius > 0)) bad("capture_radius must be positive");
  if (max_steps <= 0) bad("max_steps must be positive");
  if (!(pole_path_tol > 0) || !(divergence_bound > 0)) bad("pole_path_tol and divergence_bound must be positive");
}

}  // namespace painleve
