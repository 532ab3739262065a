#include "painleve/auxiliary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "painleve/atlas.hpp"
#include "painleve/integrator.hpp"
#include "w_tables.hpp"

namespace painleve {

namespace {

struct PolyValue {
  complex value;
  double magnitude;  // sum of |terms|, for cancellation-aware zero tests
};

struct Symbols {
  std::array<complex, 8> v;  // x, y, z, rho, rhob, alpha, beta, s
};

Symbols symbols(const ChartPoint& pt, complex z, const Parameters& prm) {
  const RhoBranch rho = pt.chart.has_branch() ? pt.chart.branch() : RhoBranch(0);
  const complex r = rho.value(), rb = rho.conj().value();
  const complex s = 1.0 - rb * prm.alpha + r * prm.beta;
  return {{pt.x, pt.y, z, r, rb, prm.alpha, prm.beta, s}};
}

PolyValue eval_poly(std::span<const detail::Monomial> poly, const Symbols& sym) {
  // Powers up to the largest exponent in the tables.
  constexpr int kMaxPow = 16;
  std::array<std::array<complex, kMaxPow>, 8> pw;
  for (std::size_t i = 0; i < 8; ++i) {
    pw[i][0] = 1.0;
    for (int k = 1; k < kMaxPow; ++k) pw[i][k] = pw[i][k - 1] * sym.v[i];
  }
  PolyValue out{0.0, 0.0};
  for (const auto& m : poly) {
    complex t = static_cast<double>(m.coef);
    for (std::size_t i = 0; i < 8; ++i)
      if (m.e[i]) t *= pw[i][m.e[i]];
    out.value += t;
    out.magnitude += std::abs(t);
  }
  return out;
}

bool is_zero(const PolyValue& p) {
  return std::abs(p.value) <= 64.0 * std::numeric_limits<double>::epsilon() * p.magnitude;
}

complex monomial(complex x, complex y, int ex, int ey) {
  complex m = 1.0;
  for (int i = 0; i < ex; ++i) m *= x;
  for (int i = 0; i < ey; ++i) m *= y;
  return m;
}

}  // namespace

WValue eval_W(const ChartPoint& pt, complex z, const Parameters& prm) {
  const auto& tab = detail::w_tables(pt.chart.kind);
  const Symbols sym = symbols(pt, z, prm);
  const PolyValue num = eval_poly(tab.w, sym);
  const complex den = static_cast<double>(tab.w_den.coef) * monomial(pt.x, pt.y, tab.w_den.ex, tab.w_den.ey);
  WValue w;
  if (den == 0.0) {
    if (is_zero(num))
      w.indeterminate = true;
    else
      w.infinite = true;
    return w;
  }
  w.value = num.value / den;
  if (!std::isfinite(std::abs(w.value))) {
    w.value = 0.0;
    w.infinite = true;
  }
  return w;
}

complex eval_W_logderiv(const ChartPoint& pt, complex z, const Parameters& prm) {
  const auto& tab = detail::w_tables(pt.chart.kind);
  const Symbols sym = symbols(pt, z, prm);
  const complex mono = monomial(pt.x, pt.y, tab.log_den_monomial.ex, tab.log_den_monomial.ey);
  if (mono == 0.0)
    throw Error(ErrorKind::SingularLocus, "log-derivative undefined in " + to_string(pt.chart));
  const PolyValue den = eval_poly(tab.log_den, sym);
  if (is_zero(den)) throw Error(ErrorKind::ZeroW, "W vanishes at this point of " + to_string(pt.chart));
  const PolyValue num = eval_poly(tab.log_num, sym);
  return num.value / (mono * den.value);
}

double w_pole_boundedness(const Trajectory& traj, const PoleRecord& pole, const Parameters& prm) {
  constexpr double kRadius = 0.1;
  constexpr int kPoints = 41;
  double best = 0.0;
  for (const Sample& s : traj.samples) {
    if (std::abs(s.z - pole.z_star) > kRadius) continue;
    const WValue w = eval_W(s.pt, s.z, prm);
    if (w.finite()) best = std::max(best, std::abs(w.value));
    else best = std::numeric_limits<double>::infinity();
  }
  const ChartId chart{ChartKind::B3b, pole.rho.index()};
  const complex dir = traj.path.direction_near(pole.z_star);
  for (int i = 0; i < kPoints; ++i) {
    const double t = -kRadius + 2.0 * kRadius * i / (kPoints - 1);
    const complex z = pole.z_star + t * dir;
    const ChartPoint pt = evaluate_near(traj, z, chart, traj.config);
    const WValue w = eval_W(pt, z, prm);
    if (w.finite()) best = std::max(best, std::abs(w.value));
    else best = std::numeric_limits<double>::infinity();
  }
  return best;
}

}  // namespace painleve
