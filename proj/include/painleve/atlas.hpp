#pragma once

#include <array>

#include "painleve/types.hpp"

namespace painleve {

// Parameter combinations that recur in every blow-up chart of branch rho.
template <class R>
struct BranchConsts {
  Cx<R> alpha, beta, rho, rhob;
  Cx<R> s;   // 1 - rhob*alpha + rho*beta; the level-2 base point is at -s
  Cx<R> k0;  // rho*(1 + z^2 + rho*beta), depends on z

  static BranchConsts make(const Parameters& prm, RhoBranch rho, Cx<R> z);
};

template <class R>
Vec2<R> vector_field(ChartId chart, Cx<R> z, Vec2<R> pt, const Parameters& prm);

template <class R>
Vec2<R> to_base(ChartId chart, Vec2<R> pt, Cx<R> z, const Parameters& prm);

template <class R>
Vec2<R> from_base(Vec2<R> qp, Cx<R> z, ChartId target, const Parameters& prm);

// Composes elementary maps along the chart tree, so that points close to the
// exceptional curves never pass through large (q,p).
template <class R>
Vec2<R> transition(ChartId from, Vec2<R> pt, ChartId target, Cx<R> z, const Parameters& prm);

inline Vec2<double> vector_field(const ChartPoint& pt, complex z, const Parameters& prm) {
  return vector_field<double>(pt.chart, z, {pt.x, pt.y}, prm);
}
Vec2<double> to_base(const ChartPoint& pt, complex z, const Parameters& prm);
ChartPoint from_base(complex q, complex p, complex z, ChartId target, const Parameters& prm);
ChartPoint transition(const ChartPoint& pt, ChartId target, complex z, const Parameters& prm);

// Level 0 lands in InfU, level 1 in B1b, level 2 in B2b.
ChartPoint base_point(BasePointSpec spec, complex z, const Parameters& prm);

// x = 0 in InfU/InfV and the b-charts, y = 0 in the a-charts.
bool on_exceptional_curve(const ChartPoint& pt);

// Branch whose base point -rho on L is nearest to p/q.
// Throws Ambiguous when the two smallest distances are within 10%.
RhoBranch classify_rho(complex q, complex p);

ChartId select_chart(const ChartPoint& pt, complex z, const Parameters& prm,
                     const IntegratorConfig& cfg);

// Jacobian d(x,y)/d(q,p) of the chart map at fixed z, and its explicit
// z-derivative. Row-major: {dx/dq, dx/dp, dy/dq, dy/dp}.
struct ChartJacobian {
  std::array<complex, 4> j;
  Vec2<double> dz;
};
ChartJacobian chart_jacobian(ChartId chart, complex z, complex q, complex p,
                             const Parameters& prm);

}  // namespace painleve
