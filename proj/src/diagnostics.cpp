#include "painleve/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <numbers>

#include "painleve/integrator.hpp"
#include "painleve/series.hpp"

namespace painleve {

namespace {

struct Accumulator {
  ResidualReport r;
  double scale = 0.0;

  explicit Accumulator(std::string name) { r.name = std::move(name); }

  void add(complex residual, std::initializer_list<double> terms) {
    r.max_abs = std::max(r.max_abs, std::abs(residual));
    for (double t : terms) scale = std::max(scale, t);
    ++r.sample_count;
  }
  ResidualReport done() {
    r.scale = scale > 0.0 ? scale : 1.0;
    return r;
  }
};

// Base-chart state with both derivatives along the system.
struct Jet {
  complex z, q, p, dq, dp;
};

template <class F>
void for_base_samples(const Trajectory& traj, Accumulator& acc, F&& f) {
  const complex a = traj.params.alpha, b = traj.params.beta;
  for (const Sample& s : traj.samples) {
    if (s.pt.chart.kind != ChartKind::Base) {
      ++acc.r.skipped;
      continue;
    }
    const complex q = s.pt.x, p = s.pt.y, z = s.z;
    f(Jet{z, q, p, p * p + z * q + a, -q * q - z * p - b});
  }
}

}  // namespace

ResidualReport p4_residual(const Trajectory& traj, RhoBranch rho, const Parameters& prm) {
  Accumulator acc("p4_residual:" + std::to_string(rho.index()));
  const complex r = rho.value(), rb = rho.conj().value();
  const complex A = rb * prm.alpha, B = r * prm.beta;
  const complex c0 = 1.0 - A + B;
  for_base_samples(traj, acc, [&](const Jet& j) {
    const complex w = r * j.p + rb * j.q - j.z;
    if (w == 0.0) {
      ++acc.r.skipped;
      return;
    }
    const complex ddq = 2.0 * j.p * j.dp + j.q + j.z * j.dq;
    const complex ddp = -2.0 * j.q * j.dq - j.p - j.z * j.dp;
    const complex w1 = r * j.dp + rb * j.dq - 1.0;
    const complex w2 = r * ddp + rb * ddq;
    const complex w2w = w * w, w3 = w2w * w;
    const complex lhs = 2.0 * w * w2;
    const complex t1 = w1 * w1, t2 = w3 * w, t3 = 4.0 * j.z * w3;
    const complex t4 = (2.0 * A + 2.0 * B + 3.0 * j.z * j.z) * w2w, t5 = c0 * c0;
    acc.add(lhs - (t1 - t2 - t3 - t4 - t5), {std::abs(lhs), std::abs(t1), std::abs(t2),
                                             std::abs(t3), std::abs(t4), std::abs(t5)});
  });
  return acc.done();
}

ResidualReport hamiltonian_drift(const Trajectory& traj, const Parameters& prm) {
  Accumulator acc("hamiltonian_drift");
  for_base_samples(traj, acc, [&](const Jet& j) {
    const complex hq = j.q * j.q + j.z * j.p + prm.beta;
    const complex hp = j.p * j.p + j.z * j.q + prm.alpha;
    const complex hz = j.p * j.q;
    const complex dh = hz + hq * j.dq + hp * j.dp;
    acc.add(dh - hz, {std::abs(hz), std::abs(hq * j.dq), std::abs(hp * j.dp)});
  });
  return acc.done();
}

ResidualReport w_ode_residual(const Trajectory& traj, const Parameters& prm) {
  Accumulator acc("w_ode_residual");
  for_base_samples(traj, acc, [&](const Jet& j) {
    if (std::abs(j.q) < 1e-12) {
      ++acc.r.skipped;
      return;
    }
    const complex H = (j.p * j.p * j.p + j.q * j.q * j.q) / 3.0 + j.z * j.p * j.q +
                      prm.alpha * j.p + prm.beta * j.q;
    const complex W = H + j.p * j.p / j.q;
    // dH/dz = pq along solutions
    const complex dW = j.p * j.q + (2.0 * j.p * j.dp * j.q - j.p * j.p * j.dq) / (j.q * j.q);
    const complex u = j.p / j.q;
    const complex t1 = 3.0 * (j.p / (j.q * j.q)) * W;
    const complex r1 = prm.beta * u, r2 = 2.0 * prm.alpha * u * u, r3 = 3.0 * u * u * u;
    acc.add(dW + t1 - (r1 + r2 + r3), {std::abs(dW), std::abs(t1), std::abs(r1), std::abs(r2),
                                       std::abs(r3)});
  });
  return acc.done();
}

double pushforward_residual(ChartId chart, complex z, Vec2<double> pt, const Parameters& prm,
                            const FieldOverride* field) {
  const Vec2<double> qp = to_base<double>(chart, pt, z, prm);
  const Vec2<double> fb = vector_field<double>(ChartId::base(), z, qp, prm);
  const ChartJacobian J = chart_jacobian(chart, z, qp.x, qp.y, prm);
  const complex px = J.j[0] * fb.x + J.j[1] * fb.y + J.dz.x;
  const complex py = J.j[2] * fb.x + J.j[3] * fb.y + J.dz.y;
  const double sx = std::abs(J.j[0] * fb.x) + std::abs(J.j[1] * fb.y) + std::abs(J.dz.x);
  const double sy = std::abs(J.j[2] * fb.x) + std::abs(J.j[3] * fb.y) + std::abs(J.dz.y);
  const Vec2<double> fc = field ? (*field)(chart, z, pt) : vector_field<double>(chart, z, pt, prm);
  const double scale = std::max({sx, sy, std::abs(fc.x), std::abs(fc.y), 1e-300});
  return std::max(std::abs(fc.x - px), std::abs(fc.y - py)) / scale;
}

FieldOverride corrupted_field(ChartId chart, const Parameters& prm) {
  return [chart, prm](ChartId c, complex z, Vec2<double> pt) -> Vec2<double> {
    Vec2<double> f = vector_field<double>(c, z, pt, prm);
    if (!(c == chart)) return f;
    const complex x = pt.x, y = pt.y;
    switch (c.kind) {
      case ChartKind::InfU:  // numerator y^2 + 1 instead of y^3 + 1
        f.y += (y * y * y - y * y) / x;
        break;
      case ChartKind::B3b: {  // coefficient s instead of 2s on x^5 y
        const auto k = BranchConsts<double>::make(prm, c.branch(), z);
        f.x -= k.s * x * x * x * x * x * y;
        break;
      }
      default:  // an x*y term with coefficient 1 where there is none
        f.x += x * y;
        break;
    }
    return f;
  };
}

ResidualReport laurent_match_report(const PoleRecord& pole, const Trajectory& traj, int order,
                                    const Parameters& prm) {
  Accumulator acc("laurent_match");
  const LaurentPair lp = laurent_at_pole(pole.z_star, pole.rho, pole.h, order, prm);
  const ChartId chart{ChartKind::B3b, pole.rho.index()};
  const complex dir = traj.path.direction_near(pole.z_star);
  double scale = 0.0;
  for (int side : {-1, 1}) {
    for (int i = 0; i < 7; ++i) {
      const double r = 0.02 + 0.01 * i;
      const complex z = pole.z_star + static_cast<double>(side) * r * dir;
      const ChartPoint pt = evaluate_near(traj, z, chart, traj.config);
      const Vec2<double> got = to_base(pt, z, prm);
      const Vec2<double> want = eval_series(lp, z);
      acc.add(std::max(std::abs(got.x - want.x), std::abs(got.y - want.y)), {});
      scale = std::max({scale, std::abs(want.x), std::abs(want.y)});
    }
  }
  acc.scale = scale;
  return acc.done();
}

complex residue_estimate(const PoleRecord& pole, const Trajectory& traj, double radius,
                         int points) {
  const ChartId chart{ChartKind::B3b, pole.rho.index()};
  complex sum = 0.0;
  for (int j = 0; j < points; ++j) {
    const complex e = std::polar(radius, 2.0 * std::numbers::pi * j / points);
    const ChartPoint pt = evaluate_near(traj, pole.z_star + e, chart, traj.config);
    // q = 1/x in B3b
    sum += e / pt.x;
  }
  return sum / static_cast<double>(points);
}

}  // namespace painleve
