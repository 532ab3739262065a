#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "painleve/atlas.hpp"
#include "painleve/auxiliary.hpp"
#include "painleve/integrator.hpp"

using namespace painleve;

namespace {

struct Gen {
  std::mt19937_64 g{11};
  double u(double a, double b) { return std::uniform_real_distribution<double>(a, b)(g); }
  complex ring(double r0, double r1) { return std::polar(u(r0, r1), u(0.0, 2.0 * std::numbers::pi)); }
  complex disk(double r) { return std::polar(r * std::sqrt(u(0, 1)), u(0.0, 2.0 * std::numbers::pi)); }
};

complex W_base(complex q, complex p, complex z, const Parameters& prm) {
  return (p * p * p + q * q * q) / 3.0 + z * p * q + prm.alpha * p + prm.beta * q + p * p / q;
}

}  // namespace

TEST_CASE("chart forms of W agree with the base definition") {
  Gen g;
  for (const ChartId c : all_charts()) {
    for (int i = 0; i < 40; ++i) {
      const Parameters prm{g.disk(2), g.disk(2)};
      const complex z = g.disk(2);
      const ChartPoint pt{c, g.ring(0.3, 1.5), g.ring(0.3, 1.5)};
      const Vec2<double> qp = to_base(pt, z, prm);
      const complex ref = W_base(qp.x, qp.y, z, prm);
      const WValue w = eval_W(pt, z, prm);
      CAPTURE(to_string(c));
      REQUIRE(w.finite());
      CHECK(std::abs(w.value - ref) < 1e-9 * (1.0 + std::abs(ref)));
    }
  }
}

TEST_CASE("logarithmic derivative of W matches a symmetric difference along the flow") {
  Gen g;
  for (const ChartId c : all_charts()) {
    for (int i = 0; i < 20; ++i) {
      const Parameters prm{g.disk(1), g.disk(1)};
      const complex z = g.disk(1);
      const ChartPoint pt{c, g.ring(0.4, 1.2), g.ring(0.4, 1.2)};
      const Vec2<double> f = vector_field(pt, z, prm);
      // second-order terms of the flow cancel in the symmetric quotient
      const double h = 1e-5;
      const WValue wp = eval_W({c, pt.x + h * f.x, pt.y + h * f.y}, z + h, prm);
      const WValue wm = eval_W({c, pt.x - h * f.x, pt.y - h * f.y}, z - h, prm);
      const WValue w0 = eval_W(pt, z, prm);
      const complex fd = (wp.value - wm.value) / (2.0 * h) / w0.value;
      const complex ld = eval_W_logderiv(pt, z, prm);
      CAPTURE(to_string(c));
      CHECK(std::abs(ld - fd) < 1e-5 * (1.0 + std::abs(ld)));
    }
  }
}

TEST_CASE("W is infinite on the line at infinity and indeterminate at its base points") {
  const Parameters prm{{0.3, 0.0}, {0.0, 0.2}};
  const WValue inf = eval_W({ChartId::inf_u(), 0.0, 0.5}, 0.4, prm);
  CHECK(inf.infinite);
  for (int r = 0; r < 3; ++r) {
    const WValue bp = eval_W(base_point({0, RhoBranch(r)}, 0.4, prm), 0.4, prm);
    CHECK(bp.indeterminate);
  }
  // q = 0 in the base chart: p^2/q blows up unless p = 0 too
  CHECK(eval_W({ChartId::base(), 0.0, 1.0}, 0.0, prm).infinite);
  CHECK(eval_W({ChartId::base(), 0.0, 0.0}, 0.0, prm).indeterminate);
}

TEST_CASE("W is finite on L3") {
  const Parameters prm{{0.3, 0.0}, {0.0, 0.2}};
  for (int r = 0; r < 3; ++r) {
    const WValue w = eval_W({ChartId::blowup(ChartKind::B3b, RhoBranch(r)), 0.0, {0.7, -0.3}}, 0.4, prm);
    CHECK(w.finite());
  }
}

TEST_CASE("logarithmic derivative vanishes on the repelling curves") {
  Gen g;
  const Parameters prm{{0.3, 0.1}, {-0.2, 0.2}};
  for (int i = 0; i < 20; ++i) {
    const complex z = g.disk(1), c = g.ring(0.5, 2.0);
    CHECK(eval_W_logderiv({ChartId::inf_u(), 0.0, c}, z, prm) == 0.0);
    CHECK(eval_W_logderiv({ChartId::inf_v(), 0.0, c}, z, prm) == 0.0);
    for (int r = 0; r < 3; ++r) {
      const RhoBranch rho(r);
      CHECK(eval_W_logderiv({ChartId::blowup(ChartKind::B1a, rho), c, 0.0}, z, prm) == 0.0);
      CHECK(eval_W_logderiv({ChartId::blowup(ChartKind::B2a, rho), c, 0.0}, z, prm) == 0.0);
      CHECK(eval_W_logderiv({ChartId::blowup(ChartKind::B1b, rho), 0.0, c}, z, prm) == 0.0);
      CHECK(eval_W_logderiv({ChartId::blowup(ChartKind::B2b, rho), 0.0, c}, z, prm) == 0.0);
    }
  }
}

TEST_CASE("W stays bounded near the poles of a solution") {
  const auto res = integrate_path(1.0, -1.0, PathSpec{{0.0, 5.0}}, Parameters{}, IntegratorConfig{});
  REQUIRE(res.poles.size() == 4);
  for (const PoleRecord& p : res.poles) {
    const double m = w_pole_boundedness(res.trajectory, p, Parameters{});
    CHECK(std::isfinite(m));
    CHECK(m > 0.0);
  }
}
