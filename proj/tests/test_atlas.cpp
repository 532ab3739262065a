#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "painleve/atlas.hpp"
#include "painleve/diagnostics.hpp"
#include "painleve/series.hpp"

using namespace painleve;

namespace {

struct Gen {
  std::mt19937_64 g{42};
  double u(double a, double b) { return std::uniform_real_distribution<double>(a, b)(g); }
  complex ring(double r0, double r1) { return std::polar(u(r0, r1), u(0.0, 2.0 * std::numbers::pi)); }
  complex disk(double r) { return std::polar(r * std::sqrt(u(0, 1)), u(0.0, 2.0 * std::numbers::pi)); }
};

double dist(Vec2<double> a, Vec2<double> b) { return std::max(std::abs(a.x - b.x), std::abs(a.y - b.y)); }

}  // namespace

TEST_CASE("chart catalogue") {
  const auto& charts = all_charts();
  CHECK(charts.size() == 21);
  for (const ChartId c : charts) CHECK(chart_from_string(to_string(c)) == c);
  CHECK(to_string(ChartId::blowup(ChartKind::B3b, RhoBranch(2))) == "b3b:2");
  CHECK_THROWS_AS(chart_from_string("b4a:0"), Error);
  CHECK_THROWS_AS(RhoBranch(3), Error);
}

TEST_CASE("chart maps invert each other") {
  Gen g;
  for (const ChartId c : all_charts()) {
    for (int i = 0; i < 50; ++i) {
      const Parameters prm{g.disk(2), g.disk(2)};
      const complex z = g.disk(2);
      const Vec2<double> pt{g.ring(0.3, 1.5), g.ring(0.3, 1.5)};
      const Vec2<double> qp = to_base<double>(c, pt, z, prm);
      const Vec2<double> back = from_base<double>(qp, z, c, prm);
      CAPTURE(to_string(c));
      CHECK(dist(back, pt) < 1e-9 * (1.0 + std::abs(pt.x) + std::abs(pt.y)));
    }
  }
}

TEST_CASE("tree transitions agree with going through the base chart") {
  Gen g;
  const auto& charts = all_charts();
  for (int i = 0; i < 400; ++i) {
    const ChartId a = charts[static_cast<std::size_t>(g.u(0, 21)) % 21];
    const ChartId b = charts[static_cast<std::size_t>(g.u(0, 21)) % 21];
    const Parameters prm{g.disk(1), g.disk(1)};
    const complex z = g.disk(1);
    const Vec2<double> pt{g.ring(0.4, 1.2), g.ring(0.4, 1.2)};
    const Vec2<double> qp = to_base<double>(a, pt, z, prm);
    const Vec2<double> direct = from_base<double>(qp, z, b, prm);
    const Vec2<double> tree = transition<double>(a, pt, b, z, prm);
    CAPTURE(to_string(a));
    CAPTURE(to_string(b));
    CHECK(dist(direct, tree) < 1e-7 * (1.0 + std::abs(direct.x) + std::abs(direct.y)));
  }
}

TEST_CASE("transition stays accurate near the pole where (q, p) is huge") {
  // B3b point 1e-9 off L3: the tree route to B2b never forms q ~ 1e9, so it
  // reproduces the exact elementary map (x, x y - s) to rounding.
  const Parameters prm{{0.3, 0.1}, {-0.2, 0.4}};
  const complex z{0.7, -0.2};
  const RhoBranch rho(1);
  const ChartId b3b = ChartId::blowup(ChartKind::B3b, rho);
  const ChartId b2b = ChartId::blowup(ChartKind::B2b, rho);
  const Vec2<double> pt{1e-9, {0.4, 0.3}};
  const complex s = 1.0 - rho.conj().value() * prm.alpha + rho.value() * prm.beta;
  const Vec2<double> mid = transition<double>(b3b, pt, b2b, z, prm);
  CHECK(std::abs(mid.x - pt.x) == 0.0);
  CHECK(std::abs(mid.y - (pt.x * pt.y - s)) < 1e-15);
  // and on to B1b: (x, x y + rhob z)
  const Vec2<double> b1 = transition<double>(b3b, pt, ChartId::blowup(ChartKind::B1b, rho), z, prm);
  CHECK(std::abs(b1.y - (mid.x * mid.y + rho.conj().value() * z)) < 1e-15);
}

TEST_CASE("fields push forward in every chart") {
  Gen g;
  for (const ChartId c : all_charts()) {
    double worst = 0;
    for (int i = 0; i < 100; ++i) {
      const Parameters prm{g.disk(2), g.disk(2)};
      worst = std::max(worst, pushforward_residual(c, g.disk(2), {g.ring(0.2, 1.5), g.ring(0.2, 1.5)}, prm));
    }
    CAPTURE(to_string(c));
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("third blow-up field is regular on L3 with x' = -rhob there") {
  const Parameters prm{{0.5, 0.0}, {0.0, -0.25}};
  for (int r = 0; r < 3; ++r) {
    const RhoBranch rho(r);
    const Vec2<double> f = vector_field<double>(ChartId::blowup(ChartKind::B3b, rho), {0.3, 0.1}, {0.0, {1.0, 2.0}}, prm);
    CHECK(std::abs(f.x + rho.conj().value()) < 1e-15);
    CHECK(std::isfinite(std::abs(f.y)));
  }
}

TEST_CASE("analytic jacobian matches finite differences") {
  Gen g;
  for (const ChartId c : all_charts()) {
    const Parameters prm{g.disk(1), g.disk(1)};
    const complex z = g.disk(1), q = g.ring(0.5, 1.5), p = g.ring(0.5, 1.5);
    const ChartJacobian jac = chart_jacobian(c, z, q, p, prm);
    const double h = 1e-6;
    auto F = [&](complex qq, complex pp, complex zz) { return from_base<double>({qq, pp}, zz, c, prm); };
    const Vec2<double> dq = [&] {
      const auto a = F(q + h, p, z), b = F(q - h, p, z);
      return Vec2<double>{(a.x - b.x) / (2 * h), (a.y - b.y) / (2 * h)};
    }();
    const Vec2<double> dp = [&] {
      const auto a = F(q, p + h, z), b = F(q, p - h, z);
      return Vec2<double>{(a.x - b.x) / (2 * h), (a.y - b.y) / (2 * h)};
    }();
    const Vec2<double> dz = [&] {
      const auto a = F(q, p, z + h), b = F(q, p, z - h);
      return Vec2<double>{(a.x - b.x) / (2 * h), (a.y - b.y) / (2 * h)};
    }();
    CAPTURE(to_string(c));
    const double tol = 1e-6 * (1 + std::abs(jac.j[0]) + std::abs(jac.j[1]) + std::abs(jac.j[2]) + std::abs(jac.j[3]));
    CHECK(std::abs(jac.j[0] - dq.x) < tol);
    CHECK(std::abs(jac.j[1] - dp.x) < tol);
    CHECK(std::abs(jac.j[2] - dq.y) < tol);
    CHECK(std::abs(jac.j[3] - dp.y) < tol);
    CHECK(std::abs(jac.dz.x - dz.x) < tol);
    CHECK(std::abs(jac.dz.y - dz.y) < tol);
  }
}

TEST_CASE("base points lie on exceptional curves") {
  const Parameters prm{{0.2, 0.0}, {0.1, 0.3}};
  for (int level = 0; level < 3; ++level)
    for (int r = 0; r < 3; ++r) {
      const ChartPoint bp = base_point({level, RhoBranch(r)}, {0.5, 0.5}, prm);
      CHECK(on_exceptional_curve(bp));
      CHECK(bp.chart.level() == level);
    }
  const ChartPoint l0 = base_point({0, RhoBranch(1)}, 0.0, prm);
  CHECK(l0.chart == ChartId::inf_u());
  CHECK(std::abs(l0.y + RhoBranch(1).value()) < 1e-15);
  const ChartPoint l2 = base_point({2, RhoBranch(0)}, 0.0, prm);
  const complex s = 1.0 - prm.alpha + prm.beta;
  CHECK(l2.chart == ChartId::blowup(ChartKind::B2b, RhoBranch(0)));
  CHECK(std::abs(l2.y + s) < 1e-15);
}

TEST_CASE("residue branch from the direction p/q") {
  for (int r = 0; r < 3; ++r) {
    const RhoBranch rho(r);
    const complex t = 1e-5;
    CHECK(classify_rho(-rho.value() / t, rho.conj().value() / t) == rho);
  }
  // p/q halfway between -1 and -omega
  const complex mid = -(1.0 + RhoBranch(1).value()) / 2.0;
  CHECK_THROWS_AS(classify_rho(1.0, mid), Error);
}

TEST_CASE("chart selection near a pole descends to the third blow-up") {
  const Parameters prm{};
  for (int r = 0; r < 3; ++r) {
    const RhoBranch rho(r);
    const LaurentPair l = laurent_at_pole(0.0, rho, 0.3, 12, prm);
    const complex z = 1e-3;
    const Vec2<double> qp = eval_series(l, z);
    const ChartPoint pt{ChartId::base(), qp.x, qp.y};
    const ChartId c = select_chart(pt, z, prm, IntegratorConfig{});
    CHECK(c == ChartId::blowup(ChartKind::B3b, rho));
  }
  // moderate values stay in the base chart
  CHECK(select_chart({ChartId::base(), 1.0, -1.0}, 0.0, prm, IntegratorConfig{}) == ChartId::base());
}
