#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "painleve/atlas.hpp"
#include "painleve/series.hpp"

using namespace painleve;

namespace {

struct Gen {
  std::mt19937_64 g{7};
  double u(double a, double b) { return std::uniform_real_distribution<double>(a, b)(g); }
  complex disk(double r) { return std::polar(r * std::sqrt(u(0, 1)), u(0.0, 2.0 * std::numbers::pi)); }
};

double rel(complex a, complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("Taylor coefficients at the origin for vanishing parameters") {
  const TaylorPair t = taylor_on_L3(0.0, RhoBranch(0), 0.0, 4, Parameters{});
  CHECK(std::abs(t.a_coeffs[0]) == 0.0);
  CHECK(std::abs(t.a_coeffs[1] - (-1.0)) < 1e-15);
  CHECK(std::abs(t.a_coeffs[2]) < 1e-15);
  CHECK(std::abs(t.a_coeffs[3] - (-1.0)) < 1e-15);
  CHECK(std::abs(t.b_coeffs[1] - (-1.0)) < 1e-15);
}

TEST_CASE("Taylor recursion against the closed forms") {
  Gen g;
  for (int i = 0; i < 200; ++i) {
    const Parameters prm{g.disk(2), g.disk(2)};
    const complex zs = g.disk(2), c = g.disk(2);
    const RhoBranch rho(i % 3);
    const complex r = rho.value(), rb = rho.conj().value(), a = prm.alpha, b = prm.beta;
    const TaylorPair t = taylor_on_L3(zs, rho, c, 6, prm);
    CHECK(rel(t.a_coeffs[1], -rb) < 1e-14);
    CHECK(rel(t.a_coeffs[2], -zs * rb / 2.0) < 1e-14);
    CHECK(rel(t.a_coeffs[3], (r * a - 2.0 * b) / 3.0 - rb * (1.0 + zs * zs / 2.0)) < 1e-13);
    CHECK(rel(t.a_coeffs[4], -c * r / 2.0 + (5.0 * a * r / 6.0 - 7.0 * b / 6.0 - 15.0 * rb / 8.0) * zs -
                                 3.0 * rb * zs * zs * zs / 8.0) < 1e-13);
    CHECK(rel(t.b_coeffs[1], a - b * b - r + a * b * r - 2.0 * b * rb - c * zs + (a - rb * b - r) * zs * zs) < 1e-13);
    // the recursion carries an extra z*^3 term in b2 beyond the two-line closed form
    const complex b2_short = c * (-2.5 - 2.0 * b * r + a * rb) +
                             0.5 * (5.0 * a - b * b - 3.0 * r + 3.0 * a * b * r - 2.0 * a * a * rb - 4.0 * b * rb) * zs -
                             c * zs * zs / 2.0;
    const complex extra = zs * zs * zs * (-a / 2.0 + b * rb / 2.0 + r / 2.0);
    CHECK(rel(t.b_coeffs[2], b2_short + extra) < 1e-13);
  }
}

TEST_CASE("Taylor solution solves the third blow-up system") {
  Gen g;
  const Parameters prm{{0.3, -0.1}, {0.2, 0.2}};
  for (int r = 0; r < 3; ++r) {
    const complex zs = g.disk(1), c = g.disk(1);
    const TaylorPair t = taylor_on_L3(zs, RhoBranch(r), c, 30, prm);
    const complex z = zs + complex(0.05, 0.02), h = 1e-5;
    const Vec2<double> v = eval_series(t, z), vp = eval_series(t, z + h), vm = eval_series(t, z - h);
    const Vec2<double> f = vector_field<double>(ChartId::blowup(ChartKind::B3b, RhoBranch(r)), z, v, prm);
    CHECK(std::abs((vp.x - vm.x) / (2.0 * h) - f.x) < 1e-8);
    CHECK(std::abs((vp.y - vm.y) / (2.0 * h) - f.y) < 1e-8);
  }
}

TEST_CASE("Laurent pair solves the system and has the expected leading terms") {
  Gen g;
  const Parameters prm{{-0.4, 0.2}, {0.1, 0.0}};
  for (int r = 0; r < 3; ++r) {
    const RhoBranch rho(r);
    const complex zs = g.disk(1), h = g.disk(1);
    const LaurentPair l = laurent_at_pole(zs, rho, h, 30, prm);
    CHECK(std::abs(l.c(-1) + rho.value()) < 1e-15);
    CHECK(std::abs(l.d(-1) - rho.conj().value()) < 1e-15);
    CHECK(l.c(2) == h);
    const complex z = zs + complex(0.0, 0.08), dz = 1e-5;
    const Vec2<double> v = eval_series(l, z), vp = eval_series(l, z + dz), vm = eval_series(l, z - dz);
    const complex dq = (vp.x - vm.x) / (2.0 * dz), dp = (vp.y - vm.y) / (2.0 * dz);
    CHECK(std::abs(dq - (v.y * v.y + z * v.x + prm.alpha)) < 1e-5 * std::abs(dq));
    CHECK(std::abs(dp + v.x * v.x + z * v.y + prm.beta) < 1e-5 * std::abs(dp));
  }
}

TEST_CASE("h and k from the L3 coordinate") {
  Gen g;
  for (int i = 0; i < 100; ++i) {
    const Parameters prm{g.disk(2), g.disk(2)};
    const complex zs = g.disk(2), c = g.disk(2);
    const RhoBranch rho(i % 3);
    const auto [h, k] = hk_from_c(c, zs, rho, prm);
    CHECK(std::abs(rho.value() * h - k - hk_relation_rhs(zs, rho, prm)) < 1e-14 * (1 + std::abs(h) + std::abs(k)));
    CHECK(rel(c_from_h(h, zs, rho, prm), c) < 1e-14);
    CHECK(rel(laurent_at_pole(zs, rho, h, 4, prm).k, k) < 1e-15);
  }
}

TEST_CASE("Taylor pair mapped to (q, p) is the Laurent pair") {
  Gen g;
  for (int i = 0; i < 60; ++i) {
    const Parameters prm{g.disk(2), g.disk(2)};
    const complex zs = g.disk(2), c = g.disk(2);
    const RhoBranch rho(i % 3);
    const LaurentPair mapped = laurent_from_taylor(taylor_on_L3(zs, rho, c, 10, prm), prm);
    const LaurentPair direct = laurent_at_pole(zs, rho, hk_from_c(c, zs, rho, prm).first, 8, prm);
    REQUIRE(mapped.order == 8);
    for (int n = -1; n <= 8; ++n) {
      CHECK(rel(mapped.c(n), direct.c(n)) < 1e-10);
      CHECK(rel(mapped.d(n), direct.d(n)) < 1e-10);
    }
  }
}

TEST_CASE("series argument errors") {
  CHECK_THROWS_AS(taylor_on_L3(0.0, RhoBranch(0), 0.0, 1, Parameters{}), Error);
  CHECK_THROWS_AS(laurent_at_pole(0.0, RhoBranch(0), 0.0, 0, Parameters{}), Error);
  const LaurentPair l = laurent_at_pole(1.0, RhoBranch(0), 0.0, 4, Parameters{});
  try {
    eval_series(l, 1.0);
    FAIL("expected PoleCenter");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PoleCenter);
  }
}
