#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "painleve/cli.hpp"
#include "painleve/diagnostics.hpp"
#include "painleve/integrator.hpp"

using namespace painleve;

namespace {

const IntegrationResult& standard_run() {
  static const IntegrationResult res =
      integrate_path(1.0, -1.0, PathSpec{{0.0, 5.0}}, Parameters{}, IntegratorConfig{});
  return res;
}

}  // namespace

TEST_CASE("identity residuals on the standard trajectory") {
  const auto& res = standard_run();
  for (int r = 0; r < 3; ++r) {
    const ResidualReport rep = p4_residual(res.trajectory, RhoBranch(r), Parameters{});
    CHECK(rep.name == "p4_residual:" + std::to_string(r));
    CHECK(rep.sample_count > 100);
    CHECK(rep.normalized() < 1e-8);
  }
  CHECK(w_ode_residual(res.trajectory, Parameters{}).normalized() < 1e-8);
  CHECK(hamiltonian_drift(res.trajectory, Parameters{}).normalized() < 1e-12);
}

TEST_CASE("residuals notice wrong parameters") {
  // the same trajectory judged against an equation it does not solve
  const auto& res = standard_run();
  const Parameters wrong{{0.3, 0.0}, {0.0, 0.0}};
  CHECK(p4_residual(res.trajectory, RhoBranch(0), wrong).normalized() > 1e-4);
  CHECK(w_ode_residual(res.trajectory, wrong).normalized() > 1e-4);
}

TEST_CASE("Laurent pairs match the continued solution around each pole") {
  const auto& res = standard_run();
  REQUIRE(res.poles.size() == 4);
  for (const PoleRecord& p : res.poles) {
    const ResidualReport rep = laurent_match_report(p, res.trajectory, 12, Parameters{});
    CHECK(rep.sample_count == 14);
    CHECK(rep.normalized() < 1e-6);
    const complex residue = residue_estimate(p, res.trajectory);
    CHECK(std::abs(residue + p.rho.value()) < 1e-8);
  }
}

TEST_CASE("a shifted pole fails the Laurent match") {
  const auto& res = standard_run();
  PoleRecord p = res.poles[0];
  p.z_star += 1e-4;
  CHECK(laurent_match_report(p, res.trajectory, 12, Parameters{}).normalized() > 1e-6);
}

TEST_CASE("pushforward audit detects a corrupted field in every chart") {
  const Parameters prm{{0.4, -0.1}, {0.2, 0.3}};
  const complex z{0.3, 0.2};
  const Vec2<double> pt{{0.7, 0.2}, {-0.5, 0.6}};
  for (const ChartId c : all_charts()) {
    const FieldOverride bad = corrupted_field(c, prm);
    CAPTURE(to_string(c));
    CHECK(pushforward_residual(c, z, pt, prm) < 1e-13);
    CHECK(pushforward_residual(c, z, pt, prm, &bad) > 1e-3);
  }
}

TEST_CASE("check suite passes and flags a corrupted chart") {
  const auto rows = run_check_suite(1);
  CHECK(rows.size() > 30);
  for (const CheckRow& r : rows) {
    CAPTURE(r.report.name);
    CHECK(r.pass());
  }
  const auto bad = run_check_suite(1, ChartId::blowup(ChartKind::B2a, RhoBranch(2)));
  for (const CheckRow& r : bad) {
    CAPTURE(r.report.name);
    CHECK(r.pass() == (r.report.name != "pushforward:b2a:2"));
  }
}

TEST_CASE("identity residuals with complex parameters, all three branches") {
  const Parameters prm{{0.7, -0.3}, {-0.4, 0.5}};
  const auto res = integrate_path({0.3, 0.2}, {-0.5, 0.1}, PathSpec{{0.0, {2.5, 0.3}, {3.0, 2.0}}}, prm, IntegratorConfig{});
  for (int r = 0; r < 3; ++r) {
    const ResidualReport rep = p4_residual(res.trajectory, RhoBranch(r), prm);
    CAPTURE(r);
    CHECK(rep.sample_count > 20);
    CHECK(rep.normalized() < 1e-8);
  }
  CHECK(w_ode_residual(res.trajectory, prm).normalized() < 1e-8);
  CHECK(hamiltonian_drift(res.trajectory, prm).normalized() < 1e-12);
}
