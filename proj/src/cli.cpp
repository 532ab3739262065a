#include "painleve/cli.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <future>
#include <numbers>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "painleve/atlas.hpp"
#include "painleve/auxiliary.hpp"
#include "painleve/integrator.hpp"
#include "painleve/io.hpp"
#include "painleve/series.hpp"

namespace painleve {

namespace {

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(gen); }
  complex disk(double radius) {
    return std::polar(radius * std::sqrt(uniform(0.0, 1.0)), uniform(0.0, 2.0 * std::numbers::pi));
  }
  complex annulus(double r0, double r1) {
    return std::polar(uniform(r0, r1), uniform(0.0, 2.0 * std::numbers::pi));
  }
};

double rel(complex got, complex want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

// Closed forms of the first Taylor coefficients on L3; b2 includes the
// z*^3 term that the recursion produces.
std::array<complex, 6> taylor_closed_forms(complex zs, RhoBranch rho, complex c,
                                           const Parameters& prm) {
  const complex r = rho.value(), rb = rho.conj().value(), a = prm.alpha, b = prm.beta;
  const complex z2 = zs * zs, z3 = z2 * zs;
  return {
      -rb,
      -zs * rb / 2.0,
      (r * a - 2.0 * b) / 3.0 - rb * (1.0 + z2 / 2.0),
      -c * r / 2.0 + (5.0 * a * r / 6.0 - 7.0 * b / 6.0 - 15.0 * rb / 8.0) * zs - 3.0 / 8.0 * rb * z3,
      a - b * b - r + a * b * r - 2.0 * b * rb - c * zs + (a - rb * b - r) * z2,
      c * (a * rb - 2.0 * b * r - z2 / 2.0 - 2.5) + z3 * (-a / 2.0 + b * rb / 2.0 + r / 2.0) +
          zs * (-a * a * rb + 1.5 * a * b * r + 2.5 * a - b * b / 2.0 - 2.0 * b * rb - 1.5 * r),
  };
}

ResidualReport report(std::string name, double max_abs, long count, double scale = 1.0) {
  ResidualReport r;
  r.name = std::move(name);
  r.max_abs = max_abs;
  r.sample_count = count;
  r.scale = scale;
  return r;
}

}  // namespace

std::vector<CheckRow> run_check_suite(std::uint64_t seed, std::optional<ChartId> corrupt) {
  std::vector<CheckRow> rows;
  Rng rng(seed);

  // pushforward audit, 100 points per chart
  for (const ChartId chart : all_charts()) {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const Parameters prm{rng.disk(2.0), rng.disk(2.0)};
      const complex z = rng.disk(2.0);
      const Vec2<double> pt{rng.annulus(0.3, 1.5), rng.annulus(0.3, 1.5)};
      double res;
      if (corrupt && *corrupt == chart) {
        const FieldOverride f = corrupted_field(chart, prm);
        res = pushforward_residual(chart, z, pt, prm, &f);
      } else {
        res = pushforward_residual(chart, z, pt, prm);
      }
      worst = std::max(worst, res);
    }
    rows.push_back({report("pushforward:" + to_string(chart), worst, 100), 1e-9});
  }

  // series identities
  double closed = 0.0, relation = 0.0, roundtrip = 0.0, link = 0.0, compat = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Parameters prm{rng.disk(2.0), rng.disk(2.0)};
    const complex zs = rng.disk(2.0), c = rng.disk(2.0);
    const RhoBranch rho(static_cast<int>(rng.uniform(0.0, 3.0)) % 3);
    const TaylorPair t = taylor_on_L3(zs, rho, c, 10, prm);
    const auto cf = taylor_closed_forms(zs, rho, c, prm);
    for (int n = 1; n <= 4; ++n) closed = std::max(closed, rel(t.a_coeffs[n], cf[n - 1]));
    closed = std::max({closed, rel(t.b_coeffs[1], cf[4]), rel(t.b_coeffs[2], cf[5])});

    const auto [h, k] = hk_from_c(c, zs, rho, prm);
    const complex rhs = hk_relation_rhs(zs, rho, prm);
    relation = std::max(relation, std::abs(rho.value() * h - k - rhs) /
                                      (1.0 + std::abs(h) + std::abs(k) + std::abs(rhs)));
    roundtrip = std::max(roundtrip, rel(c_from_h(h, zs, rho, prm), c));

    const Vec2<double> f = vector_field<double>({ChartKind::B3b, rho.index()}, zs, {0.0, c}, prm);
    link = std::max({link, rel(t.a_coeffs[1], f.x), rel(t.b_coeffs[1], f.y)});

    const LaurentPair mapped = laurent_from_taylor(t, prm);
    const LaurentPair direct = laurent_at_pole(zs, rho, h, 8, prm);
    for (int n = -1; n <= 8; ++n)
      compat = std::max({compat, rel(mapped.c(n), direct.c(n)), rel(mapped.d(n), direct.d(n))});
  }
  rows.push_back({report("taylor_closed_forms", closed, 100), 1e-12});
  rows.push_back({report("hk_linear_relation", relation, 100), 1e-14});
  rows.push_back({report("hk_c_roundtrip", roundtrip, 100), 1e-14});
  rows.push_back({report("field_coefficient_link", link, 100), 1e-14});
  rows.push_back({report("laurent_taylor_compat", compat, 100), 1e-10});

  // standard trajectory: alpha = beta = 0, (1, -1), 0 -> 5
  const Parameters prm{};
  const PathSpec path{{0.0, 5.0}};
  const IntegratorConfig cfg;
  IntegrationResult run;
  try {
    run = integrate_path(1.0, -1.0, path, prm, cfg);
  } catch (const IntegrationFailure&) {
    rows.push_back({report("standard_run", 1.0, 0), 0.0});
    return rows;
  }
  const auto audit = structural_audit(run.trajectory, run.poles);
  rows.push_back({report("trajectory_audit", static_cast<double>(audit.size()),
                         static_cast<long>(run.trajectory.samples.size())), 0.0});
  for (int r = 0; r < 3; ++r) rows.push_back({p4_residual(run.trajectory, RhoBranch(r), prm), 1e-8});
  rows.push_back({w_ode_residual(run.trajectory, prm), 1e-8});
  rows.push_back({hamiltonian_drift(run.trajectory, prm), 1e-12});
  for (std::size_t i = 0; i < run.poles.size(); ++i) {
    const PoleRecord& p = run.poles[i];
    ResidualReport lm = laurent_match_report(p, run.trajectory, kDefaultSeriesOrder, prm);
    lm.name += ":" + std::to_string(i);
    rows.push_back({lm, 1e-6});
    const complex res = residue_estimate(p, run.trajectory);
    rows.push_back({report("residue:" + std::to_string(i), std::abs(res + p.rho.value()), 32), 1e-4});
  }
  return rows;
}

namespace {

struct CommonOpts {
  std::string alpha = "0,0", beta = "0,0";
};

Parameters params_from(const std::string& a, const std::string& b) {
  return Parameters::make(parse_complex(a), parse_complex(b));
}

bool write_file(const std::string& path, const std::string& text, std::ostream& err) {
  std::ofstream f(path, std::ios::binary);
  f << text;
  if (!f) {
    err << "error: cannot write " << path << "\n";
    return false;
  }
  return true;
}

struct PoleJob {
  int ray = 0;
  int ic = 0;
  std::vector<PoleRecord> poles;
  std::vector<PoleRecord> near;
  std::string failure;
};

PoleJob run_pole_job(int ray, int ic, complex q0, complex p0, const PathSpec& path,
                     const Parameters& prm, const IntegratorConfig& cfg, Precision prec) {
  PoleJob job;
  job.ray = ray;
  job.ic = ic;
  auto collect_near = [&](const Trajectory& t) {
    for (const Event& e : t.events)
      if (e.kind == EventKind::BasePointProximity && e.near_pole) job.near.push_back(*e.near_pole);
  };
  try {
    auto res = integrate_path(q0, p0, path, prm, cfg, prec);
    job.poles = std::move(res.poles);
    collect_near(res.trajectory);
  } catch (const IntegrationFailure& e) {
    job.poles = e.poles();
    collect_near(e.partial());
    job.failure = e.what();
  } catch (const Error& e) {
    job.failure = e.what();
  }
  return job;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Analytic continuation of the cubic Hamiltonian system q' = p^2 + zq + alpha, "
               "p' = -q^2 - zp - beta through its movable poles",
               "painleve-atlas"};
  app.require_subcommand(1);

  // integrate
  auto* integ = app.add_subcommand("integrate", "continue one solution along a path");
  CommonOpts io;
  std::string q0s, p0s, path_s, out_prefix, config_path;
  std::optional<double> rtol, atol;
  integ->add_option("--alpha", io.alpha, "alpha as RE,IM");
  integ->add_option("--beta", io.beta, "beta as RE,IM");
  integ->add_option("--q0", q0s, "q at the path start, RE,IM");
  integ->add_option("--p0", p0s, "p at the path start, RE,IM");
  integ->add_option("--path", path_s, "waypoints \"RE,IM;RE,IM;...\"");
  integ->add_option("--rtol", rtol, "relative tolerance");
  integ->add_option("--atol", atol, "absolute tolerance");
  integ->add_option("--out", out_prefix, "output prefix (PREFIX.traj.json, PREFIX.poles.csv)");
  integ->add_option("--config", config_path, "key = value run configuration file");

  // poles
  auto* poles = app.add_subcommand("poles", "scan rays from a start point and catalog poles");
  CommonOpts pio;
  int rays = 3;
  double radius = 5.0;
  std::string start_s = "0,0", pole_out = "poles";
  std::vector<std::string> ics;
  bool include_near = false;
  poles->add_option("--alpha", pio.alpha, "alpha as RE,IM");
  poles->add_option("--beta", pio.beta, "beta as RE,IM");
  poles->add_option("--rays", rays, "number of rays arg z = 2 pi k / M")->check(CLI::PositiveNumber);
  poles->add_option("--radius", radius, "ray length")->check(CLI::NonNegativeNumber);
  poles->add_option("--start", start_s, "common start point RE,IM");
  poles->add_option("--ic", ics, "initial condition qRE,qIM,pRE,pIM (repeatable; default 1,0,-1,0)");
  poles->add_option("--out", pole_out, "output prefix (PREFIX.catalog.csv)");
  poles->add_flag("--include-near", include_near, "also list poles passed at a distance");

  // series
  auto* ser = app.add_subcommand("series", "Taylor pair on L3 and the matching Laurent pair");
  ser->set_help_flag("--help", "print this help");  // -h would clash with --h
  CommonOpts sio;
  std::string pole_s, c_s, h_s, series_out;
  int rho_idx = 0, order = kDefaultSeriesOrder;
  ser->add_option("--alpha", sio.alpha, "alpha as RE,IM");
  ser->add_option("--beta", sio.beta, "beta as RE,IM");
  ser->add_option("--pole", pole_s, "pole position RE,IM")->required();
  ser->add_option("--rho", rho_idx, "branch index 0, 1 or 2")->check(CLI::Range(0, 2));
  auto* c_opt = ser->add_option("--c", c_s, "point on L3, RE,IM");
  auto* h_opt = ser->add_option("--h", h_s, "free Laurent coefficient, RE,IM");
  c_opt->excludes(h_opt);
  ser->add_option("--order", order, "series order N >= 2")->check(CLI::Range(2, 200));
  ser->add_option("--out", series_out, "write records to this file instead of stdout");

  // check
  auto* chk = app.add_subcommand("check", "run the verification suite");
  std::uint64_t seed = 1;
  std::string check_out = "check.csv", corrupt_s;
  chk->add_option("--seed", seed, "seed for the random point sets");
  chk->add_option("--out", check_out, "residual CSV path");
  chk->add_option("--corrupt-chart", corrupt_s)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*integ) {
      RunConfigFile rc;
      if (!config_path.empty()) {
        std::ifstream f(config_path);
        if (!f) {
          err << "error: cannot read " << config_path << "\n";
          return 1;
        }
        rc = parse_run_config(f);
      }
      if (integ->count("--alpha") || !rc.alpha) rc.alpha = parse_complex(io.alpha);
      if (integ->count("--beta") || !rc.beta) rc.beta = parse_complex(io.beta);
      if (!q0s.empty()) rc.q0 = parse_complex(q0s);
      if (!p0s.empty()) rc.p0 = parse_complex(p0s);
      if (!path_s.empty()) rc.path = parse_path(path_s);
      if (!out_prefix.empty()) rc.out = out_prefix;
      if (rtol) rc.config.rtol = *rtol;
      if (atol) rc.config.atol = *atol;
      if (!rc.q0 || !rc.p0 || !rc.path) {
        err << "error: --q0, --p0 and --path are required (flags or config file)\n";
        return 1;
      }
      const Parameters prm = Parameters::make(*rc.alpha, *rc.beta);
      const PathSpec path{*rc.path};
      path.validate();
      rc.config.validate();
      const std::string prefix = rc.out.value_or("run");
      const Precision prec = precision_from_env();
      int code = 0;
      IntegrationResult res;
      try {
        res = integrate_path(*rc.q0, *rc.p0, path, prm, rc.config, prec);
      } catch (const IntegrationFailure& e) {
        err << "integration failed: " << e.what() << "\n";
        res = {e.partial(), e.poles()};
        code = 2;
      }
      if (!write_file(prefix + ".traj.json", trajectory_json(res.trajectory, res.poles), err) ||
          !write_file(prefix + ".poles.csv", poles_csv(res.poles), err))
        return 2;
      out << "samples " << res.trajectory.samples.size() << ", poles " << res.poles.size() << "\n";
      return code;
    }

    if (*poles) {
      const Parameters prm = params_from(pio.alpha, pio.beta);
      const complex start = parse_complex(start_s);
      std::vector<std::array<complex, 2>> ic_list;
      if (ics.empty()) ics.push_back("1,0,-1,0");
      for (const std::string& s : ics) {
        std::vector<double> v;
        std::stringstream ss(s);
        std::string cell;
        while (std::getline(ss, cell, ',')) v.push_back(parse_complex(cell).real());
        if (v.size() != 4) {
          err << "error: --ic expects qRE,qIM,pRE,pIM\n";
          return 1;
        }
        ic_list.push_back({complex(v[0], v[1]), complex(v[2], v[3])});
      }
      const IntegratorConfig cfg;
      const Precision prec = precision_from_env();
      std::vector<std::future<PoleJob>> futures;
      if (radius > 0.0) {
        for (int k = 0; k < rays; ++k) {
          const complex end = start + std::polar(radius, 2.0 * std::numbers::pi * k / rays);
          const PathSpec path{{start, end}};
          for (std::size_t j = 0; j < ic_list.size(); ++j)
            futures.push_back(std::async(std::launch::async, run_pole_job, k, static_cast<int>(j),
                                         ic_list[j][0], ic_list[j][1], path, prm, cfg, prec));
        }
      }
      struct Row {
        int ray, ic;
        bool near;
        PoleRecord p;
      };
      std::vector<Row> rows;
      int code = 0;
      for (auto& f : futures) {
        PoleJob job = f.get();
        if (!job.failure.empty()) {
          err << "ray " << job.ray << " ic " << job.ic << ": " << job.failure << "\n";
          code = 2;
        }
        for (const PoleRecord& p : job.poles) rows.push_back({job.ray, job.ic, false, p});
        if (include_near)
          for (const PoleRecord& p : job.near) rows.push_back({job.ray, job.ic, true, p});
      }
      std::stable_sort(rows.begin(), rows.end(), [&](const Row& a, const Row& b) {
        if (a.ray != b.ray) return a.ray < b.ray;
        const double ra = std::abs(a.p.z_star - start), rb = std::abs(b.p.z_star - start);
        if (ra != rb) return ra < rb;
        return a.ic < b.ic;
      });
      std::string csv = "ray,ic,kind," + std::string(kPoleCsvHeader) + "\n";
      std::array<int, 3> hist{};
      for (const Row& r : rows) {
        csv += std::to_string(r.ray) + "," + std::to_string(r.ic) + "," +
               (r.near ? "near" : "crossing") + "," + pole_csv_row(r.p) + "\n";
        if (!r.near) ++hist[static_cast<std::size_t>(r.p.rho.index())];
      }
      if (!write_file(pole_out + ".catalog.csv", csv, err)) return 2;
      out << "rho_histogram 0:" << hist[0] << " 1:" << hist[1] << " 2:" << hist[2] << "\n";
      return code;
    }

    if (*ser) {
      const Parameters prm = params_from(sio.alpha, sio.beta);
      const complex zs = parse_complex(pole_s);
      const RhoBranch rho(rho_idx);
      complex c = 0.0;
      if (!h_s.empty())
        c = c_from_h(parse_complex(h_s), zs, rho, prm);
      else if (!c_s.empty())
        c = parse_complex(c_s);
      else {
        err << "error: one of --c or --h is required\n";
        return 1;
      }
      const TaylorPair t = taylor_on_L3(zs, rho, c, order, prm);
      const auto hk = hk_from_c(c, zs, rho, prm);
      const LaurentPair l = laurent_at_pole(zs, rho, hk.first, order, prm);
      const std::string text = series_json(t) + "\n" + series_json(l) + "\n";
      if (series_out.empty())
        out << text;
      else if (!write_file(series_out, text, err))
        return 1;
      return 0;
    }

    if (*chk) {
      std::optional<ChartId> corrupt;
      if (!corrupt_s.empty()) corrupt = chart_from_string(corrupt_s);
      const auto rows = run_check_suite(seed, corrupt);
      std::vector<ResidualReport> reports;
      bool ok = true;
      for (const CheckRow& r : rows) {
        reports.push_back(r.report);
        if (!r.pass()) {
          ok = false;
          err << "over threshold: " << r.report.name << " " << r.report.normalized() << " > "
              << r.threshold << "\n";
        }
      }
      if (!write_file(check_out, residual_csv(reports), err)) return 1;
      out << (ok ? "all residuals under threshold" : "some residuals over threshold") << "\n";
      return ok ? 0 : 3;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::InvalidArgument ? 1 : 2;
  }
  return 1;
}

}  // namespace painleve
