#include "painleve/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <tuple>

#include "painleve/series.hpp"

namespace painleve {

IntegrationFailure::IntegrationFailure(const Error& cause, Trajectory partial,
                                       std::vector<PoleRecord> poles)
    : Error(cause.kind(), std::string(cause.what()).substr(to_string(cause.kind()).size() + 2)),
      partial_(std::move(partial)),
      poles_(std::move(poles)) {}

namespace {

template <class R>
Vec2<R> operator+(Vec2<R> a, Vec2<R> b) { return {a.x + b.x, a.y + b.y}; }
template <class R>
Vec2<R> operator*(Cx<R> s, Vec2<R> a) { return {s * a.x, s * a.y}; }
template <class R>
Vec2<R> operator*(R s, Vec2<R> a) { return {s * a.x, s * a.y}; }

template <class R>
bool finite(Cx<R> v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

template <class R>
struct Trial {
  Vec2<R> v;
  double err;
  double err_abs;
};

// Dormand-Prince 5(4) with the error weights b - b*.
template <class R>
Trial<R> dopri_step(ChartId chart, Cx<R> z, Vec2<R> v, Cx<R> dz, const Parameters& prm,
                    double rtol, double atol) {
  auto f = [&](Cx<R> zz, Vec2<R> vv) { return vector_field<R>(chart, zz, vv, prm); };
  auto q = [](long a, long b) { return R(a) / R(b); };
  const Vec2<R> k1 = f(z, v);
  const Vec2<R> k2 = f(z + q(1, 5) * dz, v + dz * (q(1, 5) * k1));
  const Vec2<R> k3 = f(z + q(3, 10) * dz, v + dz * (q(3, 40) * k1 + q(9, 40) * k2));
  const Vec2<R> k4 =
      f(z + q(4, 5) * dz, v + dz * (q(44, 45) * k1 + q(-56, 15) * k2 + q(32, 9) * k3));
  const Vec2<R> k5 = f(z + q(8, 9) * dz, v + dz * (q(19372, 6561) * k1 + q(-25360, 2187) * k2 +
                                                    q(64448, 6561) * k3 + q(-212, 729) * k4));
  const Vec2<R> k6 = f(z + dz, v + dz * (q(9017, 3168) * k1 + q(-355, 33) * k2 +
                                         q(46732, 5247) * k3 + q(49, 176) * k4 +
                                         q(-5103, 18656) * k5));
  const Vec2<R> y5 = v + dz * (q(35, 384) * k1 + q(500, 1113) * k3 + q(125, 192) * k4 +
                               q(-2187, 6784) * k5 + q(11, 84) * k6);
  const Vec2<R> k7 = f(z + dz, y5);
  const Vec2<R> e = dz * (q(71, 57600) * k1 + q(-71, 16695) * k3 + q(71, 1920) * k4 +
                          q(-17253, 339200) * k5 + q(22, 525) * k6 + q(-1, 40) * k7);
  if (!finite(y5.x) || !finite(y5.y) || !finite(e.x) || !finite(e.y))
    return {v, std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  const double ex = static_cast<double>(std::abs(e.x)), ey = static_cast<double>(std::abs(e.y));
  const double sx = atol + rtol * static_cast<double>(std::max(std::abs(v.x), std::abs(y5.x)));
  const double sy = atol + rtol * static_cast<double>(std::max(std::abs(v.y), std::abs(y5.y)));
  const double err = std::sqrt(0.5 * ((ex / sx) * (ex / sx) + (ey / sy) * (ey / sy)));
  return {y5, err, std::max(ex, ey)};
}

// PI step-size controller, exponents 0.7/5 and 0.4/5.
struct Controller {
  double err_prev = 1e-4;
  bool rejected_last = false;

  double accepted(double err) {
    err = std::max(err, 1e-10);
    double fac = 0.9 * std::pow(err, -0.7 / 5.0) * std::pow(err_prev, 0.4 / 5.0);
    fac = std::clamp(fac, 0.2, 5.0);
    if (rejected_last) fac = std::min(fac, 1.0);
    err_prev = std::max(err, 1e-4);
    rejected_last = false;
    return fac;
  }
  double rejected(double err) {
    rejected_last = true;
    if (!std::isfinite(err)) return 0.2;
    return std::clamp(0.9 * std::pow(err, -0.2), 0.2, 1.0);
  }
};

template <class R>
Vec2<R> integrate_chart_r(ChartId chart, Cx<R> z0, Vec2<R> v0, Cx<R> z1, const Parameters& prm,
                          const IntegratorConfig& cfg, double rtol, double atol) {
  const R len = std::abs(z1 - z0);
  if (len == R(0)) return v0;
  const Cx<R> dir = (z1 - z0) / len;
  R t = 0;
  R h = std::min<R>(R(cfg.h_init), len);
  Vec2<R> v = v0;
  Controller ctl;
  long steps = 0;
  while (t < len) {
    if (++steps > cfg.max_steps) throw Error(ErrorKind::MaxSteps, "local integration exceeded max_steps");
    const bool last = h >= len - t;
    const R hh = last ? len - t : h;
    const Cx<R> z = z0 + t * dir;
    Trial<R> tr;
    try {
      tr = dopri_step<R>(chart, z, v, hh * dir, prm, rtol, atol);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SingularLocus) throw;
      tr = {v, std::numeric_limits<double>::infinity(), 0.0};
    }
    if (tr.err <= 1.0) {
      v = tr.v;
      t = last ? len : t + hh;
      h = std::min<R>(hh * R(ctl.accepted(tr.err)), R(cfg.h_max));
    } else {
      h = hh * R(ctl.rejected(tr.err));
      if (h < R(cfg.h_min)) throw Error(ErrorKind::StepUnderflow, "local integration step underflow");
    }
  }
  return v;
}

// Tolerances for Newton re-integrations and dense evaluation.
double local_rtol(const IntegratorConfig& cfg) { return std::max(cfg.rtol * 1e-2, 1e-15); }
double local_atol(const IntegratorConfig& cfg) { return std::max(cfg.atol * 1e-2, 1e-17); }

template <class R>
PoleRecord locate_pole_r(ChartId chart, Cx<R> z0, Vec2<R> v0, const Parameters& prm,
                         const IntegratorConfig& cfg, int* iterations) {
  if (chart.kind != ChartKind::B3b)
    throw Error(ErrorKind::InvalidArgument, "locate_pole needs a point in a B3b chart");
  constexpr int kBudget = 50;
  Cx<R> z = z0;
  Vec2<R> v = v0;
  int it = 0;
  for (;; ++it) {
    if (std::abs(v.x) < R(cfg.newton_tol)) break;
    if (it >= kBudget) throw Error(ErrorKind::NewtonStall, "pole Newton iteration did not converge");
    const Vec2<R> f = vector_field<R>(chart, z, v, prm);
    if (f.x == Cx<R>(0)) throw Error(ErrorKind::NewtonStall, "zero derivative in pole Newton iteration");
    Cx<R> dz = -v.x / f.x;
    const R cap = R(0.5);
    if (std::abs(dz) > cap) dz *= cap / std::abs(dz);
    z += dz;
    v = integrate_chart_r<R>(chart, z0, v0, z, prm, cfg, local_rtol(cfg), local_atol(cfg));
  }
  if (iterations) *iterations = it;
  PoleRecord rec;
  rec.z_star = complex(static_cast<double>(z.real()), static_cast<double>(z.imag()));
  rec.rho = chart.branch();
  rec.c = complex(static_cast<double>(v.y.real()), static_cast<double>(v.y.imag()));
  std::tie(rec.h, rec.k) = hk_from_c(rec.c, rec.z_star, rec.rho, prm);
  return rec;
}

template <class R>
complex to_d(Cx<R> v) { return {static_cast<double>(v.real()), static_cast<double>(v.imag())}; }

template <class R>
class Runner {
 public:
  Runner(const PathSpec& path, const Parameters& prm, const IntegratorConfig& cfg, Precision prec)
      : prm_(prm), cfg_(cfg) {
    traj_.params = prm;
    traj_.config = cfg;
    traj_.path = path;
    traj_.precision = prec;
  }

  IntegrationResult run(complex q0, complex p0) {
    const auto& w = traj_.path.waypoints;
    z_ = Cx<R>(w.front());
    chart_ = ChartId::base();
    v_ = {Cx<R>(q0), Cx<R>(p0)};
    try {
      const ChartId start = select_chart(current(), to_d(z_), prm_, cfg_);
      if (!(start == chart_)) {
        v_ = transition<R>(chart_, v_, start, z_, prm_);
        chart_ = start;
      }
      record_sample(0.0);
      double s0 = 0.0;
      for (std::size_t i = 1; i < w.size(); ++i) {
        final_segment_ = i + 1 == w.size();
        run_segment(Cx<R>(w[i - 1]), Cx<R>(w[i]), s0);
        s0 += std::abs(w[i] - w[i - 1]);
      }
    } catch (const Error& e) {
      Event ev;
      ev.kind = EventKind::Failure;
      ev.z = to_d(z_);
      ev.s = traj_.samples.empty() ? 0.0 : traj_.samples.back().s;
      ev.from = ev.to = chart_;
      ev.message = e.what();
      traj_.events.push_back(ev);
      throw IntegrationFailure(e, std::move(traj_), std::move(poles_));
    }
    const auto problems = structural_audit(traj_, poles_);
    if (!problems.empty()) throw std::logic_error("trajectory audit failed: " + problems.front());
    return {std::move(traj_), std::move(poles_)};
  }

 private:
  ChartPoint current() const { return {chart_, to_d(v_.x), to_d(v_.y)}; }

  void record_sample(double s) { traj_.samples.push_back({to_d(z_), s, current()}); }

  void insert_event(Event ev) {
    auto it = std::upper_bound(traj_.events.begin(), traj_.events.end(), ev.s,
                               [](double s, const Event& e) { return s < e.s; });
    traj_.events.insert(it, std::move(ev));
  }

  void check_divergence() {
    const R bound(cfg_.divergence_bound);
    const bool b3b = chart_.kind == ChartKind::B3b;
    if (!finite(v_.x) || !finite(v_.y) || (!b3b && std::abs(v_.x) > bound) ||
        std::abs(v_.y) > bound) {
      std::ostringstream os;
      os << "solution left every chart domain in " << to_string(chart_) << " at z = " << to_d(z_);
      throw Error(ErrorKind::NonPoleDivergence, os.str());
    }
  }

  void run_segment(Cx<R> za, Cx<R> zb, double s0) {
    const R len = std::abs(zb - za);
    const Cx<R> dir = (zb - za) / len;
    R t = 0;
    R h = std::min<R>(R(cfg_.h_init), len);
    while (t < len) {
      if (++steps_ > cfg_.max_steps) throw Error(ErrorKind::MaxSteps, "max_steps exceeded");
      const bool last = h >= len - t;
      const R hh = last ? len - t : h;
      Trial<R> tr;
      try {
        tr = dopri_step<R>(chart_, z_, v_, hh * dir, prm_, cfg_.rtol, cfg_.atol);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::SingularLocus) throw;
        tr = {v_, std::numeric_limits<double>::infinity(), 0.0};
      }
      if (!(tr.err <= 1.0)) {
        h = hh * R(ctl_.rejected(tr.err));
        if (h < R(cfg_.h_min)) {
          std::ostringstream os;
          os << "step below h_min at z = " << to_d(z_) << " in " << to_string(chart_);
          throw Error(ErrorKind::StepUnderflow, os.str());
        }
        continue;
      }
      const R t_prev = t;
      v_ = tr.v;
      t = last ? len : t + hh;
      z_ = last ? zb : za + t * dir;
      h = std::min<R>(hh * R(ctl_.accepted(tr.err)), R(cfg_.h_max));
      check_divergence();
      const double s = s0 + static_cast<double>(t);
      record_sample(s);
      handle_pole(za, dir, len, t_prev, t, s0);
      // no switch at the end of the path: it would have no sample after it
      if (!(last && final_segment_)) switch_chart(s);
    }
  }

  void handle_pole(Cx<R> za, Cx<R> dir, R len, R t_prev, R t, double s0) {
    (void)t_prev;
    if (chart_.kind != ChartKind::B3b || std::abs(v_.x) > R(cfg_.capture_radius)) return;
    const Vec2<R> f = vector_field<R>(chart_, z_, v_, prm_);
    if (f.x == Cx<R>(0)) return;
    const Cx<R> z_pred = z_ - v_.x / f.x;
    const R tp = std::real((z_pred - za) * std::conj(dir));
    if (tp > t) return;  // not yet passed
    for (const complex zh : handled_)
      if (std::abs(to_d(z_pred) - zh) < 0.1) return;

    PoleRecord rec;
    try {
      rec = locate_pole_r<R>(chart_, z_, v_, prm_, cfg_, nullptr);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NewtonStall) throw;
      // keep going; the event records that something was passed but not pinned down
      handled_.push_back(to_d(z_pred));
      Event ev;
      ev.z = to_d(z_pred);
      ev.s = s0 + std::clamp(static_cast<double>(tp), 0.0, static_cast<double>(len));
      ev.from = ev.to = chart_;
      ev.kind = EventKind::BasePointProximity;
      ev.message = "pole location did not converge";
      insert_event(std::move(ev));
      return;
    }
    // Newton may wander off to another root of x; that is not the pole being passed
    const double guess = std::abs(to_d(z_pred - z_));
    if (std::abs(rec.z_star - to_d(z_pred)) > std::max(0.1, guess)) {
      handled_.push_back(to_d(z_pred));
      return;
    }
    const double tol = 1e-8 * std::max(1.0, std::abs(rec.z_star));
    for (const complex zh : handled_)
      if (std::abs(rec.z_star - zh) < tol) return;
    handled_.push_back(rec.z_star);

    const complex rel = (rec.z_star - to_d(za)) * std::conj(to_d(dir));
    const double along = rel.real(), off = std::abs(rel.imag());
    const double seg_len = static_cast<double>(len);
    Event ev;
    ev.z = rec.z_star;
    ev.s = s0 + std::clamp(along, 0.0, seg_len);
    ev.from = ev.to = chart_;
    const bool on_path = off <= cfg_.pole_path_tol * std::max(1.0, std::abs(rec.z_star)) &&
                         along >= -tol && along <= seg_len + tol;
    if (on_path) {
      ev.kind = EventKind::PoleCrossing;
      ev.pole = poles_.size();
      poles_.push_back(rec);
    } else {
      ev.kind = EventKind::BasePointProximity;
      ev.near_pole = rec;
      std::ostringstream os;
      os << "pole passed at distance " << off;
      ev.message = os.str();
    }
    insert_event(std::move(ev));
  }

  void switch_chart(double s) {
    const ChartId next = select_chart(current(), to_d(z_), prm_, cfg_);
    if (next == chart_) return;
    Vec2<R> v;
    try {
      v = transition<R>(chart_, v_, next, z_, prm_);
    } catch (const Error&) {
      return;
    }
    Event ev;
    ev.kind = EventKind::ChartSwitch;
    ev.z = to_d(z_);
    ev.s = s;
    ev.from = chart_;
    ev.to = next;
    insert_event(std::move(ev));
    if (chart_.kind == ChartKind::B3b) handled_.clear();
    chart_ = next;
    v_ = v;
  }

  Parameters prm_;
  IntegratorConfig cfg_;
  Trajectory traj_;
  std::vector<PoleRecord> poles_;
  std::vector<complex> handled_;
  Cx<R> z_;
  ChartId chart_;
  Vec2<R> v_;
  Controller ctl_;
  long steps_ = 0;
  bool final_segment_ = false;
};

}  // namespace

StepResult rk_step(const State& state, complex dz, const Parameters& prm,
                   const IntegratorConfig& cfg) {
  if (dz == 0.0) throw Error(ErrorKind::InvalidArgument, "rk_step needs dz != 0");
  if (std::abs(dz) < cfg.h_min) throw Error(ErrorKind::StepUnderflow, "|dz| below h_min");
  const auto tr = dopri_step<double>(state.pt.chart, state.z, {state.pt.x, state.pt.y}, dz, prm,
                                     cfg.rtol, cfg.atol);
  return {{state.z + dz, {state.pt.chart, tr.v.x, tr.v.y}}, tr.err, tr.err_abs};
}

IntegrationResult integrate_path(complex q0, complex p0, const PathSpec& path,
                                 const Parameters& prm, const IntegratorConfig& cfg,
                                 Precision precision) {
  cfg.validate();
  path.validate();
  if (!std::isfinite(std::abs(q0)) || !std::isfinite(std::abs(p0)))
    throw Error(ErrorKind::InvalidArgument, "initial values must be finite");
  if (precision == Precision::Extended)
    return Runner<long double>(path, prm, cfg, precision).run(q0, p0);
  return Runner<double>(path, prm, cfg, precision).run(q0, p0);
}

PoleRecord locate_pole(const State& state, const Parameters& prm, const IntegratorConfig& cfg,
                       int* iterations) {
  return locate_pole_r<double>(state.pt.chart, state.z, {state.pt.x, state.pt.y}, prm, cfg,
                               iterations);
}

ChartPoint integrate_in_chart(const ChartPoint& pt, complex z0, complex z1,
                              const Parameters& prm, const IntegratorConfig& cfg) {
  const auto v = integrate_chart_r<double>(pt.chart, z0, {pt.x, pt.y}, z1, prm, cfg,
                                           local_rtol(cfg), local_atol(cfg));
  return {pt.chart, v.x, v.y};
}

ChartPoint evaluate_near(const Trajectory& traj, complex z, ChartId chart,
                         const IntegratorConfig& cfg) {
  if (traj.samples.empty()) throw Error(ErrorKind::InvalidArgument, "empty trajectory");
  // Nearest samples first; some may not be representable in the target chart.
  std::vector<std::size_t> order(traj.samples.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::abs(traj.samples[a].z - z) < std::abs(traj.samples[b].z - z);
  });
  const std::size_t tries = std::min<std::size_t>(order.size(), 8);
  for (std::size_t i = 0; i < tries; ++i) {
    const Sample& smp = traj.samples[order[i]];
    try {
      const ChartPoint start = transition(smp.pt, chart, smp.z, traj.params);
      return integrate_in_chart(start, smp.z, z, traj.params, cfg);
    } catch (const Error&) {
    }
  }
  throw Error(ErrorKind::IndeterminateMap, "no nearby sample reaches chart " + to_string(chart));
}

Vec2<double> final_base_value(const Trajectory& traj) {
  if (traj.samples.empty()) throw Error(ErrorKind::InvalidArgument, "empty trajectory");
  const Sample& last = traj.samples.back();
  return to_base(last.pt, last.z, traj.params);
}

std::vector<std::string> structural_audit(const Trajectory& traj,
                                          const std::vector<PoleRecord>& poles) {
  std::vector<std::string> out;
  if (traj.samples.empty()) {
    out.push_back("no samples");
    return out;
  }
  for (std::size_t i = 1; i < traj.samples.size(); ++i)
    if (traj.samples[i].s < traj.samples[i - 1].s) out.push_back("samples out of arc-length order");
  for (std::size_t i = 1; i < traj.events.size(); ++i)
    if (traj.events[i].s < traj.events[i - 1].s) out.push_back("events out of arc-length order");

  std::vector<const Event*> switches;
  std::vector<int> crossings(poles.size(), 0);
  for (const Event& e : traj.events) {
    if (e.kind == EventKind::ChartSwitch) switches.push_back(&e);
    if (e.kind == EventKind::PoleCrossing) {
      if (!e.pole || *e.pole >= poles.size())
        out.push_back("pole crossing without a pole record");
      else
        ++crossings[*e.pole];
    }
  }
  for (std::size_t i = 0; i < crossings.size(); ++i)
    if (crossings[i] != 1) out.push_back("pole record " + std::to_string(i) + " not matched by exactly one crossing");

  std::size_t next = 0;
  for (std::size_t i = 1; i < traj.samples.size(); ++i) {
    const Sample& a = traj.samples[i - 1];
    const Sample& b = traj.samples[i];
    if (a.pt.chart == b.pt.chart) continue;
    if (next >= switches.size()) {
      out.push_back("chart change without a switch event at s = " + std::to_string(b.s));
      break;
    }
    const Event& e = *switches[next++];
    if (!(e.from == a.pt.chart) || !(e.to == b.pt.chart) || e.s < a.s || e.s > b.s)
      out.push_back("switch event does not match the chart change at s = " + std::to_string(b.s));
  }
  const bool failed = !traj.events.empty() && traj.events.back().kind == EventKind::Failure;
  if (next + (failed ? 1 : 0) < switches.size()) out.push_back("switch event without a chart change");

  for (const PoleRecord& p : poles) {
    const complex lhs = p.rho.value() * p.h - p.k;
    const complex rhs = hk_relation_rhs(p.z_star, p.rho, traj.params);
    if (std::abs(lhs - rhs) > 1e-12 * (1.0 + std::abs(p.h) + std::abs(p.k) + std::abs(rhs)))
      out.push_back("pole record violates the h-k relation");
  }
  return out;
}

}  // namespace painleve
