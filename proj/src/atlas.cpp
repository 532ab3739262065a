#include "painleve/atlas.hpp"

#include "b3b_field.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace painleve {

template <class R>
BranchConsts<R> BranchConsts<R>::make(const Parameters& prm, RhoBranch rho, Cx<R> z) {
  BranchConsts c;
  c.alpha = Cx<R>(prm.alpha);
  c.beta = Cx<R>(prm.beta);
  c.rho = rho.value<R>();
  c.rhob = rho.conj().value<R>();
  c.s = R(1) - c.rhob * c.alpha + c.rho * c.beta;
  c.k0 = c.rho + c.rho * z * z + c.rhob * c.beta;
  return c;
}

namespace {

template <class R>
bool finite(Cx<R> v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

template <class R>
Cx<R> field_div(Cx<R> num, Cx<R> den, const char* where) {
  if (den == Cx<R>(0)) throw Error(ErrorKind::SingularLocus, where);
  return num / den;
}

template <class R>
Cx<R> map_inv(Cx<R> d, ChartId chart) {
  if (d == Cx<R>(0) || !finite(d))
    throw Error(ErrorKind::IndeterminateMap, "map undefined in chart " + to_string(chart));
  return R(1) / d;
}

template <class R>
Vec2<R> checked(Vec2<R> v, ChartId chart) {
  if (!finite(v.x) || !finite(v.y))
    throw Error(ErrorKind::IndeterminateMap, "non-finite image in chart " + to_string(chart));
  return v;
}

template <class R>
Vec2<R> field_b3b(const BranchConsts<R>& k, Cx<R> z, Cx<R> x, Cx<R> y) {
  Vec2<R> out;
  detail::b3b_rhs(k.rho, k.rhob, k.s, k.k0, z, x, y, out.x, out.y);
  return out;
}

template <class R>
Vec2<R> field_b3a(const BranchConsts<R>& k, Cx<R> z, Cx<R> x, Cx<R> y) {
  const Cx<R> s = k.s, rho = k.rho, rhob = k.rhob, k0 = k.k0;
  const Cx<R> x2 = x * x, x3 = x2 * x, x4 = x3 * x;
  const Cx<R> y2 = y * y, y3 = y2 * y, y4 = y3 * y;
  const Cx<R> dx = z * x + x2 * (k0 * s - R(2) * (k0 + rho * s) * y + R(3) * rho * y2) +
                   x3 * rhob * z * (-R(2) * s * s * y + R(6) * s * y2 - R(4) * y3) +
                   x4 * (s * s * s * y2 - R(4) * s * s * y3 + R(5) * s * y4 - R(2) * y4 * y);
  const Cx<R> ny = -rhob + x2 * (-k0 * s * y + (k0 + rho * s) * y2 - rho * y3) +
                   x3 * rhob * z * (R(2) * s * s * y2 - R(4) * s * y3 + R(2) * y4) +
                   x4 * (-s * s * s * y3 + R(3) * s * s * y4 - R(3) * s * y4 * y + y3 * y3);
  return {dx, field_div(ny, x, "b3a: x = 0")};
}

template <class R>
Vec2<R> field_b2b(const BranchConsts<R>& k, Cx<R> z, Cx<R> x, Cx<R> y) {
  const Cx<R> a = k.alpha, b = k.beta, rho = k.rho, rhob = k.rhob;
  const Cx<R> x2 = x * x, x3 = x2 * x, x4 = x3 * x;
  const Cx<R> dx = -R(2) * rhob * x3 * y * z - rhob - x4 * y * y +
                   x2 * (-a + R(2) * rho * y - rho * z * z) + x * z;
  const Cx<R> ny = a * rho - b + R(2) * rhob * x3 * y * y * z - rhob * y - rhob + x4 * y * y * y +
                   x2 * (a * y - rho * y * y + rho * y * z * z);
  return {dx, field_div(ny, x, "b2b: x = 0")};
}

template <class R>
Vec2<R> field_b2a(const BranchConsts<R>& k, Cx<R> z, Cx<R> x, Cx<R> y) {
  const Cx<R> a = k.alpha, b = k.beta, rho = k.rho, rhob = k.rhob;
  const Cx<R> x2 = x * x, y2 = y * y;
  const Cx<R> nx = rhob + x2 * (-a * y2 - R(2) * rhob * y2 * y * z - rho * y2 * z * z - y2 * y2) +
                   x * (-a * rho + b + rhob + rho * y2);
  const Cx<R> ny = -R(2) * rhob + x * (a * rho - b - rhob + rho * y2 + y * z);
  return {field_div(nx, y, "b2a: y = 0"), field_div(ny, x, "b2a: x = 0")};
}

template <class R>
Vec2<R> field_b1b(const BranchConsts<R>& k, Cx<R> z, Cx<R> x, Cx<R> y) {
  const Cx<R> a = k.alpha, b = k.beta, rho = k.rho, rhob = k.rhob;
  const Cx<R> dx = -rhob + x * x * (-a - y * y) + x * (R(2) * rho * y - z);
  const Cx<R> ny = -R(2) * rhob * y + R(2) * rho * z + x * (a * rho - b + rho * y * y - y * z);
  return {dx, field_div(ny, x, "b1b: x = 0")};
}

template <class R>
Vec2<R> field_b1a(const BranchConsts<R>& k, Cx<R> z, Cx<R> x, Cx<R> y) {
  const Cx<R> a = k.alpha, b = k.beta, rho = k.rho, rhob = k.rhob;
  const Cx<R> x2 = x * x;
  const Cx<R> nx = R(2) * rhob - rho * y + x2 * (-a * rho * y + b * y) + x * (-R(2) * rho * z + y * z);
  const Cx<R> ny = -R(3) * rhob + R(3) * rho * y + x2 * (a * rho * y - a * y * y - b * y) +
                   x * (R(2) * rho * z - R(2) * y * z) - y * y;
  return {field_div(nx, y, "b1a: y = 0"), field_div(ny, x, "b1a: x = 0")};
}

// ---- elementary maps of the chart tree ----------------------------------

// Parent in the tree rooted at InfU (Base hangs off InfU as well).
ChartId parent(ChartId c) {
  switch (c.kind) {
    case ChartKind::Base:
    case ChartKind::InfV:
    case ChartKind::B1b: return ChartId::inf_u();
    case ChartKind::InfU: return ChartId::inf_u();
    case ChartKind::B1a:
    case ChartKind::B2b: return {ChartKind::B1b, c.rho};
    case ChartKind::B2a:
    case ChartKind::B3b: return {ChartKind::B2b, c.rho};
    case ChartKind::B3a: return {ChartKind::B3b, c.rho};
  }
  return ChartId::inf_u();
}

int depth(ChartId c) {
  int d = 0;
  while (c.kind != ChartKind::InfU) {
    c = parent(c);
    ++d;
  }
  return d;
}

// child coordinates -> parent coordinates
template <class R>
Vec2<R> up(ChartId c, Vec2<R> v, Cx<R> z, const Parameters& prm) {
  switch (c.kind) {
    case ChartKind::Base: {
      const Cx<R> iq = map_inv(v.x, c);
      return {iq, v.y * iq};
    }
    case ChartKind::InfV: {
      const Cx<R> iv = map_inv(v.y, c);
      return {v.x * iv, iv};
    }
    case ChartKind::B1b: return {v.x, v.x * v.y - c.branch().value<R>()};
    case ChartKind::B1a:
    case ChartKind::B2a:
    case ChartKind::B3a: return {v.x * v.y, map_inv(v.x, c)};
    case ChartKind::B2b: return {v.x, v.x * v.y + c.branch().conj().value<R>() * z};
    case ChartKind::B3b: {
      const auto k = BranchConsts<R>::make(prm, c.branch(), z);
      return {v.x, v.x * v.y - k.s};
    }
    case ChartKind::InfU: break;
  }
  return v;
}

// parent coordinates -> child coordinates
template <class R>
Vec2<R> down(ChartId c, Vec2<R> v, Cx<R> z, const Parameters& prm) {
  switch (c.kind) {
    case ChartKind::Base: {
      const Cx<R> iu = map_inv(v.x, c);
      return {iu, v.y * iu};
    }
    case ChartKind::InfV: {
      const Cx<R> iu = map_inv(v.y, c);
      return {v.x * iu, iu};
    }
    case ChartKind::B1b: return {v.x, (v.y + c.branch().value<R>()) * map_inv(v.x, c)};
    case ChartKind::B1a:
    case ChartKind::B2a:
    case ChartKind::B3a: return {map_inv(v.y, c), v.x * v.y};
    case ChartKind::B2b:
      return {v.x, (v.y - c.branch().conj().value<R>() * z) * map_inv(v.x, c)};
    case ChartKind::B3b: {
      const auto k = BranchConsts<R>::make(prm, c.branch(), z);
      return {v.x, (v.y + k.s) * map_inv(v.x, c)};
    }
    case ChartKind::InfU: break;
  }
  return v;
}

double chordal(complex a, complex b) {
  return std::abs(a - b) / (std::sqrt(1.0 + std::norm(a)) * std::sqrt(1.0 + std::norm(b)));
}

}  // namespace

template <class R>
Vec2<R> vector_field(ChartId chart, Cx<R> z, Vec2<R> pt, const Parameters& prm) {
  const Cx<R> x = pt.x, y = pt.y;
  const Cx<R> a(prm.alpha), b(prm.beta);
  switch (chart.kind) {
    case ChartKind::Base: return {a + z * x + y * y, -b - x * x - z * y};
    case ChartKind::InfU: {
      const Cx<R> dx = -a * x * x - z * x - y * y;
      const Cx<R> ny = x * x * (-a * y - b) - R(2) * x * y * z - y * y * y - R(1);
      return {dx, field_div(ny, x, "inf_u: x = 0")};
    }
    case ChartKind::InfV: {
      const Cx<R> dx = b * x * x + z * x + y * y;
      const Cx<R> ny = x * x * (a + b * y) + R(2) * x * y * z + y * y * y + R(1);
      return {dx, field_div(ny, x, "inf_v: x = 0")};
    }
    default: break;
  }
  const auto k = BranchConsts<R>::make(prm, chart.branch(), z);
  switch (chart.kind) {
    case ChartKind::B1a: return field_b1a(k, z, x, y);
    case ChartKind::B1b: return field_b1b(k, z, x, y);
    case ChartKind::B2a: return field_b2a(k, z, x, y);
    case ChartKind::B2b: return field_b2b(k, z, x, y);
    case ChartKind::B3a: return field_b3a(k, z, x, y);
    default: return field_b3b(k, z, x, y);
  }
}

template <class R>
Vec2<R> to_base(ChartId chart, Vec2<R> pt, Cx<R> z, const Parameters& prm) {
  const Cx<R> x = pt.x, y = pt.y;
  if (chart.kind == ChartKind::Base) return pt;
  if (chart.kind == ChartKind::InfU) {
    const Cx<R> q = map_inv(x, chart);
    return checked<R>({q, y * q}, chart);
  }
  if (chart.kind == ChartKind::InfV) {
    const Cx<R> p = map_inv(x, chart);
    return checked<R>({y * p, p}, chart);
  }
  const auto k = BranchConsts<R>::make(prm, chart.branch(), z);
  Vec2<R> out;
  switch (chart.kind) {
    case ChartKind::B1b: {
      const Cx<R> q = map_inv(x, chart);
      out = {q, y - k.rho * q};
      break;
    }
    case ChartKind::B1a: {
      const Cx<R> q = map_inv(x * y, chart);
      out = {q, (y - k.rho) * q};
      break;
    }
    case ChartKind::B2b: {
      const Cx<R> q = map_inv(x, chart);
      out = {q, x * y + k.rhob * z - k.rho * q};
      break;
    }
    case ChartKind::B2a: {
      const Cx<R> q = map_inv(x * y, chart);
      out = {q, y + k.rhob * z - k.rho * q};
      break;
    }
    case ChartKind::B3b: {
      const Cx<R> q = map_inv(x, chart);
      out = {q, -k.rho * q + k.rhob * z - k.s * x + x * x * y};
      break;
    }
    case ChartKind::B3a: {
      const Cx<R> q = map_inv(x * y, chart);
      out = {q, x * y * (y - k.s) + k.rhob * z - k.rho * q};
      break;
    }
    default: break;
  }
  return checked(out, chart);
}

template <class R>
Vec2<R> from_base(Vec2<R> qp, Cx<R> z, ChartId target, const Parameters& prm) {
  const Cx<R> q = qp.x, p = qp.y;
  switch (target.kind) {
    case ChartKind::Base: return qp;
    case ChartKind::InfU: {
      const Cx<R> u = map_inv(q, target);
      return checked<R>({u, p * u}, target);
    }
    case ChartKind::InfV: {
      const Cx<R> v = map_inv(p, target);
      return checked<R>({v, q * v}, target);
    }
    default: break;
  }
  const auto k = BranchConsts<R>::make(prm, target.branch(), z);
  const Cx<R> t = p + k.rho * q;   // B1 fibre coordinate
  const Cx<R> m = t - k.rhob * z;  // B2 fibre coordinate
  const Cx<R> r = k.s + q * m;     // B3 fibre coordinate
  Vec2<R> out;
  switch (target.kind) {
    case ChartKind::B1b: out = {map_inv(q, target), t}; break;
    case ChartKind::B1a: out = {map_inv(t, target), t * map_inv(q, target)}; break;
    case ChartKind::B2b: out = {map_inv(q, target), m * q}; break;
    case ChartKind::B2a: out = {map_inv(q * m, target), m}; break;
    case ChartKind::B3b: out = {map_inv(q, target), q * r}; break;
    case ChartKind::B3a: out = {map_inv(q * r, target), r}; break;
    default: break;
  }
  return checked(out, target);
}

template <class R>
Vec2<R> transition(ChartId from, Vec2<R> pt, ChartId target, Cx<R> z, const Parameters& prm) {
  if (from == target) return pt;
  if (target.kind == ChartKind::Base) return to_base(from, pt, z, prm);
  if (from.kind == ChartKind::Base) return from_base(pt, z, target, prm);

  // Climb to the lowest common ancestor, then descend.
  std::vector<ChartId> down_chain;
  ChartId a = from, b = target;
  int da = depth(a), db = depth(b);
  Vec2<R> v = pt;
  while (da > db) {
    v = up(a, v, z, prm);
    a = parent(a);
    --da;
  }
  while (db > da) {
    down_chain.push_back(b);
    b = parent(b);
    --db;
  }
  while (!(a == b)) {
    v = up(a, v, z, prm);
    a = parent(a);
    down_chain.push_back(b);
    b = parent(b);
  }
  for (auto it = down_chain.rbegin(); it != down_chain.rend(); ++it) v = down(*it, v, z, prm);
  return checked(v, target);
}

#define PAINLEVE_INSTANTIATE(R)                                                                   \
  template struct BranchConsts<R>;                                                                \
  template Vec2<R> vector_field<R>(ChartId, Cx<R>, Vec2<R>, const Parameters&);                   \
  template Vec2<R> to_base<R>(ChartId, Vec2<R>, Cx<R>, const Parameters&);                       \
  template Vec2<R> from_base<R>(Vec2<R>, Cx<R>, ChartId, const Parameters&);                      \
  template Vec2<R> transition<R>(ChartId, Vec2<R>, ChartId, Cx<R>, const Parameters&);
PAINLEVE_INSTANTIATE(double)
PAINLEVE_INSTANTIATE(long double)
#undef PAINLEVE_INSTANTIATE

Vec2<double> to_base(const ChartPoint& pt, complex z, const Parameters& prm) {
  return to_base<double>(pt.chart, {pt.x, pt.y}, z, prm);
}

ChartPoint from_base(complex q, complex p, complex z, ChartId target, const Parameters& prm) {
  const auto v = from_base<double>({q, p}, z, target, prm);
  return {target, v.x, v.y};
}

ChartPoint transition(const ChartPoint& pt, ChartId target, complex z, const Parameters& prm) {
  const auto v = transition<double>(pt.chart, {pt.x, pt.y}, target, z, prm);
  return {target, v.x, v.y};
}

ChartPoint base_point(BasePointSpec spec, complex z, const Parameters& prm) {
  switch (spec.level) {
    case 0: return {ChartId::inf_u(), 0.0, -spec.rho.value()};
    case 1: return {ChartId::blowup(ChartKind::B1b, spec.rho), 0.0, spec.rho.conj().value() * z};
    case 2: {
      const auto k = BranchConsts<double>::make(prm, spec.rho, z);
      return {ChartId::blowup(ChartKind::B2b, spec.rho), 0.0, -k.s};
    }
    default: throw Error(ErrorKind::InvalidArgument, "base point level must be 0, 1 or 2");
  }
}

bool on_exceptional_curve(const ChartPoint& pt) {
  if (pt.chart.kind == ChartKind::Base) return false;
  return pt.chart.is_a_chart() ? pt.y == 0.0 : pt.x == 0.0;
}

RhoBranch classify_rho(complex q, complex p) {
  if (q == 0.0) throw Error(ErrorKind::Ambiguous, "q = 0 has no residue direction");
  const complex u = p / q;
  std::array<std::pair<double, int>, 3> d;
  for (int i = 0; i < 3; ++i) d[i] = {std::abs(u + RhoBranch(i).value()), i};
  std::sort(d.begin(), d.end());
  if (d[1].first - d[0].first < 0.1 * d[1].first)
    throw Error(ErrorKind::Ambiguous, "p/q is not clearly closest to one cube root");
  return RhoBranch(d[0].second);
}

ChartId select_chart(const ChartPoint& pt, complex z, const Parameters& prm,
                     const IntegratorConfig& cfg) {
  if (pt.chart.kind == ChartKind::B3b && std::abs(pt.x) <= cfg.capture_radius) return pt.chart;

  Vec2<double> qp;
  try {
    qp = to_base(pt, z, prm);
  } catch (const Error&) {
    return pt.chart;
  }
  const double bound = pt.chart.kind == ChartKind::Base ? cfg.R_switch : cfg.r_back;
  if (std::abs(qp.x) <= bound && std::abs(qp.y) <= bound) return ChartId::base();

  const double cap = cfg.capture_radius;
  const ChartId fallback = std::abs(qp.x) >= std::abs(qp.y) ? ChartId::inf_u() : ChartId::inf_v();
  ChartPoint u;
  try {
    u = transition(pt, ChartId::inf_u(), z, prm);
  } catch (const Error&) {
    return fallback;
  }

  int best = 0;
  double best_d = chordal(-u.y, RhoBranch(0).value());
  for (int i = 1; i < 3; ++i) {
    const double d = chordal(-u.y, RhoBranch(i).value());
    if (d < best_d) best_d = d, best = i;
  }
  const RhoBranch rho(best);
  if (!(std::abs(u.x) < cap && std::abs(u.y + rho.value()) < cap)) return fallback;

  try {
    const ChartId b1{ChartKind::B1b, best};
    const ChartPoint p1 = transition(u, b1, z, prm);
    if (!(std::abs(p1.y - rho.conj().value() * z) < cap)) return b1;
    const ChartId b2{ChartKind::B2b, best};
    const ChartPoint p2 = transition(p1, b2, z, prm);
    const auto k = BranchConsts<double>::make(prm, rho, z);
    if (!(std::abs(p2.y + k.s) < cap)) return b2;
    return {ChartKind::B3b, best};
  } catch (const Error&) {
    return fallback;
  }
}

ChartJacobian chart_jacobian(ChartId chart, complex z, complex q, complex p,
                             const Parameters& prm) {
  ChartJacobian out{{1.0, 0.0, 0.0, 1.0}, {0.0, 0.0}};
  auto inv = [&](complex d) { return map_inv<double>(d, chart); };
  switch (chart.kind) {
    case ChartKind::Base: return out;
    case ChartKind::InfU: {
      const complex iq = inv(q);
      out.j = {-iq * iq, 0.0, -p * iq * iq, iq};
      return out;
    }
    case ChartKind::InfV: {
      const complex ip = inv(p);
      out.j = {0.0, -ip * ip, ip, -q * ip * ip};
      return out;
    }
    default: break;
  }
  const auto k = BranchConsts<double>::make(prm, chart.branch(), z);
  const complex iq = inv(q);
  const complex t = p + k.rho * q;
  const complex m = t - k.rhob * z;
  const complex r = k.s + q * m;
  // g is the reciprocal of the a-chart x coordinate; (gq, gp, gz) its gradient.
  auto a_chart = [&](complex g, complex gq, complex gp, complex gz, complex yq, complex yp,
                     complex yz) {
    const complex ig = inv(g);
    const complex f = -ig * ig;
    out.j = {f * gq, f * gp, yq, yp};
    out.dz = {f * gz, yz};
  };
  switch (chart.kind) {
    case ChartKind::B1b: out.j = {-iq * iq, 0.0, k.rho, 1.0}; break;
    case ChartKind::B1a: a_chart(t, k.rho, 1.0, 0.0, k.rho * iq - t * iq * iq, iq, 0.0); break;
    case ChartKind::B2b:
      out.j = {-iq * iq, 0.0, k.rho * q + m, q};
      out.dz = {0.0, -k.rhob * q};
      break;
    case ChartKind::B2a: a_chart(q * m, m + q * k.rho, q, -k.rhob * q, k.rho, 1.0, -k.rhob); break;
    case ChartKind::B3b: {
      const complex rq = -k.rhob * z + 2.0 * k.rho * q + p;
      out.j = {-iq * iq, 0.0, r + q * rq, q * q};
      out.dz = {0.0, -k.rhob * q * q};
      break;
    }
    case ChartKind::B3a: {
      const complex rq = -k.rhob * z + 2.0 * k.rho * q + p;
      a_chart(q * r, r + q * rq, q * q, -k.rhob * q * q, rq, q, -k.rhob * q);
      break;
    }
    default: break;
  }
  return out;
}

}  // namespace painleve
