#include "painleve/series.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "b3b_field.hpp"
#include "painleve/power_series.hpp"

namespace painleve {

namespace {

void check_order(int order) {
  if (order < 2) throw Error(ErrorKind::InvalidArgument, "series order must be at least 2");
}

complex horner(const std::vector<complex>& c, std::size_t from, complex t) {
  complex acc = 0.0;
  for (std::size_t i = c.size(); i-- > from;) acc = acc * t + c[i];
  return acc;
}

}  // namespace

complex hk_relation_rhs(complex z_star, RhoBranch rho, const Parameters& prm) {
  const complex r = rho.value(), rb = rho.conj().value();
  return (1.25 * rb - 0.5 * prm.alpha * r + 0.5 * prm.beta) * z_star;
}

std::pair<complex, complex> hk_from_c(complex c, complex z_star, RhoBranch rho,
                                      const Parameters& prm) {
  const complex r = rho.value(), rb = rho.conj().value();
  const complex h = 0.5 * c + (-0.5 * prm.alpha + 0.875 * r + 0.5 * prm.beta * rb) * z_star;
  const complex k = 0.5 * c * r - 0.375 * rb * z_star;
  return {h, k};
}

complex c_from_h(complex h, complex z_star, RhoBranch rho, const Parameters& prm) {
  const complex r = rho.value(), rb = rho.conj().value();
  return 2.0 * h - 2.0 * (-0.5 * prm.alpha + 0.875 * r + 0.5 * prm.beta * rb) * z_star;
}

LaurentPair laurent_at_pole(complex z_star, RhoBranch rho, complex h, int order,
                            const Parameters& prm) {
  check_order(order);
  const complex r = rho.value(), rb = rho.conj().value();
  const std::size_t n_total = static_cast<std::size_t>(order) + 2;
  std::vector<complex> c(n_total, 0.0), d(n_total, 0.0);
  // offset 1: c[i] holds c_{i-1}
  c[0] = -r;
  d[0] = rb;
  auto C = [&](int n) { return n < -1 ? complex(0.0) : c[static_cast<std::size_t>(n + 1)]; };
  auto D = [&](int n) { return n < -1 ? complex(0.0) : d[static_cast<std::size_t>(n + 1)]; };

  complex k = 0.0;
  for (int n = 0; n <= order; ++n) {
    complex sdd = 0.0, scc = 0.0;
    for (int i = 0; i <= n - 1; ++i) {
      sdd += D(i) * D(n - 1 - i);
      scc += C(i) * C(n - 1 - i);
    }
    const complex r1 = sdd + z_star * C(n - 1) + C(n - 2) + (n == 1 ? prm.alpha : 0.0);
    const complex r2 = -(scc + z_star * D(n - 1) + D(n - 2) + (n == 1 ? prm.beta : 0.0));
    complex cn, dn;
    if (n == 2) {
      // det = n^2 - 4 vanishes only here; h absorbs the free direction.
      const double scale = 1.0 + std::abs(r1) + std::abs(r2);
      if (std::abs(r * r1 + r2) > 1e-9 * scale)
        throw std::logic_error("Laurent recursion: resonance at n = 2 is not compatible");
      k = r * h - hk_relation_rhs(z_star, rho, prm);
      if (std::abs(r * h - 0.5 * r * r1 - k) > 1e-9 * (scale + std::abs(h)))
        throw std::logic_error("Laurent recursion: linear relation between h and k violated");
      cn = h;
      dn = k;
    } else {
      // [[n, -2 rhob], [-2 rho, n]] (c_n, d_n) = (r1, r2)
      const double det = static_cast<double>(n * n - 4);
      cn = (static_cast<double>(n) * r1 + 2.0 * rb * r2) / det;
      dn = (static_cast<double>(n) * r2 + 2.0 * r * r1) / det;
    }
    c[static_cast<std::size_t>(n + 1)] = cn;
    d[static_cast<std::size_t>(n + 1)] = dn;
  }
  return {z_star, rho, h, k, std::move(c), std::move(d), order};
}

TaylorPair taylor_on_L3(complex z_star, RhoBranch rho, complex c, int order,
                        const Parameters& prm) {
  check_order(order);
  const complex r = rho.value(), rb = rho.conj().value();
  const complex s = 1.0 - rb * prm.alpha + r * prm.beta;
  const std::size_t n_total = static_cast<std::size_t>(order) + 1;
  std::vector<complex> a(n_total, 0.0), b(n_total, 0.0);
  b[0] = c;

  // Coefficient n of the field only depends on coefficients <= n of (x, y).
  for (std::size_t n = 0; n + 1 < n_total; ++n) {
    const std::size_t len = n + 1;
    const PowerSeries zs = PowerSeries::linear(len, z_star, 1.0);
    const PowerSeries k0 = r + r * (zs * zs) + rb * prm.beta;
    const PowerSeries x(std::vector<complex>(a.begin(), a.begin() + static_cast<long>(len)));
    const PowerSeries y(std::vector<complex>(b.begin(), b.begin() + static_cast<long>(len)));
    PowerSeries fx, fy;
    detail::b3b_rhs<complex, PowerSeries>(r, rb, s, k0, zs, x, y, fx, fy);
    a[n + 1] = fx[n] / static_cast<double>(n + 1);
    b[n + 1] = fy[n] / static_cast<double>(n + 1);
  }
  return {z_star, rho, c, std::move(a), std::move(b), order};
}

LaurentPair laurent_from_taylor(const TaylorPair& t, const Parameters& prm) {
  const std::size_t n = t.a_coeffs.size();  // order + 1
  const complex r = t.rho.value(), rb = t.rho.conj().value();
  const complex s = 1.0 - rb * prm.alpha + r * prm.beta;
  const PowerSeries x(t.a_coeffs), y(t.b_coeffs);
  // x = t*A(t) with A(0) = a_1, so (z - z*) q = 1/A.
  const PowerSeries A = x.shifted_down(1);
  PowerSeries qt(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) qt[i] = A[i];
  qt = qt.reciprocal();
  // (z - z*) p = -rho (z - z*) q + t (rhob z - s x + x^2 y)
  const PowerSeries zs = PowerSeries::linear(n, t.z_star, 1.0);
  const PowerSeries tail = rb * zs - s * x + x * x * y;
  LaurentPair l;
  l.z_star = t.z_star;
  l.rho = t.rho;
  l.order = static_cast<int>(n) - 3;
  for (int i = 0; i <= l.order + 1; ++i) {
    const auto u = static_cast<std::size_t>(i);
    l.q_coeffs.push_back(qt[u]);
    l.p_coeffs.push_back(-r * qt[u] + (u >= 1 ? tail[u - 1] : complex(0.0)));
  }
  l.h = l.c(2);
  l.k = l.d(2);
  return l;
}

Vec2<double> eval_series(const LaurentPair& s, complex z) {
  const complex t = z - s.z_star;
  if (t == 0.0) throw Error(ErrorKind::PoleCenter, "Laurent series evaluated at its pole");
  return {s.q_coeffs[0] / t + horner(s.q_coeffs, 1, t), s.p_coeffs[0] / t + horner(s.p_coeffs, 1, t)};
}

Vec2<double> eval_series(const TaylorPair& s, complex z) {
  const complex t = z - s.z_star;
  return {horner(s.a_coeffs, 0, t), horner(s.b_coeffs, 0, t)};
}

}  // namespace painleve
