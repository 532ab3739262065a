#pragma once

// Right-hand side of the regular system on the third blow-up (b-chart).
// Generic in the value type so the same expression drives both pointwise
// evaluation and the Taylor recursion on truncated series. C is the scalar
// type of the branch constants, V the type of z, k0 and the coordinates.

namespace painleve::detail {

template <class C, class V>
void b3b_rhs(const C& rho, const C& rhob, const C& s, const V& k0, const V& z, const V& x,
             const V& y, V& dx, V& dy) {
  const V k1 = k0 + rho * s;
  const V x2 = x * x, x3 = x2 * x, x4 = x3 * x;
  const V xy = x * y;
  dx = z * x - rhob - k1 * x2 + (C(2) * rhob * s) * (z * x3) + (C(2) * rho) * (x2 * xy) -
       (s * s) * x4 - (C(2) * rhob) * (z * x3 * xy) + (C(2) * s) * (x4 * xy) - x4 * xy * xy;
  dy = -(s * k0) - z * y + (C(2) * rhob * s * s) * (z * x) + C(2) * (k1 * xy) -
       (s * s * s) * x2 - (C(6) * rhob * s) * (z * x * xy) - (C(3) * rho) * (xy * xy) +
       (C(4) * s * s) * (x2 * xy) + (C(4) * rhob) * (z * x * xy * xy) -
       (C(5) * s) * (x2 * xy * xy) + C(2) * (x2 * xy * xy * xy);
}

}  // namespace painleve::detail
