#pragma once

#include <vector>

#include "painleve/types.hpp"

namespace painleve {

// Laurent pair about a movable pole:
//   q = sum_{n>=-1} c_n (z - z*)^n,  p = sum_{n>=-1} d_n (z - z*)^n.
// Vectors are stored with offset 1: q_coeffs[0] is c_{-1}.
struct LaurentPair {
  complex z_star;
  RhoBranch rho;
  complex h, k;
  std::vector<complex> q_coeffs, p_coeffs;
  int order = 0;

  complex c(int n) const { return q_coeffs.at(static_cast<std::size_t>(n + 1)); }
  complex d(int n) const { return p_coeffs.at(static_cast<std::size_t>(n + 1)); }
};

// Taylor pair of the regular B3b system through a point (0, c) of L3.
// Both vectors are indexed from 0; a_coeffs[0] is always 0.
struct TaylorPair {
  complex z_star;
  RhoBranch rho;
  complex c;
  std::vector<complex> a_coeffs, b_coeffs;
  int order = 0;
};

constexpr int kDefaultSeriesOrder = 12;

// The free coefficient h = c_2 fixes k = d_2 through
//   rho*h - k = (5/4 rhob - alpha rho/2 + beta/2) z*.
LaurentPair laurent_at_pole(complex z_star, RhoBranch rho, complex h, int order,
                            const Parameters& prm);

TaylorPair taylor_on_L3(complex z_star, RhoBranch rho, complex c, int order,
                        const Parameters& prm);

// Right-hand side of the linear relation between h and k.
complex hk_relation_rhs(complex z_star, RhoBranch rho, const Parameters& prm);

std::pair<complex, complex> hk_from_c(complex c, complex z_star, RhoBranch rho,
                                      const Parameters& prm);
complex c_from_h(complex h, complex z_star, RhoBranch rho, const Parameters& prm);

// Maps a Taylor pair through the B3b chart map and re-expands about z*;
// the result carries order - 2 Laurent orders.
LaurentPair laurent_from_taylor(const TaylorPair& t, const Parameters& prm);

// (q, p) for a Laurent pair; throws PoleCenter at z = z*.
Vec2<double> eval_series(const LaurentPair& s, complex z);
// (x, y) in B3b for a Taylor pair.
Vec2<double> eval_series(const TaylorPair& s, complex z);

}  // namespace painleve
