#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "painleve/types.hpp"

namespace painleve::detail {

// coef * x^e0 y^e1 z^e2 rho^e3 rhob^e4 alpha^e5 beta^e6 s^e7
struct Monomial {
  int coef;
  std::array<std::uint8_t, 8> e;
};

struct WDenominator {
  int coef;
  int ex, ey;  // W = poly / (coef * x^ex * y^ey)
};

struct MonomialFactor {
  int ex, ey;
};

struct ChartWTables {
  std::span<const Monomial> w;
  WDenominator w_den;
  // W'/W = log_num / (x^mx y^my * log_den)
  std::span<const Monomial> log_num;
  MonomialFactor log_den_monomial;
  std::span<const Monomial> log_den;
};

const ChartWTables& w_tables(ChartKind kind);

}  // namespace painleve::detail
