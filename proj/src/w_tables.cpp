// Closed forms of W = H + p^2/q and of its logarithmic derivative W'/W in
// every chart of the atlas, stored as monomial tables. The tables were
// obtained offline by composing W with the chart maps and clearing common
// monomial factors; test_auxiliary.cpp checks them against the base chart.
//
// Monomial exponent order: x, y, z, rho, rhob, alpha, beta, s
// with s = 1 - rhob*alpha + rho*beta (only used by the B2 and B3 charts).

#include "w_tables.hpp"

namespace painleve::detail {
namespace {
constexpr Monomial kBaseW[] = {
    {3, {0, 2, 0, 0, 0, 0, 0, 0}}, {3, {1, 1, 0, 0, 0, 1, 0, 0}}, {1, {1, 3, 0, 0, 0, 0, 0, 0}},
    {3, {2, 0, 0, 0, 0, 0, 1, 0}}, {3, {2, 1, 1, 0, 0, 0, 0, 0}}, {1, {4, 0, 0, 0, 0, 0, 0, 0}},
};

constexpr Monomial kBaseLogNum[] = {
    {-3, {0, 2, 0, 0, 0, 1, 0, 0}}, {-3, {0, 4, 0, 0, 0, 0, 0, 0}},
    {-6, {1, 1, 0, 0, 0, 0, 1, 0}}, {-9, {1, 2, 1, 0, 0, 0, 0, 0}},
    {-3, {3, 1, 0, 0, 0, 0, 0, 0}},
};

constexpr Monomial kBaseLogDen[] = {
    {3, {0, 2, 0, 0, 0, 0, 0, 0}}, {3, {1, 1, 0, 0, 0, 1, 0, 0}}, {1, {1, 3, 0, 0, 0, 0, 0, 0}},
    {3, {2, 0, 0, 0, 0, 0, 1, 0}}, {3, {2, 1, 1, 0, 0, 0, 0, 0}}, {1, {4, 0, 0, 0, 0, 0, 0, 0}},
};

constexpr Monomial kInfUW[] = {
    {1, {0, 0, 0, 0, 0, 0, 0, 0}}, {1, {0, 3, 0, 0, 0, 0, 0, 0}}, {3, {1, 1, 1, 0, 0, 0, 0, 0}},
    {3, {2, 0, 0, 0, 0, 0, 1, 0}}, {3, {2, 1, 0, 0, 0, 1, 0, 0}}, {3, {2, 2, 0, 0, 0, 0, 0, 0}},
};

constexpr Monomial kInfULogNum[] = {
    {-3, {1, 1, 0, 0, 0, 0, 0, 0}}, {-3, {1, 4, 0, 0, 0, 0, 0, 0}},
    {-9, {2, 2, 1, 0, 0, 0, 0, 0}}, {-6, {3, 1, 0, 0, 0, 0, 1, 0}},
    {-3, {3, 2, 0, 0, 0, 1, 0, 0}},
};

constexpr Monomial kInfULogDen[] = {
    {1, {0, 0, 0, 0, 0, 0, 0, 0}}, {1, {0, 3, 0, 0, 0, 0, 0, 0}}, {3, {1, 1, 1, 0, 0, 0, 0, 0}},
    {3, {2, 0, 0, 0, 0, 0, 1, 0}}, {3, {2, 1, 0, 0, 0, 1, 0, 0}}, {3, {2, 2, 0, 0, 0, 0, 0, 0}},
};

constexpr Monomial kInfVW[] = {
    {1, {0, 1, 0, 0, 0, 0, 0, 0}}, {1, {0, 4, 0, 0, 0, 0, 0, 0}}, {3, {1, 2, 1, 0, 0, 0, 0, 0}},
    {3, {2, 0, 0, 0, 0, 0, 0, 0}}, {3, {2, 1, 0, 0, 0, 1, 0, 0}}, {3, {2, 2, 0, 0, 0, 0, 1, 0}},
};

constexpr Monomial kInfVLogNum[] = {
    {-3, {1, 0, 0, 0, 0, 0, 0, 0}}, {-3, {1, 3, 0, 0, 0, 0, 0, 0}},
    {-9, {2, 1, 1, 0, 0, 0, 0, 0}}, {-3, {3, 0, 0, 0, 0, 1, 0, 0}},
    {-6, {3, 1, 0, 0, 0, 0, 1, 0}},
};

constexpr Monomial kInfVLogDen[] = {
    {1, {0, 1, 0, 0, 0, 0, 0, 0}}, {1, {0, 4, 0, 0, 0, 0, 0, 0}}, {3, {1, 2, 1, 0, 0, 0, 0, 0}},
    {3, {2, 0, 0, 0, 0, 0, 0, 0}}, {3, {2, 1, 0, 0, 0, 1, 0, 0}}, {3, {2, 2, 0, 0, 0, 0, 1, 0}},
};

constexpr Monomial kB1aW[] = {
    {3, {0, 0, 0, 0, 1, 0, 0, 0}}, {-3, {0, 1, 0, 1, 0, 0, 0, 0}},
    {1, {0, 2, 0, 0, 0, 0, 0, 0}}, {-3, {1, 0, 1, 1, 0, 0, 0, 0}},
    {3, {1, 1, 1, 0, 0, 0, 0, 0}}, {3, {2, 1, 0, 0, 0, 0, 1, 0}}, {3, {2, 1, 0, 0, 1, 0, 0, 0}},
    {-3, {2, 1, 0, 1, 0, 1, 0, 0}}, {3, {2, 2, 0, 0, 0, 1, 0, 0}},
    {-6, {2, 2, 0, 1, 0, 0, 0, 0}}, {3, {2, 3, 0, 0, 0, 0, 0, 0}},
};

constexpr Monomial kB1aLogNum[] = {
    {9, {1, 1, 0, 0, 0, 0, 0, 0}}, {-18, {1, 2, 0, 0, 1, 0, 0, 0}},
    {12, {1, 3, 0, 1, 0, 0, 0, 0}}, {-3, {1, 4, 0, 0, 0, 0, 0, 0}},
    {-9, {2, 1, 1, 0, 1, 0, 0, 0}}, {18, {2, 2, 1, 1, 0, 0, 0, 0}},
    {-9, {2, 3, 1, 0, 0, 0, 0, 0}}, {-3, {3, 2, 0, 0, 1, 1, 0, 0}},
    {6, {3, 2, 0, 1, 0, 0, 1, 0}}, {-6, {3, 3, 0, 0, 0, 0, 1, 0}},
    {6, {3, 3, 0, 1, 0, 1, 0, 0}}, {-3, {3, 4, 0, 0, 0, 1, 0, 0}},
};

constexpr Monomial kB1aLogDen[] = {
    {3, {0, 0, 0, 0, 1, 0, 0, 0}}, {-3, {0, 1, 0, 1, 0, 0, 0, 0}},
    {1, {0, 2, 0, 0, 0, 0, 0, 0}}, {-3, {1, 0, 1, 1, 0, 0, 0, 0}},
    {3, {1, 1, 1, 0, 0, 0, 0, 0}}, {3, {2, 1, 0, 0, 0, 0, 1, 0}}, {3, {2, 1, 0, 0, 1, 0, 0, 0}},
    {-3, {2, 1, 0, 1, 0, 1, 0, 0}}, {3, {2, 2, 0, 0, 0, 1, 0, 0}},
    {-6, {2, 2, 0, 1, 0, 0, 0, 0}}, {3, {2, 3, 0, 0, 0, 0, 0, 0}},
};

constexpr Monomial kB1bW[] = {
    {-3, {0, 0, 1, 1, 0, 0, 0, 0}}, {3, {0, 1, 0, 0, 1, 0, 0, 0}},
    {3, {1, 0, 0, 0, 0, 0, 1, 0}}, {3, {1, 0, 0, 0, 1, 0, 0, 0}},
    {-3, {1, 0, 0, 1, 0, 1, 0, 0}}, {3, {1, 1, 1, 0, 0, 0, 0, 0}},
    {-3, {1, 2, 0, 1, 0, 0, 0, 0}}, {3, {2, 1, 0, 0, 0, 1, 0, 0}},
    {-6, {2, 1, 0, 1, 0, 0, 0, 0}}, {1, {2, 3, 0, 0, 0, 0, 0, 0}},
    {3, {3, 2, 0, 0, 0, 0, 0, 0}},
};

constexpr Monomial kB1bLogNum[] = {
    {-9, {1, 0, 1, 0, 1, 0, 0, 0}}, {9, {1, 1, 0, 0, 0, 0, 0, 0}},
    {-3, {2, 0, 0, 0, 1, 1, 0, 0}}, {6, {2, 0, 0, 1, 0, 0, 1, 0}},
    {18, {2, 1, 1, 1, 0, 0, 0, 0}}, {-18, {2, 2, 0, 0, 1, 0, 0, 0}},
    {-6, {3, 1, 0, 0, 0, 0, 1, 0}}, {6, {3, 1, 0, 1, 0, 1, 0, 0}},
    {-9, {3, 2, 1, 0, 0, 0, 0, 0}}, {12, {3, 3, 0, 1, 0, 0, 0, 0}},
    {-3, {4, 2, 0, 0, 0, 1, 0, 0}}, {-3, {4, 4, 0, 0, 0, 0, 0, 0}},
};

constexpr Monomial kB1bLogDen[] = {
    {-3, {0, 0, 1, 1, 0, 0, 0, 0}}, {3, {0, 1, 0, 0, 1, 0, 0, 0}},
    {3, {1, 0, 0, 0, 0, 0, 1, 0}}, {3, {1, 0, 0, 0, 1, 0, 0, 0}},
    {-3, {1, 0, 0, 1, 0, 1, 0, 0}}, {3, {1, 1, 1, 0, 0, 0, 0, 0}},
    {-3, {1, 2, 0, 1, 0, 0, 0, 0}}, {3, {2, 1, 0, 0, 0, 1, 0, 0}},
    {-6, {2, 1, 0, 1, 0, 0, 0, 0}}, {1, {2, 3, 0, 0, 0, 0, 0, 0}},
    {3, {3, 2, 0, 0, 0, 0, 0, 0}},
};

constexpr Monomial kB2aW[] = {
    {3, {0, 0, 0, 0, 1, 0, 0, 0}}, {3, {1, 0, 0, 0, 1, 0, 0, 1}},
    {-3, {1, 1, 1, 0, 0, 0, 0, 0}}, {-3, {1, 2, 0, 1, 0, 0, 0, 0}},
    {-3, {2, 1, 1, 0, 0, 0, 0, 0}}, {-3, {2, 1, 1, 0, 0, 0, 0, 1}},
    {3, {2, 1, 1, 1, 0, 0, 1, 0}}, {1, {2, 1, 3, 0, 0, 0, 0, 0}}, {3, {2, 2, 0, 0, 1, 0, 1, 0}},
    {-3, {2, 2, 0, 1, 0, 0, 0, 0}}, {-3, {2, 2, 0, 1, 0, 0, 0, 1}},
    {3, {2, 2, 2, 1, 0, 0, 0, 0}}, {3, {2, 3, 1, 0, 1, 0, 0, 0}}, {1, {2, 4, 0, 0, 0, 0, 0, 0}},
    {3, {3, 2, 2, 1, 0, 0, 0, 0}}, {6, {3, 3, 1, 0, 1, 0, 0, 0}}, {3, {3, 4, 0, 0, 0, 0, 0, 0}},
};

constexpr Monomial kB2aLogNum[] = {
    {9, {1, 1, 0, 0, 0, 0, 0, 0}}, {-3, {2, 1, 0, 0, 0, 0, 0, 0}},
    {3, {2, 1, 0, 0, 0, 0, 0, 1}}, {3, {2, 1, 0, 1, 0, 0, 1, 0}},
    {-18, {2, 2, 1, 1, 0, 0, 0, 0}}, {-18, {2, 3, 0, 0, 1, 0, 0, 0}},
    {6, {3, 2, 1, 1, 0, 0, 0, 0}}, {-6, {3, 2, 1, 1, 0, 0, 0, 1}},
    {3, {3, 2, 3, 1, 0, 0, 0, 0}}, {6, {3, 3, 0, 0, 1, 0, 0, 0}},
    {-6, {3, 3, 0, 0, 1, 0, 0, 1}}, {18, {3, 3, 2, 0, 1, 0, 0, 0}},
    {27, {3, 4, 1, 0, 0, 0, 0, 0}}, {12, {3, 5, 0, 1, 0, 0, 0, 0}},
    {-3, {4, 3, 2, 0, 0, 0, 1, 0}}, {-3, {4, 3, 2, 0, 1, 0, 0, 0}},
    {3, {4, 3, 2, 0, 1, 0, 0, 1}}, {-3, {4, 3, 4, 0, 1, 0, 0, 0}},
    {-6, {4, 4, 1, 0, 0, 0, 0, 0}}, {6, {4, 4, 1, 0, 0, 0, 0, 1}},
    {-6, {4, 4, 1, 1, 0, 0, 1, 0}}, {-12, {4, 4, 3, 0, 0, 0, 0, 0}},
    {-3, {4, 5, 0, 0, 1, 0, 1, 0}}, {-3, {4, 5, 0, 1, 0, 0, 0, 0}},
    {3, {4, 5, 0, 1, 0, 0, 0, 1}}, {-18, {4, 5, 2, 1, 0, 0, 0, 0}},
    {-12, {4, 6, 1, 0, 1, 0, 0, 0}}, {-3, {4, 7, 0, 0, 0, 0, 0, 0}},
};

constexpr Monomial kB2aLogDen[] = {
    {3, {0, 0, 0, 0, 1, 0, 0, 0}}, {3, {1, 0, 0, 0, 1, 0, 0, 1}},
    {-3, {1, 1, 1, 0, 0, 0, 0, 0}}, {-3, {1, 2, 0, 1, 0, 0, 0, 0}},
    {-3, {2, 1, 1, 0, 0, 0, 0, 0}}, {-3, {2, 1, 1, 0, 0, 0, 0, 1}},
    {3, {2, 1, 1, 1, 0, 0, 1, 0}}, {1, {2, 1, 3, 0, 0, 0, 0, 0}}, {3, {2, 2, 0, 0, 1, 0, 1, 0}},
    {-3, {2, 2, 0, 1, 0, 0, 0, 0}}, {-3, {2, 2, 0, 1, 0, 0, 0, 1}},
    {3, {2, 2, 2, 1, 0, 0, 0, 0}}, {3, {2, 3, 1, 0, 1, 0, 0, 0}}, {1, {2, 4, 0, 0, 0, 0, 0, 0}},
    {3, {3, 2, 2, 1, 0, 0, 0, 0}}, {6, {3, 3, 1, 0, 1, 0, 0, 0}}, {3, {3, 4, 0, 0, 0, 0, 0, 0}},
};

constexpr Monomial kB2bW[] = {
    {3, {0, 0, 0, 0, 1, 0, 0, 1}}, {3, {0, 1, 0, 0, 1, 0, 0, 0}},
    {-3, {1, 0, 1, 0, 0, 0, 0, 0}}, {-3, {1, 0, 1, 0, 0, 0, 0, 1}},
    {3, {1, 0, 1, 1, 0, 0, 1, 0}}, {1, {1, 0, 3, 0, 0, 0, 0, 0}},
    {-3, {1, 1, 1, 0, 0, 0, 0, 0}}, {3, {2, 0, 2, 1, 0, 0, 0, 0}},
    {3, {2, 1, 0, 0, 1, 0, 1, 0}}, {-3, {2, 1, 0, 1, 0, 0, 0, 0}},
    {-3, {2, 1, 0, 1, 0, 0, 0, 1}}, {3, {2, 1, 2, 1, 0, 0, 0, 0}},
    {-3, {2, 2, 0, 1, 0, 0, 0, 0}}, {6, {3, 1, 1, 0, 1, 0, 0, 0}},
    {3, {3, 2, 1, 0, 1, 0, 0, 0}}, {3, {4, 2, 0, 0, 0, 0, 0, 0}}, {1, {4, 3, 0, 0, 0, 0, 0, 0}},
};

constexpr Monomial kB2bLogNum[] = {
    {-3, {1, 0, 0, 0, 0, 0, 0, 0}}, {3, {1, 0, 0, 0, 0, 0, 0, 1}},
    {3, {1, 0, 0, 1, 0, 0, 1, 0}}, {9, {1, 1, 0, 0, 0, 0, 0, 0}}, {6, {2, 0, 1, 1, 0, 0, 0, 0}},
    {-6, {2, 0, 1, 1, 0, 0, 0, 1}}, {3, {2, 0, 3, 1, 0, 0, 0, 0}},
    {-18, {2, 1, 1, 1, 0, 0, 0, 0}}, {-3, {3, 0, 2, 0, 0, 0, 1, 0}},
    {-3, {3, 0, 2, 0, 1, 0, 0, 0}}, {3, {3, 0, 2, 0, 1, 0, 0, 1}},
    {-3, {3, 0, 4, 0, 1, 0, 0, 0}}, {6, {3, 1, 0, 0, 1, 0, 0, 0}},
    {-6, {3, 1, 0, 0, 1, 0, 0, 1}}, {18, {3, 1, 2, 0, 1, 0, 0, 0}},
    {-18, {3, 2, 0, 0, 1, 0, 0, 0}}, {-6, {4, 1, 1, 0, 0, 0, 0, 0}},
    {6, {4, 1, 1, 0, 0, 0, 0, 1}}, {-6, {4, 1, 1, 1, 0, 0, 1, 0}},
    {-12, {4, 1, 3, 0, 0, 0, 0, 0}}, {27, {4, 2, 1, 0, 0, 0, 0, 0}},
    {-3, {5, 2, 0, 0, 1, 0, 1, 0}}, {-3, {5, 2, 0, 1, 0, 0, 0, 0}},
    {3, {5, 2, 0, 1, 0, 0, 0, 1}}, {-18, {5, 2, 2, 1, 0, 0, 0, 0}},
    {12, {5, 3, 0, 1, 0, 0, 0, 0}}, {-12, {6, 3, 1, 0, 1, 0, 0, 0}},
    {-3, {7, 4, 0, 0, 0, 0, 0, 0}},
};

constexpr Monomial kB2bLogDen[] = {
    {3, {0, 0, 0, 0, 1, 0, 0, 1}}, {3, {0, 1, 0, 0, 1, 0, 0, 0}},
    {-3, {1, 0, 1, 0, 0, 0, 0, 0}}, {-3, {1, 0, 1, 0, 0, 0, 0, 1}},
    {3, {1, 0, 1, 1, 0, 0, 1, 0}}, {1, {1, 0, 3, 0, 0, 0, 0, 0}},
    {-3, {1, 1, 1, 0, 0, 0, 0, 0}}, {3, {2, 0, 2, 1, 0, 0, 0, 0}},
    {3, {2, 1, 0, 0, 1, 0, 1, 0}}, {-3, {2, 1, 0, 1, 0, 0, 0, 0}},
    {-3, {2, 1, 0, 1, 0, 0, 0, 1}}, {3, {2, 1, 2, 1, 0, 0, 0, 0}},
    {-3, {2, 2, 0, 1, 0, 0, 0, 0}}, {6, {3, 1, 1, 0, 1, 0, 0, 0}},
    {3, {3, 2, 1, 0, 1, 0, 0, 0}}, {3, {4, 2, 0, 0, 0, 0, 0, 0}}, {1, {4, 3, 0, 0, 0, 0, 0, 0}},
};

constexpr Monomial kB3aW[] = {
    {3, {0, 0, 0, 0, 1, 0, 0, 0}}, {-3, {1, 0, 1, 0, 0, 0, 0, 0}},
    {3, {1, 0, 1, 1, 0, 0, 1, 0}}, {1, {1, 0, 3, 0, 0, 0, 0, 0}},
    {-3, {1, 1, 1, 0, 0, 0, 0, 0}}, {-3, {2, 1, 0, 0, 1, 0, 1, 1}},
    {3, {2, 1, 0, 1, 0, 0, 0, 1}}, {3, {2, 1, 2, 1, 0, 0, 0, 0}},
    {-3, {2, 1, 2, 1, 0, 0, 0, 1}}, {3, {2, 2, 0, 0, 1, 0, 1, 0}},
    {-3, {2, 2, 0, 1, 0, 0, 0, 0}}, {3, {2, 2, 0, 1, 0, 0, 0, 1}},
    {3, {2, 2, 2, 1, 0, 0, 0, 0}}, {-3, {2, 3, 0, 1, 0, 0, 0, 0}},
    {-6, {3, 2, 1, 0, 1, 0, 0, 1}}, {3, {3, 2, 1, 0, 1, 0, 0, 2}},
    {6, {3, 3, 1, 0, 1, 0, 0, 0}}, {-6, {3, 3, 1, 0, 1, 0, 0, 1}},
    {3, {3, 4, 1, 0, 1, 0, 0, 0}}, {3, {4, 3, 0, 0, 0, 0, 0, 2}},
    {-1, {4, 3, 0, 0, 0, 0, 0, 3}}, {-6, {4, 4, 0, 0, 0, 0, 0, 1}},
    {3, {4, 4, 0, 0, 0, 0, 0, 2}}, {3, {4, 5, 0, 0, 0, 0, 0, 0}},
    {-3, {4, 5, 0, 0, 0, 0, 0, 1}}, {1, {4, 6, 0, 0, 0, 0, 0, 0}},
};

constexpr Monomial kB3aLogNum[] = {
    {-3, {1, 0, 0, 0, 0, 0, 0, 0}}, {-6, {1, 0, 0, 0, 0, 0, 0, 1}},
    {3, {1, 0, 0, 1, 0, 0, 1, 0}}, {9, {1, 1, 0, 0, 0, 0, 0, 0}}, {6, {2, 1, 1, 1, 0, 0, 0, 0}},
    {12, {2, 1, 1, 1, 0, 0, 0, 1}}, {3, {2, 1, 3, 1, 0, 0, 0, 0}},
    {-18, {2, 2, 1, 1, 0, 0, 0, 0}}, {-6, {3, 2, 0, 0, 1, 0, 0, 1}},
    {-12, {3, 2, 0, 0, 1, 0, 0, 2}}, {-3, {3, 2, 2, 0, 0, 0, 1, 0}},
    {-3, {3, 2, 2, 0, 1, 0, 0, 0}}, {-15, {3, 2, 2, 0, 1, 0, 0, 1}},
    {-3, {3, 2, 4, 0, 1, 0, 0, 0}}, {6, {3, 3, 0, 0, 1, 0, 0, 0}},
    {30, {3, 3, 0, 0, 1, 0, 0, 1}}, {18, {3, 3, 2, 0, 1, 0, 0, 0}},
    {-18, {3, 4, 0, 0, 1, 0, 0, 0}}, {6, {4, 3, 1, 0, 0, 0, 0, 1}},
    {21, {4, 3, 1, 0, 0, 0, 0, 2}}, {6, {4, 3, 1, 1, 0, 0, 1, 1}},
    {12, {4, 3, 3, 0, 0, 0, 0, 1}}, {-6, {4, 4, 1, 0, 0, 0, 0, 0}},
    {-48, {4, 4, 1, 0, 0, 0, 0, 1}}, {-6, {4, 4, 1, 1, 0, 0, 1, 0}},
    {-12, {4, 4, 3, 0, 0, 0, 0, 0}}, {27, {4, 5, 1, 0, 0, 0, 0, 0}},
    {-3, {5, 4, 0, 0, 1, 0, 1, 2}}, {-3, {5, 4, 0, 1, 0, 0, 0, 2}},
    {-9, {5, 4, 0, 1, 0, 0, 0, 3}}, {-18, {5, 4, 2, 1, 0, 0, 0, 2}},
    {6, {5, 5, 0, 0, 1, 0, 1, 1}}, {6, {5, 5, 0, 1, 0, 0, 0, 1}},
    {30, {5, 5, 0, 1, 0, 0, 0, 2}}, {36, {5, 5, 2, 1, 0, 0, 0, 1}},
    {-3, {5, 6, 0, 0, 1, 0, 1, 0}}, {-3, {5, 6, 0, 1, 0, 0, 0, 0}},
    {-33, {5, 6, 0, 1, 0, 0, 0, 1}}, {-18, {5, 6, 2, 1, 0, 0, 0, 0}},
    {12, {5, 7, 0, 1, 0, 0, 0, 0}}, {12, {6, 5, 1, 0, 1, 0, 0, 3}},
    {-36, {6, 6, 1, 0, 1, 0, 0, 2}}, {36, {6, 7, 1, 0, 1, 0, 0, 1}},
    {-12, {6, 8, 1, 0, 1, 0, 0, 0}}, {-3, {7, 6, 0, 0, 0, 0, 0, 4}},
    {12, {7, 7, 0, 0, 0, 0, 0, 3}}, {-18, {7, 8, 0, 0, 0, 0, 0, 2}},
    {12, {7, 9, 0, 0, 0, 0, 0, 1}}, {-3, {7, 10, 0, 0, 0, 0, 0, 0}},
};

constexpr Monomial kB3aLogDen[] = {
    {3, {0, 0, 0, 0, 1, 0, 0, 0}}, {-3, {1, 0, 1, 0, 0, 0, 0, 0}},
    {3, {1, 0, 1, 1, 0, 0, 1, 0}}, {1, {1, 0, 3, 0, 0, 0, 0, 0}},
    {-3, {1, 1, 1, 0, 0, 0, 0, 0}}, {-3, {2, 1, 0, 0, 1, 0, 1, 1}},
    {3, {2, 1, 0, 1, 0, 0, 0, 1}}, {3, {2, 1, 2, 1, 0, 0, 0, 0}},
    {-3, {2, 1, 2, 1, 0, 0, 0, 1}}, {3, {2, 2, 0, 0, 1, 0, 1, 0}},
    {-3, {2, 2, 0, 1, 0, 0, 0, 0}}, {3, {2, 2, 0, 1, 0, 0, 0, 1}},
    {3, {2, 2, 2, 1, 0, 0, 0, 0}}, {-3, {2, 3, 0, 1, 0, 0, 0, 0}},
    {-6, {3, 2, 1, 0, 1, 0, 0, 1}}, {3, {3, 2, 1, 0, 1, 0, 0, 2}},
    {6, {3, 3, 1, 0, 1, 0, 0, 0}}, {-6, {3, 3, 1, 0, 1, 0, 0, 1}},
    {3, {3, 4, 1, 0, 1, 0, 0, 0}}, {3, {4, 3, 0, 0, 0, 0, 0, 2}},
    {-1, {4, 3, 0, 0, 0, 0, 0, 3}}, {-6, {4, 4, 0, 0, 0, 0, 0, 1}},
    {3, {4, 4, 0, 0, 0, 0, 0, 2}}, {3, {4, 5, 0, 0, 0, 0, 0, 0}},
    {-3, {4, 5, 0, 0, 0, 0, 0, 1}}, {1, {4, 6, 0, 0, 0, 0, 0, 0}},
};

constexpr Monomial kB3bW[] = {
    {-3, {0, 0, 1, 0, 0, 0, 0, 0}}, {3, {0, 0, 1, 1, 0, 0, 1, 0}},
    {1, {0, 0, 3, 0, 0, 0, 0, 0}}, {3, {0, 1, 0, 0, 1, 0, 0, 0}},
    {-3, {1, 0, 0, 0, 1, 0, 1, 1}}, {3, {1, 0, 0, 1, 0, 0, 0, 1}},
    {3, {1, 0, 2, 1, 0, 0, 0, 0}}, {-3, {1, 0, 2, 1, 0, 0, 0, 1}},
    {-3, {1, 1, 1, 0, 0, 0, 0, 0}}, {-6, {2, 0, 1, 0, 1, 0, 0, 1}},
    {3, {2, 0, 1, 0, 1, 0, 0, 2}}, {3, {2, 1, 0, 0, 1, 0, 1, 0}},
    {-3, {2, 1, 0, 1, 0, 0, 0, 0}}, {3, {2, 1, 0, 1, 0, 0, 0, 1}},
    {3, {2, 1, 2, 1, 0, 0, 0, 0}}, {3, {3, 0, 0, 0, 0, 0, 0, 2}},
    {-1, {3, 0, 0, 0, 0, 0, 0, 3}}, {6, {3, 1, 1, 0, 1, 0, 0, 0}},
    {-6, {3, 1, 1, 0, 1, 0, 0, 1}}, {-3, {3, 2, 0, 1, 0, 0, 0, 0}},
    {-6, {4, 1, 0, 0, 0, 0, 0, 1}}, {3, {4, 1, 0, 0, 0, 0, 0, 2}},
    {3, {4, 2, 1, 0, 1, 0, 0, 0}}, {3, {5, 2, 0, 0, 0, 0, 0, 0}},
    {-3, {5, 2, 0, 0, 0, 0, 0, 1}}, {1, {6, 3, 0, 0, 0, 0, 0, 0}},
};

constexpr Monomial kB3bLogNum[] = {
    {-3, {0, 0, 0, 0, 0, 0, 0, 0}}, {-6, {0, 0, 0, 0, 0, 0, 0, 1}},
    {3, {0, 0, 0, 1, 0, 0, 1, 0}}, {6, {1, 0, 1, 1, 0, 0, 0, 0}},
    {12, {1, 0, 1, 1, 0, 0, 0, 1}}, {3, {1, 0, 3, 1, 0, 0, 0, 0}},
    {9, {1, 1, 0, 0, 0, 0, 0, 0}}, {-6, {2, 0, 0, 0, 1, 0, 0, 1}},
    {-12, {2, 0, 0, 0, 1, 0, 0, 2}}, {-3, {2, 0, 2, 0, 0, 0, 1, 0}},
    {-3, {2, 0, 2, 0, 1, 0, 0, 0}}, {-15, {2, 0, 2, 0, 1, 0, 0, 1}},
    {-3, {2, 0, 4, 0, 1, 0, 0, 0}}, {-18, {2, 1, 1, 1, 0, 0, 0, 0}},
    {6, {3, 0, 1, 0, 0, 0, 0, 1}}, {21, {3, 0, 1, 0, 0, 0, 0, 2}},
    {6, {3, 0, 1, 1, 0, 0, 1, 1}}, {12, {3, 0, 3, 0, 0, 0, 0, 1}},
    {6, {3, 1, 0, 0, 1, 0, 0, 0}}, {30, {3, 1, 0, 0, 1, 0, 0, 1}},
    {18, {3, 1, 2, 0, 1, 0, 0, 0}}, {-3, {4, 0, 0, 0, 1, 0, 1, 2}},
    {-3, {4, 0, 0, 1, 0, 0, 0, 2}}, {-9, {4, 0, 0, 1, 0, 0, 0, 3}},
    {-18, {4, 0, 2, 1, 0, 0, 0, 2}}, {-6, {4, 1, 1, 0, 0, 0, 0, 0}},
    {-48, {4, 1, 1, 0, 0, 0, 0, 1}}, {-6, {4, 1, 1, 1, 0, 0, 1, 0}},
    {-12, {4, 1, 3, 0, 0, 0, 0, 0}}, {-18, {4, 2, 0, 0, 1, 0, 0, 0}},
    {12, {5, 0, 1, 0, 1, 0, 0, 3}}, {6, {5, 1, 0, 0, 1, 0, 1, 1}},
    {6, {5, 1, 0, 1, 0, 0, 0, 1}}, {30, {5, 1, 0, 1, 0, 0, 0, 2}},
    {36, {5, 1, 2, 1, 0, 0, 0, 1}}, {27, {5, 2, 1, 0, 0, 0, 0, 0}},
    {-3, {6, 0, 0, 0, 0, 0, 0, 4}}, {-36, {6, 1, 1, 0, 1, 0, 0, 2}},
    {-3, {6, 2, 0, 0, 1, 0, 1, 0}}, {-3, {6, 2, 0, 1, 0, 0, 0, 0}},
    {-33, {6, 2, 0, 1, 0, 0, 0, 1}}, {-18, {6, 2, 2, 1, 0, 0, 0, 0}},
    {12, {7, 1, 0, 0, 0, 0, 0, 3}}, {36, {7, 2, 1, 0, 1, 0, 0, 1}},
    {12, {7, 3, 0, 1, 0, 0, 0, 0}}, {-18, {8, 2, 0, 0, 0, 0, 0, 2}},
    {-12, {8, 3, 1, 0, 1, 0, 0, 0}}, {12, {9, 3, 0, 0, 0, 0, 0, 1}},
    {-3, {10, 4, 0, 0, 0, 0, 0, 0}},
};

constexpr Monomial kB3bLogDen[] = {
    {-3, {0, 0, 1, 0, 0, 0, 0, 0}}, {3, {0, 0, 1, 1, 0, 0, 1, 0}},
    {1, {0, 0, 3, 0, 0, 0, 0, 0}}, {3, {0, 1, 0, 0, 1, 0, 0, 0}},
    {-3, {1, 0, 0, 0, 1, 0, 1, 1}}, {3, {1, 0, 0, 1, 0, 0, 0, 1}},
    {3, {1, 0, 2, 1, 0, 0, 0, 0}}, {-3, {1, 0, 2, 1, 0, 0, 0, 1}},
    {-3, {1, 1, 1, 0, 0, 0, 0, 0}}, {-6, {2, 0, 1, 0, 1, 0, 0, 1}},
    {3, {2, 0, 1, 0, 1, 0, 0, 2}}, {3, {2, 1, 0, 0, 1, 0, 1, 0}},
    {-3, {2, 1, 0, 1, 0, 0, 0, 0}}, {3, {2, 1, 0, 1, 0, 0, 0, 1}},
    {3, {2, 1, 2, 1, 0, 0, 0, 0}}, {3, {3, 0, 0, 0, 0, 0, 0, 2}},
    {-1, {3, 0, 0, 0, 0, 0, 0, 3}}, {6, {3, 1, 1, 0, 1, 0, 0, 0}},
    {-6, {3, 1, 1, 0, 1, 0, 0, 1}}, {-3, {3, 2, 0, 1, 0, 0, 0, 0}},
    {-6, {4, 1, 0, 0, 0, 0, 0, 1}}, {3, {4, 1, 0, 0, 0, 0, 0, 2}},
    {3, {4, 2, 1, 0, 1, 0, 0, 0}}, {3, {5, 2, 0, 0, 0, 0, 0, 0}},
    {-3, {5, 2, 0, 0, 0, 0, 0, 1}}, {1, {6, 3, 0, 0, 0, 0, 0, 0}},
};

}  // namespace

const ChartWTables& w_tables(ChartKind kind) {
  static const ChartWTables kBase{kBaseW, {3, 1, 0}, kBaseLogNum, {1, 0}, kBaseLogDen};
  static const ChartWTables kInfU{kInfUW, {3, 3, 0}, kInfULogNum, {0, 0}, kInfULogDen};
  static const ChartWTables kInfV{kInfVW, {3, 3, 1}, kInfVLogNum, {0, 1}, kInfVLogDen};
  static const ChartWTables kB1a{kB1aW, {3, 3, 2}, kB1aLogNum, {0, 0}, kB1aLogDen};
  static const ChartWTables kB1b{kB1bW, {3, 2, 0}, kB1bLogNum, {0, 0}, kB1bLogDen};
  static const ChartWTables kB2a{kB2aW, {3, 2, 1}, kB2aLogNum, {0, 0}, kB2aLogDen};
  static const ChartWTables kB2b{kB2bW, {3, 1, 0}, kB2bLogNum, {0, 0}, kB2bLogDen};
  static const ChartWTables kB3a{kB3aW, {3, 1, 0}, kB3aLogNum, {0, 0}, kB3aLogDen};
  static const ChartWTables kB3b{kB3bW, {3, 0, 0}, kB3bLogNum, {0, 0}, kB3bLogDen};
  switch (kind) {
    case ChartKind::Base:
      return kBase;
    case ChartKind::InfU:
      return kInfU;
    case ChartKind::InfV:
      return kInfV;
    case ChartKind::B1a:
      return kB1a;
    case ChartKind::B1b:
      return kB1b;
    case ChartKind::B2a:
      return kB2a;
    case ChartKind::B2b:
      return kB2b;
    case ChartKind::B3a:
      return kB3a;
    case ChartKind::B3b:
      return kB3b;
  }
  return kBase;
}

}  // namespace painleve::detail
