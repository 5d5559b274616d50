#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pslp/arith.hpp"

namespace pslp {

// A prime p = x^2 + y^2 + 1 together with its canonical witness
// (minimal x with 0 <= x <= y) and the signed-lattice weight r(p-1).
struct LinnikPrime {
    std::uint64_t p;
    std::uint32_t x, y;
    std::int64_t r_weight;
};

/// r(n) = #{(x,y) in Z^2 : x^2 + y^2 = n} = 4 sum_{d|n} chi4(d), evaluated
/// through the divisor sum.
std::int64_t r2(const ArithmeticTables& tables, std::uint64_t n);

/// Canonical two-square witness of k (minimal x, 0 <= x <= y), if any.
std::optional<std::pair<std::uint32_t, std::uint32_t>> two_square_witness(std::uint64_t k);

/// All primes p in (lo, hi] with p - 1 a sum of two squares, with witnesses.
std::vector<LinnikPrime> linnik_primes(const ArithmeticTables& tables, double lo, double hi);

struct HooleyMoment {
    double value;       // sum_{p <= X} | sum_{d | p-1, d in window} chi4(d) |^2
    double comparison;  // X (log log X)^7 / log X
};

/// Divisor-window second moment over the window
/// (sqrt(X) (log X)^{-omega}, sqrt(X) (log X)^{omega}), endpoints excluded.
HooleyMoment hooley_rho_moment(const ArithmeticTables& tables, double X, double omega);

struct HooleyCount {
    std::uint64_t count;  // primes p <= X with a divisor of p-1 in the window
    double comparison;    // X (log log X)^3 / (log X)^{1 + 2 theta0}
};

HooleyCount hooley_window_count(const ArithmeticTables& tables, double X, double omega);

} // namespace pslp
