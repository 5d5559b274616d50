#include "pslp/linnik.hpp"

#include <cmath>

#include "pslp/accum.hpp"
#include "pslp/constants.hpp"
#include "pslp/errors.hpp"

namespace pslp {

std::int64_t r2(const ArithmeticTables& tables, std::uint64_t n) {
    if (n == 0 || n > tables.limit) throw capacity_error("r2: n outside the sieved range");
    std::int64_t s = 0;
    for (std::uint64_t d : tables.divisors(n)) s += chi4(std::int64_t(d));
    return 4 * s;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> two_square_witness(std::uint64_t k) {
    for (std::uint64_t x = 0; 2 * x * x <= k; ++x) {
        std::uint64_t rest = k - x * x;
        std::uint64_t y = std::uint64_t(std::sqrt(double(rest)));
        while (y * y > rest) --y;
        while ((y + 1) * (y + 1) <= rest) ++y;
        if (y * y == rest) return std::make_pair(std::uint32_t(x), std::uint32_t(y));
    }
    return std::nullopt;
}

std::vector<LinnikPrime> linnik_primes(const ArithmeticTables& tables, double lo, double hi) {
    if (hi > double(tables.limit))
        throw capacity_error("linnik_primes: hi exceeds the sieved limit");
    std::vector<LinnikPrime> out;
    std::size_t i0 = tables.prime_index_above(lo);
    for (std::size_t i = i0; i < tables.primes.size(); ++i) {
        std::uint64_t p = tables.primes[i];
        if (double(p) > hi) break;
        auto w = two_square_witness(p - 1);
        if (!w) continue;
        out.push_back({p, w->first, w->second, r2(tables, p - 1)});
    }
    return out;
}

namespace {

// chi4-sum over divisors of p-1 restricted to the open window (w_lo, w_hi).
std::int64_t windowed_chi4_sum(const ArithmeticTables& tables, std::uint64_t k,
                               double w_lo, double w_hi) {
    std::int64_t s = 0;
    for (std::uint64_t d : tables.divisors(k))
        if (w_lo < double(d) && double(d) < w_hi) s += chi4(std::int64_t(d));
    return s;
}

} // namespace

HooleyMoment hooley_rho_moment(const ArithmeticTables& tables, double X, double omega) {
    if (!(omega > 0.0)) throw parameter_error("hooley_rho_moment: omega must be positive");
    if (X > double(tables.limit))
        throw capacity_error("hooley_rho_moment: X exceeds the sieved limit");

    double lg = std::log(X);
    double w_lo = std::sqrt(X) * std::pow(lg, -omega);
    double w_hi = std::sqrt(X) * std::pow(lg, omega);

    KahanSum sum;
    for (std::uint64_t p : tables.primes) {
        if (double(p) > X) break;
        double inner = double(windowed_chi4_sum(tables, p - 1, w_lo, w_hi));
        sum.add(inner * inner);
    }
    double llg = std::log(lg);
    return {sum.value(), X * std::pow(llg, 7.0) / lg};
}

HooleyCount hooley_window_count(const ArithmeticTables& tables, double X, double omega) {
    if (!(omega > 0.0)) throw parameter_error("hooley_window_count: omega must be positive");
    if (X > double(tables.limit))
        throw capacity_error("hooley_window_count: X exceeds the sieved limit");

    double lg = std::log(X);
    double w_lo = std::sqrt(X) * std::pow(lg, -omega);
    double w_hi = std::sqrt(X) * std::pow(lg, omega);

    std::uint64_t count = 0;
    for (std::uint64_t p : tables.primes) {
        if (double(p) > X) break;
        std::uint64_t k = p - 1;
        bool hit = false;
        if (k >= 1) {
            for (std::uint64_t d : tables.divisors(k))
                if (w_lo < double(d) && double(d) < w_hi) { hit = true; break; }
        }
        if (hit) ++count;
    }
    double llg = std::log(lg);
    double comparison = X * std::pow(llg, 3.0) / std::pow(lg, 1.0 + 2.0 * theta0());
    return {count, comparison};
}

} // namespace pslp
