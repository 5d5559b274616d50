#include <doctest.h>

#include <complex>
#include <random>

#include "oracles.hpp"
#include "pslp/arith.hpp"
#include "pslp/errors.hpp"
#include "pslp/oscillatory.hpp"

using namespace pslp;

namespace {
const ArithmeticTables& tables_1e4() {
    static ArithmeticTables t = build_tables(10'000);
    return t;
}
const ArithmeticTables& tables_1e6() {
    static ArithmeticTables t = build_tables(1'000'000);
    return t;
}
} // namespace

TEST_CASE("spec validation") {
    ExpSumSpec s;
    s.X = 100;
    s.c = 2.0;
    CHECK_THROWS_AS(s.validate(), parameter_error);
    s.c = 1.05;
    s.residue = Residue{2, 4};
    CHECK_THROWS_AS(s.validate(), parameter_error);
    s.residue = Residue{1, 4};
    CHECK_NOTHROW(s.validate());
    s.interval = Interval{10, 120};
    CHECK_THROWS_AS(s.validate(), parameter_error);
    s.interval = Interval{60, 100};
    CHECK_NOTHROW(s.validate());
}

TEST_CASE("prime exponential sum: small closed cases") {
    ExpSumSpec s;
    s.X = 10;
    s.c = 1.05;
    s.t = 0.0;
    // primes in (5, 10]: just 7
    auto v = exp_sum_primes(tables_1e4(), s);
    CHECK(v.real() == doctest::Approx(std::log(7.0)).epsilon(1e-15));
    CHECK(v.imag() == 0.0);
}

TEST_CASE("S(0) equals the Chebyshev theta difference exactly") {
    for (double X : {100.0, 1000.0, 9999.0}) {
        ExpSumSpec s;
        s.X = X;
        s.c = 1.05;
        s.t = 0.0;
        auto v = exp_sum_primes(tables_1e4(), s);
        double expect = chebyshev_theta(tables_1e4(), X) - chebyshev_theta(tables_1e4(), X / 2.0);
        CHECK(v.real() == doctest::Approx(expect).epsilon(1e-14));
        CHECK(v.imag() == 0.0);
    }
}

TEST_CASE("prime exponential sum matches the naive loop") {
    ExpSumSpec s;
    s.X = 1000;
    s.c = 1.05;
    s.t = 0.3;
    s.residue = Residue{1, 4};
    auto v = exp_sum_primes(tables_1e4(), s);
    auto w = oracle::exp_sum_loop(500.0, 1000.0, 1.05, 0.3, 1, 4);
    CHECK(std::abs(v - w) < 1e-9);

    std::mt19937 rng(23);
    std::uniform_real_distribution<double> tdist(-1.0, 1.0);
    std::uniform_int_distribution<int> ddist(1, 6);
    for (int i = 0; i < 20; ++i) {
        ExpSumSpec r;
        r.X = 200 + 137 * i;
        r.c = (i % 2) ? 1.05 : 1.2;
        r.t = tdist(rng);
        std::uint64_t d = std::uint64_t(ddist(rng));
        std::uint64_t l = 1;
        while (std::gcd(l, d) != 1) ++l;
        r.residue = Residue{l, d};
        auto a = exp_sum_primes(tables_1e4(), r);
        auto b = oracle::exp_sum_loop(r.X / 2.0, r.X, r.c, r.t, l, d);
        REQUIRE(std::abs(a - b) < 1e-9);
    }
}

TEST_CASE("capacity guard") {
    ExpSumSpec s;
    s.X = 20'000;  // beyond the 1e4 table
    s.c = 1.05;
    CHECK_THROWS_AS(exp_sum_primes(tables_1e4(), s), capacity_error);
}

TEST_CASE("Lambda-chi sum: principal character gives Chebyshev psi") {
    auto chi1 = principal_character(1);
    for (double y : {50.0, 500.0, 5000.0}) {
        auto v = exp_sum_lambda_chi(tables_1e4(), y, chi1, 0.0, 1.05, 0.5);
        double expect = chebyshev_psi(tables_1e4(), y) - chebyshev_psi(tables_1e4(), 0.5 * y);
        CHECK(v.real() == doctest::Approx(expect).epsilon(1e-12));
        CHECK(v.imag() == 0.0);
    }
}

TEST_CASE("Lambda-chi sum: hand-checkable chi4 window") {
    // (10, 20] with chi4: n = 11, 13, 16, 17, 19; chi4(16) = 0
    auto chi = characters_mod(4)[1];
    auto v = exp_sum_lambda_chi(tables_1e4(), 20.0, chi, 0.0, 1.05, 0.5);
    double expect = std::log(13.0) + std::log(17.0) - std::log(11.0) - std::log(19.0);
    CHECK(v.real() == doctest::Approx(expect).epsilon(1e-14));
    CHECK(v.imag() == doctest::Approx(0.0));
}

TEST_CASE("Lambda-chi sum matches the naive loop") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> tdist(-0.5, 0.5);
    for (int i = 0; i < 10; ++i) {
        std::uint32_t d = 3 + (i % 5);
        auto chars = characters_mod(d);
        const auto& chi = chars[i % chars.size()];
        double y = 300 + 77 * i, mu = 0.3 + 0.05 * (i % 7), t = tdist(rng), c = 1.1;
        auto a = exp_sum_lambda_chi(tables_1e4(), y, chi, t, c, mu);
        auto b = oracle::lambda_chi_loop(y, mu, chi.values, t, c);
        REQUIRE(std::abs(a - b) < 1e-9);
    }
}

TEST_CASE("oscillatory integral: closed forms at t = 0") {
    CHECK(osc_integral(2.0, 7.0, 1.05, 0.0).real() == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(osc_integral(2.0, 7.0, 1.05, 0.0).imag() == doctest::Approx(0.0));
    // general beta: (hi^b - lo^b)/b
    double b = 1.7;
    auto v = osc_integral(1.0, 10.0, 1.3, 0.0, b, 0.0);
    CHECK(v.real() ==
          doctest::Approx((std::pow(10.0, b) - 1.0) / b).epsilon(1e-10));
    CHECK_THROWS_AS(osc_integral(-1.0, 2.0, 1.05, 0.0), parameter_error);
    CHECK_THROWS_AS(osc_integral(5.0, 2.0, 1.05, 0.0), parameter_error);
}

TEST_CASE("oscillatory integral agrees with a dense trapezoid") {
    double lo = 500, hi = 1000, c = 1.2, t = 1e-3;
    auto fine = oracle::trapezoid_integral(lo, hi, c, t, 1.0, 0.0, 1'000'000);
    auto fast = osc_integral(lo, hi, c, t);
    CHECK(std::abs(fast - fine) / std::abs(fine) < 1e-6);

    // complex exponent route
    auto fine2 = oracle::trapezoid_integral(lo, hi, c, t, 0.8, 2.5, 1'000'000);
    auto fast2 = osc_integral(lo, hi, c, t, 0.8, 2.5);
    CHECK(std::abs(fast2 - fine2) < 1e-5 * (hi - lo));
}

TEST_CASE("error term: d = 1 is the Chebyshev discrepancy") {
    const auto& T = tables_1e4();
    for (double y : {100.0, 1000.0}) {
        auto v = error_term(T, y, 0.0, 1, 1, 1.05, 0.5);
        double expect =
            (chebyshev_psi(T, y) - chebyshev_psi(T, 0.5 * y)) - (y - 0.5 * y);
        CHECK(v.real() == doctest::Approx(expect).epsilon(1e-9));
        CHECK(std::abs(v.imag()) < 1e-12);
    }
}

TEST_CASE("error term: hand enumeration at y = 100, d = 3, a = 1") {
    // prime powers in (50, 100] congruent to 1 mod 3: 61, 64 = 2^6, 67, 73,
    // 79, 97; integral term is 50 / phi(3) = 25
    auto v = error_term(tables_1e4(), 100.0, 0.0, 3, 1, 1.05, 0.5);
    double expect = std::log(61.0) + std::log(2.0) + std::log(67.0) + std::log(73.0) +
                    std::log(79.0) + std::log(97.0) - 25.0;
    CHECK(v.real() == doctest::Approx(expect).epsilon(1e-12));
    CHECK_THROWS_AS(error_term(tables_1e4(), 100.0, 0.0, 4, 2, 1.05, 0.5), parameter_error);
}

TEST_CASE("error term shrinks relative to y across scales") {
    const auto& T = tables_1e6();
    double prev = 1e300;
    for (double y : {1e4, 1e5, 1e6}) {
        double rel = std::abs(error_term(T, y, 0.0, 3, 2, 1.05, 0.5)) / y;
        CHECK(rel < prev);
        prev = rel;
    }
}

TEST_CASE("conjugate symmetry and the triangle bound") {
    const auto& T = tables_1e4();
    ExpSumSpec s;
    s.X = 2000;
    s.c = 1.05;
    for (double t : {0.01, 0.1, 0.37, 0.93}) {
        s.t = t;
        auto plus = exp_sum_primes(T, s);
        s.t = -t;
        auto minus = exp_sum_primes(T, s);
        CHECK(std::abs(minus - std::conj(plus)) < 1e-12 * std::abs(plus));

        auto Ip = osc_integral(1000.0, 2000.0, 1.05, t);
        auto Im = osc_integral(1000.0, 2000.0, 1.05, -t);
        CHECK(std::abs(Im - std::conj(Ip)) < 1e-9);

        s.t = 0.0;
        auto at0 = exp_sum_primes(T, s);
        s.t = t;
        CHECK(std::abs(exp_sum_primes(T, s)) <= at0.real() * (1.0 + 1e-12));
    }
}

TEST_CASE("prime sum drifts to the integral at admissible frequencies") {
    // relative gap |S(t) - I(t)| / (X/2) decreasing across three scales for
    // at least 4 of 5 sampled |t| <= Delta
    const auto& T = tables_1e6();
    int improving = 0;
    for (int j = 0; j < 5; ++j) {
        double prev_gap = 1e300;
        bool mono = true;
        for (double X : {1e4, 1e5, 1e6}) {
            double Delta = delta_cutoff(X, 1.05);
            double t = Delta * double(j) / 4.0;
            ExpSumSpec s;
            s.X = X;
            s.c = 1.05;
            s.t = t;
            auto S = exp_sum_primes(T, s);
            auto I = osc_integral(X / 2.0, X, 1.05, t);
            double gap = std::abs(S - I) / (X / 2.0);
            if (gap >= prev_gap) mono = false;
            prev_gap = gap;
        }
        improving += mono;
    }
    CHECK(improving >= 4);
}

TEST_CASE("first-derivative bound on the oscillatory integral") {
    std::mt19937 rng(47);
    std::uniform_real_distribution<double> tdist(0.05, 2.0), lodist(10.0, 500.0);
    for (int i = 0; i < 20; ++i) {
        double c = (i % 2) ? 1.05 : 1.4;
        double t = tdist(rng), lo = lodist(rng), hi = lo * (1.5 + (i % 3));
        auto I = osc_integral(lo, hi, c, t);
        double h = c * t * std::pow(lo, c - 1.0);
        REQUIRE(std::abs(I) <= 2.0 / h);
    }
}

TEST_CASE("integral magnitude bound min(X, X^{1-c}/|t|) with constant 4") {
    for (double X : {1e3, 1e4}) {
        for (double tt : {1e-4, 1e-2, 0.5, 3.0}) {
            for (double c : {1.05, 1.2}) {
                auto I = osc_integral(X / 2.0, X, c, tt);
                double bound = 4.0 * std::min(X, std::pow(X, 1.0 - c) / tt);
                REQUIRE(std::abs(I) <= bound);
            }
        }
    }
}

TEST_CASE("second moment: prime-free interval gives zero") {
    ExpSumSpec s;
    s.X = 28.9;
    s.c = 1.05;
    s.interval = Interval{25.0, 28.9};  // 26, 27, 28: no primes
    auto r = second_moment(tables_1e4(), MomentKind::S_over_Delta, s,
                           -delta_cutoff(s.X, s.c), delta_cutoff(s.X, s.c));
    CHECK(r.moment == 0.0);
}

TEST_CASE("second moments against their comparison scales") {
    const auto& T = tables_1e4();
    ExpSumSpec s;
    s.X = 1000;
    s.c = 1.05;
    double Delta = delta_cutoff(s.X, s.c);

    auto rs = second_moment(T, MomentKind::S_over_Delta, s, -Delta, Delta);
    CHECK(rs.moment > 0.0);
    CHECK(rs.moment / rs.comparison < 10.0);
    MESSAGE("moment ratio |S|^2 / (X^{2-c} log^3 X): " << rs.moment / rs.comparison);

    auto ri = second_moment(T, MomentKind::I_over_Delta, s, -Delta, Delta);
    CHECK(ri.moment > 0.0);
    CHECK(ri.moment / ri.comparison < 10.0);

    // unit interval moment
    auto ru = second_moment(T, MomentKind::S_unit_interval, s, 3.0, 4.0);
    CHECK(ru.moment > 0.0);
    CHECK(ru.moment / ru.comparison < 10.0);

    // residue-restricted moment falls with d
    ExpSumSpec s4 = s;
    s4.residue = Residue{1, 4};
    auto r4 = second_moment(T, MomentKind::S_ld_over_Delta, s4, -Delta, Delta);
    CHECK(r4.moment / rs.moment <= 1.5);
}
