#include <doctest.h>

#include <complex>
#include <random>

#include "oracles.hpp"
#include "pslp/arith.hpp"
#include "pslp/errors.hpp"

using namespace pslp;

namespace {
const ArithmeticTables& tables_1e4() {
    static ArithmeticTables t = build_tables(10'000);
    return t;
}
} // namespace

TEST_CASE("build_tables rejects out-of-range limits") {
    CHECK_THROWS_AS(build_tables(1), parameter_error);
    CHECK_THROWS_AS(build_tables(200'000'001), parameter_error);
}

TEST_CASE("sieve primes match trial division") {
    auto t = build_tables(10);
    CHECK(t.primes == std::vector<std::uint64_t>{2, 3, 5, 7});
    const auto& big = tables_1e4();
    CHECK(big.primes == oracle::primes_td(10'000));
}

TEST_CASE("multiplicative function values at named points") {
    const auto& t = tables_1e4();
    CHECK(t.phi[1] == 1);
    CHECK(t.mu[1] == 1);
    CHECK(t.tau[1] == 1);
    CHECK(t.lambda_log[1] == 0.0);
    CHECK(t.phi[12] == 4);
    CHECK(t.mu[12] == 0);
    CHECK(t.tau[12] == 6);
}

TEST_CASE("multiplicative functions against direct oracles") {
    const auto& t = tables_1e4();
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::uint64_t> pick(1, 10'000);
    for (int i = 0; i < 400; ++i) {
        std::uint64_t n = pick(rng);
        CAPTURE(n);
        CHECK(t.phi[n] == oracle::phi_direct(n));
        CHECK(int(t.mu[n]) == oracle::mu_direct(n));
        CHECK(t.tau[n] == oracle::tau_direct(n));
        CHECK(t.lambda_log[n] == doctest::Approx(oracle::lambda_direct(n)).epsilon(1e-12));
    }
    for (std::uint64_t p : {2ull, 97ull, 9973ull}) CHECK(t.phi[p] == p - 1);
}

TEST_CASE("divisor-sum identities for mu, Lambda, tau") {
    const auto& t = tables_1e4();
    for (std::uint64_t n = 1; n <= 10'000; ++n) {
        int mu_sum = 0;
        double lam_sum = 0.0;
        std::uint64_t tau_cnt = 0;
        for (std::uint64_t d = 1; d * d <= n; ++d) {
            if (n % d) continue;
            mu_sum += t.mu[d];
            lam_sum += t.lambda_log[d];
            tau_cnt += 1 + (d != n / d);
            if (d != n / d) {
                mu_sum += t.mu[n / d];
                lam_sum += t.lambda_log[n / d];
            }
        }
        REQUIRE(mu_sum == (n == 1 ? 1 : 0));
        REQUIRE(tau_cnt == t.tau[n]);
        if (n > 1)
            REQUIRE(lam_sum == doctest::Approx(std::log(double(n))).epsilon(1e-9));
    }
}

TEST_CASE("chi4 definition and periodicity") {
    CHECK(chi4(1) == 1);
    CHECK(chi4(2) == 0);
    CHECK(chi4(3) == -1);
    for (std::int64_t n = -50; n <= 50; ++n) {
        CHECK(chi4(n) == chi4(n + 4));
        CHECK(chi4(n) == oracle::chi4_direct(n));
    }
}

TEST_CASE("characters mod 1 and mod 4") {
    auto c1 = characters_mod(1);
    REQUIRE(c1.size() == 1);
    CHECK(c1[0].is_principal);
    CHECK(c1[0](0) == std::complex<double>{1.0, 0.0});
    CHECK(c1[0](12345) == std::complex<double>{1.0, 0.0});

    auto c4 = characters_mod(4);
    REQUIRE(c4.size() == 2);
    CHECK(c4[0].is_principal);
    CHECK_FALSE(c4[1].is_principal);
    // the non-principal one is chi4
    for (std::uint64_t n = 0; n < 8; ++n)
        CHECK(c4[1](n) == std::complex<double>{double(chi4(std::int64_t(n))), 0.0});
}

TEST_CASE("characters mod 4 and 5 match brute-force multiplicative maps") {
    // enumerate all completely multiplicative maps on the units with values
    // in the phi(d)-th roots of unity, compare as sets
    for (std::uint32_t d : {4u, 5u}) {
        auto chars = characters_mod(d);
        std::vector<std::uint32_t> units;
        for (std::uint32_t n = 1; n < d; ++n)
            if (std::gcd(n, d) == 1) units.push_back(n);
        std::size_t phi = units.size();
        REQUIRE(chars.size() == phi);

        std::vector<std::vector<std::complex<double>>> found;
        std::vector<std::size_t> assign(phi, 0);
        auto root = [&](std::size_t j) {
            double a = 2.0 * std::numbers::pi * double(j) / double(phi);
            return std::complex<double>{std::cos(a), std::sin(a)};
        };
        for (;;) {
            // candidate map units[i] -> root(assign[i]); test multiplicativity
            auto val = [&](std::uint32_t n) {
                for (std::size_t i = 0; i < phi; ++i)
                    if (units[i] == n % d) return root(assign[i]);
                return std::complex<double>{0.0, 0.0};
            };
            bool ok = true;
            for (std::uint32_t x : units)
                for (std::uint32_t y : units)
                    if (std::abs(val(x) * val(y) - val(x * y % d)) > 1e-9) ok = false;
            if (ok) found.push_back({});
            if (ok) {
                auto& tab = found.back();
                for (std::uint32_t n = 0; n < d; ++n)
                    tab.push_back(std::gcd(n, d) == 1 ? val(n) : 0.0);
            }
            std::size_t i = 0;
            for (; i < phi; ++i) {
                if (++assign[i] < phi) break;
                assign[i] = 0;
            }
            if (i == phi) break;
        }
        REQUIRE(found.size() == phi);
        for (const auto& chi : chars) {
            bool matched = false;
            for (const auto& tab : found) {
                double diff = 0.0;
                for (std::uint32_t n = 0; n < d; ++n) diff += std::abs(chi(n) - tab[n]);
                if (diff < 1e-9) matched = true;
            }
            CHECK(matched);
        }
    }
    // all non-principal characters mod 5 are primitive
    for (const auto& chi : characters_mod(5))
        CHECK(chi.is_primitive == !chi.is_principal);
}

TEST_CASE("character table invariants for moduli up to 100") {
    for (std::uint32_t d = 1; d <= 100; ++d) {
        auto chars = characters_mod(d);
        std::uint64_t phi = d == 1 ? 1 : 0;
        for (std::uint32_t n = 1; n < d; ++n)
            if (std::gcd(n, d) == 1) ++phi;
        REQUIRE(chars.size() == phi);

        int principals = 0;
        for (const auto& chi : chars) {
            principals += chi.is_principal;
            // chi(n) = 0 iff gcd(n, d) > 1
            for (std::uint32_t n = 0; n < d; ++n) {
                bool unit = (d == 1) || std::gcd(n, d) == 1;
                CHECK((std::abs(chi(n)) > 0.5) == unit);
            }
            // complete multiplicativity
            for (std::uint32_t m = 0; m < d; ++m)
                for (std::uint32_t n = 0; n < d; ++n)
                    CHECK(std::abs(chi(std::uint64_t(m) * n) - chi(m) * chi(n)) < 1e-12);
            // value sum: phi(d) for principal, 0 otherwise
            std::complex<double> s = 0.0;
            for (std::uint32_t n = 0; n < d; ++n) s += chi(n);
            if (chi.is_principal)
                CHECK(std::abs(s - std::complex<double>{double(phi), 0.0}) < 1e-9);
            else
                CHECK(std::abs(s) < 1e-9);
        }
        CHECK(principals == 1);
    }
}

TEST_CASE("orthogonality of distinct characters, moduli up to 100") {
    for (std::uint32_t d = 1; d <= 100; ++d) {
        auto chars = characters_mod(d);
        for (std::size_t i = 0; i < chars.size(); ++i)
            for (std::size_t j = i + 1; j < chars.size(); ++j) {
                std::complex<double> s = 0.0;
                for (std::uint32_t n = 0; n < d; ++n)
                    s += chars[i](n) * std::conj(chars[j](n));
                CHECK(std::abs(s) < 1e-10 * double(d));
            }
    }
}

TEST_CASE("r2 identity: 4 sum chi4(d) equals the lattice count") {
    const auto& t = tables_1e4();
    for (std::uint64_t n = 1; n <= 10'000; ++n) {
        std::int64_t s = 0;
        for (std::uint64_t d : oracle::divisors_direct(n)) s += chi4(std::int64_t(d));
        REQUIRE(4 * s == oracle::lattice_r2(n));
        (void)t;
    }
}

TEST_CASE("Polya-Vinogradov examples with chi4") {
    auto chi = characters_mod(4)[1];
    auto r1 = polya_vinogradov_check(chi, 0, 4);
    CHECK(r1.max_abs_partial_sum == doctest::Approx(1.0));
    auto r2 = polya_vinogradov_check(chi, 0, 10'000);
    CHECK(r2.max_abs_partial_sum == doctest::Approx(1.0));
    CHECK(r2.bound == doctest::Approx(12.0 * std::log(4.0)));
    CHECK_THROWS_AS(polya_vinogradov_check(characters_mod(4)[0], 0, 10), parameter_error);
}

TEST_CASE("non-principal characters sum to zero over a full period") {
    for (const auto& chi : characters_mod(5)) {
        if (chi.is_principal) continue;
        std::complex<double> s = 0.0;
        for (std::uint64_t n = 1; n <= 5; ++n) s += chi(n);
        CHECK(std::abs(s) < 1e-12);
    }
}

TEST_CASE("Polya-Vinogradov holds for all moduli up to 200") {
    for (std::uint32_t d = 3; d <= 200; ++d) {
        for (const auto& chi : characters_mod(d)) {
            if (chi.is_principal) continue;
            for (std::int64_t M : {0L, 17L, 1000L}) {
                auto r = polya_vinogradov_check(chi, M, 2000);
                CHECK(r.max_abs_partial_sum <= r.bound);
            }
        }
    }
}

TEST_CASE("large sieve: zero and single-coefficient cases") {
    std::vector<std::complex<double>> zeros(16, 0.0);
    auto rz = large_sieve_ratio(3, 0, zeros);
    CHECK(rz.lhs == 0.0);
    CHECK(rz.rhs == 0.0);

    // single a_{M+1} = 1: direct character enumeration gives
    // 1 (from q = 1) + 1.5 (from the primitive character mod 3, if coprime)
    std::vector<std::complex<double>> one{1.0};
    auto r1 = large_sieve_ratio(3, 0, one);
    CHECK(r1.lhs == doctest::Approx(1.0 + 1.5));
    CHECK(r1.rhs == doctest::Approx((1.0 + 9.0) * 1.0));

    auto r3 = large_sieve_ratio(3, 2, one);  // n = 3 shares a factor with q = 3
    CHECK(r3.lhs == doctest::Approx(1.0));

    std::vector<std::complex<double>> empty;
    CHECK_THROWS_AS(large_sieve_ratio(3, 0, empty), parameter_error);
}

TEST_CASE("large sieve inequality on random +-1 sequences") {
    std::mt19937 rng(11);
    std::bernoulli_distribution coin;
    for (int rep = 0; rep < 5; ++rep) {
        std::vector<std::complex<double>> a(100);
        for (auto& z : a) z = coin(rng) ? 1.0 : -1.0;
        auto r = large_sieve_ratio(10, 0, a);
        CHECK(r.lhs <= 2.0 * r.rhs);
        MESSAGE("large sieve ratio (N=100, Q=10): " << r.lhs / r.rhs);
    }
}
