#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "pslp/errors.hpp"
#include "pslp/kernel.hpp"

using namespace pslp;

namespace {

// plain trapezoid of theta over its support
double integrate_theta(const SmoothingKernel& K, std::size_t panels) {
    double lo = -K.support_edge(), hi = K.support_edge();
    double h = (hi - lo) / double(panels);
    double s = 0.5 * (K.theta(lo) + K.theta(hi));
    for (std::size_t i = 1; i < panels; ++i) s += K.theta(lo + double(i) * h);
    return s * h;
}

const double gl32_x[16] = {
    0.04830766568773831, 0.14447196158279649, 0.23928736225213706, 0.33186860228212767,
    0.42135127613063533, 0.50689990893222936, 0.58771575724076230, 0.66304426693021523,
    0.73218211874028971, 0.79448379596794239, 0.84936761373256997, 0.89632115576605220,
    0.93490607593773967, 0.96476225558750639, 0.98561151154526838, 0.99726386184948157};
const double gl32_w[16] = {
    0.09654008851472781, 0.09563872007927483, 0.09384439908080457, 0.09117387869576386,
    0.08765209300440391, 0.08331192422694685, 0.07819389578707031, 0.07234579410884845,
    0.06582222277636175, 0.05868409347853570, 0.05099805926237624, 0.04283589802222643,
    0.03427386291302163, 0.02539206530926243, 0.01627439473090597, 0.00701861000946930};

} // namespace

namespace kernel_oracle {

// Inverse transform 2 int_0^T Theta(x) cos(2 pi x y) dx, panel Gauss-Legendre,
// truncated where the decay bound falls below 1e-12.
double theta_from_hat(const SmoothingKernel& K, double y) {
    double T = 1.0;
    while (K.fourier_bound(T) > 1e-12 && T < 1e7) T *= 2.0;
    double omega = 2.0 * std::numbers::pi * (K.support_edge() + std::abs(y) + 0.5);
    double w = std::min(40.0 / omega, T);
    std::size_t n_panels = std::size_t(std::ceil(T / w));
    w = T / double(n_panels);
    double total = 0.0, comp = 0.0;
    for (std::size_t i = 0; i < n_panels; ++i) {
        double mid = (double(i) + 0.5) * w, half = 0.5 * w;
        double panel = 0.0;
        for (int j = 0; j < 16; ++j) {
            double xp = mid + half * gl32_x[j], xm = mid - half * gl32_x[j];
            panel += gl32_w[j] *
                     (K.theta_hat(xp) * std::cos(2.0 * std::numbers::pi * xp * y) +
                      K.theta_hat(xm) * std::cos(2.0 * std::numbers::pi * xm * y));
        }
        double v = panel * half - comp;  // Kahan
        double t2 = total + v;
        comp = (t2 - total) - v;
        total = t2;
    }
    return 2.0 * total;
}

} // namespace kernel_oracle

TEST_CASE("kernel hypothesis checks") {
    CHECK_NOTHROW(make_kernel(0.9, 0.1, 3));
    CHECK_THROWS_AS(make_kernel(0.4, 0.1, 3), parameter_error);   // delta = a/4
    CHECK_THROWS_AS(make_kernel(0.9, 0.1, 0), parameter_error);
    CHECK_THROWS_AS(make_kernel(-1.0, 0.1, 1), parameter_error);

    auto K = kernel_for_epsilon(0.5, 1e4);
    CHECK(K.a == doctest::Approx(0.45));
    CHECK(K.delta == doctest::Approx(0.05));
    CHECK(K.k == 9);  // floor(log 1e4)

    auto B = kernel_binary_variant(0.5, 1e4);
    CHECK(B.a == doctest::Approx(0.625));
    CHECK(B.delta == doctest::Approx(0.125));
    CHECK(B.plateau_edge() == doctest::Approx(0.5));      // = eps
    CHECK(B.support_edge() == doctest::Approx(0.75));     // = 3 eps / 2
}

TEST_CASE("theta plateau, support, and transition range") {
    for (int k : {1, 3, 8, 20}) {
        auto K = make_kernel(0.9, 0.1, k);
        CAPTURE(k);
        CHECK(K.theta(0.0) == 1.0);
        for (int i = 0; i < 200; ++i) {
            double y = -K.plateau_edge() + 2.0 * K.plateau_edge() * double(i) / 199.0;
            REQUIRE(K.theta(y) == 1.0);
        }
        CHECK(K.theta(K.support_edge()) == 0.0);
        CHECK(K.theta(-K.support_edge()) == 0.0);
        for (int i = 0; i < 200; ++i) {
            double y = K.support_edge() + 0.3 * double(i) / 199.0;
            REQUIRE(K.theta(y) == 0.0);
            REQUIRE(K.theta(-y) == 0.0);
        }
        // strict interior of the transition, 25% margin at both ends
        double w = K.support_edge() - K.plateau_edge();  // 2 delta
        for (int i = 0; i < 200; ++i) {
            double y = K.plateau_edge() + 0.25 * w + 0.5 * w * double(i) / 199.0;
            double v = K.theta(y);
            REQUIRE(v > 0.0);
            REQUIRE(v < 1.0);
            REQUIRE(K.theta(-y) == doctest::Approx(v).epsilon(1e-12));
        }
    }
}

TEST_CASE("theta is monotone across the upper transition") {
    for (int k : {1, 3, 8, 20}) {
        auto K = make_kernel(0.9, 0.1, k);
        double prev = 1.0;
        for (int i = 0; i <= 400; ++i) {
            double y = K.plateau_edge() + 2.0 * K.delta * double(i) / 400.0;
            double v = K.theta(y);
            CHECK(v <= prev + 1e-12);
            prev = v;
        }
    }
}

TEST_CASE("theta_hat at zero equals 2a and the integral of theta") {
    for (int k : {1, 3, 8}) {
        auto K = make_kernel(0.9, 0.1, k);
        CHECK(K.theta_hat(0.0) == doctest::Approx(2.0 * K.a).epsilon(1e-14));
        CHECK(K.theta_hat(0.0) >= 2.0 * (K.a - K.delta));
        CHECK(K.theta_hat(0.0) <= 2.0 * (K.a + K.delta));
        double quad = integrate_theta(K, 40'000);
        CHECK(quad == doctest::Approx(K.theta_hat(0.0)).epsilon(1e-8));
    }
}

TEST_CASE("theta_hat is even and smooth through x = 0") {
    auto K = make_kernel(0.9, 0.1, 5);
    for (double x : {1e-9, 1e-6, 1e-4, 0.037, 1.0, 14.5, 2.0e3}) {
        CHECK(K.theta_hat(x) == doctest::Approx(K.theta_hat(-x)).epsilon(1e-14));
    }
    // Taylor branch agrees with the direct quotient across its switch point
    CHECK(K.theta_hat(7.0e-5) == doctest::Approx(2.0 * K.a).epsilon(1e-6));
    CHECK(K.theta_hat(9.0e-5) == doctest::Approx(2.0 * K.a).epsilon(1e-6));
}

TEST_CASE("three-piece decay bound dominates |theta_hat|") {
    for (int k : {1, 3, 8, 20}) {
        auto K = make_kernel(0.9, 0.1, k);
        CAPTURE(k);
        for (int i = 0; i < 1000; ++i) {
            double x = std::pow(10.0, -3.0 + 9.0 * double(i) / 999.0);  // [1e-3, 1e6]
            REQUIRE(std::abs(K.theta_hat(x)) <= K.fourier_bound(x) * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("inverse transform of theta_hat reproduces theta") {
    for (int k : {3, 8, 20}) {
        auto K = make_kernel(0.9, 0.1, k);
        CAPTURE(k);
        for (int i = 0; i < 50; ++i) {
            double y = 1.15 * K.support_edge() * double(i) / 49.0;
            REQUIRE(std::abs(K.theta(y) - kernel_oracle::theta_from_hat(K, y)) < 1e-6);
        }
    }
}

TEST_CASE("large-k fallback stays consistent with the exact path") {
    // k = 30 goes through quadrature; plateau/support short-circuits still
    // apply, and the transition stays inside [0, 1]
    auto K = make_kernel(0.9, 0.1, 30);
    CHECK(K.theta(0.0) == 1.0);
    CHECK(K.theta(0.79) == 1.0);
    CHECK(K.theta(1.1) == 0.0);
    auto exact = make_kernel(0.9, 0.1, 25);
    for (double y : {0.82, 0.88, 0.94, 0.985}) {
        double v30 = K.theta(y);
        double v25 = exact.theta(y);
        CHECK(v30 >= 0.0);
        CHECK(v30 <= 1.0);
        CHECK(std::abs(v30 - v25) < 0.2);  // nearby orders, nearby shapes
    }
    double quad = integrate_theta(K, 20'000);
    CHECK(quad == doctest::Approx(K.theta_hat(0.0)).epsilon(1e-6));
}
