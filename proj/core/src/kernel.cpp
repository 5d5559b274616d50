#include "pslp/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <vector>

#include "pslp/accum.hpp"
#include "pslp/errors.hpp"

namespace pslp {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr int k_exact_max = 25;  // piecewise-polynomial path; quadrature beyond

// sin(u)/u with a Taylor series for small u (6 terms, plenty below |u| = 0.5).
double sinc(double u) {
    double u2 = u * u;
    if (std::abs(u) < 0.5) {
        double s = 0.0, term = 1.0;
        // 1 - u^2/3! + u^4/5! - ...
        for (int m = 0; m < 6; ++m) {
            s += term;
            term *= -u2 / double((2 * m + 2) * (2 * m + 3));
        }
        return s;
    }
    return std::sin(u) / u;
}

// CDF of the sum of k iid uniforms on [0,1] (Irwin-Hall), for 0 <= v <= k/2.
// Piecewise polynomial: F_k(v) = (1/k!) sum_{j<=floor(v)} (-1)^j C(k,j) (v-j)^k.
// Restricted to the lower half so the alternating sum stays mildly conditioned;
// the upper half goes through the symmetry F_k(v) = 1 - F_k(k - v).
double irwin_hall_cdf_lower(int k, double v) {
    if (v <= 0.0) return 0.0;
    long double sum = 0.0L;
    long double binom = 1.0L;  // C(k, j)
    int jmax = int(std::floor(v));
    if (jmax >= k) jmax = k - 1;
    for (int j = 0; j <= jmax; ++j) {
        long double term = binom * std::pow((long double)(v - j), k);
        sum += (j % 2 == 0) ? term : -term;
        binom = binom * (k - j) / (j + 1);
    }
    long double kfact = 1.0L;
    for (int i = 2; i <= k; ++i) kfact *= i;
    return double(sum / kfact);
}

double transition_value(double a, double delta, int k, double ay) {
    // distance from the support edge, in units of the box half-width 2r
    double r = delta / double(k);
    double v = (a + delta - ay) / (2.0 * r);  // in (0, k) on the transition
    if (v <= 0.5 * k) return irwin_hall_cdf_lower(k, v);
    return 1.0 - irwin_hall_cdf_lower(k, double(k) - v);
}

} // namespace

SmoothingKernel make_kernel(double a, double delta, int k) {
    if (!(a > 0.0) || !(delta > 0.0) || !(delta < a / 4.0))
        throw parameter_error("make_kernel: need 0 < delta < a/4");
    if (k < 1) throw parameter_error("make_kernel: need k >= 1");
    return SmoothingKernel{a, delta, k};
}

SmoothingKernel kernel_for_epsilon(double eps, double X) {
    if (!(eps > 0.0)) throw parameter_error("kernel_for_epsilon: eps must be positive");
    int k = std::max(1, int(std::floor(std::log(std::max(X, 1.0)))));
    return make_kernel(0.9 * eps, 0.1 * eps, k);
}

SmoothingKernel kernel_binary_variant(double eps, double X0) {
    if (!(eps > 0.0)) throw parameter_error("kernel_binary_variant: eps must be positive");
    int k = std::max(1, int(std::floor(std::log(std::max(X0, 1.0)))));
    return make_kernel(1.25 * eps, 0.25 * eps, k);
}

double SmoothingKernel::theta_hat(double x) const {
    double r = delta / double(k);
    double s = 2.0 * a * sinc(two_pi * a * x);
    double f = sinc(two_pi * r * x);
    // k identical sinc factors
    return s * std::pow(f, double(k));
}

double SmoothingKernel::fourier_bound(double x) const {
    double ax = std::abs(x);
    if (ax == 0.0) return 2.0 * a;
    double b1 = 2.0 * a;
    double b2 = 1.0 / (std::numbers::pi * ax);
    // (1/(pi x)) (k/(2 pi x delta))^k, via logs to dodge overflow
    double lb3 = -std::log(std::numbers::pi * ax) +
                 double(k) * (std::log(double(k)) - std::log(two_pi * ax * delta));
    double b3 = lb3 > 700.0 ? std::numeric_limits<double>::infinity() : std::exp(lb3);
    return std::min(b1, std::min(b2, b3));
}

double SmoothingKernel::theta(double y) const {
    double ay = std::abs(y);
    if (ay <= a - delta) return 1.0;
    if (ay >= a + delta) return 0.0;
    if (k <= k_exact_max) return transition_value(a, delta, k, ay);

    // Large k: truncated inverse transform, theta(y) = 2 int_0^T Theta cos(2 pi x y) dx.
    // T is where the pointwise decay bound drops below 1e-12.
    double T = 1.0;
    while (fourier_bound(T) > 1e-12 && T < 1e9) T *= 2.0;
    // Gauss-Legendre 32 per panel; panel width keeps |omega * w| modest.
    static const double gl_x[16] = {
        0.04830766568773831, 0.14447196158279649, 0.23928736225213706, 0.33186860228212767,
        0.42135127613063533, 0.50689990893222936, 0.58771575724076230, 0.66304426693021523,
        0.73218211874028971, 0.79448379596794239, 0.84936761373256997, 0.89632115576605220,
        0.93490607593773967, 0.96476225558750639, 0.98561151154526838, 0.99726386184948157};
    static const double gl_w[16] = {
        0.09654008851472781, 0.09563872007927483, 0.09384439908080457, 0.09117387869576386,
        0.08765209300440391, 0.08331192422694685, 0.07819389578707031, 0.07234579410884845,
        0.06582222277636175, 0.05868409347853570, 0.05099805926237624, 0.04283589802222643,
        0.03427386291302163, 0.02539206530926243, 0.01627439473090597, 0.00701861000946930};
    double omega_max = two_pi * (a + delta + ay);
    double w = std::min(40.0 / std::max(omega_max, 1e-300), T);
    std::size_t n_panels = std::size_t(std::ceil(T / w));
    w = T / double(n_panels);
    KahanSum acc;
    for (std::size_t i = 0; i < n_panels; ++i) {
        double mid = (double(i) + 0.5) * w, half = 0.5 * w;
        double panel = 0.0;
        for (int j = 0; j < 16; ++j) {
            double xp = mid + half * gl_x[j];
            double xm = mid - half * gl_x[j];
            panel += gl_w[j] * (theta_hat(xp) * std::cos(two_pi * xp * y) +
                                theta_hat(xm) * std::cos(two_pi * xm * y));
        }
        acc.add(panel * half);
    }
    double val = 2.0 * acc.value();
    return std::min(1.0, std::max(0.0, val));
}

} // namespace pslp
