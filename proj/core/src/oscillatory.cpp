#include "pslp/oscillatory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "pslp/accum.hpp"
#include "pslp/errors.hpp"
#include "pslp/parallel.hpp"

namespace pslp {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

std::complex<double> e_of(double x) {
    return {std::cos(two_pi * x), std::sin(two_pi * x)};
}

void check_exponent(double c) {
    if (!(c > 1.0) || !(c < 3.0) || c == 2.0)
        throw parameter_error("exponent must satisfy 1 < c < 3, c != 2");
}

// 16-point Gauss-Legendre on [-1, 1] (positive nodes; symmetric).
const double gl16_x[8] = {
    0.09501250983763745, 0.28160355077925892, 0.45801677765722737, 0.61787624440264377,
    0.75540440835500300, 0.86563120238783176, 0.94457502307323260, 0.98940093499164994};
const double gl16_w[8] = {
    0.18945061045506859, 0.18260341504492361, 0.16915651939500262, 0.14959598881657676,
    0.12462897125553403, 0.09515851168249259, 0.06225352393864771, 0.02715245941175404};

struct Integrand {
    double c, t, beta, gamma;

    std::complex<double> operator()(double y) const {
        // y^{beta-1} * e^{i gamma log y} * e(t y^c)
        double amp = (beta == 1.0) ? 1.0 : std::pow(y, beta - 1.0);
        double phase = two_pi * t * std::pow(y, c);
        if (gamma != 0.0) phase += gamma * std::log(y);
        return amp * std::complex<double>{std::cos(phase), std::sin(phase)};
    }
};

std::complex<double> gl16_panel(const Integrand& f, double lo, double hi) {
    double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    std::complex<double> s = 0.0;
    for (int j = 0; j < 8; ++j) {
        s += gl16_w[j] * (f(mid + half * gl16_x[j]) + f(mid - half * gl16_x[j]));
    }
    return s * half;
}

// Recursive refinement: accept when the two-half estimate stabilizes.
std::complex<double> refine(const Integrand& f, double lo, double hi,
                            std::complex<double> whole, double tol, int depth,
                            double& worst_err) {
    double mid = 0.5 * (lo + hi);
    std::complex<double> left = gl16_panel(f, lo, mid);
    std::complex<double> right = gl16_panel(f, mid, hi);
    double err = std::abs(left + right - whole);
    if (err <= tol || depth >= 24) {
        if (depth >= 24) worst_err = std::max(worst_err, err);
        return left + right;
    }
    return refine(f, lo, mid, left, 0.5 * tol, depth + 1, worst_err) +
           refine(f, mid, hi, right, 0.5 * tol, depth + 1, worst_err);
}

} // namespace

double delta_cutoff(double X, double c) { return std::pow(X, 0.25 - c); }

void ExpSumSpec::validate() const {
    check_exponent(c);
    if (!(X > 0.0)) throw parameter_error("ExpSumSpec: X must be positive");
    if (!(mu > 0.0) || !(mu < 1.0)) throw parameter_error("ExpSumSpec: mu must lie in (0,1)");
    if (residue) {
        if (residue->d == 0 || std::gcd(residue->l, residue->d) != 1)
            throw parameter_error("ExpSumSpec: residue class needs gcd(l, d) = 1");
    }
    if (interval) {
        if (!(interval->lo < interval->hi) || interval->lo < X / 2.0 - 1e-9 ||
            interval->hi > X + 1e-9)
            throw parameter_error("ExpSumSpec: interval J must lie inside (X/2, X]");
    }
}

std::complex<double> exp_sum_primes(const ArithmeticTables& tables, const ExpSumSpec& spec) {
    spec.validate();
    if (spec.X > 1e8) throw capacity_error("exp_sum_primes: X exceeds the 1e8 sieve cap");
    if (spec.X > double(tables.limit))
        throw capacity_error("exp_sum_primes: X exceeds the sieved limit");

    Interval J = spec.range();
    KahanComplex acc;
    std::size_t i0 = tables.prime_index_above(J.lo);
    for (std::size_t i = i0; i < tables.primes.size(); ++i) {
        std::uint64_t p = tables.primes[i];
        if (double(p) > J.hi) break;
        if (spec.residue && p % spec.residue->d != spec.residue->l % spec.residue->d) continue;
        double lp = std::log(double(p));
        acc.add(lp * e_of(spec.t * std::pow(double(p), spec.c)));
    }
    return acc.value();
}

std::complex<double> exp_sum_lambda_chi(const ArithmeticTables& tables, double y,
                                        const DirichletCharacter& chi, double t,
                                        double c, double mu) {
    check_exponent(c);
    if (!(mu > 0.0) || !(mu < 1.0)) throw parameter_error("exp_sum_lambda_chi: mu in (0,1)");
    if (y > double(tables.limit))
        throw capacity_error("exp_sum_lambda_chi: y exceeds the sieved limit");

    KahanComplex acc;
    std::uint64_t n_lo = std::max<std::uint64_t>(2, std::uint64_t(std::floor(mu * y)));
    std::uint64_t n_hi = std::uint64_t(std::floor(y));
    for (std::uint64_t n = n_lo; n <= n_hi; ++n) {
        if (double(n) <= mu * y) continue;
        double lam = tables.lambda_log[n];
        if (lam == 0.0) continue;
        std::complex<double> ch = chi(n);
        if (ch == std::complex<double>{0.0, 0.0}) continue;
        acc.add(lam * ch * e_of(t * std::pow(double(n), c)));
    }
    return acc.value();
}

std::complex<double> osc_integral(double lo, double hi, double c, double t,
                                  double beta, double gamma, double tol) {
    if (!(lo > 0.0) || !(lo < hi)) throw parameter_error("osc_integral: need 0 < lo < hi");

    Integrand f{c, t, beta, gamma};
    double abs_tol = tol * (hi - lo);

    // Panels no wider than half the local oscillation period
    // 1 / (c |t| y^{c-1} + |gamma| / (2 pi y)).  The frequency is monotone
    // for c > 1, so counting panels at the worst endpoint is safe.
    auto panel_width = [&](double y) {
        double freq = std::abs(t) * c * std::pow(y, c - 1.0) +
                      std::abs(gamma) / (two_pi * y);
        double step = freq > 0.0 ? 0.5 / freq : (hi - lo);
        step = std::min(step, hi - lo);
        return std::max(step, (hi - lo) / 2e7);  // hard cap on panel count
    };
    std::size_t n_panels_est =
        std::size_t(std::ceil((hi - lo) / panel_width(std::max(lo, hi)))) + 1;
    double tol_per = abs_tol / double(n_panels_est);

    KahanComplex total;
    double worst_err = 0.0;
    double y = lo;
    while (y < hi) {
        double y2 = std::min(y + panel_width(y), hi);
        std::complex<double> whole = gl16_panel(f, y, y2);
        total.add(refine(f, y, y2, whole, tol_per, 0, worst_err));
        y = y2;
    }
    if (worst_err > abs_tol)
        throw numeric_error("osc_integral: refinement limit hit", worst_err);
    return total.value();
}

std::complex<double> error_term(const ArithmeticTables& tables, double y, double t,
                                std::uint64_t d, std::uint64_t a_res, double c, double mu) {
    check_exponent(c);
    if (d == 0 || std::gcd(a_res, d) != 1)
        throw parameter_error("error_term: need gcd(a, d) = 1");
    if (y > double(tables.limit)) throw capacity_error("error_term: y exceeds the sieved limit");
    if (!(mu > 0.0) || !(mu < 1.0)) throw parameter_error("error_term: mu in (0,1)");

    KahanComplex sum;
    std::uint64_t n_hi = std::uint64_t(std::floor(y));
    for (std::uint64_t n = 2; n <= n_hi; ++n) {
        if (double(n) <= mu * y) continue;
        if (n % d != a_res % d) continue;
        double lam = tables.lambda_log[n];
        if (lam == 0.0) continue;
        sum.add(lam * e_of(t * std::pow(double(n), c)));
    }
    double phi_d = d <= tables.limit ? double(tables.phi[d]) : 0.0;
    if (phi_d == 0.0) {
        // d beyond the table: direct totient
        std::uint64_t m = d, r = d;
        for (std::uint64_t p = 2; p * p <= m; ++p)
            if (m % p == 0) {
                r -= r / p;
                while (m % p == 0) m /= p;
            }
        if (m > 1) r -= r / m;
        phi_d = double(r);
    }
    std::complex<double> integral =
        (mu * y < y) ? osc_integral(mu * y, y, c, t, 1.0, 0.0, 1e-10) : 0.0;
    return sum.value() - integral / phi_d;
}

MomentResult second_moment(const ArithmeticTables& tables, MomentKind kind,
                           const ExpSumSpec& spec, double window_lo, double window_hi,
                           unsigned threads) {
    spec.validate();
    if (!(window_lo < window_hi)) throw parameter_error("second_moment: empty window");
    if (spec.X > double(tables.limit))
        throw capacity_error("second_moment: X exceeds the sieved limit");

    double X = spec.X, c = spec.c;
    Interval J = spec.range();

    // Precompute (p^c, log p) over the block once; the grid loop is then
    // pure sin/cos work.
    std::vector<double> pc, lp;
    if (kind != MomentKind::I_over_Delta) {
        std::size_t i0 = tables.prime_index_above(J.lo);
        for (std::size_t i = i0; i < tables.primes.size(); ++i) {
            std::uint64_t p = tables.primes[i];
            if (double(p) > J.hi) break;
            if (kind == MomentKind::S_ld_over_Delta && spec.residue &&
                p % spec.residue->d != spec.residue->l % spec.residue->d)
                continue;
            pc.push_back(std::pow(double(p), c));
            lp.push_back(std::log(double(p)));
        }
    }

    // >= 64 grid points per oscillation of the slowest factor e(t p_min^c).
    double slow = std::pow(std::max(J.lo, 2.0), c);
    double step = std::min(1.0 / (64.0 * slow), (window_hi - window_lo) / 64.0);
    std::size_t n_pts = std::size_t(std::ceil((window_hi - window_lo) / step)) + 1;
    step = (window_hi - window_lo) / double(n_pts - 1);

    auto integrand = [&](double t) -> double {
        if (kind == MomentKind::I_over_Delta) {
            std::complex<double> I = osc_integral(J.lo, J.hi, c, t, 1.0, 0.0, 1e-9);
            return std::norm(I);
        }
        KahanComplex s;
        for (std::size_t i = 0; i < pc.size(); ++i) s.add(lp[i] * e_of(t * pc[i]));
        return std::norm(s.value());
    };

    // Trapezoid over the uniform grid, chunked deterministically.
    auto parts = run_chunked<double>(n_pts, 4096, threads, [&](std::size_t b, std::size_t e) {
        KahanSum acc;
        for (std::size_t i = b; i < e; ++i) {
            double t = window_lo + double(i) * step;
            double w = (i == 0 || i == n_pts - 1) ? 0.5 : 1.0;
            acc.add(w * integrand(t));
        }
        return acc.value();
    });
    KahanSum total;
    for (double v : parts) total.add(v);
    double moment = total.value() * step;

    double lg = std::log(X);
    double comparison = 0.0;
    switch (kind) {
        case MomentKind::S_over_Delta: comparison = std::pow(X, 2.0 - c) * lg * lg * lg; break;
        case MomentKind::I_over_Delta: comparison = std::pow(X, 2.0 - c) * lg; break;
        case MomentKind::S_unit_interval: comparison = X * lg * lg * lg; break;
        case MomentKind::S_ld_over_Delta: {
            double d = spec.residue ? double(spec.residue->d) : 1.0;
            comparison = std::pow(X, 2.0 - c) * lg * lg * lg / (d * d);
            break;
        }
    }
    return {moment, comparison};
}

} // namespace pslp
