#include "pslp/decomp.hpp"

#include <cmath>
#include <numbers>

#include "pslp/accum.hpp"
#include "pslp/errors.hpp"

namespace pslp {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

std::complex<double> e_of(double x) {
    return {std::cos(two_pi * x), std::sin(two_pi * x)};
}

} // namespace

std::vector<double> vaughan_c_coeffs(const ArithmeticTables& tables, double u,
                                     std::uint64_t dmax) {
    std::vector<double> cd(dmax + 1, 0.0);
    std::uint64_t u_int = std::uint64_t(std::floor(u));
    for (std::uint64_t m = 1; m <= u_int && m <= dmax; ++m) {
        if (tables.mu[m] == 0) continue;
        double mum = double(tables.mu[m]);
        for (std::uint64_t n = 2; n <= u_int && m * n <= dmax; ++n) {
            double lam = tables.lambda_log[n];
            if (lam != 0.0) cd[m * n] += mum * lam;
        }
    }
    return cd;
}

std::vector<double> vaughan_a_coeffs(const ArithmeticTables& tables, double u,
                                     std::uint64_t dmax) {
    std::vector<double> ad(dmax + 1, 0.0);
    std::uint64_t u_int = std::uint64_t(std::floor(u));
    for (std::uint64_t m = 1; m <= u_int && m <= dmax; ++m) {
        if (tables.mu[m] == 0) continue;
        double mum = double(tables.mu[m]);
        for (std::uint64_t d = m; d <= dmax; d += m) ad[d] += mum;
    }
    return ad;
}

VaughanSplit vaughan_split(const ArithmeticTables& tables, double y, double u,
                           const DirichletCharacter& chi, double t, double c) {
    if (!(u > 0.0) || u * u > y)
        throw parameter_error("vaughan_split: need 0 < u with u^2 <= y");
    if (y > double(tables.limit))
        throw capacity_error("vaughan_split: y exceeds the sieved limit");

    std::uint64_t y_int = std::uint64_t(std::floor(y));
    std::uint64_t u_int = std::uint64_t(std::floor(u));
    std::uint64_t u2_int = std::uint64_t(std::floor(u * u));

    // e(t (dl)^c) evaluated through the integer product, so all four sums
    // and Psi1 share bit-identical phases.
    auto phase = [&](std::uint64_t n) { return e_of(t * std::pow(double(n), c)); };

    auto cd = vaughan_c_coeffs(tables, u, u2_int);

    KahanComplex U1, U2, U3, U4, P1;

    // U1 = sum_{d <= u} mu(d) sum_{u < dl <= y} chi(dl) e(t (dl)^c) log l
    for (std::uint64_t d = 1; d <= u_int; ++d) {
        if (tables.mu[d] == 0) continue;
        double mud = double(tables.mu[d]);
        for (std::uint64_t l = 1; d * l <= y_int; ++l) {
            std::uint64_t n = d * l;
            if (double(n) <= u) continue;
            std::complex<double> ch = chi(n);
            if (ch == std::complex<double>{0.0, 0.0}) continue;
            U1.add(mud * std::log(double(l)) * ch * phase(n));
        }
    }

    // U2, U3: c(d)-weighted, split at d = u
    for (std::uint64_t d = 2; d <= u2_int; ++d) {
        double cdv = cd[d];
        if (cdv == 0.0) continue;
        KahanComplex& dst = (double(d) <= u) ? U2 : U3;
        for (std::uint64_t l = 1; d * l <= y_int; ++l) {
            std::uint64_t n = d * l;
            if (double(n) <= u) continue;
            std::complex<double> ch = chi(n);
            if (ch == std::complex<double>{0.0, 0.0}) continue;
            dst.add(cdv * ch * phase(n));
        }
    }

    // U4 = sum_{d > u, l > u, dl <= y} a(d) Lambda(l) chi(dl) e(t (dl)^c)
    std::uint64_t d_hi = y_int / (u_int + 1);
    auto ad = vaughan_a_coeffs(tables, u, d_hi);
    for (std::uint64_t l = u_int + 1; l <= y_int; ++l) {
        double lam = tables.lambda_log[l];
        if (lam == 0.0) continue;
        for (std::uint64_t d = u_int + 1; d * l <= y_int; ++d) {
            double adv = ad[d];
            if (adv == 0.0) continue;
            std::uint64_t n = d * l;
            std::complex<double> ch = chi(n);
            if (ch == std::complex<double>{0.0, 0.0}) continue;
            U4.add(adv * lam * ch * phase(n));
        }
    }

    // Psi1 directly
    for (std::uint64_t n = u_int + 1; n <= y_int; ++n) {
        double lam = tables.lambda_log[n];
        if (lam == 0.0) continue;
        std::complex<double> ch = chi(n);
        if (ch == std::complex<double>{0.0, 0.0}) continue;
        P1.add(lam * ch * phase(n));
    }

    return {U1.value(), U2.value(), U3.value(), U4.value(), P1.value()};
}

BlockRange dyadic_block(double M) {
    std::uint64_t first = std::uint64_t(std::floor(M / 2.0)) + 1;
    std::uint64_t last = std::uint64_t(std::floor(M));
    return {first, last};
}

std::complex<double> type1_sum(const BilinearSpec& spec) {
    BlockRange mb = dyadic_block(spec.M), lb = dyadic_block(spec.L);
    if (spec.a.size() != mb.count())
        throw parameter_error("type1_sum: coefficient length must match the m-block");

    KahanComplex acc;
    for (std::uint64_t m = mb.first; m <= mb.last; ++m) {
        std::complex<double> am = spec.a[m - mb.first];
        if (am == std::complex<double>{0.0, 0.0}) continue;
        double mc = std::pow(double(m), spec.c);
        KahanComplex inner;
        for (std::uint64_t l = lb.first; l <= lb.last; ++l)
            inner.add(e_of(spec.t * mc * std::pow(double(l), spec.c)));
        acc.add(am * inner.value());
    }
    return acc.value();
}

std::complex<double> type2_sum(const BilinearSpec& spec) {
    BlockRange mb = dyadic_block(spec.M), lb = dyadic_block(spec.L);
    if (spec.a.size() != mb.count() || spec.b.size() != lb.count())
        throw parameter_error("type2_sum: coefficient lengths must match both blocks");

    KahanComplex acc;
    for (std::uint64_t m = mb.first; m <= mb.last; ++m) {
        std::complex<double> am = spec.a[m - mb.first];
        if (am == std::complex<double>{0.0, 0.0}) continue;
        double mc = std::pow(double(m), spec.c);
        KahanComplex inner;
        for (std::uint64_t l = lb.first; l <= lb.last; ++l) {
            std::complex<double> bl = spec.b[l - lb.first];
            if (bl == std::complex<double>{0.0, 0.0}) continue;
            inner.add(bl * e_of(spec.t * mc * std::pow(double(l), spec.c)));
        }
        acc.add(am * inner.value());
    }
    return acc.value();
}

double bilinear_comparison(double M, double L) { return std::pow(M * L, 373.0 / 400.0); }

double exponent_pair_bound(double kappa, double lambda, double Y, double Xscale) {
    return std::pow(Y, kappa) * std::pow(Xscale, lambda) + 1.0 / Y;
}

double bilinear_bound_bw(double B, double M, double L, double lam, double th) {
    double nondeg = th * (th - 1.0) * (th - 2.0) * lam * (lam - 1.0) * (th + lam - 2.0) *
                    (th + lam - 3.0) * (th + 2.0 * lam - 3.0) * (2.0 * th + lam - 4.0);
    if (std::abs(nondeg) < 1e-12)
        throw parameter_error("bilinear_bound_bw: degenerate exponents (lam, th)");
    double F = B * std::pow(M, lam) * std::pow(L, th);
    return std::pow(F, 3.0 / 14.0) * std::pow(M, 41.0 / 56.0) * std::pow(L, 29.0 / 56.0) +
           std::pow(F, 1.0 / 5.0) * std::pow(M, 3.0 / 4.0) * std::pow(L, 11.0 / 20.0) +
           std::pow(F, 1.0 / 8.0) * std::pow(M, 13.0 / 16.0) * std::pow(L, 11.0 / 16.0) +
           std::pow(M, 3.0 / 4.0) * L + M * std::pow(L, 3.0 / 4.0) + M * L / F;
}

double bilinear_bound_sw(double F, double M, double L) {
    if (!(F >= 1.0) || !(M >= 1.0) || !(L >= 1.0))
        throw parameter_error("bilinear_bound_sw: need F, M, L >= 1");
    // (F^a M^b L^c)^{1/q} as a product of fractional powers, so large scales
    // cannot overflow intermediates
    auto term = [&](double fa, double mb, double lc, double q) {
        return std::pow(F, fa / q) * std::pow(M, mb / q) * std::pow(L, lc / q);
    };
    return term(4, 31, 34, 42) + term(6, 53, 51, 66) + term(6, 46, 41, 56) +
           term(2, 38, 29, 40) + term(3, 43, 32, 46) + term(1, 9, 6, 10) +
           term(2, 7, 6, 10) + term(1, 6, 6, 8) +
           std::sqrt(M) * L + M * std::sqrt(L) + M * L / std::sqrt(F);
}

HbRegimes hb_regimes(double X) {
    double U = std::pow(X, 0.2);
    double V = std::pow(X, 1.0 / 3.0);
    double Z = std::floor(std::pow(X, 0.4)) + 0.5;
    HbRegimes r;
    r.U = U; r.V = V; r.Z = Z; r.X = X;
    r.x_over_z2u = X / (Z * Z * U);
    r.z_over_u2 = Z / (U * U);
    r.v3_over_x = V * V * V / X;
    r.ordered = 3.0 < U && U < V && V < Z && Z < X;
    return r;
}

} // namespace pslp
