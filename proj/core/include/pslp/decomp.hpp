#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "pslp/arith.hpp"

namespace pslp {

// The four pieces of the Vaughan decomposition of
//   Psi1(y, chi, t) = sum_{u < n <= y} Lambda(n) chi(n) e(t n^c),
// with the concrete coefficients
//   c(d) = sum_{mn = d, m <= u, n <= u} mu(m) Lambda(n),
//   a(d) = sum_{m | d, m <= u} mu(m),
// under which  U1 - U2 - U3 - U4 = Psi1  holds exactly.
struct VaughanSplit {
    std::complex<double> u1, u2, u3, u4;
    std::complex<double> psi1;

    std::complex<double> residual() const { return u1 - u2 - u3 - u4 - psi1; }
};

/// Evaluate the decomposition.  Requires u^2 <= y <= sieve limit.
VaughanSplit vaughan_split(const ArithmeticTables& tables, double y, double u,
                           const DirichletCharacter& chi, double t, double c);

/// c(d) for 1 <= d <= dmax (index d).  |c(d)| <= log d.
std::vector<double> vaughan_c_coeffs(const ArithmeticTables& tables, double u,
                                     std::uint64_t dmax);
/// a(d) for 1 <= d <= dmax (index d).  |a(d)| <= tau(d).
std::vector<double> vaughan_a_coeffs(const ArithmeticTables& tables, double u,
                                     std::uint64_t dmax);

/// Integers m with m ~ M, i.e. m in (M/2, M].
struct BlockRange {
    std::uint64_t first, last;  // inclusive; first > last means empty
    std::uint64_t count() const { return last >= first ? last - first + 1 : 0; }
};
BlockRange dyadic_block(double M);

// One bilinear sum instance over dyadic blocks m ~ M, l ~ L:
//   Type I :  S_I  = sum_m a(m) sum_l e(t m^c l^c)
//   Type II:  S_II = sum_m a(m) sum_l b(l) e(t m^c l^c)
// Coefficient vectors are indexed against the block ranges, a[i] belonging
// to m = dyadic_block(M).first + i (likewise b over l ~ L).
struct BilinearSpec {
    double M, L;
    double c, t;
    std::vector<std::complex<double>> a;
    std::vector<std::complex<double>> b;  // empty for Type I
};

std::complex<double> type1_sum(const BilinearSpec& spec);
std::complex<double> type2_sum(const BilinearSpec& spec);

/// The comparison magnitude X^{373/400} with X = M L.
double bilinear_comparison(double M, double L);

/// Exponent-pair bound  Y^kappa X^lambda + 1/Y.
double exponent_pair_bound(double kappa, double lambda, double Y, double Xscale);

/// Six-term Type I bound with F = B M^lam L^th (eta slack not included).
/// Throws if the exponent non-degeneracy condition fails.
double bilinear_bound_bw(double B, double M, double L, double lam, double th);

/// Eleven-term Type II bound in terms of F, M, L >= 1 (eta slack excluded).
double bilinear_bound_sw(double F, double M, double L);

// Regime check for the three-scale decomposition parameters
// U = X^{1/5}, V = X^{1/3}, Z = floor(X^{2/5}) + 1/2: the constraints
// X >~ Z^2 U, Z >~ U^2, V^3 >~ X hold within a constant factor.
struct HbRegimes {
    double U, V, Z, X;
    double x_over_z2u;  // X / (Z^2 U)
    double z_over_u2;   // Z / U^2
    double v3_over_x;   // V^3 / X
    bool ordered;       // 3 < U < V < Z < X

    bool ok(double slack = 0.5) const {
        return ordered && x_over_z2u >= slack && z_over_u2 >= slack && v3_over_x >= slack;
    }
};
HbRegimes hb_regimes(double X);

} // namespace pslp
