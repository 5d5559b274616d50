#pragma once

#include <complex>
#include <cstdint>
#include <optional>

#include "pslp/arith.hpp"

namespace pslp {

/// Half-open interval (lo, hi].
struct Interval {
    double lo, hi;
};

/// Residue class l (mod d), gcd(l, d) = 1.
struct Residue {
    std::uint64_t l, d;
};

// Parameters identifying one exponential sum over primes: scale X with the
// default range (X/2, X], exponent 1 < c < 3 (c != 2), frequency t, optional
// residue class and optional sub-interval J of (X/2, X].  mu is the lower
// cutoff fraction used by the Lambda-weighted sums.
struct ExpSumSpec {
    double X = 0;
    double c = 1.05;
    double t = 0;
    double mu = 0.5;
    std::optional<Residue> residue;
    std::optional<Interval> interval;

    void validate() const;  // throws parameter_error
    Interval range() const { return interval ? *interval : Interval{X / 2.0, X}; }
};

/// S_{l,d;J}(t) = sum over primes p in J, p == l (mod d), of e(t p^c) log p.
/// With no residue or interval set this is S(t) over (X/2, X].
std::complex<double> exp_sum_primes(const ArithmeticTables& tables, const ExpSumSpec& spec);

/// Psi(y, chi, t) = sum_{mu y < n <= y} Lambda(n) chi(n) e(t n^c).
std::complex<double> exp_sum_lambda_chi(const ArithmeticTables& tables, double y,
                                        const DirichletCharacter& chi, double t,
                                        double c, double mu);

/// Oscillatory Mellin-type integral  int_lo^hi y^{beta-1+i gamma} e(t y^c) dy,
/// absolute error <= tol * (hi - lo).  beta = 1, gamma = 0 gives I_J(t).
std::complex<double> osc_integral(double lo, double hi, double c, double t,
                                  double beta = 1.0, double gamma = 0.0,
                                  double tol = 1e-8);

/// E(y, t, d, a) = sum_{mu y < n <= y, n == a (d)} Lambda(n) e(t n^c)
///                 - (1/phi(d)) int_{mu y}^{y} e(t x^c) dx.
std::complex<double> error_term(const ArithmeticTables& tables, double y, double t,
                                std::uint64_t d, std::uint64_t a_res, double c, double mu);

enum class MomentKind {
    S_over_Delta,     // int |S(t)|^2     vs X^{2-c} log^3 X
    I_over_Delta,     // int |I(t)|^2     vs X^{2-c} log X
    S_unit_interval,  // int_n^{n+1} |S|^2 vs X log^3 X
    S_ld_over_Delta,  // int |S_{l,d;J}|^2 vs X^{2-c} log^3 X / d^2
};

struct MomentResult {
    double moment;
    double comparison;
};

/// Second moment of S or I over [window_lo, window_hi], on a uniform grid
/// dense enough to resolve the fastest difference frequency (>= 64 points
/// per oscillation of the slowest phase factor).  Deterministic for any
/// thread count.
MomentResult second_moment(const ArithmeticTables& tables, MomentKind kind,
                           const ExpSumSpec& spec, double window_lo, double window_hi,
                           unsigned threads = 1);

/// Delta = X^{1/4 - c}, the frequency cutoff paired with scale X.
double delta_cutoff(double X, double c);

} // namespace pslp
