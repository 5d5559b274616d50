#pragma once

#include <cstdint>
#include <vector>

#include "pslp/arith.hpp"
#include "pslp/kernel.hpp"

namespace pslp {

// The parameter stack derived from (N, c, A):
//   X = (N/2)^{1/c},            D = X^{1/2} / (log X)^A,
//   Delta = X^{1/4 - c},        eps = (log log X)^6 / (log X)^{theta0},
//   H = log^2 X / eps.
struct Params {
    double N = 0, c = 0, A = 0;
    double X = 0, D = 0, Delta = 0, eps = 0, H = 0;
    double theta0 = 0;
    bool eps_overridden = false;     // eps replaced by an explicit window
    bool within_theorem_range = false;  // c < 427/400
};

/// Derive the full stack.  N >= 2, 1 < c < 3 (c != 2), A > 0.
Params derive_params(double N, double c, double A);

// One solution of |p1^c + p2^c + p3^c - N| < eps with all three primes in
// (X/2, X].  When the first prime is required to be of the form
// x^2 + y^2 + 1 the witness is stored; otherwise x = y = 0.
struct SolutionRecord {
    std::uint64_t p1, p2, p3;
    std::uint32_t x, y;
    double residual;  // p1^c + p2^c + p3^c - N
};

/// Enumerate solutions in ascending (p1, p2) order, p3 by binary search over
/// the sorted p^c table.  Exhaustive unless `limit` (0 = unlimited) is hit.
std::vector<SolutionRecord> find_solutions(const ArithmeticTables& tables,
                                           const Params& params, bool linnik_only,
                                           std::size_t limit = 0, unsigned threads = 1);

// The weighted counts over ordered prime triples in (X/2, X]^3:
//   gamma  : indicator |p1^c+p2^c+p3^c-N| < eps,   weight r(p1-1) log p1 log p2 log p3
//   gamma0 : smoothing theta(p1^c+p2^c+p3^c-N),    same weight
//   gamma1/2/3 : theta-weighted with r(p1-1) replaced by the chi4-divisor sum
//                over d <= D,  D < d < X/D,  d >= X/D  respectively,
// so that gamma0 = 4 (gamma1 + gamma2 + gamma3) identically.
struct GammaBreakdown {
    double gamma, gamma0, gamma1, gamma2, gamma3;
    Params params;
    SmoothingKernel kernel;
};

/// Compute the breakdown.  Cost guard: X <= 1e5.
GammaBreakdown gamma_weighted(const ArithmeticTables& tables, const Params& params,
                              const SmoothingKernel& kernel, unsigned threads = 1);

struct BinaryCount {
    std::uint64_t count;  // ordered prime pairs in (X0/2, X0]^2 with |p1^c+p2^c-N0| < eps
    double comparison;    // eps N0^{2/c-1} / log^2 N0
};

/// Count solutions of the binary inequality at scale X0 = N0^{1/c}.
BinaryCount binary_count(const ArithmeticTables& tables, double N0, double c, double eps,
                         unsigned threads = 1);

struct SingularSeries {
    double value;       // (pi/4) prod_{p <= P} (1 + chi4(p) / (p (p-1)))
    double tail_bound;  // sum_{p > P} 1/(p(p-1)) < 1/P
};

SingularSeries singular_series(const ArithmeticTables& tables, double cutoff_P);

/// sum_{d <= D} chi4(d) / phi(d); converges to the singular series value.
double chi_phi_sum(const ArithmeticTables& tables, double D);

struct MainTerm {
    double value;       // Phi(X) = int Theta(t) I^3(t) e(-Nt) dt
    double ratio;       // Phi / (eps X^{3-c})
    double truncation;  // |t| cutoff actually used
    double tail_bound;  // certified bound on the discarded tail
};

/// The main-term integral, truncated where the kernel decay bound certifies
/// a relative tail below 1e-6.
MainTerm main_term_integral(const Params& params, const SmoothingKernel& kernel,
                            unsigned threads = 1);

} // namespace pslp
