#include "pslp/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "pslp/accum.hpp"
#include "pslp/constants.hpp"
#include "pslp/errors.hpp"
#include "pslp/linnik.hpp"
#include "pslp/oscillatory.hpp"
#include "pslp/parallel.hpp"

namespace pslp {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// The Gamma identity is checked at an absolute 1e-8, while the sums
// themselves can reach 1e8; extended precision in the accumulators keeps
// the grouping difference between r-weighted and split-weighted sums below
// that threshold.
struct KahanLD {
    long double s = 0.0L, c = 0.0L;
    void add(long double x) {
        long double y = x - c;
        long double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    double value() const { return double(s); }
};

struct PrimeBlock {
    std::vector<std::uint64_t> p;
    std::vector<double> pc;  // p^c, ascending
    std::vector<double> lp;  // log p
};

PrimeBlock prime_block(const ArithmeticTables& tables, double lo, double hi, double c) {
    PrimeBlock b;
    std::size_t i0 = tables.prime_index_above(lo);
    for (std::size_t i = i0; i < tables.primes.size(); ++i) {
        std::uint64_t q = tables.primes[i];
        if (double(q) > hi) break;
        b.p.push_back(q);
        b.pc.push_back(std::pow(double(q), c));
        b.lp.push_back(std::log(double(q)));
    }
    return b;
}

// Indices j with lo_val < pc[j] < hi_val, widened by a few ulps and meant to
// be re-filtered with the exact residual test.
std::pair<std::size_t, std::size_t> window(const std::vector<double>& pc, double lo_val,
                                           double hi_val, double slack) {
    auto lo_it = std::lower_bound(pc.begin(), pc.end(), lo_val - slack);
    auto hi_it = std::upper_bound(pc.begin(), pc.end(), hi_val + slack);
    return {std::size_t(lo_it - pc.begin()), std::size_t(hi_it - pc.begin())};
}

} // namespace

Params derive_params(double N, double c, double A) {
    if (!(c > 1.0) || !(c < 3.0) || c == 2.0)
        throw parameter_error("derive_params: exponent must satisfy 1 < c < 3, c != 2");
    if (!(N >= 2.0)) throw parameter_error("derive_params: N must be >= 2");
    if (!(A > 0.0)) throw parameter_error("derive_params: A must be positive");

    Params pr;
    pr.N = N;
    pr.c = c;
    pr.A = A;
    pr.X = std::pow(N / 2.0, 1.0 / c);
    double lg = std::log(pr.X);
    pr.theta0 = theta0();
    pr.D = std::sqrt(pr.X) / std::pow(lg, A);
    pr.Delta = std::pow(pr.X, 0.25 - c);
    pr.eps = std::pow(std::log(lg), 6.0) / std::pow(lg, pr.theta0);
    pr.H = lg * lg / pr.eps;
    pr.within_theorem_range = c < theorem_c_max;
    return pr;
}

std::vector<SolutionRecord> find_solutions(const ArithmeticTables& tables,
                                           const Params& params, bool linnik_only,
                                           std::size_t limit, unsigned threads) {
    if (!(params.eps > 0.0))
        throw parameter_error("find_solutions: eps must be positive");
    if (params.X > 1e6) throw capacity_error("find_solutions: X exceeds the 1e6 desk guard");
    if (params.X > double(tables.limit))
        throw capacity_error("find_solutions: X exceeds the sieved limit");

    PrimeBlock blk = prime_block(tables, params.X / 2.0, params.X, params.c);
    const double N = params.N, eps = params.eps;
    const double slack = 1e-9 * (std::abs(N) + 1.0);

    auto parts = run_chunked<std::vector<SolutionRecord>>(
        blk.p.size(), 64, threads, [&](std::size_t b, std::size_t e) {
            std::vector<SolutionRecord> local;
            for (std::size_t i = b; i < e; ++i) {
                std::uint32_t wx = 0, wy = 0;
                if (linnik_only) {
                    auto w = two_square_witness(blk.p[i] - 1);
                    if (!w) continue;
                    wx = w->first;
                    wy = w->second;
                }
                for (std::size_t j = 0; j < blk.p.size(); ++j) {
                    double base = blk.pc[i] + blk.pc[j];
                    auto [k0, k1] = window(blk.pc, N - eps - base, N + eps - base, slack);
                    for (std::size_t k = k0; k < k1; ++k) {
                        double res = blk.pc[i] + blk.pc[j] + blk.pc[k] - N;
                        if (!(std::abs(res) < eps)) continue;
                        local.push_back({blk.p[i], blk.p[j], blk.p[k], wx, wy, res});
                    }
                }
            }
            return local;
        });

    std::vector<SolutionRecord> out;
    for (auto& part : parts) {
        for (auto& rec : part) {
            if (limit != 0 && out.size() >= limit) return out;
            out.push_back(rec);
        }
    }
    return out;
}

GammaBreakdown gamma_weighted(const ArithmeticTables& tables, const Params& params,
                              const SmoothingKernel& kernel, unsigned threads) {
    if (params.X > 1e5) throw capacity_error("gamma_weighted: X exceeds the 1e5 cost guard");
    if (params.X > double(tables.limit))
        throw capacity_error("gamma_weighted: X exceeds the sieved limit");
    if (kernel.support_edge() > params.eps * (1.0 + 1e-12))
        throw parameter_error("gamma_weighted: kernel support must lie inside the eps window");

    PrimeBlock blk = prime_block(tables, params.X / 2.0, params.X, params.c);
    const double N = params.N, eps = params.eps;
    const double slack = 1e-9 * (std::abs(N) + 1.0);
    const double D = params.D, XD = params.X / params.D;

    struct Partial {
        KahanLD gamma, gamma0, gamma1, gamma2, gamma3;
    };

    auto parts = run_chunked<Partial>(
        blk.p.size(), 16, threads, [&](std::size_t b, std::size_t e) {
            Partial acc;
            for (std::size_t i = b; i < e; ++i) {
                // chi4-divisor split of p1 - 1 over d <= D, D < d < X/D, d >= X/D
                std::int64_t s1 = 0, s2 = 0, s3 = 0;
                for (std::uint64_t d : tables.divisors(blk.p[i] - 1)) {
                    int ch = chi4(std::int64_t(d));
                    if (ch == 0) continue;
                    if (double(d) <= D) s1 += ch;
                    else if (double(d) < XD) s2 += ch;
                    else s3 += ch;
                }
                std::int64_t r = 4 * (s1 + s2 + s3);

                // shared inner double sum over (p2, p3)
                long double s_ind = 0.0L, s_th = 0.0L;
                for (std::size_t j = 0; j < blk.p.size(); ++j) {
                    double base = blk.pc[i] + blk.pc[j];
                    auto [k0, k1] = window(blk.pc, N - eps - base, N + eps - base, slack);
                    for (std::size_t k = k0; k < k1; ++k) {
                        double w = blk.pc[i] + blk.pc[j] + blk.pc[k] - N;
                        if (!(std::abs(w) < eps)) continue;
                        double pair_w = blk.lp[j] * blk.lp[k];
                        s_ind += pair_w;
                        s_th += (long double)(pair_w * kernel.theta(w));
                    }
                }
                long double w1 = (long double)blk.lp[i];
                acc.gamma.add((long double)r * w1 * s_ind);
                acc.gamma0.add((long double)r * w1 * s_th);
                acc.gamma1.add((long double)s1 * w1 * s_th);
                acc.gamma2.add((long double)s2 * w1 * s_th);
                acc.gamma3.add((long double)s3 * w1 * s_th);
            }
            return acc;
        });

    KahanLD g, g0, g1, g2, g3;
    for (auto& p : parts) {
        g.add(p.gamma.s);
        g0.add(p.gamma0.s);
        g1.add(p.gamma1.s);
        g2.add(p.gamma2.s);
        g3.add(p.gamma3.s);
    }
    return {g.value(), g0.value(), g1.value(), g2.value(), g3.value(), params, kernel};
}

BinaryCount binary_count(const ArithmeticTables& tables, double N0, double c, double eps,
                         unsigned threads) {
    if (!(c > 1.0) || !(c < 3.0) || c == 2.0)
        throw parameter_error("binary_count: exponent must satisfy 1 < c < 3, c != 2");
    if (eps < 0.0) throw parameter_error("binary_count: eps must be nonnegative");
    double X0 = std::pow(N0, 1.0 / c);
    if (X0 > 1e6) throw capacity_error("binary_count: X0 exceeds the 1e6 desk guard");
    if (X0 > double(tables.limit))
        throw capacity_error("binary_count: X0 exceeds the sieved limit");

    PrimeBlock blk = prime_block(tables, X0 / 2.0, X0, c);
    const double slack = 1e-9 * (std::abs(N0) + 1.0);

    auto parts = run_chunked<std::uint64_t>(
        blk.p.size(), 256, threads, [&](std::size_t b, std::size_t e) {
            std::uint64_t cnt = 0;
            for (std::size_t i = b; i < e; ++i) {
                auto [k0, k1] =
                    window(blk.pc, N0 - eps - blk.pc[i], N0 + eps - blk.pc[i], slack);
                for (std::size_t k = k0; k < k1; ++k)
                    if (std::abs(blk.pc[i] + blk.pc[k] - N0) < eps) ++cnt;
            }
            return cnt;
        });
    std::uint64_t count = 0;
    for (auto v : parts) count += v;

    double lgN = std::log(N0);
    double comparison = eps * std::pow(N0, 2.0 / c - 1.0) / (lgN * lgN);
    return {count, comparison};
}

SingularSeries singular_series(const ArithmeticTables& tables, double cutoff_P) {
    if (cutoff_P > double(tables.limit))
        throw capacity_error("singular_series: cutoff exceeds the sieved limit");
    long double prod = 1.0L;
    for (std::uint64_t p : tables.primes) {
        if (double(p) > cutoff_P) break;
        int ch = chi4(std::int64_t(p));
        if (ch == 0) continue;
        prod *= 1.0L + (long double)ch / ((long double)p * (long double)(p - 1));
    }
    double value = double((long double)(std::numbers::pi / 4.0) * prod);
    return {value, cutoff_P >= 2.0 ? 1.0 / cutoff_P : 1.0};
}

double chi_phi_sum(const ArithmeticTables& tables, double D) {
    if (D > double(tables.limit))
        throw capacity_error("chi_phi_sum: D exceeds the sieved limit");
    KahanSum s;
    std::uint64_t d_hi = std::uint64_t(std::floor(D));
    for (std::uint64_t d = 1; d <= d_hi; d += 2) {
        int ch = chi4(std::int64_t(d));
        s.add(double(ch) / double(tables.phi[d]));
    }
    return s.value();
}

namespace {

// Upper bound on  int_T^inf |Theta(t)| |I(t)|^3 dt  from the kernel decay
// bound and the first-derivative bound |I(t)| <= 3 / (2 pi c t (X/2)^{c-1}).
double phi_tail_bound(const SmoothingKernel& kernel, double X, double c, double T) {
    double kappa = 3.0 / (two_pi * c * std::pow(X / 2.0, c - 1.0));
    auto integrand = [&](double t) {
        double Ib = std::min(X / 2.0, kappa / t);
        return kernel.fourier_bound(t) * Ib * Ib * Ib;
    };
    // log-spaced upper Riemann sum; both factors decrease in t
    double total = 0.0, t = T;
    const double step = 1.12;
    for (int i = 0; i < 4000; ++i) {
        double t2 = t * step;
        double val = integrand(t) * (t2 - t);
        total += val;
        t = t2;
        if (val < 1e-16 * total && i > 32) break;
    }
    // beyond t: integrand decays faster than t^-4
    total += integrand(t) * t / 3.0;
    return total;
}

} // namespace

MainTerm main_term_integral(const Params& params, const SmoothingKernel& kernel,
                            unsigned threads) {
    if (params.X > 1e6) throw capacity_error("main_term_integral: X exceeds the 1e6 guard");
    if (!(params.eps > 0.0)) throw parameter_error("main_term_integral: eps must be positive");

    const double X = params.X, c = params.c, N = params.N;
    const double fmax = 1.05 * std::pow(X, c);  // largest component frequency of I^3 e(-Nt)
    const double panel_w = 8.0 / (two_pi * fmax);

    // Gauss-Legendre 16 on [0, T]; Phi = 2 Re int_0^T Theta(t) I^3(t) e(-Nt) dt.
    static const double gx[8] = {
        0.09501250983763745, 0.28160355077925892, 0.45801677765722737, 0.61787624440264377,
        0.75540440835500300, 0.86563120238783176, 0.94457502307323260, 0.98940093499164994};
    static const double gw[8] = {
        0.18945061045506859, 0.18260341504492361, 0.16915651939500262, 0.14959598881657676,
        0.12462897125553403, 0.09515851168249259, 0.06225352393864771, 0.02715245941175404};

    auto node_value = [&](double t) -> std::complex<double> {
        std::complex<double> I = osc_integral(X / 2.0, X, c, t, 1.0, 0.0, 1e-7);
        double Th = kernel.theta_hat(t);
        double ph = -two_pi * N * t;
        return Th * I * I * I * std::complex<double>{std::cos(ph), std::sin(ph)};
    };

    auto integrate_span = [&](double lo, double hi) -> double {
        std::size_t n_panels = std::size_t(std::ceil((hi - lo) / panel_w));
        double w = (hi - lo) / double(n_panels);
        auto parts = run_chunked<double>(
            n_panels, 64, threads, [&](std::size_t b, std::size_t e) {
                KahanSum acc;
                for (std::size_t i = b; i < e; ++i) {
                    double mid = lo + (double(i) + 0.5) * w, half = 0.5 * w;
                    double panel = 0.0;
                    for (int j = 0; j < 8; ++j) {
                        panel += gw[j] * (node_value(mid + half * gx[j]).real() +
                                          node_value(mid - half * gx[j]).real());
                    }
                    acc.add(panel * half);
                }
                return acc.value();
            });
        KahanSum s;
        for (double v : parts) s.add(v);
        return s.value();
    };

    // Start near the width of the I^3 concentration and extend until the
    // certified tail drops below 1e-6 of the running value.
    double T = 32.0 / std::pow(X, c);
    double phi = 2.0 * integrate_span(0.0, T);
    double tail = phi_tail_bound(kernel, X, c, T);
    int rounds = 0;
    while (tail > 1e-6 * std::abs(phi) && rounds < 24) {
        double T2 = 2.0 * T;
        phi += 2.0 * integrate_span(T, T2);
        T = T2;
        tail = phi_tail_bound(kernel, X, c, T);
        ++rounds;
    }
    if (tail > 1e-6 * std::abs(phi))
        throw numeric_error("main_term_integral: tail bound did not certify", tail);

    double comparison = params.eps * std::pow(X, 3.0 - c);
    return {phi, phi / comparison, T, tail};
}

} // namespace pslp
