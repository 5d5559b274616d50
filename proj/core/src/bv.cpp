#include "pslp/bv.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

#include "pslp/accum.hpp"
#include "pslp/errors.hpp"
#include "pslp/oscillatory.hpp"
#include "pslp/parallel.hpp"

namespace pslp {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

std::complex<double> e_of(double x) {
    return {std::cos(two_pi * x), std::sin(two_pi * x)};
}

// Lambda-support points n <= X with their phases, shared by every modulus.
struct LambdaPoint {
    std::uint64_t n;
    double lambda;
    std::complex<double> term;  // Lambda(n) e(t n^c)
};

std::vector<LambdaPoint> lambda_points(const ArithmeticTables& tables, double X,
                                       double t, double c) {
    std::vector<LambdaPoint> pts;
    std::uint64_t n_hi = std::uint64_t(std::floor(X));
    for (std::uint64_t n = 2; n <= n_hi; ++n) {
        double lam = tables.lambda_log[n];
        if (lam == 0.0) continue;
        pts.push_back({n, lam, lam * e_of(t * std::pow(double(n), c))});
    }
    return pts;
}

// max over reduced residues a of |bucket[a] - I/phi(d)|
double residue_max(const std::vector<KahanComplex>& bucket, std::uint64_t d,
                   std::uint64_t phi_d, std::complex<double> integral) {
    std::complex<double> main = integral / double(phi_d);
    double best = 0.0;
    for (std::uint64_t a = 0; a < d; ++a) {
        if (std::gcd(a == 0 ? d : a, d) != 1) continue;
        best = std::max(best, std::abs(bucket[a].value() - main));
    }
    return best;
}

} // namespace

double BvConfig::cutoff() const { return std::sqrt(X) / std::pow(std::log(X), A + 5.0); }

void BvConfig::validate() const {
    if (!(X > 1.0)) throw parameter_error("BvConfig: X must exceed 1");
    if (!(c > 1.0) || !(c < 3.0) || c == 2.0)
        throw parameter_error("BvConfig: exponent must satisfy 1 < c < 3, c != 2");
    if (!(mu > 0.0) || !(mu < 1.0)) throw parameter_error("BvConfig: mu must lie in (0,1)");
    double Delta = delta_cutoff(X, c);
    if (std::abs(t) > Delta * (1.0 + 1e-12))
        throw parameter_error("BvConfig: need |t| <= X^{1/4-c}");
    if (!exact_breakpoints) {
        if (y_grid.empty()) throw parameter_error("BvConfig: y_grid is empty");
        for (double y : y_grid)
            if (!(y > 1.0) || y > X * (1.0 + 1e-12))
                throw parameter_error("BvConfig: y_grid entries must lie in (1, X]");
    }
}

std::vector<double> BvConfig::default_y_grid(double X, int points_per_octave) {
    std::vector<double> g;
    double floor_y = std::max(std::sqrt(X), 10.0);
    double ratio = std::pow(0.5, 1.0 / double(std::max(points_per_octave, 1)));
    for (double y = X; y >= floor_y && y > 2.0; y *= ratio) g.push_back(y);
    if (g.empty()) g.push_back(X);
    return g;
}

BvResult bv_average(const ArithmeticTables& tables, const BvConfig& cfg,
                    unsigned threads, const ProgressFn& progress) {
    cfg.validate();
    if (cfg.X > 1e6) throw capacity_error("bv_average: X exceeds the 1e6 runtime guard");
    if (cfg.X > double(tables.limit))
        throw capacity_error("bv_average: X exceeds the sieved limit");
    if (cfg.exact_breakpoints && cfg.X > 1e4)
        throw capacity_error("bv_average: exact breakpoint mode is limited to X <= 1e4");

    double comparison = cfg.X / std::pow(std::log(cfg.X), cfg.A);
    double cut = cfg.cutoff();
    if (cut < 1.0) return {0.0, comparison, true, 0};
    std::uint64_t d_max = std::uint64_t(std::floor(cut));

    auto pts = lambda_points(tables, cfg.X, cfg.t, cfg.c);

    // Inner-max sample points and the integral at each of them, shared by
    // every modulus.
    struct Sample {
        double y;
        std::size_t pt_lo, pt_hi;  // points with mu*y < n <= y
        std::complex<double> integral;
    };
    std::vector<Sample> samples;
    {
        std::vector<double> ys;
        if (cfg.exact_breakpoints) {
            for (const auto& pt : pts) {
                ys.push_back(double(pt.n));
                double leave = double(pt.n) / cfg.mu;
                if (leave <= cfg.X) ys.push_back(leave);
            }
            ys.push_back(cfg.X);
        } else {
            ys = cfg.y_grid;
        }
        std::sort(ys.begin(), ys.end());
        ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
        samples.reserve(ys.size());
        for (double y : ys) {
            Sample s;
            s.y = y;
            auto lo_it = std::upper_bound(pts.begin(), pts.end(), cfg.mu * y,
                                          [](double v, const LambdaPoint& p) {
                                              return v < double(p.n);
                                          });
            auto hi_it = std::upper_bound(pts.begin(), pts.end(), y,
                                          [](double v, const LambdaPoint& p) {
                                              return v < double(p.n);
                                          });
            s.pt_lo = std::size_t(lo_it - pts.begin());
            s.pt_hi = std::size_t(hi_it - pts.begin());
            s.integral = (cfg.mu * y < y)
                             ? osc_integral(cfg.mu * y, y, cfg.c, cfg.t, 1.0, 0.0, 1e-10)
                             : std::complex<double>{0.0, 0.0};
            samples.push_back(s);
        }
    }

    std::atomic<std::size_t> done{0};
    auto per_modulus = [&](std::uint64_t d) -> double {
        std::vector<KahanComplex> bucket(d);
        double best = 0.0;
        if (cfg.exact_breakpoints) {
            // Sweep samples in ascending y, maintaining the residue sums
            // incrementally (terms leave the window as exact negated re-adds).
            std::size_t cur_lo = 0, cur_hi = 0;
            for (const auto& s : samples) {
                while (cur_hi < s.pt_hi) {
                    bucket[pts[cur_hi].n % d].add(pts[cur_hi].term);
                    ++cur_hi;
                }
                while (cur_lo < s.pt_lo) {
                    bucket[pts[cur_lo].n % d].add(-pts[cur_lo].term);
                    ++cur_lo;
                }
                best = std::max(best, residue_max(bucket, d, tables.phi[d], s.integral));
            }
        } else {
            for (const auto& s : samples) {
                std::fill(bucket.begin(), bucket.end(), KahanComplex{});
                for (std::size_t i = s.pt_lo; i < s.pt_hi; ++i)
                    bucket[pts[i].n % d].add(pts[i].term);
                best = std::max(best, residue_max(bucket, d, tables.phi[d], s.integral));
            }
        }
        if (progress) progress(done.fetch_add(1) + 1, d_max);
        return best;
    };

    auto parts = run_chunked<double>(d_max, 4, threads, [&](std::size_t b, std::size_t e) {
        KahanSum acc;
        for (std::size_t i = b; i < e; ++i) acc.add(per_modulus(std::uint64_t(i) + 1));
        return acc.value();
    });
    KahanSum sigma;
    for (double v : parts) sigma.add(v);
    return {sigma.value(), comparison, false, d_max};
}

BvReport bv_table(const ArithmeticTables& tables, std::span<const double> Xs,
                  const BvConfig& templ, unsigned threads) {
    if (Xs.empty()) throw parameter_error("bv_table: no X values");
    for (std::size_t i = 1; i < Xs.size(); ++i)
        if (!(Xs[i] > Xs[i - 1])) throw parameter_error("bv_table: Xs must be ascending");

    BvReport rep;
    rep.trend_ok = true;
    double prev_ratio = -1.0;
    bool prev_empty = true;
    for (double X : Xs) {
        BvConfig cfg = templ;
        cfg.X = X;
        if (!cfg.exact_breakpoints) {
            if (templ.y_grid.empty()) {
                cfg.y_grid = BvConfig::default_y_grid(X);
            } else if (templ.X > 0.0 && templ.X != X) {
                cfg.y_grid.clear();
                for (double y : templ.y_grid) cfg.y_grid.push_back(y * X / templ.X);
            }
        }
        // keep |t| admissible at this scale
        double Delta = delta_cutoff(X, cfg.c);
        if (std::abs(cfg.t) > Delta) cfg.t = (cfg.t < 0 ? -Delta : Delta);

        BvResult r = bv_average(tables, cfg, threads);
        double ratio = r.comparison > 0.0 ? r.sigma / r.comparison : 0.0;
        rep.rows.push_back({X, r.sigma, r.comparison, ratio, r.empty_range, r.d_max});

        if (!r.empty_range && !prev_empty && prev_ratio >= 0.0 &&
            ratio > 1.5 * prev_ratio)
            rep.trend_ok = false;
        prev_ratio = ratio;
        prev_empty = r.empty_range;
    }
    return rep;
}

} // namespace pslp
