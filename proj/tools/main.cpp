// Command-line front end: every module is exposed as a subcommand with
// machine-readable CSV or JSON output.
//
// Exit codes: 0 success, 2 parameter/usage error, 3 capacity error,
// 4 quadrature failure.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pslp/arith.hpp"
#include "pslp/bv.hpp"
#include "pslp/constants.hpp"
#include "pslp/decomp.hpp"
#include "pslp/errors.hpp"
#include "pslp/kernel.hpp"
#include "pslp/linnik.hpp"
#include "pslp/oscillatory.hpp"
#include "pslp/solver.hpp"

namespace {

// ---------- output helpers ----------

// 17 significant digits: doubles round-trip exactly and output is
// byte-stable across runs and thread counts.
std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}
std::string fmt(std::uint64_t v) { return std::to_string(v); }
std::string fmt(std::int64_t v) { return std::to_string(v); }
std::string fmt(int v) { return std::to_string(v); }
std::string fmt(bool v) { return v ? "1" : "0"; }

using Row = std::vector<std::pair<std::string, std::string>>;

std::string quote_json(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out + "\"";
}

bool looks_numeric(const std::string& s) {
    if (s.empty()) return false;
    char* end = nullptr;
    std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size();
}

std::string to_json(const Row& row, int indent) {
    std::string pad(indent, ' ');
    std::string out = "{";
    for (std::size_t i = 0; i < row.size(); ++i) {
        out += (i ? ",\n" : "\n") + pad + "  " + quote_json(row[i].first) + ": ";
        out += looks_numeric(row[i].second) ? row[i].second : quote_json(row[i].second);
    }
    out += "\n" + pad + "}";
    return out;
}

std::string render(const std::vector<Row>& rows, bool as_json, bool single_object) {
    std::string out;
    if (as_json) {
        if (single_object && rows.size() == 1) {
            out = to_json(rows[0], 0) + "\n";
        } else {
            out = "[";
            for (std::size_t i = 0; i < rows.size(); ++i)
                out += (i ? ",\n" : "\n") + to_json(rows[i], 2);
            out += rows.empty() ? "]\n" : "\n]\n";
        }
    } else {
        if (!rows.empty()) {
            for (std::size_t j = 0; j < rows[0].size(); ++j)
                out += (j ? "," : "") + rows[0][j].first;
            out += "\n";
            for (const auto& r : rows) {
                for (std::size_t j = 0; j < r.size(); ++j)
                    out += (j ? "," : "") + r[j].second;
                out += "\n";
            }
        }
    }
    return out;
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw pslp::parameter_error("cannot open output path: " + path);
    f << text;
}

struct Common {
    std::string out_path;
    std::string format;  // "", "json", "csv"
    unsigned threads = 1;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--out", c.out_path, "Write output to this file instead of stdout");
    cmd->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--threads", c.threads, "Worker threads (deterministic reduction)")
        ->check(CLI::Range(1u, 256u));
}

bool want_json(const Common& c, bool default_json) {
    if (c.format == "json") return true;
    if (c.format == "csv") return false;
    return default_json;
}

std::uint64_t sieve_limit_for(double needed, std::uint64_t explicit_limit) {
    if (explicit_limit) return explicit_limit;
    return std::max<std::uint64_t>(std::uint64_t(std::ceil(needed)) + 1, 100);
}

pslp::DirichletCharacter pick_character(std::uint32_t d, int index) {
    auto chars = pslp::characters_mod(d);
    if (index < 0 || std::size_t(index) >= chars.size())
        throw pslp::parameter_error("character index out of range for modulus " +
                                    std::to_string(d));
    return chars[std::size_t(index)];
}

std::vector<std::complex<double>> make_coeffs(const pslp::ArithmeticTables& tables,
                                              const std::string& kind,
                                              pslp::BlockRange blk) {
    std::vector<std::complex<double>> v;
    v.reserve(blk.count());
    for (std::uint64_t m = blk.first; m <= blk.last; ++m) {
        if (kind == "one") v.emplace_back(1.0, 0.0);
        else if (kind == "mu") v.emplace_back(double(tables.mu[m]), 0.0);
        else if (kind == "lambda") v.emplace_back(tables.lambda_log[m], 0.0);
        else throw pslp::parameter_error("unknown coefficient kind: " + kind);
    }
    return v;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Workbench for the ternary inequality |p1^c+p2^c+p3^c-N| < eps with "
                 "p1 = x^2+y^2+1: sieves, characters, exponential sums, smoothing "
                 "kernels, averaged errors, and the solution/Gamma pipeline"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Flat key=value config file (flags take precedence)");
    app.fallthrough(false);

    // ---- sieve ----
    auto* sieve = app.add_subcommand("sieve", "Build multiplicative-function tables");
    Common sieve_c;
    std::uint64_t sieve_limit = 1000;
    bool sieve_dump = false;
    sieve->add_option("--limit", sieve_limit, "Sieve limit")->required();
    sieve->add_flag("--dump", sieve_dump, "Emit per-n table rows (n,phi,mu,tau,lambda)");
    add_common(sieve, sieve_c);

    // ---- linnik ----
    auto* lin = app.add_subcommand("linnik", "Primes p = x^2+y^2+1 with witnesses");
    Common lin_c;
    double lin_lo = 1, lin_hi = 100;
    std::uint64_t lin_limit = 0;
    lin->add_option("--lo", lin_lo, "Lower bound (exclusive)");
    lin->add_option("--hi", lin_hi, "Upper bound (inclusive)")->required();
    lin->add_option("--sieve-limit", lin_limit, "Override sieve limit");
    add_common(lin, lin_c);

    // ---- kernel ----
    auto* ker = app.add_subcommand("kernel", "Smoothing pair samples and decay bound");
    Common ker_c;
    double ker_a = 0.9, ker_delta = 0.1, ker_eps = 0, ker_X = 1e4;
    int ker_k = 3, ker_samples = 64;
    ker->add_option("--a", ker_a, "Plateau+transition midpoint");
    ker->add_option("--delta", ker_delta, "Transition half-width");
    ker->add_option("--k", ker_k, "Smoothness order");
    ker->add_option("--eps", ker_eps, "Build from the eps defaults instead of (a, delta, k)");
    ker->add_option("--X", ker_X, "Scale for k = floor(log X) when --eps is used");
    ker->add_option("--samples", ker_samples, "Sample count")->check(CLI::PositiveNumber);
    add_common(ker, ker_c);

    // ---- expsum ----
    auto* ex = app.add_subcommand("expsum", "Prime exponential sum vs oscillatory integral");
    Common ex_c;
    std::vector<double> ex_X{1000};
    double ex_cc = 1.05, ex_t = 0.0, ex_mu = 0.5, ex_jlo = 0, ex_jhi = 0;
    std::uint64_t ex_l = 0, ex_d = 0, ex_limit = 0;
    ex->add_option("--X", ex_X, "Scale(s); one output row per value");
    ex->add_option("--c", ex_cc, "Exponent");
    ex->add_option("--t", ex_t, "Frequency");
    ex->add_option("--mu", ex_mu, "Lower cutoff fraction (unused by the sum itself)");
    ex->add_option("--l", ex_l, "Residue l (with --d)");
    ex->add_option("--d", ex_d, "Modulus d (with --l)");
    ex->add_option("--jlo", ex_jlo, "Interval lower end (exclusive)");
    ex->add_option("--jhi", ex_jhi, "Interval upper end (inclusive)");
    ex->add_option("--sieve-limit", ex_limit, "Override sieve limit");
    add_common(ex, ex_c);

    // ---- moments ----
    auto* mo = app.add_subcommand("moments", "Second moments of S or I over a window");
    Common mo_c;
    std::string mo_kind = "s";
    double mo_X = 1000, mo_cc = 1.05, mo_mu = 0.5, mo_n = 0;
    std::uint64_t mo_l = 1, mo_d = 1, mo_limit = 0;
    mo->add_option("--kind", mo_kind, "s | i | unit | sld")
        ->check(CLI::IsMember({"s", "i", "unit", "sld"}));
    mo->add_option("--X", mo_X, "Scale");
    mo->add_option("--c", mo_cc, "Exponent");
    mo->add_option("--mu", mo_mu, "Lower cutoff fraction");
    mo->add_option("--n", mo_n, "Unit-interval start (kind = unit)");
    mo->add_option("--l", mo_l, "Residue l (kind = sld)");
    mo->add_option("--d", mo_d, "Modulus d (kind = sld)");
    mo->add_option("--sieve-limit", mo_limit, "Override sieve limit");
    add_common(mo, mo_c);

    // ---- vaughan ----
    auto* va = app.add_subcommand("vaughan", "Four-piece decomposition of Psi1");
    Common va_c;
    double va_y = 1000, va_u = 5, va_t = 0.0, va_cc = 1.05;
    std::uint32_t va_d = 1;
    int va_chi = 0;
    va->add_option("--y", va_y, "Upper limit");
    va->add_option("--u", va_u, "Split parameter (u^2 <= y)");
    va->add_option("--t", va_t, "Frequency");
    va->add_option("--c", va_cc, "Exponent");
    va->add_option("--chi-d", va_d, "Character modulus");
    va->add_option("--chi-index", va_chi, "Character index (0 = principal)");
    add_common(va, va_c);

    // ---- bilinear ----
    auto* bi = app.add_subcommand("bilinear", "Type I / Type II bilinear sums");
    Common bi_c;
    int bi_type = 1;
    double bi_M = 32, bi_L = 512, bi_cc = 1.05, bi_t = 0.1;
    std::string bi_ca = "mu", bi_cb = "lambda";
    bi->add_option("--type", bi_type, "1 or 2")->check(CLI::IsMember({1, 2}));
    bi->add_option("--M", bi_M, "Outer block anchor");
    bi->add_option("--L", bi_L, "Inner block anchor");
    bi->add_option("--c", bi_cc, "Exponent");
    bi->add_option("--t", bi_t, "Frequency");
    bi->add_option("--coeff-a", bi_ca, "a(m): one | mu | lambda");
    bi->add_option("--coeff-b", bi_cb, "b(l): one | mu | lambda (type 2)");
    add_common(bi, bi_c);

    // ---- bv ----
    auto* bv = app.add_subcommand("bv", "Averaged worst-residue error over moduli");
    Common bv_c;
    std::vector<double> bv_X{1000};
    double bv_cc = 1.05, bv_t = 0.0, bv_A = 1.0, bv_mu = 0.5;
    int bv_ppo = 4;
    bool bv_exact = false;
    std::uint64_t bv_limit = 0;
    bv->add_option("--X", bv_X, "Scale(s), ascending; one row each");
    bv->add_option("--c", bv_cc, "Exponent");
    bv->add_option("--t", bv_t, "Frequency (|t| <= X^{1/4-c}, clamped per row)");
    bv->add_option("--A", bv_A, "Log power; the modulus cutoff is sqrt(X)/(log X)^{A+5}");
    bv->add_option("--mu", bv_mu, "Lower cutoff fraction");
    bv->add_option("--grid-per-octave", bv_ppo, "Inner-max y grid density");
    bv->add_flag("--exact", bv_exact, "Exact breakpoint sweep (X <= 1e4)");
    bv->add_option("--sieve-limit", bv_limit, "Override sieve limit");
    add_common(bv, bv_c);

    // ---- hooley ----
    auto* ho = app.add_subcommand("hooley", "Divisor-window statistics near sqrt(X)");
    Common ho_c;
    std::vector<double> ho_X{10000};
    double ho_omega = 1.0;
    std::string ho_stat = "moment";
    std::uint64_t ho_limit = 0;
    ho->add_option("--X", ho_X, "Scale(s); one row each");
    ho->add_option("--omega", ho_omega, "Window exponent");
    ho->add_option("--stat", ho_stat, "moment | count")
        ->check(CLI::IsMember({"moment", "count"}));
    ho->add_option("--sieve-limit", ho_limit, "Override sieve limit");
    add_common(ho, ho_c);

    // ---- solve ----
    auto* so = app.add_subcommand("solve", "Enumerate solutions of the ternary inequality");
    Common so_c;
    double so_N = 1000, so_cc = 1.01, so_A = 1.0, so_eps = 0;
    bool so_linnik = false;
    std::uint64_t so_max = 0;
    so->add_option("--N", so_N, "Target")->required();
    so->add_option("--c", so_cc, "Exponent");
    so->add_option("--A", so_A, "Log power for D");
    so->add_option("--eps", so_eps, "Override the derived window (0 = use formula)");
    so->add_flag("--linnik", so_linnik, "Require p1 = x^2 + y^2 + 1");
    so->add_option("--limit", so_max, "Stop after this many records (0 = exhaustive)");
    add_common(so, so_c);

    // ---- gamma ----
    auto* ga = app.add_subcommand("gamma", "Weighted counts and their divisor split");
    Common ga_c;
    double ga_N = 1e5, ga_cc = 1.05, ga_A = 1.0, ga_eps = 0;
    ga->add_option("--N", ga_N, "Target")->required();
    ga->add_option("--c", ga_cc, "Exponent");
    ga->add_option("--A", ga_A, "Log power for D");
    ga->add_option("--eps", ga_eps, "Override the derived window (0 = use formula)");
    add_common(ga, ga_c);

    // ---- constants ----
    auto* co = app.add_subcommand("constants", "theta0 and the singular series");
    Common co_c;
    double co_P = 1e6, co_D = 1e6;
    co->add_option("--cutoff", co_P, "Euler-product cutoff");
    co->add_option("--D", co_D, "chi4/phi partial-sum cutoff");
    add_common(co, co_c);

    // ---- binary ----
    auto* bn = app.add_subcommand("binary", "Count solutions of |p1^c+p2^c-N0| < eps");
    Common bn_c;
    double bn_N0 = 1000, bn_cc = 1.01, bn_eps = 1.0;
    bn->add_option("--N0", bn_N0, "Target")->required();
    bn->add_option("--c", bn_cc, "Exponent");
    bn->add_option("--eps", bn_eps, "Window half-width");
    add_common(bn, bn_c);

    try {
        app.parse(argc, argv);

        if (*sieve) {
            auto t = pslp::build_tables(sieve_limit);
            std::vector<Row> rows;
            if (sieve_dump) {
                for (std::uint64_t n = 1; n <= t.limit; ++n)
                    rows.push_back({{"n", fmt(n)},
                                    {"phi", fmt(std::uint64_t(t.phi[n]))},
                                    {"mu", fmt(int(t.mu[n]))},
                                    {"tau", fmt(std::uint64_t(t.tau[n]))},
                                    {"lambda", fmt(t.lambda_log[n])}});
            } else {
                rows.push_back({{"limit", fmt(t.limit)},
                                {"prime_count", fmt(std::uint64_t(t.primes.size()))},
                                {"largest_prime", fmt(t.primes.back())}});
            }
            write_output(render(rows, want_json(sieve_c, false), !sieve_dump),
                         sieve_c.out_path);
        } else if (*lin) {
            auto t = pslp::build_tables(sieve_limit_for(lin_hi, lin_limit));
            auto ps = pslp::linnik_primes(t, lin_lo, lin_hi);
            std::vector<Row> rows;
            for (const auto& r : ps)
                rows.push_back({{"p", fmt(r.p)},
                                {"x", fmt(std::uint64_t(r.x))},
                                {"y", fmt(std::uint64_t(r.y))},
                                {"r_weight", fmt(r.r_weight)}});
            write_output(render(rows, want_json(lin_c, false), false), lin_c.out_path);
        } else if (*ker) {
            pslp::SmoothingKernel K = ker_eps > 0
                                          ? pslp::kernel_for_epsilon(ker_eps, ker_X)
                                          : pslp::make_kernel(ker_a, ker_delta, ker_k);
            std::vector<Row> rows;
            for (int i = 0; i < ker_samples; ++i) {
                double y = (double(i) + 0.5) / double(ker_samples) * 1.2 * K.support_edge();
                double x = std::pow(10.0, -3.0 + 9.0 * double(i) / double(ker_samples - 1));
                rows.push_back({{"y", fmt(y)},
                                {"theta", fmt(K.theta(y))},
                                {"x", fmt(x)},
                                {"theta_hat", fmt(K.theta_hat(x))},
                                {"bound", fmt(K.fourier_bound(x))}});
            }
            write_output(render(rows, want_json(ker_c, false), false), ker_c.out_path);
        } else if (*ex) {
            double x_max = *std::max_element(ex_X.begin(), ex_X.end());
            auto t = pslp::build_tables(sieve_limit_for(x_max, ex_limit));
            std::vector<Row> rows;
            for (double X : ex_X) {
                pslp::ExpSumSpec spec;
                spec.X = X;
                spec.c = ex_cc;
                spec.t = ex_t;
                spec.mu = ex_mu;
                if (ex_d) spec.residue = pslp::Residue{ex_l, ex_d};
                if (ex_jhi > 0) spec.interval = pslp::Interval{ex_jlo, ex_jhi};
                auto S = pslp::exp_sum_primes(t, spec);
                auto J = spec.range();
                double phi_d = ex_d ? double(t.phi[ex_d]) : 1.0;
                auto I = pslp::osc_integral(J.lo, J.hi, ex_cc, ex_t) / phi_d;
                rows.push_back({{"X", fmt(X)},
                                {"c", fmt(ex_cc)},
                                {"t", fmt(ex_t)},
                                {"re_s", fmt(S.real())},
                                {"im_s", fmt(S.imag())},
                                {"re_i", fmt(I.real())},
                                {"im_i", fmt(I.imag())},
                                {"abs_s_minus_i", fmt(std::abs(S - I))}});
            }
            write_output(render(rows, want_json(ex_c, false), false), ex_c.out_path);
        } else if (*mo) {
            auto t = pslp::build_tables(sieve_limit_for(mo_X, mo_limit));
            pslp::ExpSumSpec spec;
            spec.X = mo_X;
            spec.c = mo_cc;
            spec.mu = mo_mu;
            pslp::MomentKind kind;
            double lo, hi;
            double Delta = pslp::delta_cutoff(mo_X, mo_cc);
            if (mo_kind == "s") { kind = pslp::MomentKind::S_over_Delta; lo = -Delta; hi = Delta; }
            else if (mo_kind == "i") { kind = pslp::MomentKind::I_over_Delta; lo = -Delta; hi = Delta; }
            else if (mo_kind == "unit") { kind = pslp::MomentKind::S_unit_interval; lo = mo_n; hi = mo_n + 1; }
            else { kind = pslp::MomentKind::S_ld_over_Delta; spec.residue = pslp::Residue{mo_l, mo_d}; lo = -Delta; hi = Delta; }
            auto r = pslp::second_moment(t, kind, spec, lo, hi, mo_c.threads);
            std::vector<Row> rows{{{"kind", mo_kind},
                                   {"X", fmt(mo_X)},
                                   {"c", fmt(mo_cc)},
                                   {"window_lo", fmt(lo)},
                                   {"window_hi", fmt(hi)},
                                   {"moment", fmt(r.moment)},
                                   {"comparison", fmt(r.comparison)},
                                   {"ratio", fmt(r.moment / r.comparison)}}};
            write_output(render(rows, want_json(mo_c, true), true), mo_c.out_path);
        } else if (*va) {
            auto t = pslp::build_tables(sieve_limit_for(va_y, 0));
            auto chi = pick_character(va_d, va_chi);
            auto r = pslp::vaughan_split(t, va_y, va_u, chi, va_t, va_cc);
            std::vector<Row> rows{{{"u1_re", fmt(r.u1.real())}, {"u1_im", fmt(r.u1.imag())},
                                   {"u2_re", fmt(r.u2.real())}, {"u2_im", fmt(r.u2.imag())},
                                   {"u3_re", fmt(r.u3.real())}, {"u3_im", fmt(r.u3.imag())},
                                   {"u4_re", fmt(r.u4.real())}, {"u4_im", fmt(r.u4.imag())},
                                   {"psi1_re", fmt(r.psi1.real())}, {"psi1_im", fmt(r.psi1.imag())},
                                   {"residual_abs", fmt(std::abs(r.residual()))}}};
            write_output(render(rows, want_json(va_c, true), true), va_c.out_path);
        } else if (*bi) {
            auto t = pslp::build_tables(sieve_limit_for(std::max(bi_M, bi_L), 0));
            pslp::BilinearSpec spec;
            spec.M = bi_M;
            spec.L = bi_L;
            spec.c = bi_cc;
            spec.t = bi_t;
            spec.a = make_coeffs(t, bi_ca, pslp::dyadic_block(bi_M));
            std::complex<double> v;
            if (bi_type == 2) {
                spec.b = make_coeffs(t, bi_cb, pslp::dyadic_block(bi_L));
                v = pslp::type2_sum(spec);
            } else {
                v = pslp::type1_sum(spec);
            }
            double comparison = pslp::bilinear_comparison(bi_M, bi_L);
            std::vector<Row> rows{{{"type", fmt(bi_type)},
                                   {"M", fmt(bi_M)},
                                   {"L", fmt(bi_L)},
                                   {"c", fmt(bi_cc)},
                                   {"t", fmt(bi_t)},
                                   {"value_abs", fmt(std::abs(v))},
                                   {"comparison", fmt(comparison)},
                                   {"ratio", fmt(std::abs(v) / comparison)}}};
            write_output(render(rows, want_json(bi_c, false), false), bi_c.out_path);
        } else if (*bv) {
            std::sort(bv_X.begin(), bv_X.end());
            double x_max = bv_X.back();
            auto t = pslp::build_tables(sieve_limit_for(x_max, bv_limit));
            pslp::BvConfig cfg;
            cfg.c = bv_cc;
            cfg.t = bv_t;
            cfg.A = bv_A;
            cfg.mu = bv_mu;
            cfg.exact_breakpoints = bv_exact;
            cfg.X = x_max;
            if (!bv_exact) cfg.y_grid = pslp::BvConfig::default_y_grid(x_max, bv_ppo);
            auto rep = pslp::bv_table(t, bv_X, cfg, bv_c.threads);
            std::vector<Row> rows;
            for (const auto& r : rep.rows)
                rows.push_back({{"X", fmt(r.X)},
                                {"c", fmt(bv_cc)},
                                {"t", fmt(bv_t)},
                                {"A", fmt(bv_A)},
                                {"d_max", fmt(r.d_max)},
                                {"sigma", fmt(r.sigma)},
                                {"comparison", fmt(r.comparison)},
                                {"ratio", fmt(r.ratio)},
                                {"empty", fmt(r.empty_range)}});
            write_output(render(rows, want_json(bv_c, false), false), bv_c.out_path);
        } else if (*ho) {
            std::sort(ho_X.begin(), ho_X.end());
            auto t = pslp::build_tables(sieve_limit_for(ho_X.back(), ho_limit));
            std::vector<Row> rows;
            for (double X : ho_X) {
                double value, comparison;
                if (ho_stat == "moment") {
                    auto m = pslp::hooley_rho_moment(t, X, ho_omega);
                    value = m.value;
                    comparison = m.comparison;
                } else {
                    auto cnt = pslp::hooley_window_count(t, X, ho_omega);
                    value = double(cnt.count);
                    comparison = cnt.comparison;
                }
                rows.push_back({{"X", fmt(X)},
                                {"omega", fmt(ho_omega)},
                                {"value", fmt(value)},
                                {"comparison", fmt(comparison)},
                                {"ratio", fmt(value / comparison)}});
            }
            write_output(render(rows, want_json(ho_c, false), false), ho_c.out_path);
        } else if (*so) {
            auto params = pslp::derive_params(so_N, so_cc, so_A);
            if (so_eps > 0) {
                params.eps = so_eps;
                params.eps_overridden = true;
            }
            auto t = pslp::build_tables(sieve_limit_for(params.X, 0));
            auto recs = pslp::find_solutions(t, params, so_linnik, so_max, so_c.threads);
            std::vector<Row> rows;
            for (const auto& r : recs)
                rows.push_back({{"p1", fmt(r.p1)},
                                {"p2", fmt(r.p2)},
                                {"p3", fmt(r.p3)},
                                {"x", fmt(std::uint64_t(r.x))},
                                {"y", fmt(std::uint64_t(r.y))},
                                {"residual", fmt(r.residual)}});
            write_output(render(rows, want_json(so_c, true), false), so_c.out_path);
        } else if (*ga) {
            auto params = pslp::derive_params(ga_N, ga_cc, ga_A);
            if (ga_eps > 0) {
                params.eps = ga_eps;
                params.eps_overridden = true;
            }
            auto t = pslp::build_tables(sieve_limit_for(params.X, 0));
            auto K = pslp::kernel_for_epsilon(params.eps, params.X);
            auto g = pslp::gamma_weighted(t, params, K, ga_c.threads);
            Row row{{"gamma", fmt(g.gamma)},
                    {"gamma0", fmt(g.gamma0)},
                    {"gamma1", fmt(g.gamma1)},
                    {"gamma2", fmt(g.gamma2)},
                    {"gamma3", fmt(g.gamma3)},
                    {"params.N", fmt(params.N)},
                    {"params.c", fmt(params.c)},
                    {"params.A", fmt(params.A)},
                    {"params.X", fmt(params.X)},
                    {"params.D", fmt(params.D)},
                    {"params.Delta", fmt(params.Delta)},
                    {"params.eps", fmt(params.eps)},
                    {"params.H", fmt(params.H)},
                    {"params.theta0", fmt(params.theta0)},
                    {"params.eps_overridden", fmt(params.eps_overridden)}};
            write_output(render({row}, want_json(ga_c, true), true), ga_c.out_path);
        } else if (*co) {
            auto t = pslp::build_tables(sieve_limit_for(std::max(co_P, co_D), 0));
            auto ss = pslp::singular_series(t, co_P);
            double cps = pslp::chi_phi_sum(t, co_D);
            Row row{{"theta0", fmt(pslp::theta0())},
                    {"singular_series", fmt(ss.value)},
                    {"tail_bound", fmt(ss.tail_bound)},
                    {"chi_phi_sum", fmt(cps)},
                    {"difference", fmt(std::abs(ss.value - cps))}};
            write_output(render({row}, want_json(co_c, true), true), co_c.out_path);
        } else if (*bn) {
            double X0 = std::pow(bn_N0, 1.0 / bn_cc);
            auto t = pslp::build_tables(sieve_limit_for(X0, 0));
            auto r = pslp::binary_count(t, bn_N0, bn_cc, bn_eps, bn_c.threads);
            Row row{{"count", fmt(r.count)},
                    {"comparison", fmt(r.comparison)},
                    {"N0", fmt(bn_N0)},
                    {"c", fmt(bn_cc)},
                    {"eps", fmt(bn_eps)},
                    {"X0", fmt(X0)}};
            write_output(render({row}, want_json(bn_c, true), true), bn_c.out_path);
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const pslp::parameter_error& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return 2;
    } catch (const pslp::capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 3;
    } catch (const pslp::numeric_error& e) {
        std::cerr << "numeric error: " << e.what() << " (achieved " << e.achieved << ")\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
