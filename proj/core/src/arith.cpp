#include "pslp/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "pslp/accum.hpp"
#include "pslp/errors.hpp"

namespace pslp {

std::vector<std::uint64_t> ArithmeticTables::divisors(std::uint64_t n) const {
    std::vector<std::uint64_t> divs{1};
    while (n > 1) {
        std::uint64_t p = spf[n];
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        std::size_t base = divs.size();
        std::uint64_t pk = 1;
        for (int j = 1; j <= e; ++j) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

std::size_t ArithmeticTables::prime_index_above(double x) const {
    return std::upper_bound(primes.begin(), primes.end(), x,
                            [](double v, std::uint64_t p) { return v < double(p); }) -
           primes.begin();
}

ArithmeticTables build_tables(std::uint64_t limit) {
    if (limit < 2 || limit > 100'000'000ULL)
        throw parameter_error("build_tables: limit must satisfy 2 <= limit <= 1e8");

    ArithmeticTables t;
    t.limit = limit;
    t.spf.assign(limit + 1, 0);
    t.phi.assign(limit + 1, 0);
    t.mu.assign(limit + 1, 0);
    t.tau.assign(limit + 1, 0);
    t.lambda_log.assign(limit + 1, 0.0);
    std::vector<std::uint8_t> spf_exp(limit + 1, 0);  // exponent of spf[n] in n

    t.spf[1] = 1;
    t.phi[1] = 1;
    t.mu[1] = 1;
    t.tau[1] = 1;

    // Linear sieve: each composite is struck once, by its smallest prime factor.
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (t.spf[i] == 0) {
            t.spf[i] = std::uint32_t(i);
            t.phi[i] = std::uint32_t(i - 1);
            t.mu[i] = -1;
            t.tau[i] = 2;
            spf_exp[i] = 1;
            t.primes.push_back(i);
        }
        for (std::uint64_t p : t.primes) {
            if (p > t.spf[i] || i * p > limit) break;
            std::uint64_t ip = i * p;
            t.spf[ip] = std::uint32_t(p);
            if (i % p == 0) {
                t.phi[ip] = std::uint32_t(t.phi[i] * p);
                t.mu[ip] = 0;
                spf_exp[ip] = std::uint8_t(spf_exp[i] + 1);
                t.tau[ip] = std::uint16_t(t.tau[i] / (spf_exp[i] + 1) * (spf_exp[i] + 2));
            } else {
                t.phi[ip] = std::uint32_t(t.phi[i] * (p - 1));
                t.mu[ip] = std::int8_t(-t.mu[i]);
                spf_exp[ip] = 1;
                t.tau[ip] = std::uint16_t(t.tau[i] * 2);
            }
        }
    }

    for (std::uint64_t p : t.primes) {
        double lp = std::log(double(p));
        for (std::uint64_t pk = p; pk <= limit; pk *= p) {
            t.lambda_log[pk] = lp;
            if (pk > limit / p) break;
        }
    }
    return t;
}

int chi4(std::int64_t n) {
    std::int64_t r = n % 4;
    if (r < 0) r += 4;
    if (r == 1) return 1;
    if (r == 3) return -1;
    return 0;
}

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> ps;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

std::uint64_t primitive_root(std::uint64_t p) {
    if (p == 2) return 1;
    auto qs = prime_factors(p - 1);
    for (std::uint64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (std::uint64_t q : qs)
            if (pow_mod(g, (p - 1) / q, p) == 1) { ok = false; break; }
        if (ok) return g;
    }
    return 0;  // unreachable for prime p
}

std::uint64_t euler_phi_u64(std::uint64_t n) {
    std::uint64_t r = n;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            r -= r / p;
            while (n % p == 0) n /= p;
        }
    if (n > 1) r -= r / n;
    return r;
}

// Generators of (Z/d)*, CRT-lifted so each is == 1 modulo the complementary
// prime-power factors.  Products of lifted generators then enumerate the
// whole unit group mod d.
struct LiftedGen {
    std::uint64_t gen;    // residue mod d
    std::uint64_t order;
};

std::vector<LiftedGen> unit_group_generators(std::uint32_t d) {
    std::vector<LiftedGen> out;
    std::uint64_t n = d;
    for (std::uint64_t p = 2; n > 1; p = (p == 2 ? 3 : p + 2)) {
        if (p * p > n) p = n;
        if (n % p != 0) continue;
        std::uint64_t pk = 1;
        while (n % p == 0) { n /= p; pk *= p; }

        std::vector<LiftedGen> local;  // generators mod pk
        if (p == 2) {
            if (pk == 4) local.push_back({3, 2});
            else if (pk >= 8) {
                local.push_back({pk - 1, 2});
                local.push_back({3, pk / 4});
            }
            // pk == 2: trivial group
        } else {
            std::uint64_t g = primitive_root(p);
            if (pk > p && pow_mod(g, p - 1, p * p) == 1) g += p;
            local.push_back({g % pk, euler_phi_u64(pk)});
        }

        std::uint64_t rest = d / pk;
        for (auto [g, ord] : local) {
            std::uint64_t lifted = g % pk;
            if (rest > 1) {
                for (std::uint64_t k = 0;; ++k) {
                    std::uint64_t cand = g % pk + pk * k;
                    if (cand % rest == 1) { lifted = cand % d; break; }
                }
            }
            out.push_back({lifted, ord});
        }
    }
    return out;
}

} // namespace

std::vector<DirichletCharacter> characters_mod(std::uint32_t d) {
    if (d == 0 || d > 10'000)
        throw parameter_error("characters_mod: modulus must satisfy 1 <= d <= 1e4");

    auto gens = unit_group_generators(d);
    const std::size_t ng = gens.size();

    // Discrete log of every unit: walk the group once in mixed-radix order.
    std::vector<std::vector<std::uint32_t>> dlog(d);
    std::vector<std::uint8_t> is_unit(d, 0);
    {
        std::vector<std::uint32_t> exps(ng, 0);
        std::uint64_t residue = 1 % d;
        for (;;) {
            dlog[residue] = exps;
            is_unit[residue] = 1;
            std::size_t j = 0;
            for (; j < ng; ++j) {
                residue = residue * gens[j].gen % d;
                if (++exps[j] < gens[j].order) break;
                exps[j] = 0;  // wrapped; residue is back since gen^order == 1 (mod d)
            }
            if (j == ng) break;
        }
    }
    if (d == 1) { dlog[0] = {}; is_unit[0] = 1; }

    const double two_pi = 2.0 * std::numbers::pi;
    std::vector<DirichletCharacter> out;
    std::vector<std::uint32_t> kvec(ng, 0);
    for (;;) {
        DirichletCharacter chi;
        chi.modulus = d;
        chi.values.assign(d, {0.0, 0.0});
        bool principal = true;
        for (std::uint32_t n = 0; n < d; ++n) {
            if (!is_unit[n]) continue;
            const auto& e = dlog[n];
            double re = 1.0, im = 0.0;
            for (std::size_t j = 0; j < ng; ++j) {
                std::uint64_t num = (std::uint64_t(kvec[j]) * e[j]) % gens[j].order;
                if (num == 0) continue;
                if (2 * num == gens[j].order) {
                    re = -re; im = -im;  // exact -1 keeps real characters integral
                } else {
                    double a = two_pi * double(num) / double(gens[j].order);
                    double cr = std::cos(a), ci = std::sin(a);
                    double nr = re * cr - im * ci;
                    im = re * ci + im * cr;
                    re = nr;
                }
            }
            chi.values[n] = {re, im};
            if (re != 1.0 || im != 0.0) principal = false;
        }
        chi.is_principal = principal;
        out.push_back(std::move(chi));

        std::size_t j = 0;
        for (; j < ng; ++j) {
            if (++kvec[j] < gens[j].order) break;
            kvec[j] = 0;
        }
        if (j == ng) break;
    }

    std::stable_partition(out.begin(), out.end(),
                          [](const DirichletCharacter& c) { return c.is_principal; });

    // Primitivity: chi mod d is induced from a proper divisor f iff chi == 1
    // on every unit n == 1 (mod f).
    for (auto& chi : out) {
        bool primitive = true;
        for (std::uint32_t f = 1; f < d; ++f) {
            if (d % f != 0) continue;
            bool trivial_on_kernel = true;
            for (std::uint32_t n = 1; n < d && trivial_on_kernel; n += f) {
                if (!is_unit[n]) continue;
                if (std::abs(chi.values[n].real() - 1.0) > 1e-12 ||
                    std::abs(chi.values[n].imag()) > 1e-12)
                    trivial_on_kernel = false;
            }
            if (trivial_on_kernel) { primitive = false; break; }
        }
        chi.is_primitive = primitive;
    }
    return out;
}

DirichletCharacter principal_character(std::uint32_t d) {
    if (d == 0 || d > 10'000)
        throw parameter_error("principal_character: modulus must satisfy 1 <= d <= 1e4");
    DirichletCharacter chi;
    chi.modulus = d;
    chi.values.assign(d, {0.0, 0.0});
    for (std::uint32_t n = 0; n < d; ++n)
        if (d == 1 || std::gcd<std::uint64_t>(n, d) == 1) chi.values[n] = {1.0, 0.0};
    if (d == 1) chi.values[0] = {1.0, 0.0};
    chi.is_principal = true;
    chi.is_primitive = (d == 1);
    return chi;
}

PolyaVinogradovResult polya_vinogradov_check(const DirichletCharacter& chi,
                                             std::int64_t M, std::int64_t N) {
    if (chi.is_principal)
        throw parameter_error("polya_vinogradov_check: character must be non-principal");
    if (N < 1) throw parameter_error("polya_vinogradov_check: N must be positive");

    KahanComplex run;
    double best = 0.0;
    for (std::int64_t n = M + 1; n <= M + N; ++n) {
        std::int64_t r = n % std::int64_t(chi.modulus);
        if (r < 0) r += chi.modulus;
        run.add(chi.values[std::size_t(r)]);
        best = std::max(best, std::abs(run.value()));
    }
    double q = double(chi.modulus);
    return {best, 6.0 * std::sqrt(q) * std::log(q)};
}

LargeSieveResult large_sieve_ratio(std::uint32_t Q, std::int64_t M,
                                   std::span<const std::complex<double>> a) {
    if (a.empty()) throw parameter_error("large_sieve_ratio: coefficient sequence is empty");
    if (Q < 1) throw parameter_error("large_sieve_ratio: Q must be positive");

    std::size_t N = a.size();
    KahanSum lhs;
    for (std::uint32_t q = 1; q <= Q; ++q) {
        auto chars = characters_mod(q);
        double weight = double(q) / double(euler_phi_u64(q));
        for (const auto& chi : chars) {
            if (!chi.is_primitive) continue;
            KahanComplex inner;
            for (std::size_t i = 0; i < N; ++i) {
                std::int64_t n = M + 1 + std::int64_t(i);
                std::int64_t r = n % std::int64_t(q);
                if (r < 0) r += q;
                inner.add(a[i] * chi.values[std::size_t(r)]);
            }
            lhs.add(weight * std::norm(inner.value()));
        }
    }
    KahanSum a2;
    for (const auto& z : a) a2.add(std::norm(z));
    double rhs = (double(N) + double(Q) * double(Q)) * a2.value();
    return {lhs.value(), rhs};
}

double chebyshev_theta(const ArithmeticTables& t, double x) {
    KahanSum s;
    for (std::uint64_t p : t.primes) {
        if (double(p) > x) break;
        s.add(std::log(double(p)));
    }
    return s.value();
}

double chebyshev_psi(const ArithmeticTables& t, double x) {
    KahanSum s;
    std::uint64_t n_max = std::uint64_t(std::min(x, double(t.limit)));
    for (std::uint64_t n = 2; n <= n_max && n <= t.limit; ++n)
        if (t.lambda_log[n] != 0.0) s.add(t.lambda_log[n]);
    return s.value();
}

} // namespace pslp
