#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace pslp {

// Sieved values of the standard multiplicative functions up to a fixed
// limit.  Immutable after construction; safe to share across threads.
struct ArithmeticTables {
    std::uint64_t limit = 0;
    std::vector<std::uint64_t> primes;   // all primes <= limit, ascending
    std::vector<std::uint32_t> spf;      // smallest prime factor, spf[1] = 1
    std::vector<std::uint32_t> phi;      // Euler phi
    std::vector<std::int8_t> mu;         // Moebius
    std::vector<std::uint16_t> tau;      // divisor count
    std::vector<double> lambda_log;      // von Mangoldt (log p on prime powers)

    bool is_prime(std::uint64_t n) const { return n >= 2 && n <= limit && spf[n] == n; }

    /// Divisors of n (unordered), from the spf factorization.
    std::vector<std::uint64_t> divisors(std::uint64_t n) const;

    /// Index of the first prime > x in `primes` (== primes.size() if none).
    std::size_t prime_index_above(double x) const;
};

/// Sieve everything up to `limit`.  2 <= limit <= 1e8.
ArithmeticTables build_tables(std::uint64_t limit);

/// Non-principal character mod 4: +1 on 1 (mod 4), -1 on 3 (mod 4), 0 on
/// evens.  Periodic for negative n as well.
int chi4(std::int64_t n);

// Dirichlet character as an explicit value table of length `modulus`
// (index n % modulus).  Zero on residues not coprime to the modulus.
struct DirichletCharacter {
    std::uint32_t modulus = 1;
    std::vector<std::complex<double>> values;
    bool is_principal = false;
    bool is_primitive = false;

    std::complex<double> operator()(std::uint64_t n) const { return values[n % modulus]; }
};

/// All phi(d) characters mod d, principal first.  1 <= d <= 1e4.
/// Primitivity is decided by testing induction from proper divisors of d.
std::vector<DirichletCharacter> characters_mod(std::uint32_t d);

/// The principal character mod d.
DirichletCharacter principal_character(std::uint32_t d);

struct PolyaVinogradovResult {
    double max_abs_partial_sum;  // max over 1 <= K <= N of |sum_{M < n <= M+K} chi(n)|
    double bound;                // 6 sqrt(d) log d
};

/// Empirical check of the Polya--Vinogradov inequality for a non-principal
/// character.  Returns both sides so callers can assert max <= bound.
PolyaVinogradovResult polya_vinogradov_check(const DirichletCharacter& chi,
                                             std::int64_t M, std::int64_t N);

struct LargeSieveResult {
    double lhs;  // sum_{q<=Q} (q/phi(q)) sum*_{chi mod q} |sum a_n chi(n)|^2
    double rhs;  // (N + Q^2) * sum |a_n|^2
};

/// Large-sieve inequality, evaluated exactly over all primitive characters
/// of modulus q <= Q.  a[i] is the coefficient of n = M+1+i.  The implied
/// constant is not asserted here; callers log the empirical ratio.
LargeSieveResult large_sieve_ratio(std::uint32_t Q, std::int64_t M,
                                   std::span<const std::complex<double>> a);

/// Chebyshev theta(x) = sum_{p <= x} log p.
double chebyshev_theta(const ArithmeticTables& t, double x);
/// Chebyshev psi(x) = sum_{n <= x} Lambda(n).
double chebyshev_psi(const ArithmeticTables& t, double x);

} // namespace pslp
