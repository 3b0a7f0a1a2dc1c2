#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

/// Exact 64-bit integer arithmetic: gcd, modular powers and inverses,
/// deterministic primality, factorization and safe-prime generation.
///
/// Modular products go through 128-bit intermediates, so every modulus
/// up to 2^64 - 1 is safe.
namespace vtot {

using natural = std::uint64_t;

/// Raised when an inverse is requested for a non-unit.
class not_a_unit : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct prime_power {
    natural prime;
    unsigned exponent;

    friend bool operator==(const prime_power&, const prime_power&) = default;
};

/// Canonical prime-power decomposition of n; primes strictly increasing.
class factorization {
public:
    factorization() = default;
    factorization(natural n, std::vector<prime_power> factors);

    natural n() const { return n_; }
    const std::vector<prime_power>& factors() const { return factors_; }

    /// Number of distinct prime divisors.
    std::size_t omega() const { return factors_.size(); }

    /// Number of distinct odd prime divisors.
    std::size_t odd_omega() const;

    /// Exponent of 2 in n.
    unsigned two_exponent() const;

    /// n with all factors of 2 removed.
    natural odd_part() const;

    /// The factorization of the odd part.
    factorization odd_factorization() const;

    bool is_prime_power() const { return factors_.size() == 1; }

private:
    natural n_ = 1;
    std::vector<prime_power> factors_;
};

/// gcd(0, n) = n.
constexpr natural gcd(natural a, natural b)
{
    while (b != 0) {
        natural t = a % b;
        a = b;
        b = t;
    }
    return a;
}

constexpr natural mul_mod(natural a, natural b, natural m)
{
    return static_cast<natural>(static_cast<unsigned __int128>(a) * b % m);
}

natural mod_pow(natural base, natural exp, natural modulus);

/// The unique a' in [1, m) with a * a' = 1 (mod m). Throws not_a_unit.
natural mod_inverse(natural a, natural m);

/// Deterministic for every 64-bit input.
bool is_prime(natural n);

factorization factorize(natural n);

/// Exact integer power; throws std::overflow_error past 64 bits.
natural ipow(natural base, unsigned exp);

/// A random prime p of exactly `bits` bits with (p - 1) / 2 also prime.
/// Deterministic for a given seed. bits must lie in [4, 62].
natural gen_safe_prime(unsigned bits, std::uint64_t seed);

}  // namespace vtot
