#include "vtot/arithmetic.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <string>

namespace vtot {

factorization::factorization(natural n, std::vector<prime_power> factors)
    : n_(n), factors_(std::move(factors))
{
    if (n_ == 0)
        throw std::domain_error("factorization of 0");
}

std::size_t factorization::odd_omega() const
{
    return factors_.empty() || factors_.front().prime != 2 ? factors_.size() : factors_.size() - 1;
}

unsigned factorization::two_exponent() const
{
    return !factors_.empty() && factors_.front().prime == 2 ? factors_.front().exponent : 0;
}

natural factorization::odd_part() const
{
    return n_ >> two_exponent();
}

factorization factorization::odd_factorization() const
{
    if (two_exponent() == 0)
        return *this;
    return factorization(odd_part(), std::vector<prime_power>(factors_.begin() + 1, factors_.end()));
}

natural mod_pow(natural base, natural exp, natural modulus)
{
    if (modulus == 0)
        throw std::domain_error("mod_pow: modulus must be positive");
    natural result = 1 % modulus;
    base %= modulus;
    if (modulus <= UINT32_MAX) {
        while (exp > 0) {
            if (exp & 1)
                result = result * base % modulus;
            base = base * base % modulus;
            exp >>= 1;
        }
        return result;
    }
    while (exp > 0) {
        if (exp & 1)
            result = mul_mod(result, base, modulus);
        base = mul_mod(base, base, modulus);
        exp >>= 1;
    }
    return result;
}

natural mod_inverse(natural a, natural m)
{
    if (m < 2)
        throw std::domain_error("mod_inverse: modulus must be at least 2");
    // Extended Euclid on signed 128-bit values; coefficients stay below m.
    __int128 old_r = a % m, r = m;
    __int128 old_s = 1, s = 0;
    while (r != 0) {
        __int128 q = old_r / r;
        __int128 t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1)
        throw not_a_unit(std::to_string(a) + " is not a unit modulo " + std::to_string(m));
    __int128 inv = old_s % static_cast<__int128>(m);
    if (inv < 0)
        inv += m;
    return static_cast<natural>(inv);
}

namespace {

bool miller_rabin_witness(natural n, natural a, natural d, unsigned s)
{
    if (a % n == 0)
        return false;
    natural x = mod_pow(a, d, n);
    if (x == 1 || x == n - 1)
        return false;
    for (unsigned i = 1; i < s; ++i) {
        x = n <= UINT32_MAX ? x * x % n : mul_mod(x, x, n);
        if (x == n - 1)
            return false;
    }
    return true;
}

constexpr std::array<natural, 12> small_primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

constexpr natural trial_limit = 1000;

constexpr auto trial_primes = [] {
    std::array<bool, trial_limit> composite{};
    std::size_t count = 0;
    for (natural p = 2; p < trial_limit; ++p) {
        if (composite[p])
            continue;
        ++count;
        for (natural k = p * p; k < trial_limit; k += p)
            composite[k] = true;
    }
    std::array<natural, 168> out{};
    std::size_t i = 0;
    for (natural p = 2; p < trial_limit && i < out.size(); ++p) {
        if (!composite[p])
            out[i++] = p;
    }
    return count == out.size() ? out : std::array<natural, 168>{};
}();
static_assert(trial_primes.back() == 997);

// Brent's variant of Pollard rho. Returns a nontrivial divisor of the odd composite n.
natural rho_split(natural n, std::mt19937_64& rng)
{
    std::uniform_int_distribution<natural> pick(1, n - 1);
    for (;;) {
        const natural c = pick(rng);
        natural y = pick(rng);
        natural g = 1, q = 1, x = 0, ys = 0;
        const natural block = 128;
        auto step = [&](natural v) {
            const natural sq = mul_mod(v, v, n);
            return sq >= n - c ? sq - (n - c) : sq + c;
        };
        for (natural r = 1; g == 1; r <<= 1) {
            x = y;
            for (natural i = 0; i < r; ++i)
                y = step(y);
            for (natural k = 0; k < r && g == 1; k += block) {
                ys = y;
                for (natural i = 0; i < std::min(block, r - k); ++i) {
                    y = step(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                g = gcd(q, n);
            }
        }
        if (g == n) {
            do {
                ys = step(ys);
                g = gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
}

void split_into(natural n, std::map<natural, unsigned>& out, std::mt19937_64& rng)
{
    if (n == 1)
        return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    natural d = rho_split(n, rng);
    split_into(d, out, rng);
    split_into(n / d, out, rng);
}

}  // namespace

bool is_prime(natural n)
{
    if (n < 2)
        return false;
    for (natural p : small_primes) {
        if (n % p == 0)
            return n == p;
    }
    natural d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // {2, 7, 61} is deterministic below 4759123141; the first twelve primes
    // cover everything below 3.3e24.
    if (n < 4759123141ULL) {
        for (natural a : {2, 7, 61}) {
            if (miller_rabin_witness(n, a, d, s))
                return false;
        }
        return true;
    }
    for (natural a : small_primes) {
        if (miller_rabin_witness(n, a, d, s))
            return false;
    }
    return true;
}

factorization factorize(natural n)
{
    if (n == 0)
        throw std::domain_error("factorize: n must be positive");
    std::map<natural, unsigned> found;
    natural rest = n;
    for (natural p : trial_primes) {
        if (p * p > rest)
            break;
        while (rest % p == 0) {
            ++found[p];
            rest /= p;
        }
    }
    if (rest > 1) {
        // Seeded from n so factorize stays a pure function.
        std::mt19937_64 rng(n);
        split_into(rest, found, rng);
    }
    std::vector<prime_power> factors;
    factors.reserve(found.size());
    for (auto [p, e] : found)
        factors.push_back({p, e});
    return factorization(n, std::move(factors));
}

natural ipow(natural base, unsigned exp)
{
    natural result = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && result > UINT64_MAX / base)
            throw std::overflow_error("ipow overflow");
        result *= base;
    }
    return result;
}

natural gen_safe_prime(unsigned bits, std::uint64_t seed)
{
    if (bits < 4 || bits > 62)
        throw std::domain_error("gen_safe_prime: bits must lie in [4, 62]");
    std::mt19937_64 rng(seed);
    const natural lo = natural{1} << (bits - 1);
    const natural hi = (natural{1} << bits) - 1;
    std::uniform_int_distribution<natural> pick(lo, hi);
    for (;;) {
        natural p = pick(rng) | 3;  // safe primes above 7 are 3 mod 4
        if (p % 3 != 2 && p > 7)  // p = 1 mod 3 makes 3 | q, p = 0 mod 3 is composite
            continue;
        if (is_prime((p - 1) / 2) && is_prime(p))
            return p;
    }
}

}  // namespace vtot
