#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vtot/arithmetic.hpp"

namespace vtot {

/// T(1) is defined as 0. Some authors would prefer 1; the value is kept
/// here for reference only and never used by the evaluator.
inline constexpr natural alternative_T_of_one = 1;

/// Default size below which callers may resolve a constrained T value by
/// brute force.
inline constexpr natural default_oracle_threshold = 10'000'000;

enum class totient_kind { exact, constrained };
enum class parity { odd, even, unknown };

/// Which closed-form case produced a TotientValue.
enum class totient_rule {
    trivial,            // n in {1, 2}
    power_of_two,       // n = 2^e, e >= 2
    multiple_of_four,   // n = 2^e m, e >= 2, m > 1 odd
    twice_prime_power,  // n = 2 p^f
    twice_composite,    // n = 2 m, m odd with at least two prime divisors
    odd_prime_power,    // n = p^f odd
    odd_two_primes,     // n = p^e q^f odd
    odd_general,        // n odd, three or more prime divisors
};

std::string_view to_string(totient_rule rule);
std::string_view to_string(parity p);
std::string_view to_string(totient_kind k);

/// Result of evaluating T(n): either an exact value or a range pinned by
/// bounds, parity and (for two odd primes) an explicit candidate pair.
struct totient_value {
    totient_kind kind = totient_kind::exact;
    natural lower = 0;
    natural upper = 0;
    parity par = parity::unknown;
    std::optional<std::vector<natural>> candidates;
    totient_rule rule = totient_rule::trivial;

    static totient_value make_exact(natural v, totient_rule rule, parity par = parity::unknown);

    bool is_exact() const { return kind == totient_kind::exact; }
    natural exact() const;

    /// True iff v is consistent with every constraint carried here.
    bool admits(natural v) const;
};

/// e.g. "Exact 2 (twice_prime_power)" or
/// "Constrained [1, 13] parity=odd (odd_general)".
std::string describe(const totient_value& v);

natural euler_phi(const factorization& f);

/// S_r(n) = n * prod(1 - r/p). Zero as soon as some p | n has p <= r.
natural schemmel(natural r, const factorization& f);

/// S(n) evaluated term by term as the alternating subset sum
/// n * sum_K (-2)^|K| / prod_{i in K} p_i. Requires n > 1 odd.
natural schemmel_expansion(const factorization& f);

/// Brute-force T(n): odd m in [1, n] with gcd(m, n) = gcd((m-1)/2, n) = 1.
natural totient_T_oracle(natural n);

/// Brute-force T_r(n): m in [1, n] with r | m-1, gcd(m, n) = gcd((m-1)/r, n) = 1.
natural totient_Tr_oracle(natural r, natural n);

totient_value totient_T_evaluate(const factorization& f);

/// Collapses a constrained value to the oracle's answer when n is at most
/// `threshold`; otherwise returns v unchanged.
totient_value resolve_with_oracle(const totient_value& v, natural n,
                                  natural threshold = default_oracle_threshold);

}  // namespace vtot
