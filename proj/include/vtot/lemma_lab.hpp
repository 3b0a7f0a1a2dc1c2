#pragma once

#include <iosfwd>
#include <vector>

#include "vtot/arithmetic.hpp"
#include "vtot/report.hpp"

/// Literal enumeration of the residue sets used to bound T, plus the
/// data-gathering surveys and whole-range checks.
namespace vtot::lab {

/// Residue families over an odd n > 1 and an odd divisor d > 1.
///   B: odd m in [1, n] with d | m
///   C: odd m in [1, n] with d | m - 1
///   A: B union C
///   D: m in [1, 2n] with 4 | m - 1 and d | m
///   E: m in [2, 2n] with 4 | m - 1 and d | m - 1   (m = 1 excluded)
///   F: D union E
enum class family { B, C, A, D, E, F };

enum class set_mode { single, intersection };

struct residue_set_spec {
    natural n = 0;
    family fam = family::B;
    std::vector<natural> divisors;
    set_mode mode = set_mode::single;
};

/// Throws std::domain_error unless n is odd and > 1 and the divisors are
/// odd, > 1, divide n and are pairwise coprime.
void validate(const residue_set_spec& spec);

/// Size of the set (single mode uses the one divisor given; intersection
/// mode intersects the family over every listed divisor).
natural residue_set_size(const residue_set_spec& spec);

/// |B_p ∩ C_q| for coprime odd divisors p, q of n.
natural mixed_intersection_size(natural n, natural p, natural q);

/// Enumerates every residue-set lemma over the distinct prime divisors of n
/// (pairs, and triples when n has at least three) and records each check.
verification_report check_set_lemmas(natural n);

struct bezout_pair {
    natural a;
    natural b;
};

/// Smallest positive a, b with a p - b q = 1. p, q odd, coprime and > 1.
bezout_pair min_bezout(natural p, natural q);

struct parity_row {
    natural p, q, a, b;
    bool a_even;
};

/// One row per coprime odd pair 1 < p < q <= limit.
std::vector<parity_row> parity_survey(natural limit);

enum class corollary_branch { low, high };  // (S-3)/2 or (S+1)/2

struct corollary_row {
    natural p, q;
    unsigned e, f;
    natural n, s, t;
    corollary_branch branch;
};

/// Every odd n = p^e q^f <= limit (p < q primes) with T(n) resolved by the
/// oracle. Throws std::logic_error if T(n) lands on neither branch.
std::vector<corollary_row> corollary_survey(natural limit);

/// Evaluator vs oracle for every n in [lo, hi], split across `threads`
/// workers (0 picks the hardware concurrency).
verification_report verify_T_range(natural lo, natural hi, unsigned threads = 0);

void write_csv(std::ostream& os, const std::vector<parity_row>& rows);
void write_csv(std::ostream& os, const std::vector<corollary_row>& rows);

}  // namespace vtot::lab
