#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "vtot/variant_group.hpp"

/// Exhaustive collision counting against the variant cipher.
///
/// Two exponent conventions live side by side: enumerate_collision_pairs
/// ranges over every f in U_n (f = 1 included), count_solvable_exponents
/// only over units f > 1.
namespace vtot {

inline constexpr natural default_pair_limit = 10'000;

struct collision_report {
    natural order = 0;
    element target = 0;
    natural pair_count = 0;
    natural exponent_count = 0;
    /// Matching (y, f) pairs, kept only while pair_count <= the pair limit.
    std::optional<std::vector<std::pair<element, natural>>> pairs;
    natural theoretical_lower_bound = 0;
    bool bound_satisfied = false;
};

/// Units of Z_n in increasing order; for n = 1 this is {0}.
std::vector<natural> units_of(natural n);

/// Lower bound on collisions for a group of order n: T(n) for even n,
/// S(n) for odd n.
natural collision_lower_bound(natural n);

/// Counts every (y, f), y in G and f in U_n, with (g y)^(f-1) = (g x)^(e-1).
collision_report enumerate_collision_pairs(const finite_group& grp, element g, element x, natural e,
                                           natural pair_limit = default_pair_limit,
                                           natural cap = default_enumeration_cap);

struct solvable_counts {
    natural exponent_count = 0;
    natural pair_count = 0;
};

/// Counts units f > 1 for which w^(f-1) = c is solvable, and the (w, f)
/// solution pairs.
solvable_counts count_solvable_exponents(const finite_group& grp, element c,
                                         natural cap = default_enumeration_cap);

/// Square root of c modulo a prime p = 3 (mod 4) as c^((p+1)/4), or nullopt
/// when c is a non-residue.
std::optional<natural> sqrt_mod(natural c, natural p);

/// Builds some w with w^(f-1) = c without searching over exponents, or
/// nullopt when no construction applies. f must be a unit above 1.
std::optional<element> construct_solution(const finite_group& grp, element c, natural f,
                                          natural cap = default_enumeration_cap);

}  // namespace vtot
