#include <doctest.h>

#include <algorithm>

#include "vtot/attack.hpp"
#include "vtot/totient.hpp"

using namespace vtot;

namespace {

bool is_square(const units_mod_n& grp, element c)
{
    for (element h : grp.enumerate())
        if (grp.compose(h, h) == c)
            return true;
    return false;
}

}  // namespace

TEST_CASE("units_of")
{
    CHECK(units_of(10) == std::vector<natural>{1, 3, 7, 9});
    CHECK(units_of(1) == std::vector<natural>{0});
}

TEST_CASE("collision lower bound")
{
    CHECK(collision_lower_bound(10) == 2);
    CHECK(collision_lower_bound(22) == 4);
    CHECK(collision_lower_bound(9) == 3);
    CHECK(collision_lower_bound(30) == totient_T_oracle(30));
}

TEST_CASE("enumerate_collision_pairs")
{
    std::mt19937_64 rng(5);
    for (natural p : {11, 23}) {
        const units_mod_n grp(p);
        const natural n = p - 1;
        const natural bound = p == 11 ? 2 : 4;
        for (int i = 0; i < 30; ++i) {
            const element g = grp.random_element(rng), x = grp.random_element(rng);
            const auto key = keygen(grp, rng());
            const auto report = enumerate_collision_pairs(grp, g, x, key.e);
            CHECK(report.order == n);
            CHECK(report.theoretical_lower_bound == bound);
            CHECK(report.pair_count >= bound);
            CHECK(report.bound_satisfied);
            CHECK(report.pair_count >= report.exponent_count);
            REQUIRE(report.pairs.has_value());
            CHECK(report.pairs->size() == report.pair_count);
            CHECK(std::find(report.pairs->begin(), report.pairs->end(), std::pair<element, natural>{x, key.e}) !=
                  report.pairs->end());
        }
    }

    const additive_cyclic z9(9);
    for (element g : z9.enumerate()) {
        for (element x : z9.enumerate()) {
            for (natural e : units_of(9)) {
                const auto report = enumerate_collision_pairs(z9, g, x, e);
                CHECK(report.theoretical_lower_bound == 3);
                CHECK(report.pair_count >= 3);
            }
        }
    }

    SUBCASE("pair list dropped above the limit")
    {
        const units_mod_n u11(11);
        // g x = 1 makes the target the identity; every y = g^-1 pairs with all f.
        const auto report = enumerate_collision_pairs(u11, 2, u11.inverse(2), 3, 2);
        CHECK(report.pair_count > 2);
        CHECK_FALSE(report.pairs.has_value());
    }

    SUBCASE("errors")
    {
        const units_mod_n u11(11);
        CHECK_THROWS_AS(enumerate_collision_pairs(u11, 2, 3, 5), std::domain_error);
        CHECK_THROWS_AS(enumerate_collision_pairs(u11, 0, 3, 3), std::domain_error);
        CHECK_THROWS_AS(enumerate_collision_pairs(units_mod_n(1'000'003), 2, 3, 7, 10, 1000), enumeration_refused);
    }
}

TEST_CASE("count_solvable_exponents")
{
    const units_mod_n u11(11);
    CHECK(count_solvable_exponents(u11, 3).pair_count == 6);
    for (element c : u11.enumerate()) {
        const auto counts = count_solvable_exponents(u11, c);
        if (is_square(u11, c)) {
            CHECK(counts.pair_count == 6);
            CHECK(counts.exponent_count == 3);
        } else {
            CHECK(counts.pair_count == 0);
            CHECK(counts.exponent_count == 0);
        }
    }
    const additive_cyclic z15(15);
    for (element c : z15.enumerate())
        CHECK(count_solvable_exponents(z15, c).exponent_count >= 3);
    CHECK_THROWS_AS(count_solvable_exponents(u11, 0), std::domain_error);
    CHECK_THROWS_AS(count_solvable_exponents(units_mod_n(1'000'003), 1, 1000), enumeration_refused);
}

TEST_CASE("sqrt_mod")
{
    CHECK(sqrt_mod(3, 11) == 5);
    CHECK(sqrt_mod(1, 11) == 1);
    CHECK(sqrt_mod(1, 23) == 1);
    CHECK_FALSE(sqrt_mod(2, 11).has_value());
    CHECK_THROWS_AS(sqrt_mod(2, 13), std::domain_error);
    CHECK_THROWS_AS(sqrt_mod(2, 15), std::domain_error);
    CHECK_THROWS_AS(sqrt_mod(0, 11), std::domain_error);
    CHECK_THROWS_AS(sqrt_mod(11, 11), std::domain_error);

    // Exactly one of y and -y has a root, namely y^((p+1)/4).
    for (natural p : {11, 23, 47, 59, 83, 1'000'003}) {
        for (natural y = 1; y < std::min<natural>(p, 2000); ++y) {
            const natural s = mod_pow(y, (p + 1) / 4, p);
            const natural sq = mul_mod(s, s, p);
            REQUIRE((sq == y || sq == p - y));
            REQUIRE(sqrt_mod(y, p).has_value() != sqrt_mod(p - y, p).has_value());
        }
    }
}

TEST_CASE("construct_solution")
{
    const units_mod_n u11(11);
    CHECK(mod_pow(7, 6, 11) == 4);
    const auto w = construct_solution(u11, 4, 7);
    REQUIRE(w.has_value());
    CHECK(u11.power(*w, 6) == 4);
    CHECK((*w == 4 || *w == 7));

    CHECK_THROWS_AS(construct_solution(u11, 4, 1), std::domain_error);
    CHECK_THROWS_AS(construct_solution(u11, 4, 5), std::domain_error);
    CHECK_THROWS_AS(construct_solution(u11, 4, 10), std::domain_error);

    SUBCASE("safe primes: every unit f > 1 gives +-w for squares, none for non-squares")
    {
        for (natural p : {11, 23, 47, 59, 83}) {
            const units_mod_n grp(p);
            for (element c : grp.enumerate()) {
                const bool square = is_square(grp, c);
                for (natural f : units_of(p - 1)) {
                    if (f <= 1)
                        continue;
                    const auto sol = construct_solution(grp, c, f);
                    REQUIRE(sol.has_value() == square);
                    if (sol) {
                        REQUIRE(grp.power(*sol, f - 1) == c);
                        REQUIRE(grp.power(grp.negate(*sol), f - 1) == c);
                    }
                }
            }
        }
    }

    SUBCASE("odd order groups")
    {
        for (natural m : {9, 15, 21, 25, 105}) {
            const additive_cyclic grp(m);
            for (element c : grp.enumerate()) {
                natural built = 0;
                for (natural f : units_of(m)) {
                    if (f <= 1)
                        continue;
                    const auto sol = construct_solution(grp, c, f);
                    REQUIRE(sol.has_value() == (gcd(f - 1, m) == 1));
                    if (sol) {
                        REQUIRE(grp.power(*sol, f - 1) == c);
                        ++built;
                    }
                }
                REQUIRE(built == schemmel(2, factorize(m)));
            }
        }
    }

    SUBCASE("even order groups without a closed-form root")
    {
        for (natural modulus : {13, 15, 16, 21, 35}) {
            const units_mod_n grp(modulus);
            for (element c : grp.enumerate()) {
                for (natural f : units_of(grp.order())) {
                    if (f <= 1)
                        continue;
                    if (const auto sol = construct_solution(grp, c, f))
                        REQUIRE(grp.power(*sol, f - 1) == c);
                }
            }
        }
    }
}
