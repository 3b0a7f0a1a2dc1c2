#include "vtot/attack.hpp"

#include <stdexcept>
#include <string>

#include "vtot/totient.hpp"

namespace vtot {

std::vector<natural> units_of(natural n)
{
    std::vector<natural> out;
    for (natural f = 0; f < n; ++f) {
        if (gcd(f, n) == 1)
            out.push_back(f);
    }
    return out;
}

natural collision_lower_bound(natural n)
{
    const factorization f = factorize(n);
    if (n % 2 == 1)
        return schemmel(2, f);
    const totient_value t = totient_T_evaluate(f);
    return t.is_exact() ? t.exact() : totient_T_oracle(n);
}

namespace {

void check_cap(const finite_group& grp, natural cap)
{
    if (grp.order() > cap)
        throw enumeration_refused(grp.describe() + " has order " + std::to_string(grp.order()) +
                                  ", above the enumeration cap " + std::to_string(cap));
}

// h^0, h^1, ..., h^(n-1).
std::vector<element> power_table(const finite_group& grp, element h)
{
    const natural n = grp.order();
    std::vector<element> table(n);
    table[0] = grp.identity();
    for (natural k = 1; k < n; ++k)
        table[k] = grp.compose(table[k - 1], h);
    return table;
}

}  // namespace

collision_report enumerate_collision_pairs(const finite_group& grp, element g, element x, natural e,
                                           natural pair_limit, natural cap)
{
    check_cap(grp, cap);
    const natural n = grp.order();
    if (n < 2)
        throw std::domain_error("enumerate_collision_pairs: group order must be at least 2");
    if (e == 0 || gcd(e, n) != 1)
        throw std::domain_error("enumerate_collision_pairs: e = " + std::to_string(e) +
                                " is not a unit modulo " + std::to_string(n));
    grp.require(g);
    grp.require(x);

    collision_report report;
    report.order = n;
    report.target = grp.power(grp.compose(g, x), e - 1);
    report.pairs.emplace();

    const auto exponents = units_of(n);
    std::vector<char> exponent_hit(exponents.size(), 0);
    for (element y : grp.enumerate(cap)) {
        const auto powers = power_table(grp, grp.compose(g, y));
        for (std::size_t i = 0; i < exponents.size(); ++i) {
            const natural f = exponents[i];
            if (powers[(f + n - 1) % n] != report.target)
                continue;
            ++report.pair_count;
            exponent_hit[i] = 1;
            if (report.pairs && report.pairs->size() < pair_limit)
                report.pairs->emplace_back(y, f);
            else
                report.pairs.reset();
        }
    }
    for (char hit : exponent_hit)
        report.exponent_count += hit;
    report.theoretical_lower_bound = collision_lower_bound(n);
    report.bound_satisfied = report.pair_count >= report.theoretical_lower_bound;
    return report;
}

solvable_counts count_solvable_exponents(const finite_group& grp, element c, natural cap)
{
    check_cap(grp, cap);
    grp.require(c);
    const natural n = grp.order();
    std::vector<natural> exponents;
    for (natural f : units_of(n)) {
        if (f > 1)
            exponents.push_back(f);
    }
    std::vector<char> solvable(exponents.size(), 0);
    solvable_counts out;
    for (element w : grp.enumerate(cap)) {
        const auto powers = power_table(grp, w);
        for (std::size_t i = 0; i < exponents.size(); ++i) {
            if (powers[exponents[i] - 1] == c) {
                ++out.pair_count;
                solvable[i] = 1;
            }
        }
    }
    for (char s : solvable)
        out.exponent_count += s;
    return out;
}

std::optional<natural> sqrt_mod(natural c, natural p)
{
    if (p % 4 != 3 || !is_prime(p))
        throw std::domain_error("sqrt_mod: modulus " + std::to_string(p) + " is not a prime = 3 mod 4");
    if (c == 0 || c >= p)
        throw std::domain_error("sqrt_mod: argument must lie in [1, p)");
    const natural s = mod_pow(c, (p + 1) / 4, p);
    if (mul_mod(s, s, p) != c)
        return std::nullopt;
    return s;
}

namespace {

std::optional<element> find_square_root(const finite_group& grp, element c, natural cap)
{
    if (const auto* units = dynamic_cast<const units_mod_n*>(&grp);
        units && units->modulus_is_prime() && units->modulus() % 4 == 3)
        return sqrt_mod(c, units->modulus());
    if (grp.order() > cap)
        return std::nullopt;
    for (element h : grp.enumerate(cap)) {
        if (grp.compose(h, h) == c)
            return h;
    }
    return std::nullopt;
}

// U_p with p = 3 (mod 4): write f - 1 = 2^m u with u odd and take m
// successive square roots of +-c, so that c = h^(2^m); then w = h^(u^-1).
std::optional<element> construct_by_iterated_roots(const units_mod_n& grp, element c, natural f)
{
    const natural n = grp.order();
    natural u = f - 1;
    unsigned m = 0;
    while (u % 2 == 0) {
        u /= 2;
        ++m;
    }
    if (gcd(u, n) != 1)
        return std::nullopt;
    auto h = sqrt_mod(c, grp.modulus());
    if (!h)
        return std::nullopt;
    for (unsigned j = 1; j < m; ++j) {
        // Exactly one of h and -h is a residue.
        auto next = sqrt_mod(*h, grp.modulus());
        if (!next)
            next = sqrt_mod(grp.negate(*h), grp.modulus());
        if (!next)
            return std::nullopt;
        h = next;
    }
    return grp.power(*h, mod_inverse(u, n));
}

}  // namespace

std::optional<element> construct_solution(const finite_group& grp, element c, natural f, natural cap)
{
    grp.require(c);
    const natural n = grp.order();
    if (f <= 1 || f >= n || gcd(f, n) != 1)
        throw std::domain_error("construct_solution: f = " + std::to_string(f) +
                                " is not a unit above 1 modulo " + std::to_string(n));
    if (n % 2 == 1) {
        if (gcd(f - 1, n) != 1)
            return std::nullopt;
        return grp.power(c, mod_inverse(f - 1, n));
    }
    const natural half = (f - 1) / 2;
    if (gcd(half, n) == 1) {
        const auto h = find_square_root(grp, c, cap);
        if (!h)
            return std::nullopt;
        return grp.power(*h, mod_inverse(half, n));
    }
    if (const auto* units = dynamic_cast<const units_mod_n*>(&grp);
        units && units->modulus_is_prime() && units->modulus() % 4 == 3)
        return construct_by_iterated_roots(*units, c, f);
    return std::nullopt;
}

}  // namespace vtot
