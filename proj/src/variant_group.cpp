#include "vtot/variant_group.hpp"

#include <charconv>
#include <stdexcept>

#include "vtot/totient.hpp"

namespace vtot {

element finite_group::power(element a, natural k) const
{
    require(a);
    element result = identity();
    element base = a;
    while (k > 0) {
        if (k & 1)
            result = compose(result, base);
        base = compose(base, base);
        k >>= 1;
    }
    return result;
}

void finite_group::require(element a) const
{
    if (!contains(a))
        throw std::domain_error(std::to_string(a) + " is not an element of " + describe());
}

// ---- units_mod_n ------------------------------------------------------------

units_mod_n::units_mod_n(natural modulus) : modulus_(modulus)
{
    if (modulus < 2)
        throw std::domain_error("units_mod_n: modulus must be at least 2");
    order_ = euler_phi(factorize(modulus));
    prime_ = is_prime(modulus);
}

bool units_mod_n::contains(element a) const
{
    return a < modulus_ && gcd(a, modulus_) == 1;
}

element units_mod_n::compose(element a, element b) const
{
    require(a);
    require(b);
    return mul_mod(a, b, modulus_);
}

element units_mod_n::inverse(element a) const
{
    require(a);
    return modulus_ == 2 ? 1 : mod_inverse(a, modulus_);
}

element units_mod_n::random_element(std::mt19937_64& rng) const
{
    std::uniform_int_distribution<natural> pick(1, modulus_ - 1);
    for (;;) {
        element a = pick(rng);
        if (gcd(a, modulus_) == 1)
            return a;
    }
}

std::vector<element> units_mod_n::enumerate(natural cap) const
{
    if (order_ > cap)
        throw enumeration_refused(describe() + " has order " + std::to_string(order_) +
                                  ", above the enumeration cap " + std::to_string(cap));
    std::vector<element> out;
    out.reserve(order_);
    for (element a = 1; a < modulus_; ++a) {
        if (gcd(a, modulus_) == 1)
            out.push_back(a);
    }
    return out;
}

std::string units_mod_n::describe() const
{
    return "units:" + std::to_string(modulus_);
}

element units_mod_n::power(element a, natural k) const
{
    require(a);
    return mod_pow(a, k, modulus_);
}

element units_mod_n::negate(element a) const
{
    require(a);
    return modulus_ - a;
}

// ---- additive_cyclic --------------------------------------------------------

additive_cyclic::additive_cyclic(natural modulus) : modulus_(modulus)
{
    if (modulus < 1)
        throw std::domain_error("additive_cyclic: modulus must be positive");
}

element additive_cyclic::compose(element a, element b) const
{
    require(a);
    require(b);
    return a >= modulus_ - b ? a - (modulus_ - b) : a + b;
}

element additive_cyclic::inverse(element a) const
{
    require(a);
    return a == 0 ? 0 : modulus_ - a;
}

element additive_cyclic::random_element(std::mt19937_64& rng) const
{
    std::uniform_int_distribution<natural> pick(0, modulus_ - 1);
    return pick(rng);
}

std::vector<element> additive_cyclic::enumerate(natural cap) const
{
    if (modulus_ > cap)
        throw enumeration_refused(describe() + " has order " + std::to_string(modulus_) +
                                  ", above the enumeration cap " + std::to_string(cap));
    std::vector<element> out(modulus_);
    for (element a = 0; a < modulus_; ++a)
        out[a] = a;
    return out;
}

std::string additive_cyclic::describe() const
{
    return "additive:" + std::to_string(modulus_);
}

element additive_cyclic::power(element a, natural k) const
{
    require(a);
    return mul_mod(a, k % modulus_, modulus_);
}

std::unique_ptr<finite_group> parse_group(const std::string& spec)
{
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("group spec must look like units:<n> or additive:<n>");
    const std::string kind = spec.substr(0, colon);
    const std::string digits = spec.substr(colon + 1);
    natural n = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
        throw std::invalid_argument("bad modulus in group spec '" + spec + "'");
    if (kind == "units")
        return std::make_unique<units_mod_n>(n);
    if (kind == "additive")
        return std::make_unique<additive_cyclic>(n);
    throw std::invalid_argument("unknown group kind '" + kind + "'");
}

// ---- variant construction ---------------------------------------------------

element variant_compose(const finite_group& grp, element s, element a, element b)
{
    grp.require(s);
    return grp.compose(grp.compose(a, s), b);
}

element variant_power(const finite_group& grp, element x, element g, natural e)
{
    if (e < 1)
        throw std::domain_error("variant_power: exponent must be at least 1");
    return grp.compose(grp.power(grp.compose(g, x), e - 1), g);
}

variant_key keygen(const finite_group& grp, std::uint64_t seed)
{
    const natural n = grp.order();
    if (n <= 2)
        throw std::domain_error("keygen: a group of order " + std::to_string(n) +
                                " has no unit exponent above 1");
    std::mt19937_64 rng(seed);
    const element x = grp.random_element(rng);
    std::uniform_int_distribution<natural> pick(2, n - 1);
    natural e = pick(rng);
    while (gcd(e, n) != 1)
        e = pick(rng);
    return {x, e};
}

element encrypt(const finite_group& grp, const variant_key& key, element g)
{
    return variant_power(grp, key.x, g, key.e);
}

element decrypt(const finite_group& grp, const variant_key& key, element c)
{
    const natural e_inv = mod_inverse(key.e, grp.order());
    return grp.compose(grp.power(grp.compose(c, key.x), e_inv), grp.inverse(key.x));
}

// ---- verification -----------------------------------------------------------

verification_report verify_group(const finite_group& grp, std::uint64_t seed)
{
    const natural n = grp.order();
    verification_report report;
    report.lo = report.hi = n;
    std::mt19937_64 rng(seed);

    const bool small = n <= 100;
    std::vector<element> sample;
    if (small) {
        sample = grp.enumerate();
    } else {
        for (int i = 0; i < 64; ++i)
            sample.push_back(grp.random_element(rng));
    }
    auto pick = [&] { return grp.random_element(rng); };

    if (small)
        report.record_exact(sample.size() == n, n, "enumerate yields order elements", sample.size());

    // Base group laws.
    const element id = grp.identity();
    for (element a : sample) {
        report.record_exact(grp.compose(a, id) == a && grp.compose(id, a) == a, n, "identity law", a);
        report.record_exact(grp.compose(a, grp.inverse(a)) == id, n, "inverse law", a);
    }
    for (int i = 0; i < 500; ++i) {
        element a = pick(), b = pick(), c = pick();
        report.record_exact(grp.compose(grp.compose(a, b), c) == grp.compose(a, grp.compose(b, c)), n,
                            "associativity", a);
    }

    // Variant laws for a handful of sandwich elements.
    for (int round = 0; round < 8; ++round) {
        const element s = pick();
        const element s_inv = grp.inverse(s);
        for (int i = 0; i < 100; ++i) {
            element a = pick(), b = pick(), c = pick();
            report.record_exact(variant_compose(grp, s, variant_compose(grp, s, a, b), c) ==
                                    variant_compose(grp, s, a, variant_compose(grp, s, b, c)),
                                n, "variant associativity", s);
        }
        for (element a : sample) {
            report.record_exact(variant_compose(grp, s, a, s_inv) == a &&
                                    variant_compose(grp, s, s_inv, a) == a,
                                n, "variant identity is s^-1", a);
            const element a_star = grp.compose(grp.compose(s_inv, grp.inverse(a)), s_inv);
            report.record_exact(variant_compose(grp, s, a, a_star) == s_inv, n,
                                "variant inverse is s^-1 a^-1 s^-1", a);
        }
    }

    // g -> g x^-1 carries base products to variant products.
    const element x = pick();
    const element x_inv = grp.inverse(x);
    auto to_variant = [&](element a) { return grp.compose(a, x_inv); };
    auto check_iso = [&](element a, element b) {
        report.record_exact(to_variant(grp.compose(a, b)) ==
                                variant_compose(grp, x, to_variant(a), to_variant(b)),
                            n, "g -> g x^-1 is a homomorphism", a);
    };
    if (small) {
        for (element a : sample)
            for (element b : sample)
                check_iso(a, b);
    } else {
        for (int i = 0; i < 2000; ++i)
            check_iso(pick(), pick());
    }

    // Variant powers agree with repeated variant products.
    const int power_trials = small ? 16 : 4;
    for (int t = 0; t < power_trials; ++t) {
        const element vx = pick(), g = pick();
        element acc = g;
        for (natural e = 1; e <= 64; ++e) {
            if (e > 1)
                acc = variant_compose(grp, vx, acc, g);
            report.record_exact(variant_power(grp, vx, g, e) == acc, n, "variant power matches e-fold product", e);
        }
    }

    // Cipher roundtrip.
    if (n >= 2) {
        if (n <= 200) {
            const auto all = grp.enumerate();
            for (natural e = 1; e < n; ++e) {
                if (gcd(e, n) != 1)
                    continue;
                const variant_key key{pick(), e};
                for (element g : all)
                    report.record_exact(decrypt(grp, key, encrypt(grp, key, g)) == g, n, "decrypt(encrypt(g)) = g", g);
            }
        } else {
            std::uniform_int_distribution<natural> pick_e(1, n - 1);
            for (int i = 0; i < 1000; ++i) {
                natural e = pick_e(rng);
                while (gcd(e, n) != 1)
                    e = pick_e(rng);
                const variant_key key{pick(), e};
                const element g = pick();
                report.record_exact(decrypt(grp, key, encrypt(grp, key, g)) == g, n, "decrypt(encrypt(g)) = g", g);
            }
        }
    }
    return report;
}

}  // namespace vtot
