#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "vtot/arithmetic.hpp"
#include "vtot/report.hpp"

namespace vtot {

/// Group elements are canonical residues.
using element = natural;

inline constexpr natural default_enumeration_cap = 1'000'000;

/// Raised when an exhaustive loop would exceed the enumeration cap.
class enumeration_refused : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A finite group with elements encoded as naturals. Implementations are
/// immutable after construction.
class finite_group {
public:
    virtual ~finite_group() = default;

    virtual natural order() const = 0;
    virtual bool contains(element a) const = 0;
    virtual element compose(element a, element b) const = 0;
    virtual element identity() const = 0;
    virtual element inverse(element a) const = 0;

    /// Uniform random element.
    virtual element random_element(std::mt19937_64& rng) const = 0;

    /// All elements in increasing order. Throws enumeration_refused when
    /// order() exceeds `cap`.
    virtual std::vector<element> enumerate(natural cap = default_enumeration_cap) const = 0;

    virtual std::string describe() const = 0;

    /// a^k by square-and-multiply; a^0 is the identity.
    virtual element power(element a, natural k) const;

    /// Throws std::domain_error unless contains(a).
    void require(element a) const;
};

/// U_n, the multiplicative group of units modulo n.
class units_mod_n final : public finite_group {
public:
    explicit units_mod_n(natural modulus);

    natural modulus() const { return modulus_; }
    bool modulus_is_prime() const { return prime_; }

    natural order() const override { return order_; }
    bool contains(element a) const override;
    element compose(element a, element b) const override;
    element identity() const override { return 1 % modulus_; }
    element inverse(element a) const override;
    element random_element(std::mt19937_64& rng) const override;
    std::vector<element> enumerate(natural cap = default_enumeration_cap) const override;
    std::string describe() const override;
    element power(element a, natural k) const override;

    /// modulus - a, the additive negative of a unit.
    element negate(element a) const;

private:
    natural modulus_;
    natural order_;
    bool prime_;
};

/// Z_n under addition; supplies groups of odd order.
class additive_cyclic final : public finite_group {
public:
    explicit additive_cyclic(natural modulus);

    natural modulus() const { return modulus_; }

    natural order() const override { return modulus_; }
    bool contains(element a) const override { return a < modulus_; }
    element compose(element a, element b) const override;
    element identity() const override { return 0; }
    element inverse(element a) const override;
    element random_element(std::mt19937_64& rng) const override;
    std::vector<element> enumerate(natural cap = default_enumeration_cap) const override;
    std::string describe() const override;
    element power(element a, natural k) const override;

private:
    natural modulus_;
};

/// Builds a group from "units:<n>" or "additive:<n>".
std::unique_ptr<finite_group> parse_group(const std::string& spec);

/// Encryption key (x, e): e is a unit modulo the group order and e > 1.
struct variant_key {
    element x;
    natural e;

    friend bool operator==(const variant_key&, const variant_key&) = default;
};

/// a * s * b in the base group: the product of the variant G^s.
element variant_compose(const finite_group& g, element s, element a, element b);

/// The e-th power of g inside G^x, computed as (g x)^(e-1) g.
element variant_power(const finite_group& grp, element x, element g, natural e);

/// Random x and random unit e in (1, order). Throws std::domain_error when
/// the order admits no such e.
variant_key keygen(const finite_group& grp, std::uint64_t seed);

element encrypt(const finite_group& grp, const variant_key& key, element g);

/// (c x)^(e') x^-1 with e e' = 1 modulo the group order.
element decrypt(const finite_group& grp, const variant_key& key, element c);

/// Spot-checks the base group laws, the variant laws, the g -> g x^-1
/// isomorphism, variant power compatibility and the cipher roundtrip.
/// Small groups (order <= 100) are checked exhaustively where feasible.
verification_report verify_group(const finite_group& grp, std::uint64_t seed);

}  // namespace vtot
