#include "vtot/totient.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace vtot {

std::string_view to_string(totient_rule rule)
{
    switch (rule) {
    case totient_rule::trivial: return "trivial";
    case totient_rule::power_of_two: return "power_of_two";
    case totient_rule::multiple_of_four: return "multiple_of_four";
    case totient_rule::twice_prime_power: return "twice_prime_power";
    case totient_rule::twice_composite: return "twice_composite";
    case totient_rule::odd_prime_power: return "odd_prime_power";
    case totient_rule::odd_two_primes: return "odd_two_primes";
    case totient_rule::odd_general: return "odd_general";
    }
    return "?";
}

std::string_view to_string(parity p)
{
    switch (p) {
    case parity::odd: return "odd";
    case parity::even: return "even";
    case parity::unknown: return "unknown";
    }
    return "?";
}

std::string_view to_string(totient_kind k)
{
    return k == totient_kind::exact ? "Exact" : "Constrained";
}

totient_value totient_value::make_exact(natural v, totient_rule rule, parity par)
{
    totient_value out;
    out.kind = totient_kind::exact;
    out.lower = out.upper = v;
    out.par = par;
    out.rule = rule;
    return out;
}

natural totient_value::exact() const
{
    if (kind != totient_kind::exact)
        throw std::logic_error("totient_value: not exact");
    return lower;
}

bool totient_value::admits(natural v) const
{
    if (v < lower || v > upper)
        return false;
    if (par == parity::odd && v % 2 == 0)
        return false;
    if (par == parity::even && v % 2 == 1)
        return false;
    if (candidates && std::find(candidates->begin(), candidates->end(), v) == candidates->end())
        return false;
    return true;
}

std::string describe(const totient_value& v)
{
    std::string out;
    if (v.is_exact()) {
        out = "Exact " + std::to_string(v.exact());
    } else {
        out = "Constrained [" + std::to_string(v.lower) + ", " + std::to_string(v.upper) + "]";
        out += " parity=" + std::string(to_string(v.par));
        if (v.candidates) {
            out += " candidates={";
            for (std::size_t i = 0; i < v.candidates->size(); ++i)
                out += (i ? ", " : "") + std::to_string((*v.candidates)[i]);
            out += "}";
        }
    }
    return out + " (" + std::string(to_string(v.rule)) + ")";
}

natural euler_phi(const factorization& f)
{
    natural result = 1;
    for (const auto& [p, e] : f.factors())
        result *= ipow(p, e - 1) * (p - 1);
    return result;
}

natural schemmel(natural r, const factorization& f)
{
    if (r == 0)
        throw std::domain_error("schemmel: r must be positive");
    natural result = 1;
    for (const auto& [p, e] : f.factors()) {
        if (p <= r)
            return 0;
        result *= ipow(p, e - 1) * (p - r);
    }
    return result;
}

natural schemmel_expansion(const factorization& f)
{
    if (f.n() <= 1)
        throw std::domain_error("schemmel_expansion: n must exceed 1");
    std::vector<natural> primes;
    for (const auto& pp : f.factors()) {
        if (pp.prime == 2)
            throw std::domain_error("schemmel_expansion: n must be odd");
        primes.push_back(pp.prime);
    }
    const std::size_t w = primes.size();
    __int128 sum = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << w); ++mask) {
        natural denom = 1;
        int k = 0;
        for (std::size_t i = 0; i < w; ++i) {
            if (mask >> i & 1) {
                denom *= primes[i];
                ++k;
            }
        }
        __int128 term = static_cast<__int128>(f.n() / denom) << k;
        sum += (k % 2 == 0) ? term : -term;
    }
    if (sum < 0)
        throw std::logic_error("schemmel_expansion: negative sum");
    return static_cast<natural>(sum);
}

namespace {

// Distinct primes of n by plain trial division, kept apart from factorize()
// so the oracle shares no code path with the evaluator.
std::vector<natural> trial_primes(natural n)
{
    std::vector<natural> out;
    for (natural p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0)
                n /= p;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

}  // namespace

natural totient_T_oracle(natural n)
{
    if (n == 0)
        throw std::domain_error("totient_T_oracle: n must be positive");
    if (n == 1)
        return 0;
    // shares_factor[k] == 1 iff gcd(k, n) != 1, for 0 <= k <= n.
    thread_local std::vector<char> shares_factor;
    shares_factor.assign(n + 1, 0);
    for (natural p : trial_primes(n)) {
        for (natural k = 0; k <= n; k += p)
            shares_factor[k] = 1;
    }
    natural count = 0;
    for (natural m = 1; m <= n; m += 2) {
        if (!shares_factor[m] && !shares_factor[(m - 1) / 2])
            ++count;
    }
    return count;
}

natural totient_Tr_oracle(natural r, natural n)
{
    if (r < 2)
        throw std::domain_error("totient_Tr_oracle: r must be at least 2");
    if (n == 0)
        throw std::domain_error("totient_Tr_oracle: n must be positive");
    if (n == 1)
        return 0;
    natural count = 0;
    for (natural m = 1; m <= n; m += r) {
        if (gcd(m, n) == 1 && gcd((m - 1) / r, n) == 1)
            ++count;
    }
    return count;
}

namespace {

parity parity_of(natural v)
{
    return v % 2 ? parity::odd : parity::even;
}

totient_value make_bounded(natural center, natural radius, parity par, totient_rule rule)
{
    totient_value out;
    out.kind = totient_kind::constrained;
    out.lower = center > radius ? center - radius : 0;
    out.upper = center + radius;
    out.par = par;
    out.rule = rule;
    return out;
}

}  // namespace

totient_value totient_T_evaluate(const factorization& f)
{
    const natural n = f.n();
    if (n <= 2)
        return totient_value::make_exact(0, totient_rule::trivial, parity::even);

    const unsigned e = f.two_exponent();
    const factorization odd = f.odd_factorization();
    const natural m = odd.n();
    const auto w = static_cast<unsigned>(odd.omega());

    if (m == 1) {
        natural v = natural{1} << (e - 2);
        return totient_value::make_exact(v, totient_rule::power_of_two, parity_of(v));
    }

    const natural s = schemmel(2, odd);
    if (e >= 2) {
        natural v = (natural{1} << (e - 2)) * s;
        return totient_value::make_exact(v, totient_rule::multiple_of_four, parity_of(v));
    }

    if (e == 1) {
        if (w == 1) {
            const natural p = odd.factors().front().prime;
            natural v = p % 4 == 3 ? (s - 1) / 2 : (s + 1) / 2;
            return totient_value::make_exact(v, totient_rule::twice_prime_power, parity_of(v));
        }
        // No parity law is known for T(2m).
        const natural radius = (ipow(3, w) - ipow(2, w) + 1) / 2;
        return make_bounded((s - 1) / 2, radius, parity::unknown, totient_rule::twice_composite);
    }

    const parity par = n % 4 == 1 ? parity::odd : parity::even;
    if (w == 1)
        return totient_value::make_exact((s - 1) / 2, totient_rule::odd_prime_power, par);
    if (w == 2) {
        totient_value out;
        out.kind = totient_kind::constrained;
        out.lower = (s - 3) / 2;
        out.upper = (s + 1) / 2;
        out.par = par;
        out.candidates = std::vector<natural>{out.lower, out.upper};
        out.rule = totient_rule::odd_two_primes;
        return out;
    }
    const natural radius = (ipow(3, w) - ipow(2, w + 1) + 1) / 2;
    return make_bounded((s - 1) / 2, radius, par, totient_rule::odd_general);
}

totient_value resolve_with_oracle(const totient_value& v, natural n, natural threshold)
{
    if (v.is_exact() || n > threshold)
        return v;
    const natural t = totient_T_oracle(n);
    if (!v.admits(t))
        throw std::logic_error("oracle value " + std::to_string(t) + " violates the bounds for n = " +
                               std::to_string(n));
    return totient_value::make_exact(t, v.rule, parity_of(t));
}

}  // namespace vtot
