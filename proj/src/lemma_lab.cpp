#include "vtot/lemma_lab.hpp"

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include "parallel.hpp"
#include "vtot/totient.hpp"

namespace vtot::lab {

namespace {

using signed_nat = std::int64_t;

const char* family_name(family f)
{
    switch (f) {
    case family::B: return "B";
    case family::C: return "C";
    case family::A: return "A";
    case family::D: return "D";
    case family::E: return "E";
    case family::F: return "F";
    }
    return "?";
}

natural range_end(natural n, family f)
{
    return f == family::D || f == family::E || f == family::F ? 2 * n : n;
}

bool member(family f, natural d, natural m)
{
    switch (f) {
    case family::B: return m % 2 == 1 && m % d == 0;
    case family::C: return m % 2 == 1 && (m - 1) % d == 0;
    case family::A: return member(family::B, d, m) || member(family::C, d, m);
    case family::D: return (m - 1) % 4 == 0 && m % d == 0;
    case family::E: return m > 1 && (m - 1) % 4 == 0 && (m - 1) % d == 0;
    case family::F: return member(family::D, d, m) || member(family::E, d, m);
    }
    return false;
}

// Size of the intersection of family `f` over all of `divisors`.
natural intersection_size(natural n, family f, const std::vector<natural>& divisors)
{
    const natural end = range_end(n, f);
    natural count = 0;
    for (natural m = 1; m <= end; ++m) {
        bool in = true;
        for (natural d : divisors) {
            if (!member(f, d, m)) {
                in = false;
                break;
            }
        }
        count += in;
    }
    return count;
}

std::string set_label(family f, const std::vector<natural>& divisors)
{
    std::string out;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
        if (i)
            out += " ∩ ";
        out += std::string(family_name(f)) + "_" + std::to_string(divisors[i]);
    }
    return "|" + out + "|";
}

bool within(natural v, signed_nat lo, signed_nat hi)
{
    const auto sv = static_cast<signed_nat>(v);
    return lo <= sv && sv <= hi;
}

std::string range_text(signed_nat lo, signed_nat hi)
{
    return "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
}

}  // namespace

void validate(const residue_set_spec& spec)
{
    if (spec.n <= 1 || spec.n % 2 == 0)
        throw std::domain_error("residue set: n must be odd and greater than 1");
    if (spec.divisors.empty())
        throw std::domain_error("residue set: at least one divisor is required");
    if (spec.mode == set_mode::single && spec.divisors.size() != 1)
        throw std::domain_error("residue set: single mode takes exactly one divisor");
    for (std::size_t i = 0; i < spec.divisors.size(); ++i) {
        const natural d = spec.divisors[i];
        if (d <= 1 || d % 2 == 0 || spec.n % d != 0)
            throw std::domain_error("residue set: " + std::to_string(d) + " is not an odd divisor > 1 of " +
                                    std::to_string(spec.n));
        for (std::size_t j = 0; j < i; ++j) {
            if (gcd(d, spec.divisors[j]) != 1)
                throw std::domain_error("residue set: divisors must be pairwise coprime");
        }
    }
}

natural residue_set_size(const residue_set_spec& spec)
{
    validate(spec);
    return intersection_size(spec.n, spec.fam, spec.divisors);
}

natural mixed_intersection_size(natural n, natural p, natural q)
{
    validate({n, family::B, {p, q}, set_mode::intersection});
    natural count = 0;
    for (natural m = 1; m <= n; ++m)
        count += member(family::B, p, m) && member(family::C, q, m);
    return count;
}

verification_report check_set_lemmas(natural n)
{
    if (n <= 1 || n % 2 == 0)
        throw std::domain_error("check_set_lemmas: n must be odd and greater than 1");
    verification_report report;
    report.lo = report.hi = n;

    std::vector<natural> primes;
    const factorization fac = factorize(n);
    for (const auto& pp : fac.factors())
        primes.push_back(pp.prime);
    const auto sn = static_cast<signed_nat>(n);

    for (natural p : primes) {
        const std::vector<natural> one{p};
        const auto sp = static_cast<signed_nat>(p);
        const natural b = intersection_size(n, family::B, one);
        const natural c = intersection_size(n, family::C, one);
        const natural a = intersection_size(n, family::A, one);
        const natural d = intersection_size(n, family::D, one);
        const natural e = intersection_size(n, family::E, one);
        const natural f = intersection_size(n, family::F, one);
        report.record_exact(b == (n + p) / (2 * p), n, set_label(family::B, one) + " = (n+p)/2p", b);
        report.record_exact(c == (n + p) / (2 * p), n, set_label(family::C, one) + " = (n+p)/2p", c);
        report.record_exact(a == n / p + 1, n, set_label(family::A, one) + " = n/p + 1", a);
        report.record_exact(e == (n - p) / (2 * p), n, set_label(family::E, one) + " = (n-p)/2p", e);
        report.record_bound(d == (n - p) / (2 * p) || d == (n + p) / (2 * p), n,
                            set_label(family::D, one) + " = (n±p)/2p", d);
        report.record_bound(within(f, sn / sp - 1, sn / sp), n, set_label(family::F, one) + " in {n/p - 1, n/p}", f);
    }

    auto check_k_fold = [&](const std::vector<natural>& subset) {
        const auto k = static_cast<signed_nat>(subset.size());
        natural r = 1;
        for (natural d : subset)
            r *= d;
        const signed_nat half = signed_nat{1} << (k - 1);  // 2^(k-1)
        const signed_nat scaled = half * (sn / static_cast<signed_nat>(r));

        const natural a = intersection_size(n, family::A, subset);
        const signed_nat a_lo = 2 - half + scaled, a_hi = half + scaled;
        report.record_bound(within(a, a_lo, a_hi), n, set_label(family::A, subset) + " in " + range_text(a_lo, a_hi), a);
        report.record_exact(a % 2 == 0, n, set_label(family::A, subset) + " is even", a);

        const natural f = intersection_size(n, family::F, subset);
        const signed_nat f_lo = -half + scaled, f_hi = half - 1 + scaled;
        report.record_bound(within(f, f_lo, f_hi), n, set_label(family::F, subset) + " in " + range_text(f_lo, f_hi), f);
        return f;
    };

    for (std::size_t i = 0; i < primes.size(); ++i) {
        for (std::size_t j = i + 1; j < primes.size(); ++j) {
            const natural p = primes[i], q = primes[j], pq = p * q;
            const natural bp_cq = mixed_intersection_size(n, p, q);
            const natural bq_cp = mixed_intersection_size(n, q, p);
            const std::string label = "|B_" + std::to_string(p) + " ∩ C_" + std::to_string(q) + "|";
            report.record_exact(bp_cq == bq_cp, n,
                                label + " = |B_" + std::to_string(q) + " ∩ C_" + std::to_string(p) + "|", bq_cp);
            report.record_bound(bp_cq == (n - pq) / (2 * pq) || bp_cq == (n + pq) / (2 * pq), n,
                                label + " = (n±pq)/2pq", bp_cq);

            const natural f = check_k_fold({p, q});
            const signed_nat lo = 2 * sn / static_cast<signed_nat>(pq) - 2;
            report.record_bound(within(f, lo, lo + 3), n, set_label(family::F, {p, q}) + " in " + range_text(lo, lo + 3), f);

            for (std::size_t k = j + 1; k < primes.size(); ++k)
                check_k_fold({p, q, primes[k]});
        }
    }
    return report;
}

bezout_pair min_bezout(natural p, natural q)
{
    if (p <= 1 || q <= 1 || p % 2 == 0 || q % 2 == 0)
        throw std::domain_error("min_bezout: p and q must be odd and greater than 1");
    if (gcd(p, q) != 1)
        throw std::domain_error("min_bezout: p and q must be coprime");
    const natural a = mod_inverse(p % q, q);
    const auto b = static_cast<natural>((static_cast<unsigned __int128>(a) * p - 1) / q);
    return {a, b};
}

std::vector<parity_row> parity_survey(natural limit)
{
    if (limit < 5)
        throw std::domain_error("parity_survey: limit must be at least 5");
    std::vector<parity_row> rows;
    for (natural p = 3; p <= limit; p += 2) {
        for (natural q = p + 2; q <= limit; q += 2) {
            if (gcd(p, q) != 1)
                continue;
            const auto [a, b] = min_bezout(p, q);
            rows.push_back({p, q, a, b, a % 2 == 0});
        }
    }
    return rows;
}

std::vector<corollary_row> corollary_survey(natural limit)
{
    // Odd n only; blocks of 512 keep the oracle work spread across workers.
    constexpr natural block = 512;
    const std::size_t blocks = static_cast<std::size_t>(limit / block + 1);
    auto chunks = detail::ordered_parallel_map(blocks, 0, [&](std::size_t i) {
        std::vector<corollary_row> rows;
        const natural lo = std::max<natural>(15, i * block);
        const natural hi = std::min<natural>(limit, (i + 1) * block - 1);
        for (natural n = lo | 1; n <= hi; n += 2) {
            const factorization fac = factorize(n);
            if (fac.omega() != 2)
                continue;
            const natural s = schemmel(2, fac);
            const natural t = totient_T_oracle(n);
            corollary_branch branch;
            if (t == (s - 3) / 2)
                branch = corollary_branch::low;
            else if (t == (s + 1) / 2)
                branch = corollary_branch::high;
            else
                throw std::logic_error("T(" + std::to_string(n) + ") = " + std::to_string(t) +
                                       " is neither (S-3)/2 nor (S+1)/2 with S = " + std::to_string(s));
            const auto& f = fac.factors();
            rows.push_back({f[0].prime, f[1].prime, f[0].exponent, f[1].exponent, n, s, t, branch});
        }
        return rows;
    });
    std::vector<corollary_row> out;
    for (auto& c : chunks)
        out.insert(out.end(), c.begin(), c.end());
    return out;
}

verification_report verify_T_range(natural lo, natural hi, unsigned threads)
{
    if (lo == 0)
        throw std::domain_error("verify_T_range: lo must be at least 1");
    verification_report report;
    report.lo = lo;
    report.hi = hi;
    if (lo > hi)
        return report;

    constexpr natural block = 256;
    const natural span = hi - lo + 1;
    const auto blocks = static_cast<std::size_t>((span + block - 1) / block);
    auto parts = detail::ordered_parallel_map(blocks, threads, [&](std::size_t i) {
        verification_report part;
        const natural first = lo + i * block;
        const natural last = std::min(hi, first + block - 1);
        for (natural n = first; n <= last; ++n) {
            const totient_value claim = totient_T_evaluate(factorize(n));
            const natural truth = totient_T_oracle(n);
            if (claim.is_exact())
                part.record_exact(claim.exact() == truth, n, describe(claim), truth);
            else
                part.record_bound(claim.admits(truth), n, describe(claim), truth);
        }
        return part;
    });
    for (const auto& part : parts)
        report.merge(part);
    return report;
}

void write_csv(std::ostream& os, const std::vector<parity_row>& rows)
{
    os << "p,q,a,b,a_parity\n";
    for (const auto& r : rows)
        os << r.p << ',' << r.q << ',' << r.a << ',' << r.b << ',' << (r.a_even ? "even" : "odd") << '\n';
}

void write_csv(std::ostream& os, const std::vector<corollary_row>& rows)
{
    os << "p,q,e,f,n,S,T,which_candidate\n";
    for (const auto& r : rows) {
        os << r.p << ',' << r.q << ',' << r.e << ',' << r.f << ',' << r.n << ',' << r.s << ',' << r.t << ','
           << (r.branch == corollary_branch::low ? "(S-3)/2" : "(S+1)/2") << '\n';
    }
}

}  // namespace vtot::lab
