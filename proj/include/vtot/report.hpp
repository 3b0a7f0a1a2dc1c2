#pragma once

#include <string>
#include <vector>

#include "vtot/arithmetic.hpp"

namespace vtot {

struct violation {
    natural n;
    std::string claim;
    natural oracle_value;
};

/// Outcome of a verification sweep. Every check lands in exactly one of
/// exact_matches, bound_hits or violations.
struct verification_report {
    natural lo = 0;
    natural hi = 0;
    natural checked = 0;
    natural exact_matches = 0;
    natural bound_hits = 0;
    std::vector<violation> violations;

    bool ok() const { return violations.empty(); }

    void record_exact(bool pass, natural n, std::string claim, natural value)
    {
        ++checked;
        if (pass)
            ++exact_matches;
        else
            violations.push_back({n, std::move(claim), value});
    }

    void record_bound(bool pass, natural n, std::string claim, natural value)
    {
        ++checked;
        if (pass)
            ++bound_hits;
        else
            violations.push_back({n, std::move(claim), value});
    }

    /// Appends `other`; merging in index order keeps the result deterministic.
    void merge(const verification_report& other)
    {
        checked += other.checked;
        exact_matches += other.exact_matches;
        bound_hits += other.bound_hits;
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    }
};

}  // namespace vtot
