#pragma once

#include "appnorm/separation.hpp"

namespace appnorm {

// Total map between finite spaces, by point index.
struct space_map {
    finite_space domain;
    finite_space codomain;
    std::vector<std::size_t> assignment;  // assignment[i] = codomain index of f(points[i])

    std::size_t apply(std::size_t i) const { return assignment[i]; }
    pointset preimage(std::size_t y) const {
        pointset p;
        for (std::size_t x = 0; x < assignment.size(); ++x) {
            if (assignment[x] == y) p.add(x);
        }
        return p;
    }
    bool surjective() const;
    bool injective() const;
};

space_map make_map(finite_space domain, finite_space codomain,
                   std::vector<std::size_t> assignment);

// q'(f(x), f(y)) <= q(x, y) for all x, y.
bool is_contraction_map(const space_map& m);

// f(mu)(y) = min over the preimage of y, inf when it is empty.
fn_over_space image_function(const space_map& m, const fn_over_space& mu);

// Pushforwards of lower regular functions stay lower regular. Finite
// criterion: max_{x' in f^-1(y')} min_{x in f^-1(y)} q(x, x') <= q'(y, y')
// for all y, y', with min over an empty set inf and max over an empty set 0;
// the extremal mu is delta_{{x'}} for the maximizing x'.
bool is_closed_expansive(const space_map& m);

// Mirror criterion with both argument orders reversed.
bool is_open_expansive(const space_map& m);

struct preservation_report {
    std::uint64_t trials = 0;
    std::uint64_t surjection_cases = 0;   // open+closed expansive contractive surjections
    std::uint64_t embedding_cases = 0;    // injective closed expansive contractions
    std::uint64_t violations = 0;
    std::string first_violation;
};

// Randomized runner for the preservation statements: normality passes forward
// through open+closed expansive contractive surjections and pulls back along
// injective closed expansive contractions. Any violation is a library bug.
preservation_report run_preservation_suite(std::uint64_t seed, std::uint64_t trials);

}  // namespace appnorm
