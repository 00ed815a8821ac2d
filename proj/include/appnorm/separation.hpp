#pragma once

#include <array>
#include <optional>
#include <vector>

#include "appnorm/functions.hpp"

namespace appnorm {

// sep(A,B) = min_x delta_A(x) + delta_B(x); A and B are gamma-separated
// exactly when gamma <= sep(A,B). Throws EmptySet on empty input.
extvalue separation_degree(const finite_space& s, pointset A, pointset B);

// Same closed form without the emptiness guard: inf on empty sets (D2),
// which is what the scale checks need internally.
extvalue separation_degree_or_inf(const finite_space& s, pointset A, pointset B);

// Closed form cross-checked against the definition quantified over realized
// (alpha, beta) threshold pairs; disagreement would be a library bug.
bool is_gamma_separated(const finite_space& s, pointset A, pointset B,
                        const extvalue& gamma);

// The three equivalent statements: gamma-separation and the two core/distance
// inequalities iota^g_{X\B} <= delta^g_A and iota^g_{X\A} <= delta^g_B.
std::array<bool, 3> prop_inequal_check(const finite_space& s, pointset A, pointset B,
                                       const extvalue& gamma);

// Least d* over the closure pair; the exact obstruction to Urysohn synthesis.
extvalue closure_pair_dstar(const finite_space& s, pointset A, pointset B);

struct urysohn_result {
    std::optional<fn_over_space> witness;  // gamma on cl(A), 0 on cl(B)
    extvalue max_gamma;                    // min d* over closure pairs

    bool found() const { return witness.has_value(); }
};

// A Urysohn contraction for (A,B,gamma) exists iff gamma <= min d* over the
// closure pair; the witness is x -> gamma ^ d*(x, cl(B)). Throws NotSeparated
// when the pair is not gamma-separated, EmptySet on empty input.
urysohn_result urysohn(const finite_space& s, pointset A, pointset B,
                       const extvalue& gamma);

// Monotone step function Q -> 2^X with finitely many breakpoints; F(q) is the
// set at the largest threshold <= q, empty below the first threshold. The
// last set must be the whole space.
struct scale {
    std::vector<std::pair<rational, pointset>> breakpoints;  // thresholds ascending

    // Set at the largest threshold <= q; empty below the first threshold.
    pointset at(const rational& q) const;
    // Union of the sets strictly below q: the strict sublevel reading.
    pointset before(const rational& q) const;
};

// Scale property: for every r < s the sets F(r) and X \ F(s) are
// (s-r)-separated. Returns the violating threshold pair if any.
std::optional<std::pair<rational, rational>> scale_violation(const finite_space& s,
                                                             const scale& F);

// f(x) = inf { q : x in F(q) }; throws InvalidScale when the scale property
// or the representation invariants fail.
fn_over_space scale_to_contraction(const finite_space& s, const scale& F);

// Breakpoints at the distinct values of f with sublevel sets; exact inverse
// of scale_to_contraction. Throws NotContractive.
scale contraction_to_scale(const finite_space& s, const fn_over_space& f);

// Conditions (i)-(iii) of the normality definition for the pair (A,B) at
// gamma, plus the scale property. Orientation: the scale's associated
// contraction takes 0 on cl(A) and gamma on cl(B).
bool verify_normal_scale(const finite_space& s, const scale& F, pointset A, pointset B,
                         const extvalue& gamma);

struct normality_witness {
    pointset A, B;
    extvalue gamma;      // separation degree of the failing pair
    extvalue shortfall;  // min d* over the closure pair, < gamma
};

struct normality_certificate {
    pointset A, B;
    extvalue gamma;
    fn_over_space urysohn_fn;  // gamma on cl(A), 0 on cl(B)
    scale normal_scale;        // verified with roles (B, A): f = 0 on cl(B)... see docs
};

struct normality_verdict {
    bool normal = false;
    std::optional<normality_witness> witness;
    std::vector<normality_certificate> certificates;
    bool exhaustive = true;
    std::uint64_t pairs_checked = 0;
};

struct normality_options {
    unsigned jobs = 1;
    // Pairs to certify when the space is normal.
    std::vector<std::pair<pointset, pointset>> certify;
    // When set, sample this many pairs with the given seed instead of the
    // exhaustive 2^n x 2^n scan.
    std::optional<std::uint64_t> sample_pairs;
    std::uint64_t seed = 0;
};

// Decides normality: for every nonempty pair (A,B) with separation degree
// gamma* > 0, a Urysohn witness must exist at gamma* (min d* over closures
// >= gamma*, inf when gamma* is inf). Witness selection is deterministic:
// the first failing pair by (A,B) bitmask order, regardless of job count.
normality_verdict is_normal(const finite_space& s, const normality_options& opts = {});

struct frame_result {
    bool holds = true;
    std::optional<std::pair<pointset, pointset>> witness;
};

// Condition (2): each gamma*-separated pair admits C with A,C and X\C,B both
// gamma*/2-separated.
frame_result frame_condition2(const finite_space& s);

// Condition (3), approach frame normality of the lower frame: whenever the
// eps-enlargements of A and B are disjoint there are rho > 0 and C with
// A^(rho) disjoint from C^(rho) and (X\C)^(rho) disjoint from B^(rho).
frame_result frame_condition3(const finite_space& s);

// Classical normality of a finite topology via minimal open neighbourhoods;
// the independent reference for the topological-restriction tests.
bool topology_normal_classical(const closure_relation& c);

}  // namespace appnorm
