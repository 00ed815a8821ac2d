#pragma once

#include "appnorm/maps.hpp"

namespace appnorm {

// Brute-force authorities for small instances. Grids are the truncated
// path-sum closure of the matrix entries: every extremal witness in this
// theory is a min-plus/max-plus expression in the data, hence grid-valued.

struct oracle_limits {
    std::size_t max_points = 4;
    std::uint64_t max_assignments = 40'000'000;
};

// All sums of at most |X| entries, truncated at bound, plus 0 and the bound.
std::vector<extvalue> grid_values(const finite_space& s, const extvalue& bound);

// Exhaustive search for a euclidean contraction into [0,gamma] taking gamma
// on cl(A) and 0 on cl(B).
bool oracle_urysohn_exists(const finite_space& s, pointset A, pointset B,
                           const extvalue& gamma, const oracle_limits& lim = {});

enum class hull_side { lower, upper };

// Pointwise extremum over all grid functions in the defining class.
fn_over_space oracle_hull(const finite_space& s, const fn_over_space& mu, hull_side side,
                          const oracle_limits& lim = {});

// Exhaustive search for a euclidean contraction in the box [g, h].
bool oracle_kt_exists(const finite_space& s, const fn_over_space& g,
                      const fn_over_space& h, const oracle_limits& lim = {});

// Quantification over all grid functions in the lower (resp. upper) class of
// the domain: does every pushforward stay in the class?
bool oracle_closed_expansive(const space_map& m, const oracle_limits& lim = {});
bool oracle_open_expansive(const space_map& m, const oracle_limits& lim = {});

}  // namespace appnorm
