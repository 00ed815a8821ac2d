#pragma once

#include "appnorm/separation.hpp"

namespace appnorm {

struct stage_record {
    int n = 0;
    fn_over_space fn;       // f_n
    bool lower_bound_ok = false;  // g <= f_n, exact
    bool upper_bound_ok = false;  // f_n <= h + 2*omega/n, exact
};

struct interpolation_result {
    enum class status { found, no_interpolant };

    status state = status::found;
    fn_over_space interpolant;       // when found
    std::size_t gap_point = 0;       // when not
    extvalue gap;                    // max of g - f* over points
    std::vector<stage_record> staged;
    extvalue omega;                  // bound used by the staged construction

    bool found() const { return state == status::found; }
};

// Largest d*-Lipschitz minorant of h: f*(x) = min_y h(y) + d*(x,y). An
// interpolant in [g,h] exists iff g <= f*, in which case f* is one and is
// pointwise maximal among all of them. Preconditions: g upper regular,
// h lower regular, both bounded, g <= h.
interpolation_result kt_direct(const finite_space& s, const fn_over_space& g,
                               const fn_over_space& h);

// The staged proof construction: for each n in 3..N builds the stage
// functions from Urysohn witnesses on the level pairs
// A_{m,n} = {h <= omega m/n}, B_{k,n} = {g >= omega (2k+1)/(2n)}, verifies
// the exact bounds g <= f_n and f_n <= h + 2*omega/n, and emits the final
// interpolant through the finite Tong combination (cross-checked against
// kt_direct). Throws StageSeparationFailure(m,k,n) when a stage has no
// Urysohn witness, which signals a non-normal space.
interpolation_result kt_staged(const finite_space& s, const fn_over_space& g,
                               const fn_over_space& h, int stages);

// Finite Tong combination: returns the pointwise infimum of fs (a contraction
// on finite spaces) after certifying inf fs <= sup (omega - gs); throws
// SandwichViolated otherwise.
fn_over_space tong_combine(const finite_space& s, const std::vector<fn_over_space>& fs,
                           const std::vector<fn_over_space>& gs, const extvalue& omega);

struct kt_witness {
    fn_over_space g, h;
    extvalue gamma;
};

// From a non-normality witness (A,B,gamma): g = iota^gamma_{X\A},
// h = delta^gamma_B satisfy g <= h yet admit no interpolant. Throws
// SpaceIsNormal on normal input.
kt_witness kt_witness_from_nonnormal(const finite_space& s);

}  // namespace appnorm
