#pragma once

#include "appnorm/interpolation.hpp"

namespace appnorm {

// Functions on a subspace Y are passed indexed by the ambient point order;
// entries outside Y are ignored.

struct condition_violation {
    std::size_t x;       // ambient point outside Y
    std::size_t l, k;    // block indices with m_l - m_k too large
    extvalue epsilon;
};

// The development condition: for every x outside Y and block pair (l,k),
// m_l (-) m_k <= delta_{M_k}(x) + delta_{M_l}(x) in the ambient space.
// Throws CarrierMismatch when the blocks do not partition Y.
std::optional<condition_violation> tietze_condition(const finite_space& s, pointset Y,
                                                    const development& dev);

// mu-hat = f on Y and gamma off Y; mu-check = f on Y and 0 off Y.
std::pair<fn_over_space, fn_over_space> build_hats(const finite_space& s, pointset Y,
                                                   const fn_over_space& f,
                                                   const extvalue& gamma);

struct extension_result {
    enum class status { extended, condition_failed, no_extension };

    status state = status::extended;
    fn_over_space extension;                       // when extended
    std::optional<condition_violation> violation;  // when condition_failed
    std::size_t gap_point = 0;                     // when no_extension
    extvalue gap;
    // Intermediates for audit.
    fn_over_space mu_hat, mu_check, lower_of_hat, upper_of_check;

    bool extended() const { return state == status::extended; }
};

// Tietze extension: hulls of the two canonical extensions, then the direct
// interpolation between them. An extension exists iff the hulls are ordered
// and interpolable; every extension g satisfies u(mu-check) <= g <= l(mu-hat),
// so a crossing already certifies no_extension.
extension_result tietze_extend(const finite_space& s, pointset Y, const fn_over_space& f,
                               const extvalue& gamma, const development& dev);

// The proof route (2) => (1): Y = cl(A) u cl(B), f = gamma on cl(A) and 0 on
// cl(B), two-block development; an extension is a Urysohn contraction.
extension_result urysohn_via_tietze(const finite_space& s, pointset A, pointset B,
                                    const extvalue& gamma);

}  // namespace appnorm
