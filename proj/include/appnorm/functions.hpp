#pragma once

#include <optional>
#include <vector>

#include "appnorm/space.hpp"

namespace appnorm {

enum class codomain_tag {
    euclid,  // contractions into ([0,inf], d_E); bounded
    lower,   // contractions into the lower structure: f(x) (-) f(y) <= q(x,y)
    upper,   // bounded, f(y) (-) f(x) <= q(x,y)
};

// A [0,inf]-valued function on the points of a space, indexed in point order.
struct fn_over_space {
    std::vector<extvalue> values;
    std::optional<extvalue> bound;  // certifies values <= bound when present

    std::size_t size() const { return values.size(); }
    const extvalue& at(std::size_t i) const { return values[i]; }

    bool finite_everywhere() const {
        for (const auto& v : values) {
            if (v.is_inf()) return false;
        }
        return true;
    }
    extvalue sup() const {
        extvalue m(0);
        for (const auto& v : values) m = max(m, v);
        return m;
    }
    extvalue inf_value() const {
        extvalue m = extvalue::infinity();
        for (const auto& v : values) m = min(m, v);
        return m;
    }

    friend bool operator==(const fn_over_space&, const fn_over_space&) = default;
};

fn_over_space make_fn(std::vector<extvalue> values,
                      std::optional<extvalue> bound = std::nullopt);

// Pointwise lattice operations; carriers must agree.
fn_over_space fn_min(const fn_over_space& a, const fn_over_space& b);
fn_over_space fn_max(const fn_over_space& a, const fn_over_space& b);
fn_over_space fn_plus_const(const fn_over_space& f, const extvalue& c);
fn_over_space fn_tsub_from_const(const extvalue& c, const fn_over_space& f);
bool fn_le(const fn_over_space& a, const fn_over_space& b);

// theta_A: 0 on A, inf (or omega when given) off A.
fn_over_space theta(const finite_space& s, pointset A,
                    std::optional<extvalue> omega = std::nullopt);

// Contractivity of f into the tagged codomain; singleton constraints suffice
// on finite spaces.
bool classify(const finite_space& s, const fn_over_space& f, codomain_tag tag);

// l(mu)(x) = min_y mu(y) + q(x,y): the largest lower-regular minorant.
fn_over_space lower_hull(const finite_space& s, const fn_over_space& mu);

// u(mu)(x) = max_y mu(y) (-) q(x,y): the least upper-regular majorant.
// Requires mu bounded (UnboundedInput).
fn_over_space upper_hull(const finite_space& s, const fn_over_space& mu);

// iota^omega_A = omega (-) delta(., X \ A); equals upper_hull(theta(A, omega)).
fn_over_space core(const finite_space& s, pointset A, const extvalue& omega);

// delta_A, optionally truncated at omega.
fn_over_space delta_fn(const finite_space& s, pointset A,
                       std::optional<extvalue> omega = std::nullopt);

// Finite-valued approximation of a bounded function from below within eps.
struct development {
    extvalue epsilon;
    std::vector<std::pair<pointset, extvalue>> blocks;  // (M_i, m_i), levels ascending

    pointset carrier() const {
        pointset c;
        for (const auto& [set, level] : blocks) c = c | set;
        return c;
    }
};

// Blocks are the level cells f^-1([i eps, (i+1) eps)), levels i*eps, empty
// cells dropped. The carrier restricts which points are developed; functions
// used in the extension theorems live on a subspace and are indexed by the
// ambient point order there.
development canonical_development(const finite_space& s, const fn_over_space& f,
                                  const extvalue& eps, std::optional<pointset> carrier = std::nullopt);

// Exact pointwise check of mu_eps <= f <= mu_eps + eps on the carrier.
bool development_valid(const finite_space& s, const development& dev,
                       const fn_over_space& f);

// Value of mu_eps = min_i (m_i + theta_{M_i}) at each carrier point; inf off
// the carrier.
fn_over_space development_floor(const finite_space& s, const development& dev);

}  // namespace appnorm
