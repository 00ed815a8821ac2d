#pragma once

#include <string>
#include <vector>

#include "appnorm/catalog.hpp"
#include "appnorm/functions.hpp"
#include "appnorm/rng.hpp"

namespace appnorm::testing {

inline extvalue ev(const std::string& text) { return *extvalue::parse(text); }

inline finite_space space_of(const std::vector<std::string>& points,
                             const std::vector<std::vector<std::string>>& rows) {
    value_matrix q(points.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = 0; j < points.size(); ++j) q.at(i, j) = ev(rows[i][j]);
    return finite_space::validate(points, std::move(q));
}

inline finite_space e3() { return catalog_get("exInorm").space; }
inline finite_space e4() { return catalog_get("exVO").space; }

inline fn_over_space fn_of(const std::vector<std::string>& values) {
    fn_over_space f;
    for (const auto& v : values) f.values.push_back(ev(v));
    return f;
}

// All zero-diagonal matrices over the value alphabet, valid or not.
template <typename Yield>
void enumerate_matrices(std::size_t n, const std::vector<extvalue>& alphabet, Yield yield) {
    std::size_t cells = n * n - n;
    std::vector<std::size_t> pick(cells, 0);
    while (true) {
        value_matrix q(n);
        std::size_t c = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i != j) q.at(i, j) = alphabet[pick[c++]];
            }
        }
        yield(q);
        std::size_t d = 0;
        while (d < cells && ++pick[d] == alphabet.size()) pick[d++] = 0;
        if (d == cells) break;
    }
}

// Valid spaces only.
template <typename Yield>
void enumerate_spaces(std::size_t n, const std::vector<extvalue>& alphabet, Yield yield) {
    std::vector<std::string> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back(std::string(1, char('a' + i)));
    enumerate_matrices(n, alphabet, [&](const value_matrix& q) {
        try {
            yield(finite_space::validate(pts, q));
        } catch (const failure&) {
        }
    });
}

// Random euclidean contraction built from distance cones: pointwise min of
// (c_i + dstar(., p_i)) capped at the bound.
inline fn_over_space random_contraction(const finite_space& s, splitmix64& rng,
                                        const extvalue& bound) {
    fn_over_space f;
    f.values.assign(s.size(), extvalue::infinity());
    std::size_t cones = 1 + rng.below(3);
    for (std::size_t c = 0; c < cones; ++c) {
        std::size_t p = rng.below(s.size());
        extvalue base(rational((std::int64_t)rng.below(9), 2));
        for (std::size_t x = 0; x < s.size(); ++x)
            f.values[x] = min(f.values[x], base + s.dstar(x, p));
    }
    for (auto& v : f.values) v = min(v, bound);
    f.bound = bound;
    return f;
}

}  // namespace appnorm::testing
