#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "appnorm/extvalue.hpp"

namespace appnorm {

// Subset of the point set as a bitmask; the library caps instances at 64
// points, which covers every desk-scale use this tool is built for.
struct pointset {
    std::uint64_t bits = 0;

    constexpr pointset() = default;
    constexpr explicit pointset(std::uint64_t b) : bits(b) {}

    static pointset full(std::size_t n) {
        return pointset(n >= 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1));
    }
    static pointset single(std::size_t i) { return pointset(std::uint64_t(1) << i); }

    bool contains(std::size_t i) const { return (bits >> i) & 1; }
    bool empty() const { return bits == 0; }
    std::size_t count() const { return static_cast<std::size_t>(__builtin_popcountll(bits)); }

    pointset& add(std::size_t i) {
        bits |= std::uint64_t(1) << i;
        return *this;
    }

    friend pointset operator&(pointset a, pointset b) { return pointset(a.bits & b.bits); }
    friend pointset operator|(pointset a, pointset b) { return pointset(a.bits | b.bits); }
    friend bool operator==(pointset a, pointset b) { return a.bits == b.bits; }

    bool subset_of(pointset o) const { return (bits & ~o.bits) == 0; }
    pointset complement_in(std::size_t n) const {
        return pointset(full(n).bits & ~bits);
    }
};

// Square matrix of extended values, row-major.
struct value_matrix {
    std::size_t n = 0;
    std::vector<extvalue> a;

    value_matrix() = default;
    explicit value_matrix(std::size_t size) : n(size), a(size * size, extvalue(0)) {}

    extvalue& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
    const extvalue& at(std::size_t i, std::size_t j) const { return a[i * n + j]; }

    friend bool operator==(const value_matrix&, const value_matrix&) = default;
};

// Finite topology presented as its specialization preorder:
// cl[i][j] holds iff point i lies in the closure of {point j}.
struct closure_relation {
    std::vector<std::string> points;
    std::vector<std::vector<bool>> cl;

    std::size_t size() const { return points.size(); }
    bool is_preorder() const;
};

enum class orientation {
    row_to_column,   // entry [i][j] is q(points[i], points[j])
    column_to_row,   // transposed input
};

// A finite extended quasi-pseudometric space; by the finite reduction of the
// approach axioms this represents every finite approach space. Immutable
// after validate(); the min-plus path closure of the symmetrization is
// precomputed since the separation machinery leans on it everywhere.
class finite_space {
public:
    // Default-constructed spaces are empty placeholders; validate() is the
    // only way to obtain a usable one.
    finite_space() = default;

    // Checks unique ids, zero diagonal and the triangle inequality
    // (inf-absorbing addition). Throws NonzeroDiagonal / TriangleViolation /
    // DuplicatePoint / TooManyPoints / BadMatrix.
    static finite_space validate(std::vector<std::string> points, value_matrix q,
                                 orientation orient = orientation::row_to_column);

    std::size_t size() const { return points_.size(); }
    const std::vector<std::string>& points() const { return points_; }
    const std::string& point(std::size_t i) const { return points_[i]; }
    std::size_t index(const std::string& name) const;  // UnknownPoint

    const value_matrix& q() const { return q_; }
    const extvalue& q(std::size_t i, std::size_t j) const { return q_.at(i, j); }

    // delta(x, A) = min_{a in A} q(x, a); inf on the empty set (D2).
    extvalue distance(std::size_t x, pointset A) const;

    // A^(eps) = { x : delta(x, A) <= eps }.
    pointset enlargement(pointset A, const extvalue& eps) const;
    pointset closure(pointset A) const { return enlargement(A, extvalue(0)); }

    // s(x,y) = q(x,y) ^ q(y,x); zero diagonal, possibly no triangle.
    value_matrix symmetrization() const;

    // Largest metric below the symmetrization; every real-valued contraction
    // f satisfies |f(x) - f(y)| <= dstar(x,y).
    const value_matrix& path_closure() const { return dstar_; }
    const extvalue& dstar(std::size_t i, std::size_t j) const { return dstar_.at(i, j); }

    finite_space subspace(pointset Y) const;  // EmptySubspace
    closure_relation coreflection() const;

    pointset all() const { return pointset::full(size()); }
    pointset set_of(const std::vector<std::string>& names) const;
    std::vector<std::string> names_of(pointset s) const;

private:
    std::vector<std::string> points_;
    value_matrix q_;
    value_matrix dstar_;
};

// q(x,y) = 0 if x in cl{y}, inf otherwise; throws NotAPreorder.
finite_space from_topology(const closure_relation& c);

// Min-plus all-pairs closure of an arbitrary zero-diagonal matrix.
value_matrix min_plus_closure(value_matrix m);

}  // namespace appnorm
