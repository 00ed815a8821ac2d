#include "appnorm/space.hpp"

#include <algorithm>
#include <set>

namespace appnorm {

bool closure_relation::is_preorder() const {
    std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!cl[i][i]) return false;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!cl[i][j]) continue;
            for (std::size_t k = 0; k < n; ++k) {
                // i in cl{j} and j in cl{k} must give i in cl{k}
                if (cl[j][k] && !cl[i][k]) return false;
            }
        }
    }
    return true;
}

value_matrix min_plus_closure(value_matrix m) {
    std::size_t n = m.n;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                extvalue via = m.at(i, k) + m.at(k, j);
                if (via < m.at(i, j)) m.at(i, j) = via;
            }
        }
    }
    return m;
}

finite_space finite_space::validate(std::vector<std::string> points, value_matrix q,
                                    orientation orient) {
    std::size_t n = points.size();
    if (n == 0) throw failure("BadMatrix", {{"reason", "no points"}});
    if (n > 64) throw failure("TooManyPoints", {{"size", std::to_string(n)}});
    if (q.n != n || q.a.size() != n * n)
        throw failure("BadMatrix", {{"reason", "matrix size does not match point count"}});

    std::set<std::string> seen;
    for (const auto& p : points) {
        if (!seen.insert(p).second) throw failure("DuplicatePoint", {{"point", p}});
    }

    if (orient == orientation::column_to_row) {
        value_matrix t(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) t.at(i, j) = q.at(j, i);
        q = std::move(t);
    }

    for (std::size_t i = 0; i < n; ++i) {
        if (!(q.at(i, i) == extvalue(0)))
            throw failure("NonzeroDiagonal", {{"point", points[i]}});
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                if (q.at(i, k) > q.at(i, j) + q.at(j, k)) {
                    throw failure("TriangleViolation",
                                  {{"i", points[i]}, {"j", points[j]}, {"k", points[k]}});
                }
            }
        }
    }

    finite_space s;
    s.points_ = std::move(points);
    s.q_ = std::move(q);
    s.dstar_ = min_plus_closure(s.symmetrization());
    return s;
}

std::size_t finite_space::index(const std::string& name) const {
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (points_[i] == name) return i;
    }
    throw failure("UnknownPoint", {{"point", name}});
}

extvalue finite_space::distance(std::size_t x, pointset A) const {
    extvalue best = extvalue::infinity();
    for (std::size_t a = 0; a < size(); ++a) {
        if (A.contains(a) && q_.at(x, a) < best) best = q_.at(x, a);
    }
    return best;
}

pointset finite_space::enlargement(pointset A, const extvalue& eps) const {
    pointset out;
    for (std::size_t x = 0; x < size(); ++x) {
        if (distance(x, A) <= eps) out.add(x);
    }
    return out;
}

value_matrix finite_space::symmetrization() const {
    std::size_t n = size();
    value_matrix s(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s.at(i, j) = min(q_.at(i, j), q_.at(j, i));
    return s;
}

finite_space finite_space::subspace(pointset Y) const {
    if (Y.empty()) throw failure("EmptySubspace");
    std::vector<std::string> pts;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < size(); ++i) {
        if (Y.contains(i)) {
            pts.push_back(points_[i]);
            idx.push_back(i);
        }
    }
    value_matrix m(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j) m.at(i, j) = q_.at(idx[i], idx[j]);
    return validate(std::move(pts), std::move(m));
}

closure_relation finite_space::coreflection() const {
    closure_relation c;
    c.points = points_;
    c.cl.assign(size(), std::vector<bool>(size(), false));
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j) c.cl[i][j] = q_.at(i, j) == extvalue(0);
    return c;
}

pointset finite_space::set_of(const std::vector<std::string>& names) const {
    pointset s;
    for (const auto& name : names) s.add(index(name));
    return s;
}

std::vector<std::string> finite_space::names_of(pointset s) const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < size(); ++i) {
        if (s.contains(i)) out.push_back(points_[i]);
    }
    return out;
}

finite_space from_topology(const closure_relation& c) {
    if (!c.is_preorder()) throw failure("NotAPreorder");
    std::size_t n = c.size();
    value_matrix q(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            q.at(i, j) = c.cl[i][j] ? extvalue(0) : extvalue::infinity();
    return finite_space::validate(c.points, std::move(q));
}

}  // namespace appnorm
