#include "appnorm/oracle.hpp"

#include <algorithm>
#include <set>

namespace appnorm {

namespace {

void check_size(std::size_t n, const oracle_limits& lim) {
    if (n > lim.max_points)
        throw failure("InstanceTooLarge", {{"size", std::to_string(n)}});
}

void check_budget(std::size_t grid, std::size_t n, const oracle_limits& lim) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total *= grid;
        if (total > lim.max_assignments)
            throw failure("InstanceTooLarge", {{"assignments", "over budget"}});
    }
}

// Depth-first enumeration of assignments with a pairwise feasibility check
// against already-placed points; prunes most of the grid power.
template <typename Feasible, typename Complete>
bool search(std::size_t n, const std::vector<std::vector<extvalue>>& choices,
            Feasible feasible, Complete complete) {
    std::vector<extvalue> current(n, extvalue(0));
    std::vector<std::size_t> pick(n, 0);
    std::size_t depth = 0;
    while (true) {
        if (pick[depth] == choices[depth].size()) {
            if (depth == 0) return false;
            pick[depth] = 0;
            --depth;
            ++pick[depth];
            continue;
        }
        current[depth] = choices[depth][pick[depth]];
        if (!feasible(current, depth)) {
            ++pick[depth];
            continue;
        }
        if (depth + 1 == n) {
            if (complete(current)) return true;
            ++pick[depth];
            continue;
        }
        ++depth;
    }
}

bool euclid_pair_ok(const finite_space& s, const std::vector<extvalue>& v, std::size_t i,
                    std::size_t j) {
    return tsub(v[i], v[j]) <= s.q(i, j) && tsub(v[j], v[i]) <= s.q(i, j) &&
           tsub(v[i], v[j]) <= s.q(j, i) && tsub(v[j], v[i]) <= s.q(j, i);
}

}  // namespace

std::vector<extvalue> grid_values(const finite_space& s, const extvalue& bound) {
    std::set<extvalue> sums{extvalue(0)};
    std::set<extvalue> entries;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j) entries.insert(s.q(i, j));
    auto cap = [&](const extvalue& v) { return bound.finite() ? min(v, bound) : v; };
    for (std::size_t round = 0; round < s.size(); ++round) {
        std::set<extvalue> next = sums;
        for (const auto& a : sums)
            for (const auto& e : entries) next.insert(cap(a + e));
        if (next == sums) break;
        sums = std::move(next);
    }
    if (bound.finite()) sums.insert(bound);
    std::vector<extvalue> out(sums.begin(), sums.end());
    return out;
}

bool oracle_urysohn_exists(const finite_space& s, pointset A, pointset B,
                           const extvalue& gamma, const oracle_limits& lim) {
    check_size(s.size(), lim);
    if (gamma.is_inf()) throw failure("BadParams", {{"gamma", "inf"}});
    std::vector<extvalue> grid = grid_values(s, gamma);
    pointset ca = s.closure(A), cb = s.closure(B);

    std::vector<std::vector<extvalue>> choices(s.size());
    for (std::size_t x = 0; x < s.size(); ++x) {
        if (ca.contains(x)) {
            choices[x] = {gamma};
        } else if (cb.contains(x)) {
            choices[x] = {extvalue(0)};
        } else {
            choices[x] = grid;
        }
    }
    check_budget(grid.size(), s.size(), lim);
    return search(
        s.size(), choices,
        [&](const std::vector<extvalue>& v, std::size_t depth) {
            for (std::size_t j = 0; j < depth; ++j) {
                if (!euclid_pair_ok(s, v, depth, j)) return false;
            }
            return true;
        },
        [](const std::vector<extvalue>&) { return true; });
}

fn_over_space oracle_hull(const finite_space& s, const fn_over_space& mu, hull_side side,
                          const oracle_limits& lim) {
    check_size(s.size(), lim);
    if (mu.size() != s.size()) throw failure("CarrierMismatch");
    if (side == hull_side::upper && !mu.finite_everywhere())
        throw failure("UnboundedInput");

    // Candidate values: mu shifted by path sums both ways, plus the grid.
    extvalue bound = side == hull_side::upper ? mu.sup() : extvalue::infinity();
    std::set<extvalue> vals;
    std::vector<extvalue> sums = grid_values(
        s, side == hull_side::upper ? bound : extvalue::infinity());
    for (const auto& v : mu.values) {
        for (const auto& p : sums) {
            vals.insert(v + p);
            if (v.finite()) vals.insert(tsub(v, p));
        }
    }
    vals.insert(extvalue(0));
    if (side == hull_side::lower) vals.insert(extvalue::infinity());
    std::vector<extvalue> grid;
    for (const auto& v : vals) {
        if (side == hull_side::upper && v > bound) continue;
        grid.push_back(v);
    }

    std::vector<std::vector<extvalue>> choices(s.size());
    for (std::size_t x = 0; x < s.size(); ++x) {
        choices[x].clear();
        for (const auto& v : grid) {
            bool inside = side == hull_side::lower ? v <= mu.at(x) : v >= mu.at(x);
            if (inside) choices[x].push_back(v);
        }
        if (choices[x].empty()) throw failure("InternalInvariantViolated", {{"where", "oracle grid"}});
    }
    check_budget(grid.size(), s.size(), lim);

    fn_over_space best;
    best.values.assign(s.size(), side == hull_side::lower ? extvalue(0) : extvalue::infinity());
    auto feasible = [&](const std::vector<extvalue>& v, std::size_t depth) {
        for (std::size_t j = 0; j < depth; ++j) {
            if (side == hull_side::lower) {
                if (tsub(v[depth], v[j]) > s.q(depth, j)) return false;
                if (tsub(v[j], v[depth]) > s.q(j, depth)) return false;
            } else {
                if (tsub(v[j], v[depth]) > s.q(depth, j)) return false;
                if (tsub(v[depth], v[j]) > s.q(j, depth)) return false;
            }
        }
        return true;
    };
    search(
        s.size(), choices, feasible,
        [&](const std::vector<extvalue>& v) {
            for (std::size_t x = 0; x < s.size(); ++x) {
                best.values[x] = side == hull_side::lower ? max(best.values[x], v[x])
                                                          : min(best.values[x], v[x]);
            }
            return false;  // keep enumerating
        });
    return best;
}

bool oracle_kt_exists(const finite_space& s, const fn_over_space& g,
                      const fn_over_space& h, const oracle_limits& lim) {
    check_size(s.size(), lim);
    if (g.size() != s.size() || h.size() != s.size()) throw failure("CarrierMismatch");
    std::set<extvalue> vals;
    std::vector<extvalue> sums = grid_values(s, h.sup());
    for (const auto& v : h.values)
        for (const auto& p : sums) vals.insert(v + p);
    for (const auto& v : g.values) vals.insert(v);
    std::vector<std::vector<extvalue>> choices(s.size());
    for (std::size_t x = 0; x < s.size(); ++x) {
        for (const auto& v : vals) {
            if (g.at(x) <= v && v <= h.at(x)) choices[x].push_back(v);
        }
        if (choices[x].empty()) return false;
    }
    check_budget(vals.size(), s.size(), lim);
    return search(
        s.size(), choices,
        [&](const std::vector<extvalue>& v, std::size_t depth) {
            for (std::size_t j = 0; j < depth; ++j) {
                if (!euclid_pair_ok(s, v, depth, j)) return false;
            }
            return true;
        },
        [](const std::vector<extvalue>&) { return true; });
}

namespace {

bool oracle_expansive(const space_map& m, bool open_side, const oracle_limits& lim) {
    check_size(m.domain.size(), lim);
    const finite_space& dom = m.domain;
    std::vector<extvalue> grid = grid_values(dom, extvalue::infinity());
    bool has_inf = !grid.empty() && grid.back().is_inf();
    if (has_inf) grid.pop_back();

    // The extremal violating functions are truncations delta_{x'} ^ C with C
    // above every finite codomain entry; without C the grid misses
    // order-only violations against small codomain distances.
    extvalue cap(1);
    for (const auto& v : grid) cap = max(cap, v + extvalue(1));
    for (std::size_t i = 0; i < m.codomain.size(); ++i) {
        for (std::size_t j = 0; j < m.codomain.size(); ++j) {
            if (m.codomain.q(i, j).finite()) cap = max(cap, m.codomain.q(i, j) + extvalue(1));
        }
    }
    if (grid.empty() || !(grid.back() == cap)) grid.push_back(cap);
    if (!open_side) grid.push_back(extvalue::infinity());

    std::vector<std::vector<extvalue>> choices(dom.size(), grid);
    check_budget(grid.size(), dom.size(), lim);

    bool all_ok = true;
    auto feasible = [&](const std::vector<extvalue>& v, std::size_t depth) {
        for (std::size_t j = 0; j < depth; ++j) {
            if (!open_side) {
                if (tsub(v[depth], v[j]) > dom.q(depth, j)) return false;
                if (tsub(v[j], v[depth]) > dom.q(j, depth)) return false;
            } else {
                if (tsub(v[j], v[depth]) > dom.q(depth, j)) return false;
                if (tsub(v[depth], v[j]) > dom.q(j, depth)) return false;
            }
        }
        return true;
    };
    search(
        dom.size(), choices, feasible,
        [&](const std::vector<extvalue>& v) {
            fn_over_space mu{std::vector<extvalue>(v.begin(), v.end()), std::nullopt};
            fn_over_space img = image_function(m, mu);
            if (!classify(m.codomain, img,
                          open_side ? codomain_tag::upper : codomain_tag::lower)) {
                all_ok = false;
                return true;  // stop at the first violating mu
            }
            return false;
        });
    return all_ok;
}

}  // namespace

bool oracle_closed_expansive(const space_map& m, const oracle_limits& lim) {
    return oracle_expansive(m, false, lim);
}

bool oracle_open_expansive(const space_map& m, const oracle_limits& lim) {
    return oracle_expansive(m, true, lim);
}

}  // namespace appnorm
