#include "appnorm/catalog.hpp"

#include "appnorm/rng.hpp"

namespace appnorm {

namespace {

std::int64_t param_int(const std::map<std::string, std::string>& params,
                       const std::string& key, std::int64_t fallback,
                       std::int64_t lo, std::int64_t hi) {
    auto it = params.find(key);
    std::int64_t v = fallback;
    if (it != params.end()) {
        try {
            v = std::stoll(it->second);
        } catch (...) {
            throw failure("BadParams", {{key, it->second}});
        }
    }
    if (v < lo || v > hi) throw failure("BadParams", {{key, std::to_string(v)}});
    return v;
}

rational param_rational(const std::map<std::string, std::string>& params,
                        const std::string& key, const rational& fallback) {
    auto it = params.find(key);
    if (it == params.end()) return fallback;
    auto r = rational::parse(it->second);
    if (!r || !(*r > rational(0))) throw failure("BadParams", {{key, it->second}});
    return *r;
}

finite_space build_exinorm() {
    std::vector<std::string> pts{"x", "y", "z"};
    value_matrix q(3);
    auto I = extvalue::infinity();
    for (auto& v : q.a) v = I;
    for (std::size_t i = 0; i < 3; ++i) q.at(i, i) = extvalue(0);
    q.at(0, 1) = extvalue(4);  // d(x,y) = 4
    q.at(0, 2) = extvalue(1);  // d(x,z) = 1
    q.at(1, 2) = extvalue(2);  // d(y,z) = 2
    return finite_space::validate(pts, std::move(q));
}

finite_space build_exvo() {
    std::vector<std::string> pts{"x", "y", "z", "w"};
    value_matrix q(4);
    auto I = extvalue::infinity();
    for (auto& v : q.a) v = I;
    for (std::size_t i = 0; i < 4; ++i) q.at(i, i) = extvalue(0);
    q.at(0, 2) = extvalue(1);  // d(x,z) = 1
    q.at(1, 2) = extvalue(1);  // d(y,z) = 1
    q.at(3, 2) = extvalue(1);  // d(w,z) = 1
    q.at(3, 0) = extvalue(2);  // d(w,x) = 2
    q.at(3, 1) = extvalue(2);  // d(w,y) = 2
    return finite_space::validate(pts, std::move(q));
}

// Forward-only line: q(x,y) = y - x when x <= y, inf past the point.
extvalue sorgenfrey_q(const rational& a, const rational& b) {
    if (a <= b) return extvalue(b - a);
    return extvalue::infinity();
}

finite_space build_sorgenfrey(std::int64_t n, const rational& step) {
    std::vector<std::string> pts;
    std::vector<rational> coords;
    for (std::int64_t i = 0; i < n; ++i) {
        pts.push_back("p" + std::to_string(i));
        coords.push_back(step * rational(i));
    }
    value_matrix q(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j)
            q.at(i, j) = sorgenfrey_q(coords[i], coords[j]);
    return finite_space::validate(pts, std::move(q));
}

finite_space build_pplus(std::int64_t n) {
    std::vector<std::string> pts;
    for (std::int64_t i = 0; i <= n; ++i) pts.push_back(std::to_string(i));
    value_matrix q(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j)
            q.at(i, j) = tsub(extvalue(rational((std::int64_t)i)),
                              extvalue(rational((std::int64_t)j)));
    return finite_space::validate(pts, std::move(q));
}

extvalue qs_distance(const rational& a1, const rational& a2, const rational& b1,
                     const rational& b2) {
    return sorgenfrey_q(a1, b1) + sorgenfrey_q(a2, b2);
}

finite_space build_qs_grid(std::int64_t n, const rational& step) {
    std::vector<std::string> pts;
    std::vector<std::pair<rational, rational>> coords;
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t j = 0; j < n; ++j) {
            pts.push_back("x" + std::to_string(i) + "y" + std::to_string(j));
            coords.emplace_back(step * rational(i), step * rational(j));
        }
    }
    value_matrix q(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j)
            q.at(i, j) = qs_distance(coords[i].first, coords[i].second, coords[j].first,
                                     coords[j].second);
    return finite_space::validate(pts, std::move(q));
}

// Finite sample of the anti-diagonal subspace { x'' >= -x' + n } of the qS
// plane on an m x m integer grid. The source's non-normality argument for the
// full subspace is a cardinality argument, so no verdict transfers here.
finite_space build_xn_grid(std::int64_t n, std::int64_t m) {
    std::vector<std::string> pts;
    std::vector<std::pair<rational, rational>> coords;
    for (std::int64_t i = 0; i < m; ++i) {
        for (std::int64_t j = 0; j < m; ++j) {
            if (j < n - i) continue;
            pts.push_back("x" + std::to_string(i) + "y" + std::to_string(j));
            coords.emplace_back(rational(i), rational(j));
        }
    }
    if (pts.empty()) throw failure("BadParams", {{"reason", "empty sample"}});
    if (pts.size() > 64) throw failure("BadParams", {{"reason", "more than 64 points"}});
    value_matrix q(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j)
            q.at(i, j) = qs_distance(coords[i].first, coords[i].second, coords[j].first,
                                     coords[j].second);
    return finite_space::validate(pts, std::move(q));
}

std::vector<std::string> numbered(std::size_t n) {
    std::vector<std::string> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back("p" + std::to_string(i));
    return pts;
}

// Entries drawn from {0, 1/2, 1, 3/2, ..., 8, inf}; zeros and infs both show
// up so the generated instances exercise closures and components.
extvalue random_entry(splitmix64& rng, bool allow_inf) {
    std::uint64_t roll = rng.below(12);
    if (allow_inf && roll >= 10) return extvalue::infinity();
    if (roll == 0) return extvalue(0);
    return extvalue(rational(1 + (std::int64_t)rng.below(16), 2));
}

}  // namespace

finite_space catalog_random_metric(std::size_t n, std::uint64_t seed) {
    if (n == 0 || n > 64) throw failure("BadParams", {{"n", std::to_string(n)}});
    splitmix64 rng(seed ^ 0x6d657472u);
    value_matrix q(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            extvalue v = random_entry(rng, false);
            q.at(i, j) = v;
            q.at(j, i) = v;
        }
    }
    q = min_plus_closure(std::move(q));
    return finite_space::validate(numbered(n), std::move(q));
}

finite_space catalog_random_quasimetric(std::size_t n, std::uint64_t seed) {
    if (n == 0 || n > 64) throw failure("BadParams", {{"n", std::to_string(n)}});
    splitmix64 rng(seed ^ 0x71756173u);
    value_matrix q(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) q.at(i, j) = random_entry(rng, true);
    q = min_plus_closure(std::move(q));
    return finite_space::validate(numbered(n), std::move(q));
}

closure_relation random_preorder(std::size_t n, std::uint64_t seed) {
    splitmix64 rng(seed ^ 0x70726531u);
    closure_relation c;
    c.points = numbered(n);
    c.cl.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        c.cl[i][i] = true;
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && rng.below(4) == 0) c.cl[i][j] = true;
    }
    // transitive closure
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (c.cl[i][k] && c.cl[k][j]) c.cl[i][j] = true;
    return c;
}

finite_space random_preorder_space(std::size_t n, std::uint64_t seed) {
    return from_topology(random_preorder(n, seed));
}

std::vector<catalog_descriptor> catalog_list() {
    return {
        {"exInorm", "", "3-point quasi-metric space, not normal, frame condition (2) holds"},
        {"exVO", "", "4-point quasi-metric space satisfying (3) but not (2)"},
        {"exVO-repaired", "", "exVO with the designated pair of separation degree 4"},
        {"pplus-grid", "n=5", "truncated-subtraction quasi-metric on {0..n}"},
        {"sorgenfrey-grid", "n=6 step=1", "forward-distance line sample, normal"},
        {"qS-grid", "n=3 step=1", "sum quasi-metric on an n x n grid square"},
        {"Xn-grid", "n=3 m=4", "anti-diagonal sample of the qS plane; no pinned verdict"},
        {"random-metric", "n=5 seed=0", "random symmetric triangle-completed space"},
        {"random-quasimetric", "n=5 seed=0", "random directed triangle-completed space"},
    };
}

catalog_entry catalog_get(const std::string& name,
                          const std::map<std::string, std::string>& params) {
    catalog_entry e;
    e.name = name;
    if (name == "exInorm") {
        e.space = build_exinorm();
        e.designated["A"] = {"x"};
        e.designated["B"] = {"y"};
        e.provenance = "three-point counterexample: not normal, shortfall 3 at ({x},{y})";
    } else if (name == "exVO" || name == "exVO-repaired") {
        e.space = build_exvo();
        if (name == "exVO") {
            e.designated["A"] = {"x"};
            e.designated["B"] = {"y", "z", "w"};
            e.provenance =
                "four-point space; the literal pair ({x},{y,z,w}) has computed "
                "separation degree 1, not the claimed 4";
        } else {
            e.designated["A"] = {"x"};
            e.designated["B"] = {"y"};
            e.provenance =
                "exVO with the pair ({x},{y}) of separation degree 4 via the point w, "
                "under which the failure of condition (2) goes through";
        }
    } else if (name == "pplus-grid") {
        std::int64_t n = param_int(params, "n", 5, 1, 63);
        e.space = build_pplus(n);
        e.provenance = "grid sample of ([0,inf], x (-) y); all separation degrees are 0";
    } else if (name == "sorgenfrey-grid") {
        std::int64_t n = param_int(params, "n", 6, 1, 64);
        rational step = param_rational(params, "step", rational(1));
        e.space = build_sorgenfrey(n, step);
        e.provenance = "grid sample of the forward-distance line; normal";
    } else if (name == "qS-grid") {
        std::int64_t n = param_int(params, "n", 3, 1, 8);
        rational step = param_rational(params, "step", rational(1));
        e.space = build_qs_grid(n, step);
        e.provenance = "grid square with the sum quasi-metric; normal on full squares";
    } else if (name == "Xn-grid") {
        std::int64_t n = param_int(params, "n", 3, 0, 16);
        std::int64_t m = param_int(params, "m", 4, 1, 16);
        e.space = build_xn_grid(n, m);
        e.provenance =
            "finite sample of the anti-diagonal subspace; the source's non-normality "
            "is a cardinality argument and does not transfer to finite samples";
    } else if (name == "random-metric") {
        std::int64_t n = param_int(params, "n", 5, 1, 64);
        std::int64_t seed = param_int(params, "seed", 0, 0, INT64_MAX);
        e.space = catalog_random_metric((std::size_t)n, (std::uint64_t)seed);
        e.provenance = "random symmetric space; always normal";
    } else if (name == "random-quasimetric") {
        std::int64_t n = param_int(params, "n", 5, 1, 64);
        std::int64_t seed = param_int(params, "seed", 0, 0, INT64_MAX);
        e.space = catalog_random_quasimetric((std::size_t)n, (std::uint64_t)seed);
        e.provenance = "random directed space; exercises both verdicts";
    } else {
        throw failure("UnknownEntry", {{"name", name}});
    }
    return e;
}

}  // namespace appnorm
