#include "appnorm/io.hpp"

namespace appnorm {

extvalue value_from_json(const json& j) {
    if (j.is_number_unsigned() || j.is_number_integer()) {
        std::int64_t v = j.get<std::int64_t>();
        if (v < 0) throw failure("BadValue", {{"value", std::to_string(v)}});
        return extvalue(v);
    }
    if (j.is_string()) {
        auto v = extvalue::parse(j.get<std::string>());
        if (v) return *v;
    }
    throw failure("BadValue", {{"value", j.dump()}});
}

finite_space space_from_json(const json& j, orientation orient) {
    if (!j.is_object() || !j.contains("points") || !j.contains("q"))
        throw failure("BadSpaceFile", {{"reason", "expected object with points and q"}});
    std::vector<std::string> points;
    for (const auto& p : j.at("points")) points.push_back(p.get<std::string>());
    const json& rows = j.at("q");
    if (!rows.is_array() || rows.size() != points.size())
        throw failure("BadSpaceFile", {{"reason", "q row count"}});
    value_matrix q(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (rows[i].size() != points.size())
            throw failure("BadSpaceFile", {{"reason", "q column count"}});
        for (std::size_t c = 0; c < points.size(); ++c) q.at(i, c) = value_from_json(rows[i][c]);
    }
    return finite_space::validate(std::move(points), std::move(q), orient);
}

json space_to_json(const finite_space& s) {
    json rows = json::array();
    for (std::size_t i = 0; i < s.size(); ++i) {
        json row = json::array();
        for (std::size_t j2 = 0; j2 < s.size(); ++j2) row.push_back(s.q(i, j2).str());
        rows.push_back(row);
    }
    return json{{"points", s.points()}, {"q", rows}};
}

fn_over_space fn_from_json(const finite_space& s, const json& j,
                           std::optional<pointset> carrier) {
    if (!j.is_object() || !j.contains("values"))
        throw failure("BadFunctionFile", {{"reason", "expected object with values"}});
    fn_over_space f;
    f.values.assign(s.size(), extvalue(0));
    pointset expected = carrier ? *carrier : s.all();
    pointset seen;
    for (const auto& [name, v] : j.at("values").items()) {
        std::size_t i = s.index(name);
        f.values[i] = value_from_json(v);
        seen.add(i);
    }
    if (!expected.subset_of(seen))
        throw failure("BadFunctionFile", {{"reason", "missing point values"}});
    if (j.contains("bound")) f.bound = value_from_json(j.at("bound"));
    if (f.bound) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (expected.contains(i) && f.values[i] > *f.bound)
                throw failure("OutOfBound", {{"point", s.point(i)}});
        }
    }
    return f;
}

json fn_to_json(const finite_space& s, const fn_over_space& f) {
    json values = json::object();
    for (std::size_t i = 0; i < s.size(); ++i) values[s.point(i)] = f.at(i).str();
    json out{{"values", values}};
    if (f.bound) out["bound"] = f.bound->str();
    return out;
}

json pointset_to_json(const finite_space& s, pointset p) {
    return json(s.names_of(p));
}

pointset pointset_from_json(const finite_space& s, const json& j) {
    std::vector<std::string> names;
    for (const auto& n : j) names.push_back(n.get<std::string>());
    return s.set_of(names);
}

scale scale_from_json(const finite_space& s, const json& j) {
    if (!j.is_object() || !j.contains("breakpoints"))
        throw failure("BadScaleFile", {{"reason", "expected object with breakpoints"}});
    scale F;
    for (const auto& bp : j.at("breakpoints")) {
        auto t = rational::parse(bp.at("threshold").get<std::string>());
        if (!t) throw failure("BadScaleFile", {{"reason", "threshold"}});
        F.breakpoints.emplace_back(*t, pointset_from_json(s, bp.at("set")));
    }
    return F;
}

json scale_to_json(const finite_space& s, const scale& F) {
    json bps = json::array();
    for (const auto& [t, set] : F.breakpoints) {
        bps.push_back(json{{"set", pointset_to_json(s, set)}, {"threshold", t.str()}});
    }
    return json{{"breakpoints", bps}};
}

development development_from_json(const finite_space& s, const json& j) {
    development dev;
    dev.epsilon = value_from_json(j.at("epsilon"));
    for (const auto& b : j.at("blocks")) {
        dev.blocks.emplace_back(pointset_from_json(s, b.at("set")),
                                value_from_json(b.at("level")));
    }
    return dev;
}

json development_to_json(const finite_space& s, const development& dev) {
    json blocks = json::array();
    for (const auto& [set, level] : dev.blocks)
        blocks.push_back(json{{"level", level.str()}, {"set", pointset_to_json(s, set)}});
    return json{{"blocks", blocks}, {"epsilon", dev.epsilon.str()}};
}

json verdict_to_json(const finite_space& s, const normality_verdict& v) {
    json out{{"normal", v.normal},
             {"exhaustive", v.exhaustive},
             {"pairs_checked", v.pairs_checked}};
    if (v.witness) {
        out["witness"] = json{{"A", pointset_to_json(s, v.witness->A)},
                              {"B", pointset_to_json(s, v.witness->B)},
                              {"gamma", v.witness->gamma.str()},
                              {"shortfall", v.witness->shortfall.str()}};
    }
    if (!v.certificates.empty()) {
        json certs = json::array();
        for (const auto& c : v.certificates) {
            certs.push_back(json{
                {"A", pointset_to_json(s, c.A)},
                {"B", pointset_to_json(s, c.B)},
                {"gamma", c.gamma.str()},
                {"orientation", "urysohn takes gamma on cl(A) and 0 on cl(B); "
                                "the scale is verified with roles (B, A)"},
                {"scale", scale_to_json(s, c.normal_scale)},
                {"urysohn", fn_to_json(s, c.urysohn_fn)}});
        }
        out["certificates"] = certs;
    }
    return out;
}

json interpolation_to_json(const finite_space& s, const interpolation_result& r) {
    json out;
    out["status"] = r.found() ? "found" : "no_interpolant";
    if (r.found()) {
        out["interpolant"] = fn_to_json(s, r.interpolant);
    } else {
        out["gap"] = r.gap.str();
        out["point"] = s.point(r.gap_point);
    }
    if (!r.staged.empty()) {
        json staged = json::array();
        for (const auto& st : r.staged) {
            staged.push_back(json{{"bound_2w_over_n_ok", st.upper_bound_ok},
                                  {"fn", fn_to_json(s, st.fn)},
                                  {"lower_bound_ok", st.lower_bound_ok},
                                  {"n", st.n}});
        }
        out["omega"] = r.omega.str();
        out["staged"] = staged;
    }
    return out;
}

json extension_to_json(const finite_space& s, const extension_result& r) {
    json out;
    switch (r.state) {
        case extension_result::status::extended:
            out["status"] = "extended";
            out["extension"] = fn_to_json(s, r.extension);
            break;
        case extension_result::status::condition_failed:
            out["status"] = "condition_failed";
            out["violation"] = json{{"epsilon", r.violation->epsilon.str()},
                                    {"k", r.violation->k},
                                    {"l", r.violation->l},
                                    {"x", s.point(r.violation->x)}};
            break;
        case extension_result::status::no_extension:
            out["status"] = "no_extension";
            out["gap"] = r.gap.str();
            out["point"] = s.point(r.gap_point);
            break;
    }
    if (!r.mu_hat.values.empty()) {
        out["intermediates"] = json{{"lower_hull_of_mu_hat", fn_to_json(s, r.lower_of_hat)},
                                    {"mu_check", fn_to_json(s, r.mu_check)},
                                    {"mu_hat", fn_to_json(s, r.mu_hat)},
                                    {"upper_hull_of_mu_check", fn_to_json(s, r.upper_of_check)}};
    }
    return out;
}

}  // namespace appnorm
