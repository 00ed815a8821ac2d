#include "appnorm/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "appnorm/catalog.hpp"
#include "appnorm/io.hpp"
#include "appnorm/oracle.hpp"

namespace appnorm {

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw failure("FileNotFound", {{"path", path}});
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw failure("BadJson", {{"path", path}, {"what", e.what()}});
    }
    return j;
}

std::vector<std::string> split_names(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

extvalue parse_value(const std::string& text) {
    auto v = extvalue::parse(text);
    if (!v) throw failure("BadValue", {{"value", text}});
    return *v;
}

finite_space load_space(const std::string& path, bool transpose) {
    return space_from_json(load_json(path), transpose ? orientation::column_to_row
                                                      : orientation::row_to_column);
}

// Function files may carry their space inline or by path; an explicit
// --space wins.
finite_space resolve_space(const std::string& space_flag, const json& fnfile,
                           bool transpose) {
    if (!space_flag.empty()) return load_space(space_flag, transpose);
    if (fnfile.contains("space")) {
        const json& sp = fnfile.at("space");
        if (sp.is_string()) return load_space(sp.get<std::string>(), transpose);
        return space_from_json(sp);
    }
    throw failure("BadParams", {{"reason", "no space given"}});
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

struct cli_state {
    std::ostream& out;
    std::ostream& err;
    int exit_code = 0;
};

void gate_size(const finite_space& s, std::size_t limit, bool exhaustive) {
    if (s.size() > limit && !exhaustive) {
        throw failure("InstanceTooLarge",
                      {{"size", std::to_string(s.size())},
                       {"hint", "pass --exhaustive or --sample K to proceed"}});
    }
}

}  // namespace

int cli_run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"decision procedures for normality in finite approach spaces"};
    // no short -h: the interpolate command owns --h per the file-format docs
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);
    cli_state state{out, err};

    // ---- validate ----------------------------------------------------------
    std::string v_space;
    bool v_transpose = false;
    auto* c_validate = app.add_subcommand("validate", "validate a space file");
    c_validate->add_option("space", v_space)->required();
    c_validate->add_flag("--transpose", v_transpose, "entries are q(column, row)");
    c_validate->callback([&] {
        finite_space s = load_space(v_space, v_transpose);
        emit(state.out, json{{"points", s.points()}, {"size", s.size()}, {"valid", true}});
    });

    // ---- distance ----------------------------------------------------------
    std::string d_space, d_point, d_set;
    auto* c_distance = app.add_subcommand("distance", "delta(x, A)");
    c_distance->add_option("space", d_space)->required();
    c_distance->add_option("--point", d_point)->required();
    c_distance->add_option("--set", d_set)->required();
    c_distance->callback([&] {
        finite_space s = load_space(d_space, false);
        extvalue v = s.distance(s.index(d_point), s.set_of(split_names(d_set)));
        emit(state.out, json{{"value", v.str()}});
    });

    // ---- enlarge -----------------------------------------------------------
    std::string e_space, e_set, e_eps;
    auto* c_enlarge = app.add_subcommand("enlarge", "A^(eps)");
    c_enlarge->add_option("space", e_space)->required();
    c_enlarge->add_option("--set", e_set)->required();
    c_enlarge->add_option("--epsilon", e_eps)->required();
    c_enlarge->callback([&] {
        finite_space s = load_space(e_space, false);
        pointset a = s.enlargement(s.set_of(split_names(e_set)), parse_value(e_eps));
        emit(state.out, json{{"set", pointset_to_json(s, a)}});
    });

    // ---- separation --------------------------------------------------------
    std::string s_space, s_a, s_b, s_gamma;
    auto* c_sep = app.add_subcommand("separation", "separation degree / gamma check");
    c_sep->add_option("space", s_space)->required();
    c_sep->add_option("--a", s_a)->required();
    c_sep->add_option("--b", s_b)->required();
    c_sep->add_option("--gamma", s_gamma);
    c_sep->callback([&] {
        finite_space s = load_space(s_space, false);
        pointset A = s.set_of(split_names(s_a)), B = s.set_of(split_names(s_b));
        extvalue deg = separation_degree(s, A, B);
        json outj{{"degree", deg.str()}};
        if (!s_gamma.empty()) {
            bool sep = is_gamma_separated(s, A, B, parse_value(s_gamma));
            outj["gamma"] = s_gamma;
            outj["separated"] = sep;
            state.exit_code = sep ? 0 : 1;
        }
        emit(state.out, outj);
    });

    // ---- urysohn -----------------------------------------------------------
    std::string u_space, u_a, u_b, u_gamma;
    auto* c_ury = app.add_subcommand("urysohn", "synthesize a Urysohn contraction");
    c_ury->add_option("space", u_space)->required();
    c_ury->add_option("--a", u_a)->required();
    c_ury->add_option("--b", u_b)->required();
    c_ury->add_option("--gamma", u_gamma)->required();
    c_ury->callback([&] {
        finite_space s = load_space(u_space, false);
        urysohn_result r = urysohn(s, s.set_of(split_names(u_a)),
                                   s.set_of(split_names(u_b)), parse_value(u_gamma));
        if (r.found()) {
            json fj = fn_to_json(s, *r.witness);
            fj["orientation"] = "gamma on cl(A), 0 on cl(B)";
            emit(state.out, fj);
        } else {
            emit(state.out, json{{"max_gamma", r.max_gamma.str()},
                                 {"no_witness", true}});
            state.exit_code = 1;
        }
    });

    // ---- scale -------------------------------------------------------------
    auto* c_scale = app.add_subcommand("scale", "contractive scales");
    c_scale->require_subcommand(1);
    std::string sc_space, sc_file, sc_a, sc_b, sc_gamma;

    auto* c_from = c_scale->add_subcommand("from-fn", "sublevel scale of a contraction");
    c_from->add_option("fn", sc_file)->required();
    c_from->add_option("--space", sc_space);
    c_from->callback([&] {
        json fj = load_json(sc_file);
        finite_space s = resolve_space(sc_space, fj, false);
        emit(state.out, scale_to_json(s, contraction_to_scale(s, fn_from_json(s, fj))));
    });

    auto* c_to = c_scale->add_subcommand("to-fn", "readout contraction of a scale");
    c_to->add_option("scale", sc_file)->required();
    c_to->add_option("--space", sc_space)->required();
    c_to->callback([&] {
        finite_space s = load_space(sc_space, false);
        scale F = scale_from_json(s, load_json(sc_file));
        emit(state.out, fn_to_json(s, scale_to_contraction(s, F)));
    });

    auto* c_verify = c_scale->add_subcommand("verify", "normality conditions (i)-(iii)");
    c_verify->add_option("scale", sc_file)->required();
    c_verify->add_option("--space", sc_space)->required();
    c_verify->add_option("--a", sc_a)->required();
    c_verify->add_option("--b", sc_b)->required();
    c_verify->add_option("--gamma", sc_gamma)->required();
    c_verify->callback([&] {
        finite_space s = load_space(sc_space, false);
        scale F = scale_from_json(s, load_json(sc_file));
        bool ok = verify_normal_scale(s, F, s.set_of(split_names(sc_a)),
                                      s.set_of(split_names(sc_b)), parse_value(sc_gamma));
        emit(state.out,
             json{{"orientation", "associated contraction is 0 on cl(A), gamma on cl(B)"},
                  {"verified", ok}});
        state.exit_code = ok ? 0 : 1;
    });

    // ---- normality ---------------------------------------------------------
    std::string n_space;
    unsigned n_jobs = 1;
    bool n_exhaustive = false;
    std::uint64_t n_seed = 0;
    std::int64_t n_sample = -1;
    std::vector<std::string> n_certify;
    auto* c_norm = app.add_subcommand("normality", "decide normality");
    c_norm->add_option("space", n_space)->required();
    c_norm->add_option("--jobs", n_jobs, "parallel workers (output is identical)");
    c_norm->add_flag("--exhaustive", n_exhaustive, "allow the full scan past 10 points");
    c_norm->add_option("--sample", n_sample, "sample this many pairs instead");
    c_norm->add_option("--seed", n_seed);
    c_norm->add_option("--certify", n_certify,
                       "pair A:B (comma-separated names) to certify when normal");
    c_norm->callback([&] {
        finite_space s = load_space(n_space, false);
        normality_options opts;
        opts.jobs = n_jobs;
        opts.seed = n_seed;
        if (n_sample >= 0) {
            opts.sample_pairs = (std::uint64_t)n_sample;
        } else {
            gate_size(s, 10, n_exhaustive);
        }
        for (const auto& pair_spec : n_certify) {
            auto colon = pair_spec.find(':');
            if (colon == std::string::npos)
                throw failure("BadParams", {{"certify", pair_spec}});
            opts.certify.emplace_back(s.set_of(split_names(pair_spec.substr(0, colon))),
                                      s.set_of(split_names(pair_spec.substr(colon + 1))));
        }
        normality_verdict v = is_normal(s, opts);
        emit(state.out, verdict_to_json(s, v));
        state.exit_code = v.normal ? 0 : 1;
    });

    // ---- frame -------------------------------------------------------------
    auto* c_frame = app.add_subcommand("frame", "frame normality conditions");
    c_frame->require_subcommand(1);
    std::string f_space;
    bool f_exhaustive = false;
    auto frame_cmd = [&](const std::string& name, auto&& runner) {
        auto* sub = c_frame->add_subcommand(name);
        sub->add_option("space", f_space)->required();
        sub->add_flag("--exhaustive", f_exhaustive);
        sub->callback([&state, &f_space, &f_exhaustive, runner] {
            finite_space s = load_space(f_space, false);
            gate_size(s, 8, f_exhaustive);
            frame_result r = runner(s);
            json outj{{"holds", r.holds}};
            if (r.witness) {
                outj["witness"] = json{{"A", pointset_to_json(s, r.witness->first)},
                                       {"B", pointset_to_json(s, r.witness->second)}};
            }
            emit(state.out, outj);
            state.exit_code = r.holds ? 0 : 1;
        });
    };
    frame_cmd("cond2", [](const finite_space& s) { return frame_condition2(s); });
    frame_cmd("cond3", [](const finite_space& s) { return frame_condition3(s); });

    // ---- interpolate -------------------------------------------------------
    std::string i_space, i_g, i_h;
    int i_staged = 0;
    auto* c_interp = app.add_subcommand("interpolate", "Katetov-Tong interpolation");
    c_interp->add_option("--space", i_space)->required();
    c_interp->add_option("--g", i_g)->required();
    c_interp->add_option("--h", i_h)->required();
    c_interp->add_option("--staged", i_staged, "also run the staged construction to N");
    c_interp->callback([&] {
        finite_space s = load_space(i_space, false);
        fn_over_space g = fn_from_json(s, load_json(i_g));
        fn_over_space h = fn_from_json(s, load_json(i_h));
        interpolation_result r =
            i_staged > 0 ? kt_staged(s, g, h, i_staged) : kt_direct(s, g, h);
        emit(state.out, interpolation_to_json(s, r));
        state.exit_code = r.found() ? 0 : 1;
    });

    // ---- extend ------------------------------------------------------------
    std::string x_space, x_sub, x_f, x_gamma, x_dev, x_dev_eps;
    auto* c_extend = app.add_subcommand("extend", "Tietze extension");
    c_extend->add_option("--space", x_space)->required();
    c_extend->add_option("--subspace", x_sub)->required();
    c_extend->add_option("--f", x_f)->required();
    c_extend->add_option("--gamma", x_gamma)->required();
    c_extend->add_option("--dev", x_dev, "development file");
    c_extend->add_option("--dev-canonical", x_dev_eps, "canonical development at eps");
    c_extend->callback([&] {
        finite_space s = load_space(x_space, false);
        pointset Y = s.set_of(split_names(x_sub));
        fn_over_space f = fn_from_json(s, load_json(x_f), Y);
        extvalue gamma = parse_value(x_gamma);
        development dev;
        if (!x_dev.empty()) {
            dev = development_from_json(s, load_json(x_dev));
        } else if (!x_dev_eps.empty()) {
            dev = canonical_development(s, f, parse_value(x_dev_eps), Y);
        } else {
            throw failure("BadParams", {{"reason", "need --dev or --dev-canonical"}});
        }
        extension_result r = tietze_extend(s, Y, f, gamma, dev);
        emit(state.out, extension_to_json(s, r));
        state.exit_code = r.extended() ? 0 : 1;
    });

    // ---- check-map ---------------------------------------------------------
    std::string m_file, m_pred;
    auto* c_map = app.add_subcommand("check-map", "map predicates");
    c_map->add_option("map", m_file)->required();
    c_map->add_option("--predicate", m_pred)
        ->required()
        ->check(CLI::IsMember({"contraction", "closed", "open"}));
    c_map->callback([&] {
        json mj = load_json(m_file);
        auto load_part = [&](const char* key) {
            const json& part = mj.at(key);
            if (part.is_string()) return load_space(part.get<std::string>(), false);
            return space_from_json(part);
        };
        finite_space dom = load_part("domain");
        finite_space cod = load_part("codomain");
        std::vector<std::size_t> assign(dom.size());
        for (const auto& [from, to] : mj.at("assignment").items())
            assign[dom.index(from)] = cod.index(to.get<std::string>());
        if (mj.at("assignment").size() != dom.size())
            throw failure("BadParams", {{"reason", "assignment not total"}});
        space_map m = make_map(std::move(dom), std::move(cod), std::move(assign));
        bool ok = m_pred == "contraction"  ? is_contraction_map(m)
                  : m_pred == "closed"     ? is_closed_expansive(m)
                                           : is_open_expansive(m);
        emit(state.out, json{{"holds", ok}, {"predicate", m_pred}});
        state.exit_code = ok ? 0 : 1;
    });

    // ---- catalog -----------------------------------------------------------
    auto* c_cat = app.add_subcommand("catalog", "named instances");
    c_cat->require_subcommand(1);
    auto* c_list = c_cat->add_subcommand("list");
    c_list->callback([&] {
        json entries = json::array();
        for (const auto& d : catalog_list()) {
            entries.push_back(
                json{{"name", d.name}, {"params", d.params}, {"summary", d.summary}});
        }
        emit(state.out, json{{"entries", entries}});
    });
    std::string cat_name;
    std::vector<std::string> cat_params;
    auto* c_emit = c_cat->add_subcommand("emit");
    c_emit->add_option("name", cat_name)->required();
    c_emit->add_option("--param", cat_params, "key=value");
    c_emit->callback([&] {
        std::map<std::string, std::string> params;
        for (const auto& p : cat_params) {
            auto eq = p.find('=');
            if (eq == std::string::npos) throw failure("BadParams", {{"param", p}});
            params[p.substr(0, eq)] = p.substr(eq + 1);
        }
        catalog_entry entry = catalog_get(cat_name, params);
        json j = space_to_json(entry.space);
        if (!entry.designated.empty()) j["designated"] = entry.designated;
        j["provenance"] = entry.provenance;
        emit(state.out, j);
    });

    // ---- oracle (dev-only) -------------------------------------------------
    auto* c_oracle = app.add_subcommand("oracle", "brute-force authorities");
    c_oracle->require_subcommand(1);
    std::string o_space, o_a, o_b, o_gamma, o_g, o_h, o_fn, o_side;

    auto* c_oury = c_oracle->add_subcommand("urysohn");
    c_oury->add_option("space", o_space)->required();
    c_oury->add_option("--a", o_a)->required();
    c_oury->add_option("--b", o_b)->required();
    c_oury->add_option("--gamma", o_gamma)->required();
    c_oury->callback([&] {
        finite_space s = load_space(o_space, false);
        bool ok = oracle_urysohn_exists(s, s.set_of(split_names(o_a)),
                                        s.set_of(split_names(o_b)), parse_value(o_gamma));
        emit(state.out, json{{"exists", ok}});
        state.exit_code = ok ? 0 : 1;
    });

    auto* c_okt = c_oracle->add_subcommand("kt");
    c_okt->add_option("space", o_space)->required();
    c_okt->add_option("--g", o_g)->required();
    c_okt->add_option("--h", o_h)->required();
    c_okt->callback([&] {
        finite_space s = load_space(o_space, false);
        bool ok = oracle_kt_exists(s, fn_from_json(s, load_json(o_g)),
                                   fn_from_json(s, load_json(o_h)));
        emit(state.out, json{{"exists", ok}});
        state.exit_code = ok ? 0 : 1;
    });

    auto* c_ohull = c_oracle->add_subcommand("hull");
    c_ohull->add_option("space", o_space)->required();
    c_ohull->add_option("--fn", o_fn)->required();
    c_ohull->add_option("--side", o_side)->required()->check(CLI::IsMember({"lower", "upper"}));
    c_ohull->callback([&] {
        finite_space s = load_space(o_space, false);
        fn_over_space f = fn_from_json(s, load_json(o_fn));
        fn_over_space h = oracle_hull(
            s, f, o_side == "lower" ? hull_side::lower : hull_side::upper);
        emit(state.out, fn_to_json(s, h));
    });

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << json{{"error", "UsageError"}, {"what", e.what()}}.dump(2) << "\n";
        return 2;
    } catch (const failure& e) {
        json details = json::object();
        for (const auto& [k, v] : e.details()) details[k] = v;
        err << json{{"details", details}, {"error", e.code()}}.dump(2) << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << json{{"error", "Unexpected"}, {"what", e.what()}}.dump(2) << "\n";
        return 2;
    }
    return state.exit_code;
}

}  // namespace appnorm
