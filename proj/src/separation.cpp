#include "appnorm/separation.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "appnorm/rng.hpp"

namespace appnorm {

extvalue separation_degree_or_inf(const finite_space& s, pointset A, pointset B) {
    extvalue best = extvalue::infinity();
    for (std::size_t x = 0; x < s.size(); ++x) {
        extvalue sum = s.distance(x, A) + s.distance(x, B);
        if (sum < best) best = sum;
    }
    return best;
}

extvalue separation_degree(const finite_space& s, pointset A, pointset B) {
    if (A.empty() || B.empty()) throw failure("EmptySet");
    return separation_degree_or_inf(s, A, B);
}

bool is_gamma_separated(const finite_space& s, pointset A, pointset B,
                        const extvalue& gamma) {
    if (!(gamma > extvalue(0))) throw failure("BadParams", {{"gamma", gamma.str()}});
    extvalue sep = separation_degree(s, A, B);
    bool closed_form = gamma <= sep;

    // Definition check over realized (alpha, beta): enlargements only change
    // at realized delta values, so these pairs are exhaustive.
    bool direct = true;
    std::vector<extvalue> alphas, betas;
    for (std::size_t x = 0; x < s.size(); ++x) {
        alphas.push_back(s.distance(x, A));
        betas.push_back(s.distance(x, B));
    }
    for (const auto& a : alphas) {
        if (!direct) break;
        if (a.is_inf()) continue;
        for (const auto& b : betas) {
            if (b.is_inf()) continue;
            if (a + b >= gamma) continue;
            if (!(s.enlargement(A, a) & s.enlargement(B, b)).empty()) {
                direct = false;
                break;
            }
        }
    }
    if (direct != closed_form)
        throw failure("InternalInvariantViolated", {{"where", "is_gamma_separated"}});
    return closed_form;
}

std::array<bool, 3> prop_inequal_check(const finite_space& s, pointset A, pointset B,
                                       const extvalue& gamma) {
    if (A.empty() || B.empty()) throw failure("EmptySet");
    if (gamma.is_inf() || !(gamma > extvalue(0)))
        throw failure("BadParams", {{"gamma", gamma.str()}});
    bool sep = gamma <= separation_degree(s, A, B);
    // (2): iota^g_{X\B} <= delta^g_A, and (3) with roles swapped.
    bool two = fn_le(core(s, B.complement_in(s.size()), gamma), delta_fn(s, A, gamma));
    bool three = fn_le(core(s, A.complement_in(s.size()), gamma), delta_fn(s, B, gamma));
    return {sep, two, three};
}

extvalue closure_pair_dstar(const finite_space& s, pointset A, pointset B) {
    pointset ca = s.closure(A), cb = s.closure(B);
    extvalue best = extvalue::infinity();
    for (std::size_t a = 0; a < s.size(); ++a) {
        if (!ca.contains(a)) continue;
        for (std::size_t b = 0; b < s.size(); ++b) {
            if (!cb.contains(b)) continue;
            if (s.dstar(a, b) < best) best = s.dstar(a, b);
        }
    }
    return best;
}

urysohn_result urysohn(const finite_space& s, pointset A, pointset B,
                       const extvalue& gamma) {
    if (A.empty() || B.empty()) throw failure("EmptySet");
    if (gamma.is_inf() || !(gamma > extvalue(0)))
        throw failure("BadParams", {{"gamma", gamma.str()}});
    if (!(gamma <= separation_degree(s, A, B)))
        throw failure("NotSeparated", {{"gamma", gamma.str()}});

    urysohn_result out;
    out.max_gamma = closure_pair_dstar(s, A, B);
    if (out.max_gamma < gamma) return out;

    pointset cb = s.closure(B);
    fn_over_space f;
    f.values.reserve(s.size());
    for (std::size_t x = 0; x < s.size(); ++x) {
        extvalue d = extvalue::infinity();
        for (std::size_t b = 0; b < s.size(); ++b) {
            if (cb.contains(b) && s.dstar(x, b) < d) d = s.dstar(x, b);
        }
        f.values.push_back(min(gamma, d));
    }
    f.bound = gamma;
    out.witness = std::move(f);
    return out;
}

pointset scale::at(const rational& q) const {
    pointset out;
    for (const auto& [t, set] : breakpoints) {
        if (t <= q) out = set;
    }
    return out;
}

pointset scale::before(const rational& q) const {
    pointset out;
    for (const auto& [t, set] : breakpoints) {
        if (t < q) out = out | set;
    }
    return out;
}

namespace {

bool scale_representation_ok(const finite_space& s, const scale& F) {
    if (F.breakpoints.empty()) return false;
    for (std::size_t i = 0; i + 1 < F.breakpoints.size(); ++i) {
        if (!(F.breakpoints[i].first < F.breakpoints[i + 1].first)) return false;
        if (!F.breakpoints[i].second.subset_of(F.breakpoints[i + 1].second)) return false;
    }
    return F.breakpoints.back().second == s.all();
}

}  // namespace

std::optional<std::pair<rational, rational>> scale_violation(const finite_space& s,
                                                             const scale& F) {
    // For r in [t_i, t_{i+1}) and s in [t_j, t_{j+1}) the requirement over all
    // rational r < s tightens to sep(S_i, X \ S_j) >= t_{j+1} - t_i.
    std::size_t m = F.breakpoints.size();
    for (std::size_t j = 0; j + 1 < m; ++j) {
        for (std::size_t i = 0; i <= j; ++i) {
            pointset Si = F.breakpoints[i].second;
            pointset notSj = F.breakpoints[j].second.complement_in(s.size());
            extvalue sep = separation_degree_or_inf(s, Si, notSj);
            rational need = F.breakpoints[j + 1].first - F.breakpoints[i].first;
            if (sep >= extvalue(0) && need <= rational(0)) continue;
            if (sep.is_inf() || sep >= extvalue(need)) continue;
            // Concrete violating pair: r = t_i, s strictly between the
            // achieved separation offset and t_{j+1}.
            rational r = F.breakpoints[i].first;
            rational lowest = std::max(F.breakpoints[j].first, r + sep.ratio());
            rational svalue = (lowest + F.breakpoints[j + 1].first) / rational(2);
            return std::make_pair(r, svalue);
        }
    }
    return std::nullopt;
}

fn_over_space scale_to_contraction(const finite_space& s, const scale& F) {
    if (!scale_representation_ok(s, F))
        throw failure("InvalidScale", {{"reason", "representation"}});
    if (auto v = scale_violation(s, F)) {
        throw failure("InvalidScale",
                      {{"r", v->first.str()}, {"s", v->second.str()}});
    }
    fn_over_space f;
    f.values.reserve(s.size());
    for (std::size_t x = 0; x < s.size(); ++x) {
        bool found = false;
        for (const auto& [t, set] : F.breakpoints) {
            if (set.contains(x)) {
                if (t.is_negative()) throw failure("InvalidScale", {{"reason", "negative readout"}});
                f.values.push_back(extvalue(t));
                found = true;
                break;
            }
        }
        if (!found) throw failure("InvalidScale", {{"reason", "uncovered point"}});
    }
    f.bound = f.sup();
    if (!classify(s, f, codomain_tag::euclid))
        throw failure("InternalInvariantViolated", {{"where", "scale_to_contraction"}});
    return f;
}

scale contraction_to_scale(const finite_space& s, const fn_over_space& f) {
    if (!f.finite_everywhere() || !classify(s, f, codomain_tag::euclid))
        throw failure("NotContractive");
    std::set<rational> values;
    for (const auto& v : f.values) values.insert(v.ratio());
    scale F;
    for (const auto& v : values) {
        pointset sub;
        for (std::size_t x = 0; x < s.size(); ++x) {
            if (f.at(x) <= extvalue(v)) sub.add(x);
        }
        F.breakpoints.emplace_back(v, sub);
    }
    return F;
}

bool verify_normal_scale(const finite_space& s, const scale& F, pointset A, pointset B,
                         const extvalue& gamma) {
    if (gamma.is_inf() || !(gamma > extvalue(0)))
        throw failure("BadParams", {{"gamma", gamma.str()}});
    if (!scale_representation_ok(s, F)) return false;
    if (scale_violation(s, F)) return false;
    // (i) empty below zero
    for (const auto& [t, set] : F.breakpoints) {
        if (t.is_negative() && !set.empty()) return false;
    }
    // (ii) cl(A) inside every F(q) with q > 0, i.e. inside the set at 0+
    if (!s.closure(A).subset_of(F.at(rational(0)))) return false;
    // (iii) cl(B) misses the strict sublevel at gamma; the union over
    // ]0, gamma] of closed sublevels is read strictly, which is the reading
    // under which the scale built from a Urysohn contraction qualifies.
    if (!(s.closure(B) & F.before(gamma.ratio())).empty()) return false;
    return true;
}

namespace {

struct pair_tables {
    std::size_t n = 0;
    std::vector<extvalue> dq;  // [mask * n + x] = delta(x, mask)
    std::vector<extvalue> ds;  // [mask * n + x] = min_{b in mask} dstar(x, b)
    std::vector<std::uint64_t> cl;  // closure mask per mask
};

pair_tables build_tables(const finite_space& s) {
    std::size_t n = s.size();
    if (n > 16) throw failure("InstanceTooLarge", {{"size", std::to_string(n)}});
    std::size_t masks = std::size_t(1) << n;
    pair_tables t;
    t.n = n;
    t.dq.assign(masks * n, extvalue::infinity());
    t.ds.assign(masks * n, extvalue::infinity());
    t.cl.assign(masks, 0);
    for (std::size_t mask = 1; mask < masks; ++mask) {
        std::size_t low = static_cast<std::size_t>(__builtin_ctzll(mask));
        std::size_t rest = mask & (mask - 1);
        for (std::size_t x = 0; x < n; ++x) {
            t.dq[mask * n + x] = min(t.dq[rest * n + x], s.q(x, low));
            t.ds[mask * n + x] = min(t.ds[rest * n + x], s.dstar(x, low));
        }
        std::uint64_t c = 0;
        for (std::size_t x = 0; x < n; ++x) {
            if (t.dq[mask * n + x] == extvalue(0)) c |= std::uint64_t(1) << x;
        }
        t.cl[mask] = c;
    }
    return t;
}

// Separation degree and closure-pair d* for one pair, table-backed.
extvalue table_sep(const pair_tables& t, std::size_t A, std::size_t B) {
    extvalue best = extvalue::infinity();
    for (std::size_t x = 0; x < t.n; ++x) {
        extvalue sum = t.dq[A * t.n + x] + t.dq[B * t.n + x];
        if (sum < best) best = sum;
    }
    return best;
}

extvalue table_w(const pair_tables& t, std::size_t A, std::size_t B) {
    std::uint64_t ca = t.cl[A], cbmask = t.cl[B];
    extvalue best = extvalue::infinity();
    for (std::size_t a = 0; a < t.n; ++a) {
        if (!((ca >> a) & 1)) continue;
        extvalue v = t.ds[cbmask * t.n + a];
        if (v < best) best = v;
    }
    return best;
}

std::optional<normality_witness> scan_range(const pair_tables& t, std::size_t afirst,
                                            std::size_t alast) {
    std::size_t masks = std::size_t(1) << t.n;
    for (std::size_t A = afirst; A < alast; ++A) {
        for (std::size_t B = 1; B < masks; ++B) {
            extvalue sep = table_sep(t, A, B);
            if (!(sep > extvalue(0))) continue;
            extvalue w = table_w(t, A, B);
            if (w >= sep) continue;
            return normality_witness{pointset(A), pointset(B), sep, w};
        }
    }
    return std::nullopt;
}

}  // namespace

normality_verdict is_normal(const finite_space& s, const normality_options& opts) {
    normality_verdict verdict;

    if (opts.sample_pairs) {
        verdict.exhaustive = false;
        splitmix64 rng(opts.seed);
        std::uint64_t full = pointset::full(s.size()).bits;
        for (std::uint64_t i = 0; i < *opts.sample_pairs; ++i) {
            pointset A(rng.next() & full), B(rng.next() & full);
            if (A.empty() || B.empty()) continue;
            ++verdict.pairs_checked;
            extvalue sep = separation_degree_or_inf(s, A, B);
            if (!(sep > extvalue(0))) continue;
            extvalue w = closure_pair_dstar(s, A, B);
            if (w >= sep) continue;
            verdict.normal = false;
            verdict.witness = normality_witness{A, B, sep, w};
            return verdict;
        }
        verdict.normal = true;
        return verdict;
    }

    pair_tables tables = build_tables(s);
    std::size_t masks = std::size_t(1) << s.size();
    verdict.pairs_checked = static_cast<std::uint64_t>(masks - 1) * (masks - 1);

    std::optional<normality_witness> found;
    unsigned jobs = std::max(1u, opts.jobs);
    if (jobs == 1 || masks < 64) {
        found = scan_range(tables, 1, masks);
    } else {
        std::vector<std::optional<normality_witness>> results(jobs);
        std::vector<std::thread> workers;
        std::size_t chunk = (masks - 1 + jobs - 1) / jobs;
        for (unsigned j = 0; j < jobs; ++j) {
            std::size_t lo = 1 + j * chunk;
            std::size_t hi = std::min(masks, lo + chunk);
            if (lo >= hi) continue;
            workers.emplace_back(
                [&tables, &results, j, lo, hi] { results[j] = scan_range(tables, lo, hi); });
        }
        for (auto& w : workers) w.join();
        for (auto& r : results) {
            if (!r) continue;
            if (!found || r->A.bits < found->A.bits ||
                (r->A.bits == found->A.bits && r->B.bits < found->B.bits)) {
                found = r;
            }
        }
    }

    if (found) {
        verdict.normal = false;
        verdict.witness = *found;
        return verdict;
    }
    verdict.normal = true;

    for (const auto& [A, B] : opts.certify) {
        extvalue sep = separation_degree(s, A, B);
        if (!(sep > extvalue(0)))
            throw failure("NotSeparated", {{"reason", "certify pair has separation degree 0"}});
        extvalue gamma = sep.finite() ? sep : extvalue(1);
        urysohn_result u = urysohn(s, A, B, gamma);
        if (!u.found()) throw failure("InternalInvariantViolated", {{"where", "certify"}});
        normality_certificate cert;
        cert.A = A;
        cert.B = B;
        cert.gamma = gamma;
        cert.urysohn_fn = *u.witness;
        cert.normal_scale = contraction_to_scale(s, cert.urysohn_fn);
        if (!verify_normal_scale(s, cert.normal_scale, B, A, gamma))
            throw failure("InternalInvariantViolated", {{"where", "certificate scale"}});
        verdict.certificates.push_back(std::move(cert));
    }
    return verdict;
}

frame_result frame_condition2(const finite_space& s) {
    pair_tables t = build_tables(s);
    std::size_t masks = std::size_t(1) << s.size();
    for (std::size_t A = 1; A < masks; ++A) {
        for (std::size_t B = 1; B < masks; ++B) {
            extvalue sep = table_sep(t, A, B);
            if (!(sep > extvalue(0))) continue;
            extvalue half = sep.finite() ? sep / rational(2) : sep;
            bool ok = false;
            for (std::size_t C = 0; C < masks && !ok; ++C) {
                std::size_t notC = ~C & (masks - 1);
                ok = table_sep(t, A, C) >= half && table_sep(t, notC, B) >= half;
            }
            if (!ok) return {false, std::make_pair(pointset(A), pointset(B))};
        }
    }
    return {};
}

frame_result frame_condition3(const finite_space& s) {
    pair_tables t = build_tables(s);
    std::size_t n = s.size();
    std::size_t masks = std::size_t(1) << n;

    std::set<rational> realized;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const extvalue& v = s.q(i, j);
            if (v.finite() && v > extvalue(0)) realized.insert(v.ratio());
        }
    }

    auto enlarge = [&](std::size_t mask, const rational& eps) {
        std::uint64_t out = 0;
        for (std::size_t x = 0; x < n; ++x) {
            if (t.dq[mask * n + x] <= extvalue(eps)) out |= std::uint64_t(1) << x;
        }
        return out;
    };

    // Distinct hypotheses occur at the realized values plus one probe below
    // the smallest of them.
    std::vector<rational> eps_candidates;
    if (!realized.empty()) eps_candidates.push_back(*realized.begin() / rational(2));
    for (const auto& v : realized) eps_candidates.push_back(v);
    if (eps_candidates.empty()) eps_candidates.push_back(rational(1));

    for (std::size_t A = 1; A < masks; ++A) {
        for (std::size_t B = 1; B < masks; ++B) {
            std::vector<rational> qualifying;
            for (const auto& eps : eps_candidates) {
                if ((enlarge(A, eps) & enlarge(B, eps)) == 0) qualifying.push_back(eps);
            }
            if (qualifying.empty()) continue;

            std::set<rational> rho_candidates;
            for (const auto& v : realized) rho_candidates.insert(v / rational(2));
            for (const auto& eps : qualifying) rho_candidates.insert(eps / rational(5));

            bool ok = false;
            for (std::size_t C = 0; C < masks && !ok; ++C) {
                std::size_t notC = ~C & (masks - 1);
                for (const auto& rho : rho_candidates) {
                    if ((enlarge(A, rho) & enlarge(C, rho)) != 0) continue;
                    if ((enlarge(notC, rho) & enlarge(B, rho)) != 0) continue;
                    ok = true;
                    break;
                }
            }
            if (!ok) return {false, std::make_pair(pointset(A), pointset(B))};
        }
    }
    return {};
}

bool topology_normal_classical(const closure_relation& c) {
    std::size_t n = c.size();
    if (n > 16) throw failure("InstanceTooLarge", {{"size", std::to_string(n)}});
    std::size_t masks = std::size_t(1) << n;

    // Minimal open neighbourhood of x: { z : x in cl{z} }.
    std::vector<std::uint64_t> nearest(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t z = 0; z < n; ++z) {
            if (c.cl[x][z]) nearest[x] |= std::uint64_t(1) << z;
        }
    }
    std::vector<std::uint64_t> clpoint(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t a = 0; a < n; ++a) {
            if (c.cl[i][a]) clpoint[a] |= std::uint64_t(1) << i;
        }
    }
    auto closure_of = [&](std::uint64_t mask) {
        std::uint64_t out = 0;
        for (std::size_t a = 0; a < n; ++a) {
            if ((mask >> a) & 1) out |= clpoint[a];
        }
        return out;
    };
    auto open_hull = [&](std::uint64_t mask) {
        std::uint64_t out = 0;
        for (std::size_t x = 0; x < n; ++x) {
            if ((mask >> x) & 1) out |= nearest[x];
        }
        return out;
    };

    for (std::size_t C = 0; C < masks; ++C) {
        if (closure_of(C) != C) continue;
        for (std::size_t D = 0; D < masks; ++D) {
            if ((C & D) != 0) continue;
            if (closure_of(D) != D) continue;
            if ((open_hull(C) & open_hull(D)) != 0) return false;
        }
    }
    return true;
}

}  // namespace appnorm
