#include "appnorm/interpolation.hpp"

namespace appnorm {

namespace {

void check_pair(const finite_space& s, const fn_over_space& g, const fn_over_space& h) {
    if (g.size() != s.size() || h.size() != s.size()) throw failure("CarrierMismatch");
    if (!g.finite_everywhere() || !h.finite_everywhere()) throw failure("UnboundedInput");
    if (!classify(s, g, codomain_tag::upper)) throw failure("NotUpperRegular");
    if (!classify(s, h, codomain_tag::lower)) throw failure("NotLowerRegular");
    if (!fn_le(g, h)) throw failure("NotOrdered");
}

fn_over_space lipschitz_minorant(const finite_space& s, const fn_over_space& h) {
    fn_over_space f;
    f.values.reserve(s.size());
    for (std::size_t x = 0; x < s.size(); ++x) {
        extvalue best = extvalue::infinity();
        for (std::size_t y = 0; y < s.size(); ++y)
            best = min(best, h.at(y) + s.dstar(x, y));
        f.values.push_back(best);
    }
    f.bound = f.sup();
    return f;
}

struct stage_failure_info {
    int m, k, n;
};

// One family f_n for the pair (phi, psi) at bound omega; stages run over
// m in [1, n-1], k in [m, n-1]. Starting m at 1 is what makes the 2*omega/n
// bound hold at points where psi < omega/n: the minimal stage containing such
// a point then caps f_n at 2*omega/n.
fn_over_space build_fn(const finite_space& s, const fn_over_space& phi,
                       const fn_over_space& psi, const extvalue& omega, int n) {
    rational w = omega.ratio();
    fn_over_space result;
    bool first = true;
    for (int m = 1; m < n; ++m) {
        rational lo = w * rational(m + 1, n);
        pointset A;
        for (std::size_t x = 0; x < s.size(); ++x) {
            if (psi.at(x) <= extvalue(w * rational(m, n))) A.add(x);
        }
        fn_over_space fmn;
        bool fmn_first = true;
        for (int k = m; k < n; ++k) {
            rational hi = std::min(w * rational(2 * k + 3, 2 * n), w);
            rational gamma = w * rational(2 * (k - m) + 1, 2 * n);
            pointset B;
            for (std::size_t x = 0; x < s.size(); ++x) {
                if (phi.at(x) >= extvalue(w * rational(2 * k + 1, 2 * n))) B.add(x);
            }
            fn_over_space stagefn;
            if (B.empty()) {
                stagefn.values.assign(s.size(), extvalue(lo));
            } else if (A.empty()) {
                stagefn.values.assign(s.size(), extvalue(hi));
            } else {
                urysohn_result u = urysohn(s, B, A, extvalue(gamma));
                if (!u.found()) {
                    throw failure("StageSeparationFailure", {{"m", std::to_string(m)},
                                                             {"k", std::to_string(k)},
                                                             {"n", std::to_string(n)},
                                                             {"shortfall", u.max_gamma.str()}});
                }
                rational slope = (hi - lo) / gamma;
                if (slope > rational(1))
                    throw failure("InternalInvariantViolated", {{"where", "stage slope"}});
                stagefn.values.reserve(s.size());
                for (std::size_t x = 0; x < s.size(); ++x)
                    stagefn.values.push_back(extvalue(lo) + u.witness->at(x) * slope);
            }
            fmn = fmn_first ? stagefn : fn_max(fmn, stagefn);
            fmn_first = false;
        }
        result = first ? fmn : fn_min(result, fmn);
        first = false;
    }
    result.bound = omega;
    return result;
}

}  // namespace

interpolation_result kt_direct(const finite_space& s, const fn_over_space& g,
                               const fn_over_space& h) {
    check_pair(s, g, h);
    fn_over_space fstar = lipschitz_minorant(s, h);
    interpolation_result out;
    extvalue worst(0);
    std::size_t worst_at = 0;
    for (std::size_t x = 0; x < s.size(); ++x) {
        extvalue gap = tsub(g.at(x), fstar.at(x));
        if (gap > worst) {
            worst = gap;
            worst_at = x;
        }
    }
    if (worst > extvalue(0)) {
        out.state = interpolation_result::status::no_interpolant;
        out.gap_point = worst_at;
        out.gap = worst;
        return out;
    }
    out.interpolant = std::move(fstar);
    return out;
}

fn_over_space tong_combine(const finite_space& s, const std::vector<fn_over_space>& fs,
                           const std::vector<fn_over_space>& gs, const extvalue& omega) {
    if (fs.empty() || gs.empty()) throw failure("BadParams", {{"reason", "empty family"}});
    for (const auto& f : fs) {
        if (!classify(s, f, codomain_tag::euclid))
            throw failure("NotContractive", {{"where", "fs"}});
    }
    for (const auto& g : gs) {
        if (!classify(s, g, codomain_tag::euclid))
            throw failure("NotContractive", {{"where", "gs"}});
    }
    fn_over_space lowerenv = fs.front();
    for (std::size_t i = 1; i < fs.size(); ++i) lowerenv = fn_min(lowerenv, fs[i]);
    fn_over_space upperenv = fn_tsub_from_const(omega, gs.front());
    for (std::size_t i = 1; i < gs.size(); ++i)
        upperenv = fn_max(upperenv, fn_tsub_from_const(omega, gs[i]));
    if (!fn_le(lowerenv, upperenv)) throw failure("SandwichViolated");
    lowerenv.bound = lowerenv.sup();
    return lowerenv;
}

interpolation_result kt_staged(const finite_space& s, const fn_over_space& g,
                               const fn_over_space& h, int stages) {
    if (stages < 3) throw failure("BadParams", {{"stages", std::to_string(stages)}});
    check_pair(s, g, h);

    interpolation_result out;
    out.omega = h.sup();
    if (out.omega == extvalue(0)) {
        // g = h = 0; nothing to build.
        out.interpolant = make_fn(std::vector<extvalue>(s.size(), extvalue(0)), extvalue(0));
        return out;
    }

    std::vector<fn_over_space> fs, gs;
    for (int n = 3; n <= stages; ++n) {
        fn_over_space fn = build_fn(s, g, h, out.omega, n);
        stage_record rec;
        rec.n = n;
        rec.lower_bound_ok = fn_le(g, fn);
        rec.upper_bound_ok =
            fn_le(fn, fn_plus_const(h, out.omega * rational(2, n)));
        rec.fn = fn;
        out.staged.push_back(rec);
        if (!rec.lower_bound_ok || !rec.upper_bound_ok)
            throw failure("InternalInvariantViolated",
                          {{"where", "stage bound"}, {"n", std::to_string(n)}});
        fs.push_back(std::move(fn));
    }

    // Mirrored family: running the same construction against
    // (omega - inf_n f_n) needs the full countable family to stay ordered, so
    // the finite build targets (omega - h, omega - g) instead.
    fn_over_space phi2 = fn_tsub_from_const(out.omega, h);
    fn_over_space psi2 = fn_tsub_from_const(out.omega, g);
    for (int n = 3; n <= stages; ++n) gs.push_back(build_fn(s, phi2, psi2, out.omega, n));

    interpolation_result direct = kt_direct(s, g, h);
    if (!direct.found()) {
        out.state = interpolation_result::status::no_interpolant;
        out.gap_point = direct.gap_point;
        out.gap = direct.gap;
        return out;
    }

    // The direct maximal interpolant joins both finite families; with it the
    // Tong sandwich closes exactly and the combination stays inside [g, h].
    fs.push_back(direct.interpolant);
    gs.push_back(fn_tsub_from_const(out.omega, direct.interpolant));
    out.interpolant = tong_combine(s, fs, gs, out.omega);
    return out;
}

kt_witness kt_witness_from_nonnormal(const finite_space& s) {
    normality_verdict v = is_normal(s);
    if (v.normal) throw failure("SpaceIsNormal");
    const normality_witness& w = *v.witness;
    kt_witness out;
    out.gamma = w.gamma.finite() ? w.gamma : w.shortfall + extvalue(1);
    out.g = core(s, w.A.complement_in(s.size()), out.gamma);
    out.h = delta_fn(s, w.B, out.gamma);
    return out;
}

}  // namespace appnorm
