#include "appnorm/extension.hpp"

namespace appnorm {

namespace {

// f restricted to Y must be a euclidean contraction of the subspace.
bool contractive_on(const finite_space& s, pointset Y, const fn_over_space& f) {
    for (std::size_t u = 0; u < s.size(); ++u) {
        if (!Y.contains(u)) continue;
        if (f.at(u).is_inf()) return false;
        for (std::size_t v = 0; v < s.size(); ++v) {
            if (!Y.contains(v)) continue;
            if (tsub(f.at(u), f.at(v)) > s.q(u, v)) return false;
            if (tsub(f.at(v), f.at(u)) > s.q(u, v)) return false;
        }
    }
    return true;
}

}  // namespace

std::optional<condition_violation> tietze_condition(const finite_space& s, pointset Y,
                                                    const development& dev) {
    if (!(dev.carrier() == Y)) throw failure("CarrierMismatch");
    std::size_t covered = 0;
    for (const auto& [set, level] : dev.blocks) covered += set.count();
    if (covered != Y.count()) throw failure("CarrierMismatch");

    for (std::size_t x = 0; x < s.size(); ++x) {
        if (Y.contains(x)) continue;
        for (std::size_t l = 0; l < dev.blocks.size(); ++l) {
            for (std::size_t k = 0; k < dev.blocks.size(); ++k) {
                extvalue lhs = tsub(dev.blocks[l].second, dev.blocks[k].second);
                extvalue rhs = s.distance(x, dev.blocks[k].first) +
                               s.distance(x, dev.blocks[l].first);
                if (lhs > rhs) return condition_violation{x, l, k, dev.epsilon};
            }
        }
    }
    return std::nullopt;
}

std::pair<fn_over_space, fn_over_space> build_hats(const finite_space& s, pointset Y,
                                                   const fn_over_space& f,
                                                   const extvalue& gamma) {
    if (f.size() != s.size()) throw failure("CarrierMismatch");
    if (gamma.is_inf()) throw failure("UnboundedInput");
    fn_over_space hat, check;
    hat.values.reserve(s.size());
    check.values.reserve(s.size());
    for (std::size_t x = 0; x < s.size(); ++x) {
        if (Y.contains(x)) {
            if (f.at(x) > gamma) throw failure("OutOfBound", {{"point", s.point(x)}});
            hat.values.push_back(f.at(x));
            check.values.push_back(f.at(x));
        } else {
            hat.values.push_back(gamma);
            check.values.push_back(extvalue(0));
        }
    }
    hat.bound = gamma;
    check.bound = gamma;
    return {hat, check};
}

extension_result tietze_extend(const finite_space& s, pointset Y, const fn_over_space& f,
                               const extvalue& gamma, const development& dev) {
    if (Y.empty()) throw failure("EmptySubspace");
    if (gamma.is_inf()) throw failure("UnboundedInput");
    if (!contractive_on(s, Y, f))
        throw failure("PreconditionFailed", {{"clause", "f contractive on subspace"}});
    if (!development_valid(s, dev, f))
        throw failure("PreconditionFailed", {{"clause", "development valid for f"}});

    extension_result out;
    if (auto viol = tietze_condition(s, Y, dev)) {
        out.state = extension_result::status::condition_failed;
        out.violation = viol;
        return out;
    }

    auto [hat, check] = build_hats(s, Y, f, gamma);
    out.mu_hat = hat;
    out.mu_check = check;
    out.lower_of_hat = lower_hull(s, hat);
    out.upper_of_check = upper_hull(s, check);

    // Any contractive extension is squeezed between the two hulls, so a
    // crossing point refutes extendability outright. A coarse development can
    // pass the condition gate and still land here; developments fine enough
    // to separate the value classes of f cannot.
    for (std::size_t x = 0; x < s.size(); ++x) {
        extvalue gap = tsub(out.upper_of_check.at(x), out.lower_of_hat.at(x));
        if (gap > extvalue(0)) {
            out.state = extension_result::status::no_extension;
            out.gap_point = x;
            out.gap = gap;
            return out;
        }
    }

    interpolation_result kt = kt_direct(s, out.upper_of_check, out.lower_of_hat);
    if (!kt.found()) {
        out.state = extension_result::status::no_extension;
        out.gap_point = kt.gap_point;
        out.gap = kt.gap;
        return out;
    }

    // Both hulls pin f on Y, so the restriction equality is exact.
    for (std::size_t x = 0; x < s.size(); ++x) {
        if (Y.contains(x) && !(kt.interpolant.at(x) == f.at(x)))
            throw failure("InternalInvariantViolated", {{"where", "restriction equality"}});
    }
    out.extension = std::move(kt.interpolant);
    out.extension.bound = gamma;
    return out;
}

extension_result urysohn_via_tietze(const finite_space& s, pointset A, pointset B,
                                    const extvalue& gamma) {
    if (A.empty() || B.empty()) throw failure("EmptySet");
    if (gamma.is_inf() || !(gamma > extvalue(0)))
        throw failure("BadParams", {{"gamma", gamma.str()}});
    if (!(gamma <= separation_degree(s, A, B)))
        throw failure("NotSeparated", {{"gamma", gamma.str()}});

    pointset ca = s.closure(A), cb = s.closure(B);
    pointset Y = ca | cb;
    fn_over_space f;
    f.values.assign(s.size(), extvalue(0));
    for (std::size_t x = 0; x < s.size(); ++x) {
        if (ca.contains(x)) f.values[x] = gamma;
    }
    // Orientation-consistent two-block development of f: level gamma on
    // cl(A), level 0 on cl(B).
    development dev;
    dev.epsilon = extvalue(rational(1, 2));
    dev.blocks.emplace_back(cb, extvalue(0));
    dev.blocks.emplace_back(ca, gamma);
    return tietze_extend(s, Y, f, gamma, dev);
}

}  // namespace appnorm
