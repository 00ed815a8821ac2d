#include "appnorm/functions.hpp"

#include <algorithm>
#include <map>

namespace appnorm {

namespace {

void check_same_size(const fn_over_space& a, const fn_over_space& b) {
    if (a.size() != b.size()) throw failure("CarrierMismatch");
}

}  // namespace

fn_over_space make_fn(std::vector<extvalue> values, std::optional<extvalue> bound) {
    fn_over_space f{std::move(values), bound};
    if (f.bound) {
        for (const auto& v : f.values) {
            if (v > *f.bound) throw failure("OutOfBound", {{"value", v.str()}});
        }
    }
    return f;
}

fn_over_space fn_min(const fn_over_space& a, const fn_over_space& b) {
    check_same_size(a, b);
    fn_over_space out;
    out.values.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.values.push_back(min(a.at(i), b.at(i)));
    return out;
}

fn_over_space fn_max(const fn_over_space& a, const fn_over_space& b) {
    check_same_size(a, b);
    fn_over_space out;
    out.values.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.values.push_back(max(a.at(i), b.at(i)));
    return out;
}

fn_over_space fn_plus_const(const fn_over_space& f, const extvalue& c) {
    fn_over_space out;
    out.values.reserve(f.size());
    for (const auto& v : f.values) out.values.push_back(v + c);
    return out;
}

fn_over_space fn_tsub_from_const(const extvalue& c, const fn_over_space& f) {
    fn_over_space out;
    out.values.reserve(f.size());
    for (const auto& v : f.values) out.values.push_back(tsub(c, v));
    return out;
}

bool fn_le(const fn_over_space& a, const fn_over_space& b) {
    check_same_size(a, b);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.at(i) > b.at(i)) return false;
    }
    return true;
}

fn_over_space theta(const finite_space& s, pointset A, std::optional<extvalue> omega) {
    extvalue off = omega ? *omega : extvalue::infinity();
    fn_over_space f;
    f.values.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        f.values.push_back(A.contains(i) ? extvalue(0) : off);
    f.bound = omega;
    return f;
}

bool classify(const finite_space& s, const fn_over_space& f, codomain_tag tag) {
    if (f.size() != s.size()) throw failure("CarrierMismatch");
    bool need_lower = tag == codomain_tag::lower || tag == codomain_tag::euclid;
    bool need_upper = tag == codomain_tag::upper || tag == codomain_tag::euclid;
    if (need_upper && !f.finite_everywhere()) return false;
    for (std::size_t x = 0; x < s.size(); ++x) {
        for (std::size_t y = 0; y < s.size(); ++y) {
            if (need_lower && tsub(f.at(x), f.at(y)) > s.q(x, y)) return false;
            if (need_upper && tsub(f.at(y), f.at(x)) > s.q(x, y)) return false;
        }
    }
    return true;
}

fn_over_space lower_hull(const finite_space& s, const fn_over_space& mu) {
    if (mu.size() != s.size()) throw failure("CarrierMismatch");
    fn_over_space out;
    out.values.reserve(s.size());
    for (std::size_t x = 0; x < s.size(); ++x) {
        extvalue best = extvalue::infinity();
        for (std::size_t y = 0; y < s.size(); ++y) best = min(best, mu.at(y) + s.q(x, y));
        out.values.push_back(best);
    }
    return out;
}

fn_over_space upper_hull(const finite_space& s, const fn_over_space& mu) {
    if (mu.size() != s.size()) throw failure("CarrierMismatch");
    if (!mu.finite_everywhere()) throw failure("UnboundedInput");
    fn_over_space out;
    out.values.reserve(s.size());
    for (std::size_t x = 0; x < s.size(); ++x) {
        extvalue best(0);
        for (std::size_t y = 0; y < s.size(); ++y) best = max(best, tsub(mu.at(y), s.q(x, y)));
        out.values.push_back(best);
    }
    out.bound = mu.sup();
    return out;
}

fn_over_space core(const finite_space& s, pointset A, const extvalue& omega) {
    if (omega.is_inf()) throw failure("UnboundedInput");
    pointset comp = A.complement_in(s.size());
    fn_over_space f;
    f.values.reserve(s.size());
    for (std::size_t x = 0; x < s.size(); ++x)
        f.values.push_back(tsub(omega, s.distance(x, comp)));
    f.bound = omega;
    return f;
}

fn_over_space delta_fn(const finite_space& s, pointset A, std::optional<extvalue> omega) {
    fn_over_space f;
    f.values.reserve(s.size());
    for (std::size_t x = 0; x < s.size(); ++x) {
        extvalue v = s.distance(x, A);
        f.values.push_back(omega ? min(v, *omega) : v);
    }
    f.bound = omega;
    return f;
}

development canonical_development(const finite_space& s, const fn_over_space& f,
                                  const extvalue& eps, std::optional<pointset> carrier) {
    if (f.size() != s.size()) throw failure("CarrierMismatch");
    if (eps.is_inf() || !(eps > extvalue(0)))
        throw failure("BadParams", {{"epsilon", eps.str()}});
    pointset on = carrier ? *carrier : s.all();

    std::map<std::int64_t, pointset> cells;
    for (std::size_t x = 0; x < s.size(); ++x) {
        if (!on.contains(x)) continue;
        if (f.at(x).is_inf()) throw failure("UnboundedInput");
        std::int64_t cell = (f.at(x).ratio() / eps.ratio()).floor();
        cells[cell].add(x);
    }
    development dev;
    dev.epsilon = eps;
    for (const auto& [cell, set] : cells)
        dev.blocks.emplace_back(set, eps * rational(cell));
    return dev;
}

fn_over_space development_floor(const finite_space& s, const development& dev) {
    fn_over_space mu;
    mu.values.assign(s.size(), extvalue::infinity());
    for (const auto& [set, level] : dev.blocks) {
        for (std::size_t x = 0; x < s.size(); ++x) {
            if (set.contains(x)) mu.values[x] = min(mu.values[x], level);
        }
    }
    return mu;
}

bool development_valid(const finite_space& s, const development& dev,
                       const fn_over_space& f) {
    if (f.size() != s.size()) throw failure("CarrierMismatch");
    pointset carrier = dev.carrier();
    std::size_t covered = 0;
    for (const auto& [set, level] : dev.blocks) covered += set.count();
    if (covered != carrier.count()) return false;  // blocks overlap
    fn_over_space mu = development_floor(s, dev);
    for (std::size_t x = 0; x < s.size(); ++x) {
        if (!carrier.contains(x)) continue;
        if (mu.at(x) > f.at(x)) return false;
        if (f.at(x) > mu.at(x) + dev.epsilon) return false;
    }
    return true;
}

}  // namespace appnorm
