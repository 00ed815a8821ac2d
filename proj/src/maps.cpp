#include "appnorm/maps.hpp"

#include "appnorm/catalog.hpp"
#include "appnorm/rng.hpp"

namespace appnorm {

bool space_map::surjective() const {
    pointset image;
    for (std::size_t y : assignment) image.add(y);
    return image == pointset::full(codomain.size());
}

bool space_map::injective() const {
    pointset seen;
    for (std::size_t y : assignment) {
        if (seen.contains(y)) return false;
        seen.add(y);
    }
    return true;
}

space_map make_map(finite_space domain, finite_space codomain,
                   std::vector<std::size_t> assignment) {
    if (assignment.size() != domain.size())
        throw failure("BadParams", {{"reason", "assignment not total"}});
    for (std::size_t y : assignment) {
        if (y >= codomain.size())
            throw failure("UnknownPoint", {{"index", std::to_string(y)}});
    }
    return space_map{std::move(domain), std::move(codomain), std::move(assignment)};
}

bool is_contraction_map(const space_map& m) {
    for (std::size_t x = 0; x < m.domain.size(); ++x) {
        for (std::size_t y = 0; y < m.domain.size(); ++y) {
            if (m.codomain.q(m.apply(x), m.apply(y)) > m.domain.q(x, y)) return false;
        }
    }
    return true;
}

fn_over_space image_function(const space_map& m, const fn_over_space& mu) {
    if (mu.size() != m.domain.size()) throw failure("CarrierMismatch");
    fn_over_space out;
    out.values.reserve(m.codomain.size());
    for (std::size_t y = 0; y < m.codomain.size(); ++y) {
        extvalue best = extvalue::infinity();
        for (std::size_t x = 0; x < m.domain.size(); ++x) {
            if (m.apply(x) == y) best = min(best, mu.at(x));
        }
        out.values.push_back(best);
    }
    return out;
}

namespace {

// max_{x' in f^-1(y')} min_{x in f^-1(y)} q(x, x') under the stated empty-set
// conventions.
extvalue pushforward_bound(const space_map& m, std::size_t y, std::size_t yp,
                           bool mirrored) {
    extvalue outer(0);
    for (std::size_t xp = 0; xp < m.domain.size(); ++xp) {
        if (m.apply(xp) != yp) continue;
        extvalue inner = extvalue::infinity();
        for (std::size_t x = 0; x < m.domain.size(); ++x) {
            if (m.apply(x) != y) continue;
            const extvalue& d = mirrored ? m.domain.q(xp, x) : m.domain.q(x, xp);
            inner = min(inner, d);
        }
        outer = max(outer, inner);
    }
    return outer;
}

}  // namespace

bool is_closed_expansive(const space_map& m) {
    for (std::size_t y = 0; y < m.codomain.size(); ++y) {
        for (std::size_t yp = 0; yp < m.codomain.size(); ++yp) {
            if (pushforward_bound(m, y, yp, false) > m.codomain.q(y, yp)) return false;
        }
    }
    return true;
}

bool is_open_expansive(const space_map& m) {
    // The upper class is bounded, and a non-image point takes inf under every
    // pushforward, so only surjections can qualify.
    if (!m.surjective()) return false;
    for (std::size_t y = 0; y < m.codomain.size(); ++y) {
        for (std::size_t yp = 0; yp < m.codomain.size(); ++yp) {
            if (pushforward_bound(m, y, yp, true) > m.codomain.q(yp, y)) return false;
        }
    }
    return true;
}

namespace {

std::vector<std::string> numbered_points(std::size_t n, const std::string& prefix) {
    std::vector<std::string> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back(prefix + std::to_string(i));
    return pts;
}

// Superspace of `inner` with extra points whose distance into the image is
// inf; such inclusions are exactly the injective closed expansive
// contractions.
space_map random_theta_embedding(splitmix64& rng, const finite_space& inner) {
    std::size_t extra = 1 + rng.below(2);
    std::size_t n = inner.size() + extra;
    value_matrix q(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                q.at(i, j) = extvalue(0);
            } else if (i < inner.size() && j < inner.size()) {
                q.at(i, j) = inner.q(i, j);
            } else if (j < inner.size()) {
                q.at(i, j) = extvalue::infinity();  // extra -> image
            } else {
                q.at(i, j) = extvalue(rational(1 + (std::int64_t)rng.below(4)));
            }
        }
    }
    // Min-plus closure keeps extra -> image at inf: every such path crosses
    // an inf edge.
    q = min_plus_closure(std::move(q));
    for (std::size_t i = 0; i < n; ++i) q.at(i, i) = extvalue(0);
    finite_space outer = finite_space::validate(numbered_points(n, "e"), std::move(q));
    std::vector<std::size_t> assign;
    for (std::size_t i = 0; i < inner.size(); ++i) assign.push_back(i);
    return make_map(inner, outer, assign);
}

// Quotient candidate: codomain distances are the min-plus closure of the
// pushforward bounds, which keeps the map a contraction candidate.
space_map random_quotient(splitmix64& rng, const finite_space& dom, std::size_t m) {
    std::vector<std::size_t> assign;
    for (std::size_t i = 0; i < dom.size(); ++i) assign.push_back(rng.below(m));
    for (std::size_t y = 0; y < m; ++y) assign[rng.below(dom.size())] = y;  // onto
    value_matrix q(m);
    space_map probe{dom, dom, assign};  // codomain placeholder, only preimages used
    for (std::size_t y = 0; y < m; ++y) {
        for (std::size_t yp = 0; yp < m; ++yp) {
            extvalue lo = pushforward_bound(probe, y, yp, false);
            extvalue hi = pushforward_bound(probe, y, yp, true);
            q.at(y, yp) = y == yp ? extvalue(0) : max(lo, hi);
        }
    }
    q = min_plus_closure(std::move(q));
    for (std::size_t i = 0; i < m; ++i) q.at(i, i) = extvalue(0);
    finite_space cod = finite_space::validate(numbered_points(m, "c"), std::move(q));
    return make_map(dom, std::move(cod), std::move(assign));
}

}  // namespace

preservation_report run_preservation_suite(std::uint64_t seed, std::uint64_t trials) {
    preservation_report report;
    splitmix64 rng(seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        report.trials++;
        splitmix64 trial = rng.split();
        std::size_t n = 2 + trial.below(3);
        finite_space dom = [&] {
            switch (trial.below(3)) {
                case 0: return catalog_random_metric(n, trial.next());
                case 1: return catalog_random_quasimetric(n, trial.next());
                default: return random_preorder_space(n, trial.next());
            }
        }();

        space_map quot = random_quotient(trial, dom, 1 + trial.below(n));
        if (is_contraction_map(quot) && quot.surjective() && is_closed_expansive(quot) &&
            is_open_expansive(quot)) {
            report.surjection_cases++;
            if (is_normal(dom).normal && !is_normal(quot.codomain).normal) {
                report.violations++;
                if (report.first_violation.empty())
                    report.first_violation = "surjection trial " + std::to_string(t);
            }
        }

        space_map emb = random_theta_embedding(trial, dom);
        if (is_contraction_map(emb) && emb.injective() && is_closed_expansive(emb)) {
            report.embedding_cases++;
            if (is_normal(emb.codomain).normal && !is_normal(emb.domain).normal) {
                report.violations++;
                if (report.first_violation.empty())
                    report.first_violation = "embedding trial " + std::to_string(t);
            }
        }
    }
    return report;
}

}  // namespace appnorm
