#include <doctest.h>

#include "appnorm/maps.hpp"
#include "appnorm/oracle.hpp"
#include "helpers.hpp"

using namespace appnorm;
using namespace appnorm::testing;

namespace {

space_map identity_map(const finite_space& s) {
    std::vector<std::size_t> id(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) id[i] = i;
    return make_map(s, s, id);
}

}  // namespace

TEST_CASE("contraction checks") {
    finite_space s = e3();
    CHECK(is_contraction_map(identity_map(s)));

    finite_space one = space_of({"p"}, {{"0"}});
    CHECK(is_contraction_map(make_map(s, one, {0, 0, 0})));

    finite_space split = space_of({"a", "b"}, {{"0", "inf"}, {"inf", "0"}});
    finite_space close = space_of({"u", "v"}, {{"0", "1"}, {"1", "0"}});
    CHECK(is_contraction_map(make_map(split, close, {0, 1})));
    CHECK(!is_contraction_map(make_map(close, split, {0, 1})));
}

TEST_CASE("image functions take preimage minima") {
    finite_space s = e3();
    fn_over_space mu = fn_of({"3", "1", "2"});
    CHECK(image_function(identity_map(s), mu).values == mu.values);

    finite_space one = space_of({"p"}, {{"0"}});
    CHECK(image_function(make_map(s, one, {0, 0, 0}), mu).values ==
          std::vector<extvalue>{ev("1")});

    finite_space two = space_of({"u", "v"}, {{"0", "1"}, {"1", "0"}});
    finite_space dom = space_of({"a"}, {{"0"}});
    CHECK(image_function(make_map(dom, two, {0}), fn_of({"2"})).values ==
          std::vector<extvalue>{ev("2"), ev("inf")});
}

TEST_CASE("image respects pointwise order and meets") {
    splitmix64 rng(61);
    for (int t = 0; t < 60; ++t) {
        finite_space dom = catalog_random_quasimetric(2 + rng.below(3), rng.next());
        finite_space cod = catalog_random_quasimetric(1 + rng.below(3), rng.next());
        std::vector<std::size_t> assign;
        for (std::size_t i = 0; i < dom.size(); ++i) assign.push_back(rng.below(cod.size()));
        space_map m = make_map(dom, cod, assign);
        auto rand_fn = [&] {
            fn_over_space f;
            for (std::size_t i = 0; i < dom.size(); ++i)
                f.values.push_back(extvalue(rational((std::int64_t)rng.below(7))));
            return f;
        };
        fn_over_space mu = rand_fn(), nu = rand_fn();
        if (fn_le(mu, nu)) CHECK(fn_le(image_function(m, mu), image_function(m, nu)));
        CHECK(fn_le(image_function(m, fn_min(mu, nu)),
                    fn_min(image_function(m, mu), image_function(m, nu))));
    }
}

TEST_CASE("closed expansive holds for theta embeddings") {
    finite_space inner = space_of({"a", "b"}, {{"0", "3"}, {"3", "0"}});
    // superspace with one extra point at inf distance into the image
    finite_space outer = space_of({"a", "b", "e"}, {{"0", "3", "2"},
                                                    {"3", "0", "4"},
                                                    {"inf", "inf", "0"}});
    space_map emb = make_map(inner, outer, {0, 1});
    CHECK(is_contraction_map(emb));
    CHECK(is_closed_expansive(emb));
    CHECK(!is_open_expansive(emb));  // not surjective

    CHECK(is_closed_expansive(identity_map(inner)));
    CHECK(is_open_expansive(identity_map(inner)));
    finite_space one = space_of({"p"}, {{"0"}});
    CHECK(is_open_expansive(make_map(inner, one, {0, 0})));
}

TEST_CASE("collapsing an inf pair onto a finite edge is not expansive") {
    finite_space split = space_of({"a", "b"}, {{"0", "inf"}, {"inf", "0"}});
    finite_space close = space_of({"u", "v"}, {{"0", "1"}, {"1", "0"}});
    space_map collapse = make_map(split, close, {0, 0});  // both onto u
    CHECK(!is_closed_expansive(collapse));
    // mu = 0 pushes to (0 at u, inf at v), breaking lower regularity at v
    fn_over_space img = image_function(collapse, fn_of({"0", "0"}));
    CHECK(img.values == std::vector<extvalue>{ev("0"), ev("inf")});
    CHECK(!classify(close, img, codomain_tag::lower));
    CHECK(!is_open_expansive(collapse));
}

// The pairwise criterion is a max over the target preimage of a min over the
// source preimage; the min over all preimage pairs is too weak.
TEST_CASE("criterion distinguishes preimage maxima from minima") {
    finite_space dom = space_of({"x1", "q1", "q2"},
                                {{"0", "0", "5"}, {"0", "0", "5"}, {"5", "5", "0"}});
    finite_space cod = space_of({"y", "yp"}, {{"0", "1"}, {"1", "0"}});
    space_map m = make_map(dom, cod, {0, 1, 1});
    // min over pairs q(x1, -) is 0 via q1, but the max over the target
    // preimage is 5 via q2
    CHECK(!is_closed_expansive(m));
    CHECK(!oracle_closed_expansive(m));
}

TEST_CASE("expansive criteria agree with the oracle on all small maps") {
    std::vector<extvalue> alphabet{ev("0"), ev("1"), ev("inf")};
    std::vector<finite_space> twos;
    enumerate_spaces(2, alphabet, [&](const finite_space& s) { twos.push_back(s); });
    REQUIRE(twos.size() == 9);

    int checked = 0;
    for (const auto& dom : twos) {
        for (const auto& cod : twos) {
            for (std::size_t a0 = 0; a0 < 2; ++a0) {
                for (std::size_t a1 = 0; a1 < 2; ++a1) {
                    space_map m = make_map(dom, cod, {a0, a1});
                    CHECK(is_closed_expansive(m) == oracle_closed_expansive(m));
                    CHECK(is_open_expansive(m) == oracle_open_expansive(m));
                    ++checked;
                }
            }
        }
    }
    CHECK(checked == 324);

    splitmix64 rng(62);
    for (int t = 0; t < 20; ++t) {
        finite_space dom = catalog_random_quasimetric(3, rng.next());
        finite_space cod = catalog_random_quasimetric(2, rng.next());
        std::vector<std::size_t> assign{rng.below(2), rng.below(2), rng.below(2)};
        space_map m = make_map(dom, cod, assign);
        CHECK(is_closed_expansive(m) == oracle_closed_expansive(m));
        CHECK(is_open_expansive(m) == oracle_open_expansive(m));
    }
}

TEST_CASE("preservation suite finds no violations") {
    preservation_report r = run_preservation_suite(2024, 60);
    CHECK(r.trials == 60);
    CHECK(r.violations == 0);
    CHECK(r.first_violation.empty());
    // the generators must actually hit the hypotheses
    CHECK(r.surjection_cases > 0);
    CHECK(r.embedding_cases > 0);
}
