#include <doctest.h>

#include "appnorm/separation.hpp"
#include "helpers.hpp"

using namespace appnorm;
using namespace appnorm::testing;

TEST_CASE("the three-point counterexample validates") {
    finite_space s = e3();
    CHECK(s.size() == 3);
    CHECK(s.q(0, 1) == ev("4"));
    CHECK(s.q(1, 0) == ev("inf"));
}

TEST_CASE("nonzero diagonal is rejected") {
    value_matrix q(1);
    q.at(0, 0) = ev("1");
    CHECK_THROWS_WITH_AS(finite_space::validate({"x"}, q), "NonzeroDiagonal point=x",
                         failure);
}

TEST_CASE("triangle violations report the violating triple") {
    try {
        space_of({"a", "b", "c"}, {{"0", "1", "5"}, {"inf", "0", "1"}, {"inf", "inf", "0"}});
        FAIL("expected TriangleViolation");
    } catch (const failure& e) {
        CHECK(e.code() == "TriangleViolation");
        CHECK(e.details().at("i") == "a");
        CHECK(e.details().at("j") == "b");
        CHECK(e.details().at("k") == "c");
    }
}

TEST_CASE("duplicate points are rejected") {
    value_matrix q(2);
    CHECK_THROWS_AS(finite_space::validate({"x", "x"}, q), failure);
}

TEST_CASE("distance examples") {
    finite_space s = e3();
    CHECK(s.distance(s.index("x"), s.set_of({"y", "z"})) == ev("1"));
    CHECK(s.distance(s.index("z"), s.set_of({"x", "y"})) == ev("inf"));
    CHECK(s.distance(s.index("x"), pointset()) == ev("inf"));
}

TEST_CASE("enlargement examples") {
    finite_space s = e3();
    CHECK(s.enlargement(s.set_of({"x"}), ev("2")) == s.set_of({"x"}));
    CHECK(s.enlargement(s.set_of({"z"}), ev("1")) == s.set_of({"x", "z"}));
    CHECK(s.enlargement(s.set_of({"y"}), ev("inf")) == s.all());
}

TEST_CASE("symmetrization keeps the finite direction") {
    finite_space s = e3();
    value_matrix sym = s.symmetrization();
    CHECK(sym.at(0, 1) == ev("4"));
    CHECK(sym.at(1, 0) == ev("4"));
    CHECK(sym.at(0, 2) == ev("1"));
    CHECK(sym.at(1, 2) == ev("2"));

    finite_space two = space_of({"a", "b"}, {{"0", "3"}, {"5", "0"}});
    CHECK(two.symmetrization().at(0, 1) == ev("3"));
}

namespace {

// Exhaustive min over all simple paths, the independent authority for the
// min-plus closure.
extvalue brute_path(const finite_space& s, const value_matrix& sym, std::size_t from,
                    std::size_t to, std::uint64_t visited) {
    if (from == to) return extvalue(0);
    extvalue best = extvalue::infinity();
    for (std::size_t mid = 0; mid < s.size(); ++mid) {
        if ((visited >> mid) & 1) continue;
        extvalue leg = sym.at(from, mid);
        if (leg.is_inf()) continue;
        extvalue rest = brute_path(s, sym, mid, to, visited | (std::uint64_t(1) << mid));
        best = min(best, leg + rest);
    }
    return best;
}

}  // namespace

TEST_CASE("path closure equals exhaustive path enumeration") {
    finite_space s = e3();
    CHECK(s.dstar(s.index("x"), s.index("y")) == ev("3"));

    splitmix64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        finite_space r = catalog_random_quasimetric(2 + rng.below(4), rng.next());
        value_matrix sym = r.symmetrization();
        for (std::size_t i = 0; i < r.size(); ++i) {
            for (std::size_t j = 0; j < r.size(); ++j) {
                CHECK(r.dstar(i, j) ==
                      brute_path(r, sym, i, j, std::uint64_t(1) << i));
            }
        }
    }
}

TEST_CASE("path closure is a metric below the symmetrization") {
    splitmix64 rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        finite_space r = catalog_random_quasimetric(2 + rng.below(5), rng.next());
        value_matrix sym = r.symmetrization();
        const value_matrix& d = r.path_closure();
        for (std::size_t i = 0; i < r.size(); ++i) {
            CHECK(d.at(i, i) == ev("0"));
            for (std::size_t j = 0; j < r.size(); ++j) {
                CHECK(d.at(i, j) == d.at(j, i));
                CHECK(d.at(i, j) <= sym.at(i, j));
                for (std::size_t k = 0; k < r.size(); ++k)
                    CHECK(d.at(i, k) <= d.at(i, j) + d.at(j, k));
            }
        }
    }

    finite_space metric = catalog_random_metric(5, 99);
    CHECK(metric.path_closure() == metric.q());

    finite_space split = space_of({"a", "b"}, {{"0", "inf"}, {"inf", "0"}});
    CHECK(split.dstar(0, 1) == ev("inf"));
}

TEST_CASE("subspace restricts the matrix") {
    finite_space s = e3();
    finite_space sub = s.subspace(s.set_of({"x", "z"}));
    CHECK(sub.size() == 2);
    CHECK(sub.q(0, 1) == ev("1"));
    CHECK(sub.q(1, 0) == ev("inf"));
    CHECK(s.subspace(s.all()).q() == s.q());
    CHECK_THROWS_AS(s.subspace(pointset()), failure);

    finite_space grid = catalog_get("sorgenfrey-grid", {{"n", "6"}}).space;
    pointset evens;
    for (std::size_t i = 0; i < 6; i += 2) evens.add(i);
    finite_space half = grid.subspace(evens);
    CHECK(half.q(0, 1) == ev("2"));
    CHECK(half.q(1, 0) == ev("inf"));
}

TEST_CASE("topological spaces embed and coreflect") {
    closure_relation sierpinski;
    sierpinski.points = {"o", "c"};
    // cl[i][j]: point i belongs to the closure of {point j}; c lies in cl{o}.
    sierpinski.cl = {{true, false}, {true, true}};
    finite_space s = from_topology(sierpinski);
    CHECK(s.q(1, 0) == ev("0"));
    CHECK(s.q(0, 1) == ev("inf"));

    closure_relation rt = s.coreflection();
    CHECK(rt.cl == sierpinski.cl);

    closure_relation bad;
    bad.points = {"a", "b"};
    bad.cl = {{false, false}, {false, true}};
    CHECK_THROWS_AS(from_topology(bad), failure);

    finite_space e = e3();
    closure_relation disc = e.coreflection();
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(disc.cl[i][j] == (i == j));

    finite_space indis = space_of({"a", "b"}, {{"0", "0"}, {"0", "0"}});
    CHECK(indis.coreflection().cl[0][1]);
    CHECK(indis.coreflection().cl[1][0]);
}

TEST_CASE("distance axioms hold on random spaces") {
    splitmix64 rng(13);
    for (int trial = 0; trial < 25; ++trial) {
        finite_space s = catalog_random_quasimetric(2 + rng.below(4), rng.next());
        std::uint64_t full = pointset::full(s.size()).bits;
        for (std::uint64_t A = 0; A <= full; ++A) {
            for (std::uint64_t B = 0; B <= full; ++B) {
                for (std::size_t x = 0; x < s.size(); ++x) {
                    // (D3)
                    CHECK(s.distance(x, pointset(A | B)) ==
                          min(s.distance(x, pointset(A)), s.distance(x, pointset(B))));
                }
            }
            // (D4) over realized epsilons
            for (std::size_t y = 0; y < s.size(); ++y) {
                extvalue eps = s.distance(y, pointset(A));
                if (eps.is_inf()) continue;
                pointset enl = s.enlargement(pointset(A), eps);
                for (std::size_t x = 0; x < s.size(); ++x)
                    CHECK(s.distance(x, pointset(A)) <= s.distance(x, enl) + eps);
            }
        }
    }
}

TEST_CASE("enlargement is monotone in epsilon") {
    splitmix64 rng(14);
    finite_space s = catalog_random_quasimetric(5, rng.next());
    for (std::uint64_t A = 1; A < 32; ++A) {
        pointset prev;
        for (int e = 0; e <= 10; ++e) {
            pointset cur = s.enlargement(pointset(A), extvalue(rational(e, 2)));
            CHECK(prev.subset_of(cur));
            prev = cur;
        }
    }
}

// The finite reduction behind the whole artifact: a zero-diagonal matrix
// satisfies the triangle inequality exactly when its induced delta satisfies
// (D4) over all subsets.
TEST_CASE("triangle inequality is equivalent to (D4)") {
    std::vector<extvalue> alphabet{ev("0"), ev("1"), ev("2"), ev("inf")};
    std::size_t checked = 0;
    for (std::size_t n = 2; n <= 3; ++n) {
        enumerate_matrices(n, alphabet, [&](const value_matrix& q) {
            bool triangle = true;
            for (std::size_t i = 0; i < n && triangle; ++i)
                for (std::size_t j = 0; j < n && triangle; ++j)
                    for (std::size_t k = 0; k < n; ++k)
                        if (q.at(i, k) > q.at(i, j) + q.at(j, k)) {
                            triangle = false;
                            break;
                        }

            auto dist = [&](std::size_t x, std::uint64_t A) {
                extvalue best = extvalue::infinity();
                for (std::size_t a = 0; a < n; ++a)
                    if ((A >> a) & 1) best = min(best, q.at(x, a));
                return best;
            };
            bool d4 = true;
            std::uint64_t full = (std::uint64_t(1) << n) - 1;
            for (std::uint64_t A = 0; A <= full && d4; ++A) {
                std::vector<extvalue> eps_candidates;
                for (std::size_t y = 0; y < n; ++y) eps_candidates.push_back(dist(y, A));
                for (const auto& eps : eps_candidates) {
                    if (eps.is_inf()) continue;
                    std::uint64_t enl = 0;
                    for (std::size_t y = 0; y < n; ++y)
                        if (dist(y, A) <= eps) enl |= std::uint64_t(1) << y;
                    for (std::size_t x = 0; x < n; ++x) {
                        if (dist(x, A) > dist(x, enl) + eps) {
                            d4 = false;
                            break;
                        }
                    }
                    if (!d4) break;
                }
            }
            CHECK(triangle == d4);
            ++checked;
        });
    }
    CHECK(checked == 16 + 4096);

    // same equivalence on random zero-diagonal matrices at sizes 4 and 5,
    // exhaustive over subsets
    splitmix64 rng(15);
    for (int t = 0; t < 150; ++t) {
        std::size_t n = 4 + rng.below(2);
        value_matrix q(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                std::uint64_t roll = rng.below(6);
                q.at(i, j) = roll == 0   ? ev("inf")
                             : roll == 1 ? ev("0")
                                         : extvalue(rational((std::int64_t)roll - 1));
            }
        }
        bool triangle = true;
        for (std::size_t i = 0; i < n && triangle; ++i)
            for (std::size_t j = 0; j < n && triangle; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (q.at(i, k) > q.at(i, j) + q.at(j, k)) {
                        triangle = false;
                        break;
                    }
        auto dist = [&](std::size_t x, std::uint64_t A) {
            extvalue best = extvalue::infinity();
            for (std::size_t a = 0; a < n; ++a)
                if ((A >> a) & 1) best = min(best, q.at(x, a));
            return best;
        };
        bool d4 = true;
        std::uint64_t full = (std::uint64_t(1) << n) - 1;
        for (std::uint64_t A = 0; A <= full && d4; ++A) {
            for (std::size_t y = 0; y < n && d4; ++y) {
                extvalue eps = dist(y, A);
                if (eps.is_inf()) continue;
                std::uint64_t enl = 0;
                for (std::size_t z = 0; z < n; ++z)
                    if (dist(z, A) <= eps) enl |= std::uint64_t(1) << z;
                for (std::size_t x = 0; x < n; ++x) {
                    if (dist(x, A) > dist(x, enl) + eps) {
                        d4 = false;
                        break;
                    }
                }
            }
        }
        CHECK(triangle == d4);
    }
}
