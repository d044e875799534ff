#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "rtw/lagrangian.hpp"
#include "rtw/rng.hpp"
#include "rtw/structures.hpp"

using namespace rtw;

namespace {

WCCG random_instance(SplitMix64& r, int t) {
    WCCG g(t);
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j)
            g.set(i, j, r.below(2) ? Color::red : Color::blue,
                  static_cast<Weight>(r.below(3)));
    return g;
}

}  // namespace

TEST_CASE("complete graphs attain 1 - 1/t at the uniform distribution") {
    for (int t = 1; t <= 6; ++t) {
        LagrangianResult r = maximize_exact(WCCG(t));
        CHECK(r.density() == Rat(t - 1, t));
        CHECK(r.interior);
        for (const Rat& x : r.witness.u) CHECK(x == Rat(1, t));
        CHECK(r.witness.support() == r.kkt_supports.front());
    }
}

TEST_CASE("a single half edge maximizes at 1/8") {
    WCCG g(2);
    g.set_weight(0, 1, Weight::half);
    LagrangianResult r = maximize_exact(g);
    CHECK(r.g_max == Rat(1, 8));
    CHECK(r.interior);
}

TEST_CASE("the half pentagon attains 3/5 at the uniform distribution") {
    LagrangianResult r = maximize_exact(half_pentagon());
    CHECK(r.density() == Rat(3, 5));
    CHECK(r.interior);
    for (const Rat& x : r.witness.u) CHECK(x == Rat(1, 5));
}

TEST_CASE("evaluate_g matches the quadratic form") {
    WCCG g(3);
    g.set_weight(0, 1, Weight::half);
    SimplexDistribution u{{Rat(1, 2), Rat(1, 4), Rat(1, 4)}};
    // 1/2 * 1/8 + 1/8 + 1/16
    CHECK(evaluate_g(g, u) == Rat(1, 16) + Rat(1, 8) + Rat(1, 16));
    SimplexDistribution wrong{{Rat(1, 2), Rat(1, 2)}};
    CHECK_THROWS_AS(evaluate_g(g, wrong), std::invalid_argument);
}

TEST_CASE("weighted degrees are equal at an interior maximum") {
    WCCG g(6);
    LagrangianResult r = maximize_exact(g);
    for (int x = 0; x < 6; ++x)
        CHECK(weighted_degree(g, x, r.witness) == 2 * 6 * r.g_max);
}

TEST_CASE("exact and iterative solvers agree") {
    SplitMix64 r(11);
    for (int i = 0; i < 25; ++i) {
        WCCG g = random_instance(r, 2 + static_cast<int>(r.below(5)));
        double exact = to_double(maximize_exact(g).g_max);
        IterativeResult it = maximize_iterative(g);
        CHECK(std::abs(exact - it.g) < 1e-8);
    }
}

TEST_CASE("vertex deletion and induced subgraphs preserve pair data") {
    WCCG g(4);
    g.set(1, 3, Color::blue, Weight::half);
    WCCG d = delete_vertex(g, 2);
    CHECK(d.t == 3);
    CHECK(d.color(1, 2) == Color::blue);
    CHECK(d.weight(1, 2) == Weight::half);
    WCCG s = induced_subgraph(g, {1, 3});
    CHECK(s.t == 2);
    CHECK(s.weight(0, 1) == Weight::half);
}

TEST_CASE("a full join of complete graphs is the larger complete graph") {
    WCCG j = join_full(WCCG(2), WCCG(3));
    LagrangianResult r = maximize_exact(j);
    CHECK(r.density() == Rat(4, 5));
    CHECK(is_dense(j));
    // 1/(1-2g) adds over the two dense factors: 2 + 3 = 5
    CHECK(Rat(1) / (1 - 2 * r.g_max) == 5);
}

TEST_CASE("half-degree bound pins") {
    CHECK(half_degree_bound(12, 1) == Rat(7, 8));
    CHECK(half_degree_bound(12, 2) == Rat(5, 6));
    CHECK(half_degree_bound(2, 1) == Rat(1, 4));
    CHECK_THROWS_AS(half_degree_bound(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(half_degree_bound(4, 4), std::invalid_argument);

    CHECK(min_half_degree(half_pentagon()) == 2);
    CHECK(min_half_degree(WCCG(5)) == 0);
}

TEST_CASE("deletion bound index is the smallest admissible k") {
    CHECK(deletion_bound_index(Rat(0)) == 1);
    CHECK(deletion_bound_index(Rat(1, 4)) == 2);
    CHECK(deletion_bound_index(Rat(5, 12)) == 6);
    CHECK_THROWS_AS(deletion_bound_index(Rat(1, 2)), std::invalid_argument);
}

TEST_CASE("vertex deletion bound holds on the complete graph") {
    // K_6 minus a vertex is K_5 with g = 2/5 = (1 - 1/5)/2, so k = 5 applies
    // and g(K_6) = 5/12 <= (1 - 1/6)/2.
    CHECK(vertex_deletion_bound_check(WCCG(6), 0, 5));
    CHECK_THROWS_AS(vertex_deletion_bound_check(WCCG(3), 5, 2), std::invalid_argument);
    CHECK_THROWS_AS(vertex_deletion_bound_check(WCCG(3), 0, 0), std::invalid_argument);
}

TEST_CASE("exact maximization rejects oversized graphs") {
    CHECK_THROWS_AS(maximize_exact(WCCG(17)), std::invalid_argument);
    CHECK_THROWS_AS(maximize_exact(WCCG(0)), std::invalid_argument);
}

TEST_CASE("optimal candidates cover every maximizer") {
    // Two disjoint full edges tie; each maximizer lives on one edge or mixes
    // the two candidate supports.
    WCCG g(4);
    g.set_weight(0, 2, Weight::zero);
    g.set_weight(0, 3, Weight::zero);
    g.set_weight(1, 2, Weight::zero);
    g.set_weight(1, 3, Weight::zero);
    LagrangianResult r = maximize_exact(g);
    CHECK(r.g_max == Rat(1, 4));
    CHECK_FALSE(r.interior);
    CHECK(r.optimal_candidates.size() >= 2);
    for (const auto& cand : r.optimal_candidates) {
        CHECK(cand.valid());
        CHECK(evaluate_g(g, cand) == r.g_max);
    }
}
