#include <stdexcept>

#include "doctest.h"
#include "rtw/genclique.hpp"
#include "rtw/rng.hpp"
#include "rtw/verification.hpp"

using namespace rtw;

namespace {

WCCG random_instance(SplitMix64& r, int t) {
    WCCG g(t);
    for (int v = 0; v < t; ++v)
        g.vertex_colors[v] = r.below(2) ? Color::red : Color::blue;
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j)
            g.set(i, j, r.below(2) ? Color::red : Color::blue,
                  static_cast<Weight>(r.below(3)));
    return g;
}

// Reference maximum over every (X, Y) pair directly from the definition.
int brute_max(const WCCG& g, Color c) {
    int best = 0;
    for (uint32_t xm = 0; xm < (1u << g.t); ++xm) {
        bool ok = true;
        std::vector<int> xs;
        for (int v = 0; v < g.t; ++v)
            if (xm >> v & 1) xs.push_back(v);
        for (size_t a = 0; a < xs.size() && ok; ++a)
            for (size_t b = a + 1; b < xs.size() && ok; ++b)
                if (g.color(xs[a], xs[b]) != c || g.weight(xs[a], xs[b]) == Weight::zero)
                    ok = false;
        if (!ok) continue;
        uint32_t marked = 0;
        for (int v : xs)
            if (g.vertex_colors[v] == c) marked |= 1u << v;
        for (uint32_t ym = marked;; ym = (ym - 1) & marked) {
            bool yok = true;
            std::vector<int> ys;
            for (int v = 0; v < g.t; ++v)
                if (ym >> v & 1) ys.push_back(v);
            for (size_t a = 0; a < ys.size() && yok; ++a)
                for (size_t b = a + 1; b < ys.size() && yok; ++b)
                    if (g.weight(ys[a], ys[b]) != Weight::one) yok = false;
            if (yok) best = std::max(best, static_cast<int>(xs.size() + ys.size()));
            if (ym == 0) break;
        }
    }
    return best;
}

}  // namespace

TEST_CASE("an all-red full graph doubles its clique number") {
    WCCG g(4);
    GeneralizedCliqueWitness w = max_generalized_clique(g, Color::red);
    CHECK(w.size() == 8);
    CHECK(w.X.size() == 4);
    CHECK(w.Y.size() == 4);
    CHECK(witness_valid(g, Color::red, w));
    // no blue pair and no blue vertex: X is a single vertex, Y empty
    CHECK(max_generalized_clique(g, Color::blue).size() == 1);
}

TEST_CASE("a marked singleton counts twice") {
    WCCG g(1);
    CHECK(max_generalized_clique(g, Color::red).size() == 2);
    CHECK(max_generalized_clique(g, Color::blue).size() == 1);
}

TEST_CASE("half edges join X but never Y") {
    WCCG g(3);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) g.set_weight(i, j, Weight::half);
    CHECK(max_generalized_clique(g, Color::red).size() == 4);
}

TEST_CASE("zero-weight pairs leave X") {
    WCCG g(3);
    g.set_weight(0, 1, Weight::zero);
    CHECK(max_generalized_clique(g, Color::red).size() == 4);
}

TEST_CASE("the density-5/6 extremal graph is clique-free at its thresholds") {
    WCCG g = rho36_extremal();
    CHECK(max_generalized_clique(g, Color::red).size() == 5);
    CHECK(max_generalized_clique(g, Color::blue).size() == 2);
    CHECK_FALSE(has_generalized_clique(g, Color::red, 6));
    CHECK(has_generalized_clique(g, Color::red, 5));
    auto found = find_generalized_clique(g, Color::red, 5);
    REQUIRE(found.has_value());
    CHECK(witness_valid(g, Color::red, *found));
    CHECK_FALSE(find_generalized_clique(g, Color::blue, 3).has_value());
}

TEST_CASE("search agrees with the exhaustive definition") {
    SplitMix64 r(23);
    for (int i = 0; i < 40; ++i) {
        WCCG g = random_instance(r, 1 + static_cast<int>(r.below(6)));
        for (Color c : {Color::blue, Color::red}) {
            GeneralizedCliqueWitness w = max_generalized_clique(g, c);
            CHECK(witness_valid(g, c, w));
            CHECK(w.size() == brute_max(g, c));
        }
    }
}

TEST_CASE("the view form matches the direct search") {
    SplitMix64 r(31);
    for (int i = 0; i < 10; ++i) {
        WCCG g = random_instance(r, 5);
        for (Color c : {Color::blue, Color::red}) {
            std::vector<bool> marked(g.t);
            BitGraph half(g.t), full(g.t);
            for (int v = 0; v < g.t; ++v) marked[v] = g.vertex_colors[v] == c;
            for (int a = 0; a < g.t; ++a)
                for (int b = a + 1; b < g.t; ++b) {
                    if (g.color(a, b) != c) continue;
                    if (g.weight(a, b) != Weight::zero) half.add_edge(a, b);
                    if (g.weight(a, b) == Weight::one) full.add_edge(a, b);
                }
            CHECK(max_generalized_clique_view(g.t, marked, half, full).size() ==
                  max_generalized_clique(g, c).size());
        }
    }
}

TEST_CASE("witness validation rejects malformed witnesses") {
    WCCG g(3);
    GeneralizedCliqueWitness w;
    w.X = {0, 1};
    w.Y = {2};  // Y must be a subset of X
    CHECK_FALSE(witness_valid(g, Color::red, w));
    GeneralizedCliqueWitness dup;
    dup.X = {0, 0};
    CHECK_THROWS_AS(witness_valid(g, Color::red, dup), std::invalid_argument);
    CHECK_THROWS_AS(max_generalized_clique(WCCG(19), Color::red), std::invalid_argument);
}
