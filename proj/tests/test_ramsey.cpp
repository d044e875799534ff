#include <algorithm>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "rtw/ramsey.hpp"
#include "rtw/rng.hpp"
#include "rtw/verification.hpp"

using namespace rtw;

namespace {

ColoredGraph random_complete(SplitMix64& r, int n) {
    ColoredGraph g(n, true);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g.set_edge(i, j, r.below(2) ? Color::red : Color::blue);
    return g;
}

ColoredGraph relabel(const ColoredGraph& g, const std::vector<int>& perm) {
    ColoredGraph h(g.n, true);
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j) h.set_edge(perm[i], perm[j], g.color(i, j));
    return h;
}

std::set<std::string> canonical_set(const std::vector<ColoredGraph>& gs) {
    std::set<std::string> out;
    for (const ColoredGraph& g : gs) out.insert(canonical_form(g));
    return out;
}

}  // namespace

TEST_CASE("canonical form is a permutation invariant") {
    SplitMix64 r(5);
    for (int i = 0; i < 15; ++i) {
        ColoredGraph g = random_complete(r, 6);
        std::vector<int> perm{0, 1, 2, 3, 4, 5};
        r.shuffle(perm);
        CHECK(canonical_form(g) == canonical_form(relabel(g, perm)));
    }
    ColoredGraph g = random_complete(r, 4);
    CHECK(coloring_from_canonical(4, canonical_form(g)).edge_count(Color::blue) ==
          g.edge_count(Color::blue));
    CHECK_THROWS_AS(coloring_from_canonical(4, "rr"), std::invalid_argument);
}

TEST_CASE("canonical form requires a small complete coloring") {
    ColoredGraph partial(3);
    partial.set_edge(0, 1, Color::red);
    CHECK_THROWS_AS(canonical_form(partial), std::invalid_argument);
    CHECK_THROWS_AS(canonical_form(ColoredGraph(13, true)), std::invalid_argument);
}

TEST_CASE("the pentagon coloring is the unique triangle-free coloring of K_5") {
    ColoredGraph p = pentagonlike();
    CHECK(is_ramsey_graph(p, 3, 3));
    CHECK(canonical_form(p) == canonical_form(nice_coloring(2)));
    std::vector<ColoredGraph> classes = enumerate_ramsey(5, 3, 3);
    REQUIRE(classes.size() == 1);
    CHECK(canonical_form(classes[0]) == canonical_form(p));
    CHECK(count_ramsey(6, 3, 3) == 0);
}

TEST_CASE("pruned enumeration matches the brute-force oracle") {
    for (int n = 2; n <= 6; ++n) {
        for (auto [p, q] : {std::pair{3, 3}, std::pair{3, 4}, std::pair{4, 3}}) {
            std::vector<ColoredGraph> fast = enumerate_ramsey(n, p, q);
            std::vector<ColoredGraph> slow = enumerate_ramsey_brute(n, p, q);
            CHECK(fast.size() == slow.size());
            CHECK(canonical_set(fast) == canonical_set(slow));
        }
    }
}

TEST_CASE("enumeration output is sorted and canonical") {
    std::vector<ColoredGraph> classes = enumerate_ramsey(6, 3, 4);
    std::vector<std::string> keys;
    for (const ColoredGraph& g : classes) keys.push_back(canonical_form(g));
    CHECK(std::is_sorted(keys.begin(), keys.end()));
    CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
}

TEST_CASE("swapping the forbidden colors swaps nothing but labels") {
    for (int n = 4; n <= 6; ++n)
        CHECK(count_ramsey(n, 3, 4) == count_ramsey(n, 4, 3));
}

TEST_CASE("the three eight-vertex classes avoid a red K_4 and a blue K_3") {
    std::vector<ColoredGraph> fam = gamma8_family();
    REQUIRE(fam.size() == 3);
    CHECK(canonical_set(fam).size() == 3);
    for (const ColoredGraph& g : fam) {
        CHECK(g.n == 8);
        CHECK(is_ramsey_graph(g, 4, 3));
    }
    // the circulant member is 3-regular in blue; each recoloring removes one
    // blue edge
    CHECK(fam[0].edge_count(Color::blue) == 12);
    CHECK(fam[1].edge_count(Color::blue) == 11);
    CHECK(fam[2].edge_count(Color::blue) == 10);
    CHECK(canonical_set(fam) == canonical_set(enumerate_ramsey(8, 4, 3)));
    CHECK(count_ramsey(9, 4, 3) == 0);
}

TEST_CASE("mono clique queries respect color and completeness") {
    ColoredGraph g = nice_coloring(3);
    CHECK(g.n == 8);
    CHECK(has_mono_clique(g, Color::red, 3));
    CHECK_FALSE(has_mono_clique(g, Color::red, 4));
    CHECK_FALSE(has_mono_clique(g, Color::blue, 3));
    CHECK(color_subgraph(g, Color::blue).edge_count() == 12);
    CHECK(underlying_graph(g).edge_count() == 28);
    ColoredGraph partial(3);
    CHECK_THROWS_AS(is_ramsey_graph(partial, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(nice_coloring(1), std::invalid_argument);
}

TEST_CASE("weighted canonical keys identify isomorphic weighted graphs") {
    WCCG a = rho36_extremal();
    // move the blue hub from vertex 5 to vertex 0
    std::vector<int> perm{5, 1, 2, 3, 4, 0};
    WCCG b(6);
    b.vertex_colors[0] = Color::blue;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            b.set(perm[i], perm[j], a.color(i, j), a.weight(i, j));
    CHECK(wccg_canonical_key(a) == wccg_canonical_key(b));
    CHECK(wccg_canonical_key(a) != wccg_canonical_key(rho37_extremal(0)));
    WCCG z(2);
    z.set(0, 1, Color::red, Weight::zero);
    WCCG zb(2);
    zb.set(0, 1, Color::blue, Weight::zero);
    CHECK(wccg_canonical_key(z) == wccg_canonical_key(zb));
}
