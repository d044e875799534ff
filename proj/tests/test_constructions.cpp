#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "rtw/constructions.hpp"
#include "rtw/lagrangian.hpp"
#include "rtw/ramsey.hpp"

using namespace rtw;

namespace {

BitGraph to_bits(const PlainGraph& g) {
    BitGraph b(g.n);
    for (auto& [u, v] : g.edges) b.add_edge(u, v);
    return b;
}

bool triangle_free(const PlainGraph& g) {
    BitGraph b = to_bits(g);
    for (auto& [u, v] : g.edges)
        if (b.common_neighbor(u, v)) return false;
    return true;
}

bool maximal_triangle_free(const PlainGraph& g) {
    BitGraph b = to_bits(g);
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (!b.has_edge(u, v) && !b.common_neighbor(u, v)) return false;
    return triangle_free(g);
}

}  // namespace

TEST_CASE("balanced parts differ by at most one and keep order") {
    CHECK(balanced_parts(7, 3) == std::vector<int>{3, 2, 2});
    CHECK(balanced_parts(6, 3) == std::vector<int>{2, 2, 2});
    CHECK(balanced_parts(2, 5) == std::vector<int>{1, 1, 0, 0, 0});
    CHECK_THROWS_AS(balanced_parts(3, 0), std::invalid_argument);
}

TEST_CASE("balanced multipartite graphs maximize edges at fixed independence") {
    PlainGraph t63 = turan_graph(6, 3);
    CHECK(t63.edges.size() == 12);
    CHECK(independence_number(t63).alpha == 2);
    PlainGraph t104 = turan_graph(10, 4);
    CHECK(t104.edges.size() == 37);
    CHECK(independence_number(t104).alpha == 3);
    for (int n = 1; n <= 12; ++n)
        for (int p = 1; p <= 4; ++p) {
            PlainGraph t = turan_graph(n, p);
            CHECK(independence_number(t).alpha == (n + p - 1) / p);
            CHECK(2LL * static_cast<long long>(t.edges.size()) * p >=
                  static_cast<long long>(n) * n * (p - 1) - static_cast<long long>(p) * p);
        }
}

TEST_CASE("the independence witness is a real independent set") {
    // Petersen graph: outer cycle, inner pentagram, spokes
    PlainGraph g;
    g.n = 10;
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, 5 + i);
    }
    IndependenceResult r = independence_number(g);
    CHECK(r.alpha == 4);
    CHECK(r.witness.size() == 4);
    for (size_t a = 0; a < r.witness.size(); ++a)
        for (size_t b = a + 1; b < r.witness.size(); ++b)
            CHECK_FALSE(g.has_edge(r.witness[a], r.witness[b]));
    PlainGraph big;
    big.n = 81;
    CHECK_THROWS_AS(independence_number(big), std::invalid_argument);
}

TEST_CASE("the seeded triangle-free process is maximal triangle-free") {
    for (uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        PlainGraph g = pseudo_erdos_graph(30, seed);
        CHECK(maximal_triangle_free(g));
    }
    CHECK(pseudo_erdos_graph(1, 0).edges.empty());
    CHECK_THROWS_AS(pseudo_erdos_graph(0, 0), std::invalid_argument);
}

TEST_CASE("blowup assembly places interiors, cross joins, and colors") {
    ColoredGraph cross(2);
    cross.set_edge(0, 1, Color::red);
    PlainGraph inner;
    inner.n = 2;
    inner.add_edge(0, 1);
    ColoredGraph g = canonical_coloring({2, 1}, {Color::blue, Color::red}, cross,
                                        {inner, PlainGraph{1, {}}});
    CHECK(g.n == 3);
    CHECK(g.vertex_colors ==
          std::vector<Color>{Color::blue, Color::blue, Color::red});
    CHECK(g.color(0, 1) == Color::blue);  // interior edge keeps the part color
    CHECK(g.color(0, 2) == Color::red);
    CHECK(g.color(1, 2) == Color::red);
    CHECK(g.complete);

    ColoredGraph sparse = canonical_coloring({2, 2}, {Color::red, Color::red},
                                             ColoredGraph(2), {});
    CHECK(sparse.edge_count() == 0);
    CHECK_FALSE(sparse.complete);

    CHECK_THROWS_AS(canonical_coloring({2}, {Color::red, Color::red}, cross, {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(canonical_coloring({2, 2}, {Color::red, Color::red}, cross,
                                       {inner}),
                    std::invalid_argument);
}

TEST_CASE("five-class blowups avoid a blue triangle and a red K_5") {
    ColoredGraph g = u_graph(40, 3, 3, 7);
    CHECK(g.n == 40);
    CHECK_FALSE(find_mono_clique(g, Color::blue, 3).has_value());
    CHECK_FALSE(find_mono_clique(g, Color::red, 5).has_value());
    CHECK(find_mono_clique(g, Color::red, 4).has_value());
    CHECK_THROWS_AS(u_graph(40, 5, 5, 0), std::invalid_argument);
}

TEST_CASE("adding the blue class keeps one more red step away") {
    ColoredGraph g = h_graph(36, 3, 3, 7);
    CHECK(g.n == 36);
    // six balanced classes; the last one is blue
    CHECK(g.vertex_colors[35] == Color::blue);
    CHECK(g.vertex_colors[0] == Color::red);
    CHECK_FALSE(find_mono_clique(g, Color::blue, 3).has_value());
    CHECK_FALSE(find_mono_clique(g, Color::red, 6).has_value());
    CHECK(find_mono_clique(g, Color::red, 5).has_value());
}

TEST_CASE("sphere graphs store unit points and reproducible edges") {
    SphereGraph s = be_graph(40, 5, 0.3, 9);
    CHECK(s.n == 40);
    CHECK(static_cast<int>(s.points.size()) == 40);
    for (const auto& p : s.points) {
        REQUIRE(p.size() == 6);
        double norm2 = 0;
        for (double x : p) norm2 += x * x;
        CHECK(std::abs(norm2 - 1.0) < 1e-12);
    }
    int first_class = 0;
    for (int v = 0; v < s.n; ++v) first_class += s.class_of[v] == 0;
    CHECK(first_class == 20);
    CHECK(s.edges == sphere_edges(s.points, s.class_of, s.mu, false));
    SphereGraph again = be_graph(40, 5, 0.3, 9);
    CHECK(again.edges == s.edges);
    CHECK_THROWS_AS(be_graph(41, 5, 0.3, 9), std::invalid_argument);
    CHECK_THROWS_AS(be_graph(40, 1, 0.3, 9), std::invalid_argument);
    CHECK_THROWS_AS(be_graph(40, 5, 0.0, 9), std::invalid_argument);
}

TEST_CASE("geometric blowups follow the base weight matrix") {
    WCCG base(2);
    GBESpec spec;
    spec.base = base;
    spec.class_sizes = {3, 4};
    spec.dim = 6;
    spec.mu = 0.1;
    spec.seed = 5;
    ColoredGraph g = gbe_graph(spec);
    CHECK(g.n == 7);
    // a weight-1 pair joins completely; near-antipodal within pairs are rare
    // enough at these sizes to leave interiors empty
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 7; ++j) {
            CHECK(g.has_edge(i, j));
            CHECK(g.color(i, j) == Color::red);
        }
    CHECK(g.edge_count() == 12);
    CHECK(edge_count_check(g, spec) == 0.0);

    spec.base.set_weight(0, 1, Weight::zero);
    ColoredGraph off = gbe_graph(spec);
    CHECK(off.edge_count() == 0);

    GBESpec bad = spec;
    bad.class_sizes = {3};
    CHECK_THROWS_AS(gbe_graph(bad), std::invalid_argument);
    bad = spec;
    bad.class_sizes = {3, 0};
    CHECK_THROWS_AS(gbe_graph(bad), std::invalid_argument);
    bad = spec;
    bad.mu = 2.0;
    CHECK_THROWS_AS(gbe_graph(bad), std::invalid_argument);
    bad = spec;
    bad.class_sizes = {3, 3};
    CHECK_THROWS_AS(edge_count_check(off, bad), std::invalid_argument);
}

TEST_CASE("mono clique search reports the lexicographically first witness") {
    ColoredGraph p = pentagonlike();
    CHECK_FALSE(find_mono_clique(p, Color::red, 3).has_value());
    auto edge = find_mono_clique(p, Color::red, 2);
    REQUIRE(edge.has_value());
    CHECK(*edge == std::vector<int>{0, 1});
    CHECK(find_mono_clique(p, Color::red, 0)->empty());
}
