#include "rtw/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rtw/ramsey.hpp"
#include "rtw/rng.hpp"

namespace rtw {

std::vector<int> balanced_parts(int n, int t) {
    if (t < 1) throw std::invalid_argument("part count must be positive");
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    std::vector<int> sizes(t, n / t);
    for (int i = 0; i < n % t; ++i) ++sizes[i];
    return sizes;
}

PlainGraph turan_graph(int n, int p) {
    std::vector<int> sizes = balanced_parts(n, p);
    std::vector<int> part(n);
    int v = 0;
    for (int i = 0; i < p; ++i)
        for (int k = 0; k < sizes[i]; ++k) part[v++] = i;
    PlainGraph g;
    g.n = n;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (part[a] != part[b]) g.add_edge(a, b);
    return g;
}

ColoredGraph canonical_coloring(const std::vector<int>& part_sizes,
                                const std::vector<Color>& part_colors,
                                const ColoredGraph& cross_colors,
                                const std::vector<PlainGraph>& internal_graphs) {
    int t = static_cast<int>(part_sizes.size());
    if (t == 0 || static_cast<int>(part_colors.size()) != t || cross_colors.n != t)
        throw std::invalid_argument("dimension mismatch");
    if (!internal_graphs.empty() && static_cast<int>(internal_graphs.size()) != t)
        throw std::invalid_argument("dimension mismatch");
    for (int i = 0; i < t; ++i) {
        if (part_sizes[i] < 0) throw std::invalid_argument("dimension mismatch");
        if (!internal_graphs.empty() && internal_graphs[i].n != part_sizes[i])
            throw std::invalid_argument("dimension mismatch");
    }

    std::vector<int> offset(t, 0);
    for (int i = 1; i < t; ++i) offset[i] = offset[i - 1] + part_sizes[i - 1];
    int n = offset[t - 1] + part_sizes[t - 1];

    ColoredGraph g(n);
    g.vertex_colors.resize(n);
    std::vector<int> part(n);
    for (int i = 0; i < t; ++i)
        for (int k = 0; k < part_sizes[i]; ++k) {
            part[offset[i] + k] = i;
            g.vertex_colors[offset[i] + k] = part_colors[i];
        }

    if (!internal_graphs.empty())
        for (int i = 0; i < t; ++i)
            for (auto& [a, b] : internal_graphs[i].edges)
                g.set_edge(offset[i] + a, offset[i] + b, part_colors[i]);

    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            int i = part[a], j = part[b];
            if (i != j && cross_colors.has_edge(i, j))
                g.set_edge(a, b, cross_colors.color(i, j));
        }

    g.complete = g.edge_count() == static_cast<size_t>(n) * (n - 1) / 2;
    return g;
}

PlainGraph pseudo_erdos_graph(int n, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    SplitMix64 rng(seed);
    rng.shuffle(pairs);

    BitGraph b(n);
    for (auto& [u, v] : pairs)
        if (!b.common_neighbor(u, v)) b.add_edge(u, v);

    PlainGraph g;
    g.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (b.has_edge(i, j)) {
                if (b.common_neighbor(i, j))
                    throw std::logic_error("triangle-free process produced a triangle");
                g.add_edge(i, j);
            }
    return g;
}

namespace {

ColoredGraph swap_colors(ColoredGraph g) {
    for (auto& c : g.pair_color)
        if (c != 0) c = static_cast<uint8_t>(other(static_cast<Color>(c)));
    for (auto& c : g.vertex_colors) c = other(c);
    return g;
}

// Coloring of the complete graph on r(p,q)-1 vertices with no blue K_p and
// no red K_q, for the supported (p,q).
ColoredGraph cross_pattern(int p, int q) {
    if (p == 3 && q == 3) return pentagonlike();
    if (p == 3 && q == 4) return nice_coloring(3);
    if (p == 4 && q == 3) return swap_colors(nice_coloring(3));
    throw std::invalid_argument("unsupported (p, q) pair");
}

}  // namespace

ColoredGraph u_graph(int n, int p, int q, uint64_t seed) {
    ColoredGraph cross = cross_pattern(p, q);
    int t = cross.n;
    std::vector<int> sizes = balanced_parts(n, t);
    SplitMix64 s(seed);
    std::vector<PlainGraph> interiors;
    for (int i = 0; i < t; ++i) {
        uint64_t sub = s.next();
        interiors.push_back(sizes[i] > 0 ? pseudo_erdos_graph(sizes[i], sub) : PlainGraph{});
    }
    std::vector<Color> colors(t, Color::red);
    return canonical_coloring(sizes, colors, cross, interiors);
}

ColoredGraph h_graph(int n, int p, int q, uint64_t seed) {
    ColoredGraph base = cross_pattern(p, q);
    int t = base.n + 1;
    ColoredGraph cross(t, true);
    for (int i = 0; i < base.n; ++i)
        for (int j = i + 1; j < base.n; ++j) cross.set_edge(i, j, base.color(i, j));
    for (int i = 0; i < base.n; ++i) cross.set_edge(i, t - 1, Color::red);

    std::vector<int> sizes = balanced_parts(n, t);
    SplitMix64 s(seed);
    std::vector<PlainGraph> interiors;
    for (int i = 0; i < t; ++i) {
        uint64_t sub = s.next();
        interiors.push_back(sizes[i] > 0 ? pseudo_erdos_graph(sizes[i], sub) : PlainGraph{});
    }
    std::vector<Color> colors(t, Color::red);
    colors[t - 1] = Color::blue;
    return canonical_coloring(sizes, colors, cross, interiors);
}

BitGraph SphereGraph::adjacency() const {
    BitGraph b(n);
    for (auto& [u, v] : edges) b.add_edge(u, v);
    return b;
}

std::vector<std::pair<int, int>> sphere_edges(
    const std::vector<std::vector<double>>& points,
    const std::vector<int>& class_of, double mu, bool within_strict) {
    int n = static_cast<int>(points.size());
    double cross2 = (std::sqrt(2.0) - mu) * (std::sqrt(2.0) - mu);
    double within2 = (2.0 - mu) * (2.0 - mu);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            double d2 = 0.0;
            for (size_t k = 0; k < points[u].size(); ++k) {
                double d = points[u][k] - points[v][k];
                d2 += d * d;
            }
            bool edge;
            if (class_of[u] == class_of[v])
                edge = within_strict ? d2 > within2 : d2 >= within2;
            else
                edge = d2 < cross2;
            if (edge) edges.emplace_back(u, v);
        }
    return edges;
}

namespace {

std::vector<std::vector<double>> uniform_sphere_points(int n, int dim_plus_one,
                                                       SplitMix64& rng) {
    std::vector<std::vector<double>> pts(n, std::vector<double>(dim_plus_one));
    for (auto& p : pts) {
        double norm2;
        do {
            norm2 = 0.0;
            for (double& x : p) {
                x = rng.gaussian();
                norm2 += x * x;
            }
        } while (norm2 < 1e-18);
        double inv = 1.0 / std::sqrt(norm2);
        for (double& x : p) x *= inv;
    }
    return pts;
}

}  // namespace

SphereGraph be_graph(int n, int h, double eps, uint64_t seed) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("n must be even and positive");
    if (h < 2) throw std::invalid_argument("h must be at least 2");
    if (eps <= 0.0) throw std::invalid_argument("eps must be positive");
    double mu = eps / std::sqrt(static_cast<double>(h));
    if (mu >= std::sqrt(2.0)) throw std::invalid_argument("mu out of range");

    SphereGraph g;
    g.n = n;
    g.h = h;
    g.mu = mu;
    g.class_of.assign(n, 0);
    for (int v = n / 2; v < n; ++v) g.class_of[v] = 1;
    SplitMix64 rng(seed);
    g.points = uniform_sphere_points(n, h + 1, rng);
    g.edges = sphere_edges(g.points, g.class_of, mu, false);
    return g;
}

ColoredGraph gbe_graph(const GBESpec& spec) {
    int t = spec.base.t;
    if (static_cast<int>(spec.class_sizes.size()) != t)
        throw std::invalid_argument("class count mismatch");
    for (int s : spec.class_sizes)
        if (s < 1) throw std::invalid_argument("class sizes must be positive");
    if (spec.dim < 1) throw std::invalid_argument("h must be positive");
    if (!(spec.mu > 0.0) || spec.mu >= std::sqrt(2.0))
        throw std::invalid_argument("mu out of range");

    int n = 0;
    for (int s : spec.class_sizes) n += s;
    std::vector<int> class_of(n);
    {
        int v = 0;
        for (int i = 0; i < t; ++i)
            for (int k = 0; k < spec.class_sizes[i]; ++k) class_of[v++] = i;
    }
    SplitMix64 rng(spec.seed);
    std::vector<std::vector<double>> pts = uniform_sphere_points(n, spec.dim + 1, rng);

    double cross2 = (std::sqrt(2.0) - spec.mu) * (std::sqrt(2.0) - spec.mu);
    double within2 = (2.0 - spec.mu) * (2.0 - spec.mu);

    ColoredGraph g(n);
    g.vertex_colors.resize(n);
    for (int v = 0; v < n; ++v) g.vertex_colors[v] = spec.base.vertex_colors[class_of[v]];

    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int i = class_of[u], j = class_of[v];
            if (i == j) {
                double d2 = 0.0;
                for (size_t k = 0; k < pts[u].size(); ++k) {
                    double d = pts[u][k] - pts[v][k];
                    d2 += d * d;
                }
                if (d2 > within2) g.set_edge(u, v, spec.base.vertex_colors[i]);
                continue;
            }
            Weight w = spec.base.weight(i, j);
            if (w == Weight::zero) continue;
            if (w == Weight::half) {
                double d2 = 0.0;
                for (size_t k = 0; k < pts[u].size(); ++k) {
                    double d = pts[u][k] - pts[v][k];
                    d2 += d * d;
                }
                if (!(d2 < cross2)) continue;
            }
            g.set_edge(u, v, spec.base.color(i, j));
        }

    g.complete = g.edge_count() == static_cast<size_t>(n) * (n - 1) / 2;
    return g;
}

double edge_count_check(const ColoredGraph& g, const GBESpec& spec) {
    int t = spec.base.t;
    if (static_cast<int>(spec.class_sizes.size()) != t)
        throw std::invalid_argument("class count mismatch");
    long long n = 0;
    for (int s : spec.class_sizes) n += s;
    if (g.n != n) throw std::invalid_argument("graph does not match spec");
    double expected = 0.0;
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j)
            expected += 0.5 * half_units(spec.base.weight(i, j)) *
                        spec.class_sizes[i] * spec.class_sizes[j];
    double e = static_cast<double>(g.edge_count());
    return std::abs(e - expected) / (static_cast<double>(n) * n);
}

IndependenceResult independence_number(const PlainGraph& g) {
    if (g.n > 80) throw std::invalid_argument("graph too large for exact independence search");
    BitGraph b(g.n);
    for (auto& [u, v] : g.edges) b.add_edge(u, v);
    IndependenceResult r;
    r.witness = max_independent_set_lex(b);
    r.alpha = static_cast<int>(r.witness.size());
    return r;
}

std::optional<std::vector<int>> find_mono_clique(const ColoredGraph& g, Color c, int l) {
    if (l <= 0) return std::vector<int>{};
    std::vector<int> w = clique_of_size(color_subgraph(g, c), l);
    if (w.empty()) return std::nullopt;
    return w;
}

}  // namespace rtw
