#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rtw/rational.hpp"

namespace rtw {

// Color 1 is blue, color 2 is red, for vertices and edges alike.
enum class Color : uint8_t { blue = 1, red = 2 };

inline Color other(Color c) { return c == Color::blue ? Color::red : Color::blue; }
std::string color_name(Color c);
Color parse_color(const std::string& s);

// Edge weights live in {0, 1/2, 1}; stored in half units so plain integer
// arithmetic stays exact everywhere outside the Lagrangian layer.
enum class Weight : uint8_t { zero = 0, half = 1, one = 2 };

inline int half_units(Weight w) { return static_cast<int>(w); }
Rat weight_value(Weight w);
std::string weight_string(Weight w);
Weight parse_weight(const std::string& s);

inline size_t pair_index(int i, int j, int n) {
    if (i > j) std::swap(i, j);
    return static_cast<size_t>(i) * n - static_cast<size_t>(i) * (i + 1) / 2 + (j - i - 1);
}

// Weighted colored complete graph: every pair carries one color and one
// weight; a weight-0 pair's color is ignored by all consumers.
struct WCCG {
    int t = 0;
    std::vector<Color> vertex_colors;
    std::vector<Color> edge_colors;   // size t*(t-1)/2, pair-indexed
    std::vector<Weight> weights;      // same indexing

    WCCG() = default;
    explicit WCCG(int t_, Color vcol = Color::red, Color ecol = Color::red,
                  Weight w = Weight::one)
        : t(t_),
          vertex_colors(t_, vcol),
          edge_colors(static_cast<size_t>(t_) * (t_ - 1) / 2, ecol),
          weights(static_cast<size_t>(t_) * (t_ - 1) / 2, w) {}

    Color color(int i, int j) const { return edge_colors[pair_index(i, j, t)]; }
    Weight weight(int i, int j) const { return weights[pair_index(i, j, t)]; }
    void set(int i, int j, Color c, Weight w) {
        edge_colors[pair_index(i, j, t)] = c;
        weights[pair_index(i, j, t)] = w;
    }
    void set_weight(int i, int j, Weight w) { weights[pair_index(i, j, t)] = w; }

    // Total edge weight, the quantity the Lagrangian maximizes over blow-ups.
    Rat mass() const;
};

// Two-colored graph, not necessarily complete: color 0 in the pair table
// means non-edge. vertex_colors is optional and empty when absent.
struct ColoredGraph {
    int n = 0;
    bool complete = false;
    std::vector<uint8_t> pair_color;  // 0 = non-edge, else Color value
    std::vector<Color> vertex_colors;

    ColoredGraph() = default;
    explicit ColoredGraph(int n_, bool complete_ = false)
        : n(n_), complete(complete_),
          pair_color(static_cast<size_t>(n_) * (n_ - 1) / 2, 0) {}

    bool has_edge(int i, int j) const { return pair_color[pair_index(i, j, n)] != 0; }
    Color color(int i, int j) const {
        return static_cast<Color>(pair_color[pair_index(i, j, n)]);
    }
    void set_edge(int i, int j, Color c) {
        pair_color[pair_index(i, j, n)] = static_cast<uint8_t>(c);
    }
    void clear_edge(int i, int j) { pair_color[pair_index(i, j, n)] = 0; }

    size_t edge_count() const;
    size_t edge_count(Color c) const;
};

struct PlainGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    bool has_edge(int i, int j) const {
        if (i > j) std::swap(i, j);
        for (auto& [u, v] : edges)
            if (u == i && v == j) return true;
        return false;
    }
    void add_edge(int i, int j) {
        if (i > j) std::swap(i, j);
        edges.emplace_back(i, j);
    }
};

// Point of the standard simplex, exact coordinates.
struct SimplexDistribution {
    std::vector<Rat> u;

    bool valid() const;
    std::vector<int> support() const;
};

struct GeneralizedCliqueWitness {
    std::vector<int> X;  // pairwise joined by the query color at weight >= 1/2
    std::vector<int> Y;  // subset of X, query-colored vertices, full pairs
    int size() const { return static_cast<int>(X.size() + Y.size()); }
};

// --- JSON (nlohmann, exact round-trip; weights serialized as strings) ---

std::string wccg_to_json(const WCCG& g);
WCCG wccg_from_json(const std::string& text);
std::string colored_to_json(const ColoredGraph& g);
ColoredGraph colored_from_json(const std::string& text);
std::string plain_to_json(const PlainGraph& g);
PlainGraph plain_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

std::ostream& operator<<(std::ostream& os, const WCCG& g);

}  // namespace rtw
