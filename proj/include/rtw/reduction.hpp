#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "rtw/bitset_graph.hpp"
#include "rtw/model.hpp"

namespace rtw {

// Cluster graph on m vertices of uniform weight 1/m: a vertex color per
// cluster and, for each pair, one weight in {0, 1/2, 1} per edge color,
// stored in half-units. After collapse the two weights of a pair sum to at
// most 1.
struct ClusterGraph {
    int m = 0;
    std::vector<Color> chi;
    std::vector<std::array<int, 2>> pair_hu;  // [0] = blue, [1] = red

    ClusterGraph() = default;
    explicit ClusterGraph(int m_, Color c = Color::red)
        : m(m_), chi(m_, c), pair_hu(static_cast<size_t>(m_) * (m_ - 1) / 2, {0, 0}) {}

    int hu(int i, int j, Color c) const {
        return pair_hu[pair_index(i, j, m)][c == Color::blue ? 0 : 1];
    }
    void set_hu(int i, int j, Color c, int v) {
        pair_hu[pair_index(i, j, m)][c == Color::blue ? 0 : 1] = v;
    }
};

// Total weighted edge mass: sum over pairs and colors of the weights.
Rat mass(const ClusterGraph& h);

// Iterative proof procedure of the two-color partition lemma: starting from
// U1 = V, extract a maximum blue-independent set into U2 while its size
// exceeds sqrt(delta)*n. Both outputs are verified exactly to satisfy
// alpha(G_k[U_k]) <= sqrt(delta)*n in the respective color; the input must
// satisfy alpha(g) <= delta*n (checked exactly, n <= 80).
std::pair<std::vector<int>, std::vector<int>> two_color_partition(
    const ColoredGraph& g, double delta);

// Exhaustive eps-regularity check of the (X, Y) bipartite subgraph of g:
// true iff every nonempty X' and Y' with |X'| >= eps|X|, |Y'| >= eps|Y|
// keeps the pair density within eps of d(X, Y). Exact rational arithmetic
// against the binary value of eps; |X|, |Y| <= 16.
bool check_eps_regular(const BitGraph& g, const std::vector<int>& X,
                       const std::vector<int>& Y, double eps);

// Density-band weighting of the quotient by a vertex partition: for each
// pair of parts and each color, omega = 0, 1/2, 1 according to whether the
// color's pair density lies below 2mu, in [2mu, 1/2 + 2mu), or at or above
// 1/2 + 2mu. Cluster colors are the majority vertex color of each part
// (ties blue). When eps is given, a color failing the eps-regularity check
// on a pair is weighted 0. Pairs whose weights then sum above 1 are
// collapsed by repeatedly subtracting 1/2 from the color matching the
// cluster color (the common one, else that of the lower-indexed cluster).
// The input must carry vertex colors.
ClusterGraph cluster_weights(const ColoredGraph& g,
                             const std::vector<std::vector<int>>& parts, double mu,
                             std::optional<double> eps = std::nullopt);

struct CopyStep {
    int kept = 0;        // vertex whose color and row survive
    int overwritten = 0; // vertex replaced by a copy of kept
};

struct SymmetrizeReport {
    std::vector<CopyStep> steps;
    std::vector<std::vector<int>> classes;  // sorted vertex lists, by minimum
    std::vector<Rat> class_weights;         // |A_i| / m
    std::vector<Rat> mass_trace;            // initial mass, then after each step
};

// Symmetrization: while some pair of zero-weight (in both colors) vertices
// differs in color or in row, overwrite the lower-weighted-degree vertex
// with a copy of the higher (ties keep the lower index). Each step changes
// the mass by d(kept) - d(overwritten) >= 0. At the fixpoint every
// zero-pair relation is transitive; the equivalence classes collapse to one
// vertex each. A class pair carrying weight 1/2 in both colors becomes a
// single weight-1 edge in the color opposite to the lower class
// representative's; a pair with no weight in either color becomes a
// weight-0 red pair. Input pairs must sum to at most 1.
std::pair<WCCG, SymmetrizeReport> symmetrize(const ClusterGraph& h);

// The weighted Turan cluster graph: balanced parts, weight-1 cross pairs,
// weight-0 within pairs. parts = 6 colors the cross pairs by the pentagon
// pattern on five red parts plus an all-red-joined blue part; parts = 8
// uses the circulant coloring of K_8 with all parts red.
ClusterGraph weighted_turan(int m, int parts);

// Size of the symmetric difference of the edge sets; with iso_minimize the
// minimum over all relabelings of the second graph (n <= 10).
long long edit_distance(const PlainGraph& a, const PlainGraph& b,
                        bool iso_minimize = false);

}  // namespace rtw
