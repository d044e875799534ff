#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rtw/bitset_graph.hpp"
#include "rtw/model.hpp"

namespace rtw {

// Part sizes differing by at most 1, earlier parts never smaller.
std::vector<int> balanced_parts(int n, int t);

// Balanced complete p-partite graph (maximum edges over p-partite graphs).
PlainGraph turan_graph(int n, int p);

// Blowup assembly: class i receives internal_graphs[i] with every internal
// edge colored part_colors[i]; a pair of classes is joined completely in the
// color cross_colors assigns them, or not at all where cross_colors has no
// edge. Vertex colors are the part colors. internal_graphs may be empty,
// meaning every class is edgeless inside.
ColoredGraph canonical_coloring(const std::vector<int>& part_sizes,
                                const std::vector<Color>& part_colors,
                                const ColoredGraph& cross_colors,
                                const std::vector<PlainGraph>& internal_graphs);

// Truncated triangle-free process: insert the C(n,2) pairs in a seeded
// uniform order, keeping each edge that closes no triangle, until maximal.
// Triangle-freeness is re-verified exhaustively before returning.
PlainGraph pseudo_erdos_graph(int n, uint64_t seed);

// r(p,q)-1 balanced classes joined per a fixed coloring of the complete
// graph on them with no blue K_p and no red K_q; a red triangle-free
// process graph inside each class. Supported (p,q): (3,3), (3,4), (4,3).
// Avoids blue K_p and red K_{2q-1}.
ColoredGraph u_graph(int n, int p, int q, uint64_t seed);

// r(p,q) balanced classes: the first r(p,q)-1 as in u_graph, the last class
// blue with a blue triangle-free process graph inside and all cross edges
// to it red. Avoids blue K_p and red K_{2q}.
ColoredGraph h_graph(int n, int p, int q, uint64_t seed);

struct SphereGraph {
    int n = 0;
    int h = 0;
    double mu = 0.0;
    std::vector<int> class_of;
    std::vector<std::vector<double>> points;  // unit vectors in R^{h+1}
    std::vector<std::pair<int, int>> edges;   // sorted pairs, u < v

    BitGraph adjacency() const;
};

// Edge set determined by the stored points alone: cross-class pairs are
// edges iff d < sqrt(2) - mu, same-class pairs iff d >= 2 - mu when
// within_strict is false and d > 2 - mu when true. Distances are compared
// as squared values against thresholds computed once.
std::vector<std::pair<int, int>> sphere_edges(
    const std::vector<std::vector<double>>& points,
    const std::vector<int>& class_of, double mu, bool within_strict);

// Two classes of n/2 i.i.d. uniform unit vectors in R^{h+1}, mu = eps /
// sqrt(h); near-orthogonal cross pairs and near-antipodal within pairs
// become edges (within rule non-strict).
SphereGraph be_graph(int n, int h, double eps, uint64_t seed);

struct GBESpec {
    WCCG base;
    std::vector<int> class_sizes;
    int dim = 2;
    double mu = 0.0;
    uint64_t seed = 0;
};

// Geometric blowup of the base: weight-1 pairs of classes joined fully,
// weight-1/2 pairs by the near-orthogonality rule, weight-0 pairs not at
// all; same-class pairs joined iff d > 2 - mu (strict). Edge colors follow
// the base's edge colors across classes and its vertex colors inside.
ColoredGraph gbe_graph(const GBESpec& spec);

// |e(g) - sum_{i<j} w_ij n_i n_j| / n^2, the deviation of the edge count
// from the weight-matrix prediction (within-class edges are the noise).
double edge_count_check(const ColoredGraph& g, const GBESpec& spec);

struct IndependenceResult {
    int alpha = 0;
    std::vector<int> witness;
};

// Exact maximum independent set, n <= 80.
IndependenceResult independence_number(const PlainGraph& g);

// Lexicographically smallest clique of size l in the given color, or
// absence verified exhaustively.
std::optional<std::vector<int>> find_mono_clique(const ColoredGraph& g, Color c, int l);

}  // namespace rtw
