#pragma once

#include <vector>

#include "rtw/model.hpp"

namespace rtw {

// Exact maximum of g(W,u) = sum_{i<j} w(i,j) u_i u_j over the simplex.
// kkt_supports lists the distinct supports of stationary points attaining
// g_max (largest first, then lexicographic); interior is true iff some
// maximizer has every coordinate strictly positive.
struct LagrangianResult {
    Rat g_max;
    SimplexDistribution witness;
    bool interior = false;
    std::vector<std::vector<int>> kkt_supports;

    // Supports covering every maximizer: each maximizer is a convex
    // combination of the recorded optimal stationary candidates, so a
    // coordinate vanishing on all of them vanishes on every maximizer.
    std::vector<SimplexDistribution> optimal_candidates;

    Rat density() const { return 2 * g_max; }
};

// Support enumeration with exact rational KKT solves; t <= 16.
LagrangianResult maximize_exact(const WCCG& W);

Rat evaluate_g(const WCCG& W, const SimplexDistribution& u);

// d(x) = t * sum_y w(x,y) u_y; at an interior maximum all d(x) coincide and
// g = d(x) / (2t).
Rat weighted_degree(const WCCG& W, int x, const SimplexDistribution& u);

struct IterativeResult {
    double g = 0.0;
    std::vector<double> u;
    bool converged = false;
    int iterations = 0;
    int restarts = 0;
};

// Replicator ascent u_i <- u_i (Au)_i / (u'Au) from a fixed battery of
// deterministic restarts; floating point, serves as the independent check on
// the exact route.
IterativeResult maximize_iterative(const WCCG& W, int max_iter = 20000, double tol = 1e-14);

WCCG induced_subgraph(const WCCG& W, const std::vector<int>& keep);
WCCG delete_vertex(const WCCG& W, int x);

// Disjoint union with every cross pair at weight 1 (red).
WCCG join_full(const WCCG& a, const WCCG& b);

// Dense: the maximum is attained at a fully supported point.
bool is_dense(const WCCG& W);

// Upper bound 1 - 1/t - lambda/(2t) on 2g for a dense zero-free weighted
// K_t whose minimum number of half edges at a vertex is lambda. Degenerate
// instances can beat it by concentrating mass on a subgraph with fewer half
// edges.
Rat half_degree_bound(int t, int lambda);

int min_half_degree(const WCCG& W);

// Smallest k with val <= (1 - 1/k)/2, for the vertex-deletion bound chain
// g(W - x) <= (1 - 1/k)/2  =>  g(W) <= (1 - 1/(k+1))/2.
int deletion_bound_index(const Rat& g_value);

// Checks one step of that chain with the exact solver: true when either the
// premise g(W - x) <= (1 - 1/k)/2 fails or the conclusion for W holds.
bool vertex_deletion_bound_check(const WCCG& W, int x, int k);

}  // namespace rtw
