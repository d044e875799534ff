#pragma once

#include <optional>

#include "rtw/bitset_graph.hpp"
#include "rtw/model.hpp"

namespace rtw {

// Generalized clique in color c: a vertex set X pairwise joined by color-c
// pairs of weight >= 1/2, plus Y, a subset of X of c-colored vertices whose
// internal pairs all carry weight 1. Its size is |X| + |Y|, each Y member
// counting twice.
//
// Any Y stays valid when X grows, so the size is strictly monotone in X and
// the maximum is attained on a maximal clique of the at-least-half graph,
// with Y a maximum clique of the weight-1 subgraph on its marked members.
//
// The view form decouples the search from the container: at_least_half holds
// the admissible X-pairs, full the admissible Y-pairs (a subgraph of the
// former), and marked the vertices allowed into Y.
GeneralizedCliqueWitness max_generalized_clique_view(int t, const std::vector<bool>& marked,
                                                     const BitGraph& at_least_half,
                                                     const BitGraph& full);

GeneralizedCliqueWitness max_generalized_clique(const WCCG& g, Color c);

// Witness of size >= target, if one exists.
std::optional<GeneralizedCliqueWitness> find_generalized_clique(const WCCG& g, Color c,
                                                                int target);

inline bool has_generalized_clique(const WCCG& g, Color c, int size) {
    return find_generalized_clique(g, c, size).has_value();
}

bool witness_valid(const WCCG& g, Color c, const GeneralizedCliqueWitness& w);

}  // namespace rtw
