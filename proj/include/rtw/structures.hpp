#pragma once

#include "rtw/model.hpp"

namespace rtw {

// Half-weight piece packing on otherwise full K_t: p pentagons (cycle edges
// half, chords full), q copies of K_4, r triangles, s single edges, all
// vertex-disjoint. Feasible iff 5p + 4q + 3r + 2s <= t.
struct WPacking {
    int p = 0, q = 0, r = 0, s = 0;

    int vertices_used() const { return 5 * p + 4 * q + 3 * r + 2 * s; }
};

// Extended family: l1 eight-cycles, l2 copies of K_5, l3 pentagons, l4 copies
// of K_4, l5 four-cycles, l6 triangles, l7 single edges (cycle pieces keep
// chords full). Feasible iff 8l1 + 5l2 + 5l3 + 4l4 + 4l5 + 3l6 + 2l7 <= t.
struct LPacking {
    int l1 = 0, l2 = 0, l3 = 0, l4 = 0, l5 = 0, l6 = 0, l7 = 0;

    int vertices_used() const {
        return 8 * l1 + 5 * (l2 + l3) + 4 * (l4 + l5) + 3 * l6 + 2 * l7;
    }
};

WCCG build_w_structure(int t, const WPacking& pk);
WCCG build_l_structure(int t, const LPacking& pk);

// Closed forms for twice the Lagrangian maximum of the packed graphs.
Rat w_structure_density(int t, const WPacking& pk);
Rat l_structure_density(int t, const LPacking& pk);

// Pentagon with cycle edges at weight 1/2 and chords full; density 3/5.
WCCG half_pentagon();

std::vector<std::pair<int, WPacking>> enumerate_w_specs(int t_cap);
std::vector<std::pair<int, LPacking>> enumerate_l_specs(int t_cap);

}  // namespace rtw
