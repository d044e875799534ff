#include "rtw/structures.hpp"

#include <stdexcept>

namespace rtw {

namespace {

void check_w(int t, const WPacking& pk) {
    if (t < 1) throw std::invalid_argument("t must be positive");
    if (pk.p < 0 || pk.q < 0 || pk.r < 0 || pk.s < 0)
        throw std::invalid_argument("packing counts must be nonnegative");
    if (pk.vertices_used() > t)
        throw std::invalid_argument("packing does not fit: 5p+4q+3r+2s > t");
}

void check_l(int t, const LPacking& pk) {
    if (t < 1) throw std::invalid_argument("t must be positive");
    if (pk.l1 < 0 || pk.l2 < 0 || pk.l3 < 0 || pk.l4 < 0 || pk.l5 < 0 || pk.l6 < 0 ||
        pk.l7 < 0)
        throw std::invalid_argument("packing counts must be nonnegative");
    if (pk.vertices_used() > t)
        throw std::invalid_argument("packing does not fit: 8l1+5l2+5l3+4l4+4l5+3l6+2l7 > t");
}

void halve_cycle(WCCG& g, int base, int len) {
    for (int i = 0; i < len; ++i)
        g.set_weight(base + i, base + (i + 1) % len, Weight::half);
}

void halve_clique(WCCG& g, int base, int len) {
    for (int i = 0; i < len; ++i)
        for (int j = i + 1; j < len; ++j) g.set_weight(base + i, base + j, Weight::half);
}

}  // namespace

WCCG build_w_structure(int t, const WPacking& pk) {
    check_w(t, pk);
    WCCG g(t);  // all red, all weights 1
    int base = 0;
    for (int i = 0; i < pk.p; ++i, base += 5) halve_cycle(g, base, 5);
    for (int i = 0; i < pk.q; ++i, base += 4) halve_clique(g, base, 4);
    for (int i = 0; i < pk.r; ++i, base += 3) halve_clique(g, base, 3);
    for (int i = 0; i < pk.s; ++i, base += 2) halve_clique(g, base, 2);
    return g;
}

WCCG build_l_structure(int t, const LPacking& pk) {
    check_l(t, pk);
    WCCG g(t);
    int base = 0;
    for (int i = 0; i < pk.l1; ++i, base += 8) halve_cycle(g, base, 8);
    for (int i = 0; i < pk.l2; ++i, base += 5) halve_clique(g, base, 5);
    for (int i = 0; i < pk.l3; ++i, base += 5) halve_cycle(g, base, 5);
    for (int i = 0; i < pk.l4; ++i, base += 4) halve_clique(g, base, 4);
    for (int i = 0; i < pk.l5; ++i, base += 4) halve_cycle(g, base, 4);
    for (int i = 0; i < pk.l6; ++i, base += 3) halve_clique(g, base, 3);
    for (int i = 0; i < pk.l7; ++i, base += 2) halve_clique(g, base, 2);
    return g;
}

Rat w_structure_density(int t, const WPacking& pk) {
    check_w(t, pk);
    long denom = 30L * t - 75L * pk.p - 72L * pk.q - 45L * pk.r - 20L * pk.s;
    return Rat(1) - Rat(30, denom);
}

Rat l_structure_density(int t, const LPacking& pk) {
    check_l(t, pk);
    long denom = 30L * t - 120L * pk.l1 - 100L * pk.l2 - 75L * pk.l3 - 72L * pk.l4 -
                 60L * pk.l5 - 45L * pk.l6 - 20L * pk.l7;
    return Rat(1) - Rat(30, denom);
}

WCCG half_pentagon() { return build_w_structure(5, WPacking{1, 0, 0, 0}); }

std::vector<std::pair<int, WPacking>> enumerate_w_specs(int t_cap) {
    std::vector<std::pair<int, WPacking>> out;
    for (int p = 0; 5 * p <= t_cap; ++p)
        for (int q = 0; 5 * p + 4 * q <= t_cap; ++q)
            for (int r = 0; 5 * p + 4 * q + 3 * r <= t_cap; ++r)
                for (int s = 0; 5 * p + 4 * q + 3 * r + 2 * s <= t_cap; ++s) {
                    WPacking pk{p, q, r, s};
                    for (int t = std::max(1, pk.vertices_used()); t <= t_cap; ++t)
                        out.emplace_back(t, pk);
                }
    return out;
}

std::vector<std::pair<int, LPacking>> enumerate_l_specs(int t_cap) {
    std::vector<std::pair<int, LPacking>> out;
    for (int l1 = 0; 8 * l1 <= t_cap; ++l1)
        for (int l2 = 0; 8 * l1 + 5 * l2 <= t_cap; ++l2)
            for (int l3 = 0; 8 * l1 + 5 * (l2 + l3) <= t_cap; ++l3)
                for (int l4 = 0; 8 * l1 + 5 * (l2 + l3) + 4 * l4 <= t_cap; ++l4)
                    for (int l5 = 0; 8 * l1 + 5 * (l2 + l3) + 4 * (l4 + l5) <= t_cap; ++l5)
                        for (int l6 = 0;
                             8 * l1 + 5 * (l2 + l3) + 4 * (l4 + l5) + 3 * l6 <= t_cap; ++l6)
                            for (int l7 = 0; 8 * l1 + 5 * (l2 + l3) + 4 * (l4 + l5) +
                                                 3 * l6 + 2 * l7 <=
                                             t_cap;
                                 ++l7) {
                                LPacking pk{l1, l2, l3, l4, l5, l6, l7};
                                for (int t = std::max(1, pk.vertices_used()); t <= t_cap; ++t)
                                    out.emplace_back(t, pk);
                            }
    return out;
}

}  // namespace rtw
