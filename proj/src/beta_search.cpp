#include "rtw/beta.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "rtw/genclique.hpp"
#include "rtw/ramsey.hpp"

namespace rtw {
namespace {

// Pairs whose weight can influence admissibility: only a pair inside some Y
// needs weight 1, and Y members are c-colored endpoints of color-c pairs, so
// a pair matters exactly when both endpoints share its color.  Everything
// else stays at weight 1, which maximizes the density.
std::vector<int> constrained_pairs(const ColoredGraph& coloring, const std::vector<Color>& chi) {
    std::vector<int> out;
    for (int i = 0; i < coloring.n; ++i) {
        for (int j = i + 1; j < coloring.n; ++j) {
            Color c = coloring.color(i, j);
            if (chi[i] == c && chi[j] == c) out.push_back(pair_index(i, j, coloring.n));
        }
    }
    return out;
}

WCCG assemble(const ColoredGraph& coloring, const std::vector<Color>& chi,
              const std::vector<int>& constrained, uint32_t full_mask) {
    WCCG g(coloring.n);
    g.vertex_colors = chi;
    for (int i = 0; i < coloring.n; ++i)
        for (int j = i + 1; j < coloring.n; ++j)
            g.set(i, j, coloring.color(i, j), Weight::one);
    for (size_t k = 0; k < constrained.size(); ++k)
        if (!(full_mask >> k & 1)) g.weights[constrained[k]] = Weight::half;
    return g;
}

// Witness of size exactly `limit`, obtained by unmarking extension members.
// The forbidden-clique pre-filter guarantees |X| < limit, so the extension
// set never runs dry.
GeneralizedCliqueWitness trim_witness(GeneralizedCliqueWitness w, int limit) {
    std::sort(w.Y.begin(), w.Y.end());
    while (w.size() > limit) w.Y.pop_back();
    return w;
}

struct Best {
    bool any = false;
    Rat value = 0;
    int t = 0;
    std::string key;
    WCCG witness;
    LagrangianResult result;
};

void consider(Best& best, const WCCG& g, const LagrangianResult& lr) {
    Rat value = lr.density();
    if (best.any && value < best.value) return;
    // Ties within one t resolve by canonical key; t runs in increasing order,
    // so an equal value at a later t never displaces the incumbent.
    if (best.any && value == best.value) {
        if (g.t > best.t) return;
        std::string key = wccg_canonical_key(g);
        if (key >= best.key) return;
        best.key = key;
        best.witness = g;
        best.result = lr;
        return;
    }
    best.any = true;
    best.value = value;
    best.t = g.t;
    best.key = wccg_canonical_key(g);
    best.witness = g;
    best.result = lr;
}

}  // namespace

BetaResult beta_search(int p_blue, int q_red, int t_max) {
    if (p_blue < 2 || q_red < 2) throw std::invalid_argument("forbidden clique sizes must be >= 2");
    if (t_max < 1 || t_max > 6) throw std::invalid_argument("beta search supports t_max in [1, 6]");

    Best best;
    size_t scored = 0;
    for (int t = 1; t <= t_max; ++t) {
        // Any q_red vertices pairwise red would form a red clique outright
        // (weights never drop below 1/2), so only Ramsey colorings qualify.
        std::vector<ColoredGraph> colorings = enumerate_ramsey(t, q_red, p_blue);
        for (const ColoredGraph& coloring : colorings) {
            std::vector<Color> chi(t);
            for (uint32_t bits = 0; bits < (1u << t); ++bits) {
                for (int v = 0; v < t; ++v)
                    chi[v] = (bits >> v & 1) ? Color::red : Color::blue;
                std::vector<int> constrained = constrained_pairs(coloring, chi);
                std::vector<int> pos(coloring.n * (coloring.n - 1) / 2, -1);
                for (size_t k = 0; k < constrained.size(); ++k) pos[constrained[k]] = int(k);

                uint32_t all_full = uint32_t((uint64_t(1) << constrained.size()) - 1);
                std::set<uint32_t> seen{all_full};
                std::vector<uint32_t> stack{all_full};
                while (!stack.empty()) {
                    uint32_t mask = stack.back();
                    stack.pop_back();
                    WCCG g = assemble(coloring, chi, constrained, mask);

                    std::optional<GeneralizedCliqueWitness> hit =
                        find_generalized_clique(g, Color::blue, p_blue);
                    int limit = p_blue;
                    if (!hit) {
                        hit = find_generalized_clique(g, Color::red, q_red);
                        limit = q_red;
                    }
                    if (!hit) {
                        ++scored;
                        consider(best, g, maximize_exact(g));
                        continue;
                    }

                    // Dropping any pair inside Y to weight 1/2 breaks this
                    // witness, and nothing else does; a branch per such pair
                    // covers every maximal admissible weight pattern below
                    // `mask`.  An empty cut (|Y| <= 1) means the violation is
                    // weight-independent and the whole subtree is dead.
                    GeneralizedCliqueWitness w = trim_witness(*hit, limit);
                    std::set<int> cut;
                    for (size_t yi = 0; yi < w.Y.size(); ++yi)
                        for (size_t yj = yi + 1; yj < w.Y.size(); ++yj) {
                            int a = std::min(w.Y[yi], w.Y[yj]);
                            int b = std::max(w.Y[yi], w.Y[yj]);
                            cut.insert(pos[pair_index(a, b, t)]);
                        }
                    for (int k : cut) {
                        uint32_t next = mask & ~(uint32_t(1) << k);
                        if (seen.insert(next).second) stack.push_back(next);
                    }
                }
            }
        }
    }

    BetaResult out;
    out.candidates_scored = scored;
    if (best.any) {
        out.value = best.value;
        out.witness = best.witness;
        out.witness_result = best.result;
    }
    return out;
}

}  // namespace rtw
