#include "rtw/genclique.hpp"

#include <algorithm>
#include <stdexcept>

namespace rtw {

GeneralizedCliqueWitness max_generalized_clique_view(int t, const std::vector<bool>& marked,
                                                     const BitGraph& at_least_half,
                                                     const BitGraph& full) {
    (void)t;
    GeneralizedCliqueWitness best;
    bool have = false;
    maximal_cliques(at_least_half, [&](const std::vector<int>& x) {
        std::vector<int> m;
        for (int v : x)
            if (marked[v]) m.push_back(v);
        BitGraph sub(static_cast<int>(m.size()));
        for (size_t i = 0; i < m.size(); ++i)
            for (size_t j = i + 1; j < m.size(); ++j)
                if (full.has_edge(m[i], m[j])) sub.add_edge(int(i), int(j));
        std::vector<int> y_local = max_clique_lex(sub);
        std::vector<int> y;
        y.reserve(y_local.size());
        for (int k : y_local) y.push_back(m[k]);

        int sz = static_cast<int>(x.size() + y.size());
        if (have && sz < best.size()) return;
        if (have && sz == best.size() && !std::lexicographical_compare(x.begin(), x.end(),
                                                                       best.X.begin(), best.X.end()))
            return;
        best.X = x;
        best.Y = std::move(y);
        have = true;
    });
    return best;
}

namespace {

void build_views(const WCCG& g, Color c, std::vector<bool>& marked, BitGraph& half,
                 BitGraph& full) {
    marked.assign(g.t, false);
    for (int v = 0; v < g.t; ++v) marked[v] = g.vertex_colors[v] == c;
    half = BitGraph(g.t);
    full = BitGraph(g.t);
    for (int i = 0; i < g.t; ++i)
        for (int j = i + 1; j < g.t; ++j) {
            if (g.color(i, j) != c || g.weight(i, j) == Weight::zero) continue;
            half.add_edge(i, j);
            if (g.weight(i, j) == Weight::one) full.add_edge(i, j);
        }
}

}  // namespace

GeneralizedCliqueWitness max_generalized_clique(const WCCG& g, Color c) {
    if (g.t > 18) throw std::invalid_argument("generalized clique search supports t <= 18");
    std::vector<bool> marked;
    BitGraph half, full;
    build_views(g, c, marked, half, full);
    return max_generalized_clique_view(g.t, marked, half, full);
}

std::optional<GeneralizedCliqueWitness> find_generalized_clique(const WCCG& g, Color c,
                                                                int target) {
    GeneralizedCliqueWitness best = max_generalized_clique(g, c);
    if (best.size() >= target) return best;
    return std::nullopt;
}

bool witness_valid(const WCCG& g, Color c, const GeneralizedCliqueWitness& w) {
    auto well_formed = [&](const std::vector<int>& s) {
        for (size_t i = 0; i < s.size(); ++i) {
            if (s[i] < 0 || s[i] >= g.t) return false;
            for (size_t j = i + 1; j < s.size(); ++j)
                if (s[i] == s[j]) return false;
        }
        return true;
    };
    if (!well_formed(w.X) || !well_formed(w.Y)) throw std::invalid_argument("bad witness");

    for (size_t i = 0; i < w.X.size(); ++i)
        for (size_t j = i + 1; j < w.X.size(); ++j) {
            if (g.color(w.X[i], w.X[j]) != c) return false;
            if (g.weight(w.X[i], w.X[j]) == Weight::zero) return false;
        }
    for (size_t i = 0; i < w.Y.size(); ++i) {
        int y = w.Y[i];
        if (std::find(w.X.begin(), w.X.end(), y) == w.X.end()) return false;
        if (g.vertex_colors[y] != c) return false;
        for (size_t j = i + 1; j < w.Y.size(); ++j)
            if (g.weight(y, w.Y[j]) != Weight::one) return false;
    }
    return true;
}

}  // namespace rtw
