#include "rtw/bitset_graph.hpp"

#include <bit>

namespace rtw {

namespace {

using Words = std::vector<uint64_t>;

int popcount_span(const uint64_t* w, int words) {
    int c = 0;
    for (int i = 0; i < words; ++i) c += std::popcount(w[i]);
    return c;
}

int first_bit(const Words& w) {
    for (size_t i = 0; i < w.size(); ++i)
        if (w[i]) return static_cast<int>(i * 64 + std::countr_zero(w[i]));
    return -1;
}

bool any_bit(const Words& w) {
    for (uint64_t x : w)
        if (x) return true;
    return false;
}

void clear_bit(Words& w, int v) { w[v >> 6] &= ~(1ULL << (v & 63)); }
bool test_bit(const Words& w, int v) { return w[v >> 6] >> (v & 63) & 1; }

Words intersect(const Words& a, const uint64_t* b) {
    Words out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] & b[i];
    return out;
}

// Greedy coloring of the candidate set: emits vertices ordered by ascending
// color class; each vertex's class number bounds the largest clique through
// it inside the set.
void color_sort(const BitGraph& g, const Words& cand,
                std::vector<int>& order, std::vector<int>& bound) {
    order.clear();
    bound.clear();
    Words uncolored = cand;
    int color = 0;
    while (any_bit(uncolored)) {
        ++color;
        Words q = uncolored;
        while (true) {
            int v = first_bit(q);
            if (v < 0) break;
            order.push_back(v);
            bound.push_back(color);
            clear_bit(uncolored, v);
            clear_bit(q, v);
            const uint64_t* nv = g.row(v);
            for (size_t i = 0; i < q.size(); ++i) q[i] &= ~nv[i];
        }
    }
}

struct CliqueSolver {
    const BitGraph& g;
    int stop_at;
    int best = 0;
    std::vector<int> current;
    bool done = false;

    CliqueSolver(const BitGraph& g_, int stop_at_) : g(g_), stop_at(stop_at_) {}

    void note_clique() {
        if (static_cast<int>(current.size()) > best) {
            best = static_cast<int>(current.size());
            if (best >= stop_at) done = true;
        }
    }

    void expand(Words cand) {
        std::vector<int> order, bound;
        color_sort(g, cand, order, bound);
        for (int i = static_cast<int>(order.size()) - 1; i >= 0 && !done; --i) {
            if (static_cast<int>(current.size()) + bound[i] <= best) return;
            int v = order[i];
            current.push_back(v);
            Words next = intersect(cand, g.row(v));
            if (any_bit(next))
                expand(std::move(next));
            else
                note_clique();
            current.pop_back();
            clear_bit(cand, v);
        }
    }

    void run() {
        if (g.size() == 0) return;
        Words all((g.size() + 63) >> 6, 0);
        for (int v = 0; v < g.size(); ++v) all[v >> 6] |= 1ULL << (v & 63);
        expand(std::move(all));
    }
};

// First k-clique in lexicographic order of sorted vertex lists; DFS over
// increasing index sequences so the first hit is the lex minimum.
struct LexCliqueFinder {
    const BitGraph& g;
    int need;
    std::vector<int> current;
    std::vector<int> found;

    LexCliqueFinder(const BitGraph& g_, int k) : g(g_), need(k) {}

    int color_bound(const Words& cand) const {
        std::vector<int> order, bound;
        color_sort(g, cand, order, bound);
        return bound.empty() ? 0 : bound.back();
    }

    bool dfs(const Words& cand, int remaining) {
        if (remaining == 0) {
            found = current;
            return true;
        }
        if (color_bound(cand) < remaining) return false;
        for (int v = 0; v < g.size(); ++v) {
            if (!test_bit(cand, v)) continue;
            Words next = intersect(cand, g.row(v));
            // restrict to indices above v so sequences stay increasing
            for (int w = 0; w <= v; ++w) clear_bit(next, w);
            current.push_back(v);
            if (dfs(next, remaining - 1)) return true;
            current.pop_back();
        }
        return false;
    }

    bool run() {
        Words all((g.size() + 63) >> 6, 0);
        for (int v = 0; v < g.size(); ++v) all[v >> 6] |= 1ULL << (v & 63);
        return dfs(all, need);
    }
};

}  // namespace

int BitGraph::degree(int v) const { return popcount_span(row(v), words_); }

size_t BitGraph::edge_count() const {
    size_t total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

bool BitGraph::common_neighbor(int u, int v) const {
    const uint64_t* a = row(u);
    const uint64_t* b = row(v);
    for (int i = 0; i < words_; ++i)
        if (a[i] & b[i]) return true;
    return false;
}

BitGraph BitGraph::complement() const {
    BitGraph c(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!has_edge(u, v)) c.add_edge(u, v);
    return c;
}

int max_clique_size(const BitGraph& g, int stop_at) {
    if (g.size() == 0) return 0;
    CliqueSolver s(g, stop_at);
    s.run();
    return s.best;
}

bool has_clique(const BitGraph& g, int k) {
    if (k <= 0) return true;
    if (k > g.size()) return false;
    return max_clique_size(g, k) >= k;
}

std::vector<int> max_clique_lex(const BitGraph& g) {
    if (g.size() == 0) return {};
    int k = max_clique_size(g);
    if (k == 0) return {};
    LexCliqueFinder f(g, k);
    f.run();
    return f.found;
}

std::vector<int> clique_of_size(const BitGraph& g, int k) {
    if (k <= 0) return {};
    if (k > g.size() || !has_clique(g, k)) return {};
    LexCliqueFinder f(g, k);
    f.run();
    return f.found;
}

int independence_number(const BitGraph& g) { return max_clique_size(g.complement()); }

std::vector<int> max_independent_set_lex(const BitGraph& g) {
    return max_clique_lex(g.complement());
}

namespace {

void bron_kerbosch(const BitGraph& g, std::vector<int>& r, Words p, Words x,
                   const std::function<void(const std::vector<int>&)>& emit) {
    if (!any_bit(p) && !any_bit(x)) {
        emit(r);
        return;
    }
    // pivot: vertex of P union X with the most candidates among P
    int pivot = -1, pivot_deg = -1;
    for (int v = 0; v < g.size(); ++v) {
        if (!test_bit(p, v) && !test_bit(x, v)) continue;
        Words pn = intersect(p, g.row(v));
        int d = 0;
        for (uint64_t w : pn) d += std::popcount(w);
        if (d > pivot_deg) { pivot_deg = d; pivot = v; }
    }
    Words ext = p;
    if (pivot >= 0) {
        const uint64_t* np = g.row(pivot);
        for (size_t i = 0; i < ext.size(); ++i) ext[i] &= ~np[i];
    }
    for (int v = 0; v < g.size(); ++v) {
        if (!test_bit(ext, v)) continue;
        r.push_back(v);
        bron_kerbosch(g, r, intersect(p, g.row(v)), intersect(x, g.row(v)), emit);
        r.pop_back();
        clear_bit(p, v);
        x[v >> 6] |= 1ULL << (v & 63);
    }
}

}  // namespace

void maximal_cliques(const BitGraph& g,
                     const std::function<void(const std::vector<int>&)>& emit) {
    if (g.size() == 0) return;
    Words p((g.size() + 63) >> 6, 0), x((g.size() + 63) >> 6, 0);
    for (int v = 0; v < g.size(); ++v) p[v >> 6] |= 1ULL << (v & 63);
    std::vector<int> r;
    bron_kerbosch(g, r, std::move(p), std::move(x), emit);
}

}  // namespace rtw
