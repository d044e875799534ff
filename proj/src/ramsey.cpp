#include "rtw/ramsey.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rtw {

namespace {

constexpr int kCanonicalCap = 12;

char color_char(Color c) { return c == Color::blue ? 'b' : 'r'; }

// Minimal-string search over permutations with prefix pruning. Each depth-k
// placement appends the k characters of the new vertex's pairs to already
// placed vertices, in placement order.
struct CanonicalSearch {
    int n;
    // symbol(i, j) returns the fixed-width segment contribution of original
    // vertices i, j; vertex_sym the per-vertex prefix (empty for plain
    // colorings).
    std::function<std::string(int, int)> symbol;
    std::function<std::string(int)> vertex_sym;

    std::string best;
    bool have_best = false;
    std::vector<int> perm;
    std::vector<bool> used;
    std::string current;

    explicit CanonicalSearch(int n_) : n(n_), used(n_, false) {}

    void place(int depth, bool tight) {
        if (depth == n) {
            if (!have_best || current < best) {
                best = current;
                have_best = true;
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            std::string seg = vertex_sym(v);
            for (int i = 0; i < depth; ++i) seg += symbol(perm[i], v);
            bool next_tight = false;
            if (have_best && tight) {
                // compare against the same-position slice of best
                int cmp = best.compare(current.size(), seg.size(), seg);
                if (cmp < 0) continue;  // worse than best, prune
                next_tight = cmp == 0;
            }
            used[v] = true;
            perm.push_back(v);
            size_t mark = current.size();
            current += seg;
            place(depth + 1, next_tight);
            current.resize(mark);
            perm.pop_back();
            used[v] = false;
        }
    }

    std::string run() {
        place(0, true);
        return best;
    }
};

}  // namespace

std::string canonical_form(const ColoredGraph& g) {
    if (g.n > kCanonicalCap)
        throw std::invalid_argument("canonical form supports n <= 12");
    for (uint8_t c : g.pair_color)
        if (c == 0) throw std::invalid_argument("canonical form requires a complete coloring");
    CanonicalSearch search(g.n);
    search.symbol = [&](int i, int j) { return std::string(1, color_char(g.color(i, j))); };
    search.vertex_sym = [](int) { return std::string(); };
    return search.run();
}

ColoredGraph coloring_from_canonical(int n, const std::string& s) {
    if (s.size() != static_cast<size_t>(n) * (n - 1) / 2)
        throw std::invalid_argument("canonical string length mismatch");
    ColoredGraph g(n, true);
    size_t pos = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++pos)
            g.set_edge(i, j, s[pos] == 'b' ? Color::blue : Color::red);
    return g;
}

std::string wccg_canonical_key(const WCCG& g) {
    if (g.t > kCanonicalCap)
        throw std::invalid_argument("canonical key supports t <= 12");
    CanonicalSearch search(g.t);
    search.symbol = [&](int i, int j) {
        Weight w = g.weight(i, j);
        if (w == Weight::zero) return std::string("0.");
        std::string s(1, color_char(g.color(i, j)));
        s += w == Weight::half ? 'h' : 'f';
        return s;
    };
    search.vertex_sym = [&](int v) { return std::string(1, color_char(g.vertex_colors[v])); };
    return search.run();
}

BitGraph color_subgraph(const ColoredGraph& g, Color c) {
    BitGraph b(g.n);
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (g.has_edge(i, j) && g.color(i, j) == c) b.add_edge(i, j);
    return b;
}

BitGraph underlying_graph(const ColoredGraph& g) {
    BitGraph b(g.n);
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (g.has_edge(i, j)) b.add_edge(i, j);
    return b;
}

bool has_mono_clique(const ColoredGraph& g, Color c, int k) {
    return has_clique(color_subgraph(g, c), k);
}

bool is_ramsey_graph(const ColoredGraph& g, int p_red, int q_blue) {
    if (!g.complete) throw std::invalid_argument("coloring must be complete");
    return !has_mono_clique(g, Color::red, p_red) &&
           !has_mono_clique(g, Color::blue, q_blue);
}

namespace {

// The new vertex closes a red K_p iff its red neighborhood already holds a
// red K_{p-1}; likewise for blue. Only those local checks are needed when
// every level representative is already clique-free.
bool extension_ok(const ColoredGraph& g, const std::vector<Color>& new_colors, int p_red,
                  int q_blue) {
    int m = g.n;
    for (Color c : {Color::red, Color::blue}) {
        int limit = (c == Color::red ? p_red : q_blue) - 1;
        std::vector<int> nbrs;
        for (int i = 0; i < m; ++i)
            if (new_colors[i] == c) nbrs.push_back(i);
        if (static_cast<int>(nbrs.size()) < limit) continue;
        BitGraph sub(static_cast<int>(nbrs.size()));
        for (size_t a = 0; a < nbrs.size(); ++a)
            for (size_t b = a + 1; b < nbrs.size(); ++b)
                if (g.color(nbrs[a], nbrs[b]) == c)
                    sub.add_edge(static_cast<int>(a), static_cast<int>(b));
        if (has_clique(sub, limit)) return false;
    }
    return true;
}

void validate_ramsey_args(int n, int p_red, int q_blue) {
    if (n < 1 || n > 9) throw std::invalid_argument("enumeration supports 1 <= n <= 9");
    if (p_red < 1 || q_blue < 1) throw std::invalid_argument("clique bounds must be positive");
}

}  // namespace

std::vector<ColoredGraph> enumerate_ramsey(int n, int p_red, int q_blue) {
    validate_ramsey_args(n, p_red, q_blue);
    // a single vertex is a monochromatic K_1 of both colors at once
    if (p_red == 1 || q_blue == 1) return {};
    std::vector<ColoredGraph> reps{ColoredGraph(1, true)};
    for (int size = 2; size <= n; ++size) {
        std::map<std::string, ColoredGraph> next;
        for (const ColoredGraph& g : reps) {
            int m = size - 1;
            std::vector<Color> new_colors(m, Color::blue);
            for (uint32_t bits = 0; bits < (1u << m); ++bits) {
                for (int i = 0; i < m; ++i)
                    new_colors[i] = (bits >> i & 1) ? Color::red : Color::blue;
                if (!extension_ok(g, new_colors, p_red, q_blue)) continue;
                ColoredGraph g2(size, true);
                g2.pair_color.assign(static_cast<size_t>(size) * (size - 1) / 2, 0);
                for (int i = 0; i < m; ++i)
                    for (int j = i + 1; j < m; ++j) g2.set_edge(i, j, g.color(i, j));
                for (int i = 0; i < m; ++i) g2.set_edge(i, m, new_colors[i]);
                next.emplace(canonical_form(g2), g2);
            }
        }
        reps.clear();
        for (auto& [key, g] : next) {
            (void)key;
            reps.push_back(std::move(g));
        }
        if (reps.empty()) break;
    }
    return reps;
}

size_t count_ramsey(int n, int p_red, int q_blue) { return enumerate_ramsey(n, p_red, q_blue).size(); }

std::vector<ColoredGraph> enumerate_ramsey_brute(int n, int p_red, int q_blue) {
    validate_ramsey_args(n, p_red, q_blue);
    if (n > 6) throw std::invalid_argument("brute-force enumeration supports n <= 6");
    if (p_red == 1 || q_blue == 1) return {};
    int pairs = n * (n - 1) / 2;
    std::map<std::string, ColoredGraph> classes;
    for (uint32_t bits = 0; bits < (1u << pairs); ++bits) {
        ColoredGraph g(n, true);
        int pos = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++pos)
                g.set_edge(i, j, (bits >> pos & 1) ? Color::red : Color::blue);
        if (has_mono_clique(g, Color::red, p_red)) continue;
        if (has_mono_clique(g, Color::blue, q_blue)) continue;
        classes.emplace(canonical_form(g), g);
    }
    std::vector<ColoredGraph> out;
    for (auto& [key, g] : classes) {
        (void)key;
        out.push_back(std::move(g));
    }
    return out;
}

ColoredGraph nice_coloring(int k) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    int m = 3 * k - 1;
    ColoredGraph g(m, true);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            int d = (j - i) % m;
            bool blue = d >= k && d <= 2 * k - 1;
            g.set_edge(i, j, blue ? Color::blue : Color::red);
        }
    return g;
}

ColoredGraph pentagonlike() { return nice_coloring(2); }

std::vector<ColoredGraph> gamma8_family() {
    ColoredGraph g0 = nice_coloring(3);
    ColoredGraph g1 = g0;
    g1.set_edge(0, 4, Color::red);
    ColoredGraph g2 = g1;
    g2.set_edge(1, 5, Color::red);
    return {g0, g1, g2};
}

}  // namespace rtw
