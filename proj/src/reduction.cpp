#include "rtw/reduction.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "rtw/constructions.hpp"
#include "rtw/ramsey.hpp"

namespace rtw {

Rat mass(const ClusterGraph& h) {
    long long total = 0;
    for (auto& p : h.pair_hu) total += p[0] + p[1];
    return Rat(total, 2);
}

namespace {

BitGraph induced_bits(const BitGraph& g, const std::vector<int>& keep) {
    BitGraph sub(static_cast<int>(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = i + 1; j < keep.size(); ++j)
            if (g.has_edge(keep[i], keep[j])) sub.add_edge(static_cast<int>(i), static_cast<int>(j));
    return sub;
}

int exact_alpha(const BitGraph& g, const std::vector<int>& keep) {
    return independence_number(induced_bits(g, keep));
}

}  // namespace

std::pair<std::vector<int>, std::vector<int>> two_color_partition(
    const ColoredGraph& g, double delta) {
    if (g.n > 80) throw std::invalid_argument("graph too large for exact independence search");
    std::pair<std::vector<int>, std::vector<int>> out;
    if (g.n == 0) return out;

    BitGraph underlying(g.n);
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (g.has_edge(i, j)) underlying.add_edge(i, j);
    if (independence_number(underlying) > delta * g.n)
        throw std::invalid_argument("alpha(g) exceeds delta * n");

    BitGraph blue = color_subgraph(g, Color::blue);
    BitGraph red = color_subgraph(g, Color::red);
    double bound2 = delta * g.n * g.n;  // compare |S|^2 against delta * n^2

    std::vector<int>& u1 = out.first;
    std::vector<int>& u2 = out.second;
    for (int v = 0; v < g.n; ++v) u1.push_back(v);
    while (!u1.empty()) {
        BitGraph sub = induced_bits(blue, u1);
        std::vector<int> local = max_independent_set_lex(sub);
        double sz = static_cast<double>(local.size());
        if (!(sz * sz > bound2)) break;
        std::vector<char> moved(u1.size(), 0);
        for (int idx : local) {
            u2.push_back(u1[idx]);
            moved[idx] = 1;
        }
        std::vector<int> rest;
        for (size_t i = 0; i < u1.size(); ++i)
            if (!moved[i]) rest.push_back(u1[i]);
        u1 = std::move(rest);
    }
    std::sort(u2.begin(), u2.end());

    double a1 = exact_alpha(blue, u1);
    double a2 = exact_alpha(red, u2);
    if (a1 * a1 > bound2 || a2 * a2 > bound2)
        throw std::logic_error("partition postcondition failed");
    return out;
}

bool check_eps_regular(const BitGraph& g, const std::vector<int>& X,
                       const std::vector<int>& Y, double eps) {
    int a = static_cast<int>(X.size());
    int b = static_cast<int>(Y.size());
    if (a > 16 || b > 16) throw std::invalid_argument("subset budget exceeded");
    if (eps < 0.0) throw std::invalid_argument("eps must be nonnegative");
    if (a == 0 || b == 0) return true;

    std::vector<uint32_t> ybits(b, 0);
    long long e = 0;
    for (int y = 0; y < b; ++y)
        for (int x = 0; x < a; ++x)
            if (X[x] != Y[y] && g.has_edge(X[x], Y[y])) {
                ybits[y] |= 1u << x;
                ++e;
            }

    Rat eps_r(eps);
    Rat big = Rat(e, static_cast<long long>(a) * b);
    Rat lo = big - eps_r, hi = big + eps_r;

    std::vector<int> deg(b);
    std::vector<long long> pre(b + 1);
    for (uint32_t mask = 1; mask < (1u << a); ++mask) {
        int asz = std::popcount(mask);
        if (Rat(asz) < eps_r * a) continue;
        for (int y = 0; y < b; ++y) deg[y] = std::popcount(mask & ybits[y]);
        std::sort(deg.begin(), deg.end());
        pre[0] = 0;
        for (int y = 0; y < b; ++y) pre[y + 1] = pre[y] + deg[y];
        for (int k = 1; k <= b; ++k) {
            if (Rat(k) < eps_r * b) continue;
            long long denom = static_cast<long long>(asz) * k;
            // bottom-k and top-k degree sums bracket every k-subset density
            if (Rat(pre[k]) < lo * denom) return false;
            if (Rat(pre[b] - pre[b - k]) > hi * denom) return false;
        }
    }
    return true;
}

ClusterGraph cluster_weights(const ColoredGraph& g,
                             const std::vector<std::vector<int>>& parts, double mu,
                             std::optional<double> eps) {
    if (static_cast<int>(g.vertex_colors.size()) != g.n)
        throw std::invalid_argument("vertex colors required");
    if (mu < 0.0) throw std::invalid_argument("mu must be nonnegative");
    int m = static_cast<int>(parts.size());
    if (m == 0) throw std::invalid_argument("empty partition");

    std::vector<int> owner(g.n, -1);
    for (int i = 0; i < m; ++i) {
        if (parts[i].empty()) throw std::invalid_argument("empty part");
        for (int v : parts[i]) {
            if (v < 0 || v >= g.n) throw std::invalid_argument("vertex out of range");
            if (owner[v] != -1) throw std::invalid_argument("overlapping parts");
            owner[v] = i;
        }
    }
    for (int v = 0; v < g.n; ++v)
        if (owner[v] == -1) throw std::invalid_argument("partition must cover every vertex");

    ClusterGraph h(m);
    for (int i = 0; i < m; ++i) {
        int blue_cnt = 0;
        for (int v : parts[i])
            if (g.vertex_colors[v] == Color::blue) ++blue_cnt;
        h.chi[i] = 2 * blue_cnt >= static_cast<int>(parts[i].size()) ? Color::blue : Color::red;
    }

    BitGraph sub_blue = color_subgraph(g, Color::blue);
    BitGraph sub_red = color_subgraph(g, Color::red);
    Rat mu_r(mu);
    Rat band_lo = 2 * mu_r;
    Rat band_hi = Rat(1, 2) + 2 * mu_r;

    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            long long denom = static_cast<long long>(parts[i].size()) * parts[j].size();
            for (Color c : {Color::blue, Color::red}) {
                const BitGraph& sub = c == Color::blue ? sub_blue : sub_red;
                if (eps && !check_eps_regular(sub, parts[i], parts[j], *eps)) {
                    h.set_hu(i, j, c, 0);
                    continue;
                }
                long long cnt = 0;
                for (int u : parts[i])
                    for (int v : parts[j])
                        if (sub.has_edge(u, v)) ++cnt;
                Rat d(cnt, denom);
                h.set_hu(i, j, c, d < band_lo ? 0 : d < band_hi ? 1 : 2);
            }
            // collapse: the matching color is chi of the common class color,
            // else of the lower-indexed endpoint, hence chi[i] either way
            while (h.hu(i, j, Color::blue) + h.hu(i, j, Color::red) > 2) {
                Color chosen = h.chi[i];
                if (h.hu(i, j, chosen) == 0) chosen = other(chosen);
                h.set_hu(i, j, chosen, h.hu(i, j, chosen) - 1);
            }
        }
    return h;
}

namespace {

int weighted_degree_hu(const ClusterGraph& h, int v) {
    int d = 0;
    for (int u = 0; u < h.m; ++u)
        if (u != v) d += h.hu(v, u, Color::blue) + h.hu(v, u, Color::red);
    return d;
}

bool zero_pair(const ClusterGraph& h, int i, int j) {
    return h.hu(i, j, Color::blue) == 0 && h.hu(i, j, Color::red) == 0;
}

// Equal color and equal rows outside the pair itself.
bool copies(const ClusterGraph& h, int i, int j) {
    if (h.chi[i] != h.chi[j]) return false;
    for (int l = 0; l < h.m; ++l) {
        if (l == i || l == j) continue;
        if (h.hu(i, l, Color::blue) != h.hu(j, l, Color::blue)) return false;
        if (h.hu(i, l, Color::red) != h.hu(j, l, Color::red)) return false;
    }
    return true;
}

std::vector<int> encode_state(const ClusterGraph& h) {
    std::vector<int> s;
    for (Color c : h.chi) s.push_back(static_cast<int>(c));
    for (auto& p : h.pair_hu) {
        s.push_back(p[0]);
        s.push_back(p[1]);
    }
    return s;
}

}  // namespace

std::pair<WCCG, SymmetrizeReport> symmetrize(const ClusterGraph& input) {
    if (input.m < 1) throw std::invalid_argument("empty cluster graph");
    for (auto& p : input.pair_hu)
        if (p[0] + p[1] > 2) throw std::invalid_argument("pair weights exceed 1");

    ClusterGraph h = input;
    SymmetrizeReport rep;
    rep.mass_trace.push_back(mass(h));

    std::set<std::vector<int>> seen;
    seen.insert(encode_state(h));
    for (;;) {
        int pi = -1, pj = -1;
        for (int i = 0; i < h.m && pi < 0; ++i)
            for (int j = i + 1; j < h.m; ++j)
                if (zero_pair(h, i, j) && !copies(h, i, j)) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;
        int di = weighted_degree_hu(h, pi);
        int dj = weighted_degree_hu(h, pj);
        int src = di >= dj ? pi : pj;
        int dst = src == pi ? pj : pi;
        h.chi[dst] = h.chi[src];
        for (int l = 0; l < h.m; ++l) {
            if (l == pi || l == pj) continue;
            h.set_hu(dst, l, Color::blue, h.hu(src, l, Color::blue));
            h.set_hu(dst, l, Color::red, h.hu(src, l, Color::red));
        }
        rep.steps.push_back({src, dst});
        Rat after = mass(h);
        if (after < rep.mass_trace.back())
            throw std::logic_error("symmetrization decreased mass");
        rep.mass_trace.push_back(after);
        if (!seen.insert(encode_state(h)).second)
            throw std::runtime_error("symmetrization did not stabilize");
    }

    // At the fixpoint every zero-pair joins two exact copies, so the union
    // over zero-pairs is already transitive.
    std::vector<int> parent(h.m);
    for (int v = 0; v < h.m; ++v) parent[v] = v;
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (int i = 0; i < h.m; ++i)
        for (int j = i + 1; j < h.m; ++j)
            if (zero_pair(h, i, j)) {
                int a = find(i), b = find(j);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }

    std::vector<int> reps;
    for (int v = 0; v < h.m; ++v)
        if (find(v) == v) reps.push_back(v);
    std::sort(reps.begin(), reps.end());
    int t = static_cast<int>(reps.size());
    std::vector<int> cls_of(h.m);
    for (int v = 0; v < h.m; ++v)
        cls_of[v] = static_cast<int>(std::lower_bound(reps.begin(), reps.end(), find(v)) -
                                     reps.begin());

    rep.classes.assign(t, {});
    for (int v = 0; v < h.m; ++v) rep.classes[cls_of[v]].push_back(v);
    for (auto& c : rep.classes) rep.class_weights.emplace_back(c.size(), h.m);

    WCCG q(t);
    for (int a = 0; a < t; ++a) q.vertex_colors[a] = h.chi[reps[a]];
    for (int a = 0; a < t; ++a)
        for (int b = a + 1; b < t; ++b) {
            int hb = h.hu(reps[a], reps[b], Color::blue);
            int hr = h.hu(reps[a], reps[b], Color::red);
            if (hb == 0 && hr == 0) q.set(a, b, Color::red, Weight::zero);
            else if (hb == 1 && hr == 1)
                // two half edges of both colors merge into one full edge of
                // the color opposite to the lower representative's
                q.set(a, b, other(h.chi[reps[a]]), Weight::one);
            else if (hb > 0) q.set(a, b, Color::blue, hb == 1 ? Weight::half : Weight::one);
            else q.set(a, b, Color::red, hr == 1 ? Weight::half : Weight::one);
        }
    return {q, rep};
}

ClusterGraph weighted_turan(int m, int parts) {
    if (parts != 6 && parts != 8) throw std::invalid_argument("parts must be 6 or 8");
    if (m < parts) throw std::invalid_argument("m must be at least the part count");

    ColoredGraph cross(parts, true);
    std::vector<Color> part_color(parts, Color::red);
    if (parts == 6) {
        ColoredGraph pent = pentagonlike();
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) cross.set_edge(i, j, pent.color(i, j));
        for (int i = 0; i < 5; ++i) cross.set_edge(i, 5, Color::red);
        part_color[5] = Color::blue;
    } else {
        ColoredGraph circ = nice_coloring(3);
        for (int i = 0; i < parts; ++i)
            for (int j = i + 1; j < parts; ++j) cross.set_edge(i, j, circ.color(i, j));
    }

    std::vector<int> sizes = balanced_parts(m, parts);
    std::vector<int> part(m);
    {
        int v = 0;
        for (int i = 0; i < parts; ++i)
            for (int k = 0; k < sizes[i]; ++k) part[v++] = i;
    }
    ClusterGraph h(m);
    for (int v = 0; v < m; ++v) h.chi[v] = part_color[part[v]];
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v)
            if (part[u] != part[v]) h.set_hu(u, v, cross.color(part[u], part[v]), 2);
    return h;
}

long long edit_distance(const PlainGraph& a, const PlainGraph& b, bool iso_minimize) {
    if (a.n != b.n) throw std::invalid_argument("size mismatch");
    int n = a.n;
    BitGraph ga(n), gb(n);
    for (auto& [u, v] : a.edges) ga.add_edge(u, v);
    for (auto& [u, v] : b.edges) gb.add_edge(u, v);

    if (!iso_minimize) {
        long long d = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (ga.has_edge(i, j) != gb.has_edge(i, j)) ++d;
        return d;
    }
    if (n > 10) throw std::invalid_argument("iso_minimize limited to n <= 10");
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    long long best = -1;
    do {
        long long d = 0;
        for (int i = 0; i < n && (best < 0 || d < best); ++i)
            for (int j = i + 1; j < n; ++j)
                if (ga.has_edge(i, j) != gb.has_edge(perm[i], perm[j])) ++d;
        if (best < 0 || d < best) best = d;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace rtw
