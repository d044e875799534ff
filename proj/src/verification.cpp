#include "rtw/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "rtw/beta.hpp"
#include "rtw/constructions.hpp"
#include "rtw/genclique.hpp"
#include "rtw/lagrangian.hpp"
#include "rtw/ramsey.hpp"
#include "rtw/reduction.hpp"
#include "rtw/rng.hpp"
#include "rtw/structures.hpp"

namespace rtw {

WCCG rho36_extremal() {
    WCCG g(6);
    ColoredGraph pent = pentagonlike();
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) g.set(i, j, pent.color(i, j), Weight::one);
    g.vertex_colors[5] = Color::blue;
    return g;
}

WCCG rho37_extremal(int variant) {
    if (variant < 0 || variant > 2)
        throw std::invalid_argument("variant must be 0, 1, or 2");
    ColoredGraph c = gamma8_family()[variant];
    WCCG g(8);
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) g.set(i, j, c.color(i, j), Weight::one);
    return g;
}

std::array<WCCG, 3> fact_t10_matrices() {
    auto build = [](const std::vector<std::pair<int, int>>& halves) {
        WCCG g(10);
        for (auto& [i, j] : halves) g.set_weight(i, j, Weight::half);
        return g;
    };
    std::array<WCCG, 3> out = {
        build({{0, 1}, {2, 3}, {4, 5}, {0, 6}}),
        build({{0, 1}, {2, 3}, {4, 5}, {0, 2}}),
        build({{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}}),
    };

    // Transcribed literal of the first instance's full matrix; the assembly
    // from its half-pair list must reproduce it entry for entry.
    static const char* const printed[10] = {
        "0 1/2 1 1 1 1 1/2 1 1 1",
        "1/2 0 1 1 1 1 1 1 1 1",
        "1 1 0 1/2 1 1 1 1 1 1",
        "1 1 1/2 0 1 1 1 1 1 1",
        "1 1 1 1 0 1/2 1 1 1 1",
        "1 1 1 1 1/2 0 1 1 1 1",
        "1/2 1 1 1 1 1 0 1 1 1",
        "1 1 1 1 1 1 1 0 1 1",
        "1 1 1 1 1 1 1 1 0 1",
        "1 1 1 1 1 1 1 1 1 0",
    };
    for (int i = 0; i < 10; ++i) {
        std::istringstream row(printed[i]);
        for (int j = 0; j < 10; ++j) {
            std::string tok;
            row >> tok;
            if (i == j) {
                if (tok != "0") throw std::logic_error("matrix literal diagonal");
                continue;
            }
            if (parse_weight(tok) != out[0].weight(i, j))
                throw std::logic_error("assembled matrix disagrees with its printed literal");
        }
    }
    return out;
}

namespace {

// Frozen seeds: each passes its construction's defining checks below; found
// by scanning small seeds and pinned for reproducibility.
constexpr uint64_t kBeSeed = 1;
constexpr uint64_t kGbeSeed = 1;
constexpr uint64_t kSingleClassSeed = 1;
constexpr uint64_t kFullJoinSeed = 1;
constexpr uint64_t kHalfPairSeed = 1;
constexpr uint64_t kBlowupSeed = 1;

std::string approx_str(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string rat_detail(const Rat& r) {
    return to_string(r) + " (~" + approx_str(to_double(r)) + ")";
}

struct SuiteBuilder {
    SuiteReport rep;

    void add(const std::string& name, bool ok, const std::string& detail) {
        rep.checks.push_back({name, ok, detail});
        if (!ok) rep.all_passed = false;
    }
};

WCCG random_wccg(SplitMix64& r, int t, bool zero_free) {
    WCCG g(t);
    for (int v = 0; v < t; ++v)
        g.vertex_colors[v] = r.below(2) ? Color::red : Color::blue;
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) {
            Color c = r.below(2) ? Color::red : Color::blue;
            Weight w = zero_free ? (r.below(2) ? Weight::half : Weight::one)
                                 : static_cast<Weight>(r.below(3));
            g.set(i, j, c, w);
        }
    return g;
}

// Exhaustive reference for the generalized clique maximum, all (X, Y) pairs.
int brute_generalized_clique(const WCCG& g, Color c) {
    int t = g.t;
    int best = 0;
    for (uint32_t xm = 0; xm < (1u << t); ++xm) {
        std::vector<int> xs;
        for (int v = 0; v < t; ++v)
            if (xm >> v & 1) xs.push_back(v);
        bool ok = true;
        for (size_t a = 0; a < xs.size() && ok; ++a)
            for (size_t b = a + 1; b < xs.size() && ok; ++b)
                if (g.color(xs[a], xs[b]) != c || g.weight(xs[a], xs[b]) == Weight::zero)
                    ok = false;
        if (!ok) continue;
        uint32_t marked = 0;
        for (int v : xs)
            if (g.vertex_colors[v] == c) marked |= 1u << v;
        for (uint32_t ym = marked;; ym = (ym - 1) & marked) {
            std::vector<int> ys;
            for (int v = 0; v < t; ++v)
                if (ym >> v & 1) ys.push_back(v);
            bool yok = true;
            for (size_t a = 0; a < ys.size() && yok; ++a)
                for (size_t b = a + 1; b < ys.size() && yok; ++b)
                    if (g.weight(ys[a], ys[b]) != Weight::one) yok = false;
            if (yok)
                best = std::max(best, static_cast<int>(xs.size() + ys.size()));
            if (ym == 0) break;
        }
    }
    return best;
}

int cluster_generalized_clique(const ClusterGraph& h, Color c) {
    std::vector<bool> marked(h.m);
    BitGraph half(h.m), full(h.m);
    for (int v = 0; v < h.m; ++v) marked[v] = h.chi[v] == c;
    for (int i = 0; i < h.m; ++i)
        for (int j = i + 1; j < h.m; ++j) {
            if (h.hu(i, j, c) >= 1) half.add_edge(i, j);
            if (h.hu(i, j, c) == 2) full.add_edge(i, j);
        }
    return max_generalized_clique_view(h.m, marked, half, full).size();
}

void paper_suite(SuiteBuilder& b, bool inject_fault) {
    {
        LagrangianResult r = maximize_exact(half_pentagon());
        b.add("half pentagon density", r.density() == Rat(3, 5), rat_detail(r.density()));
    }
    {
        bool ok = true;
        for (int t = 2; t <= 10; ++t)
            if (maximize_exact(WCCG(t)).density() != Rat(t - 1, t)) ok = false;
        b.add("complete graph densities", ok, "1 - 1/t for t = 2..10");
    }
    {
        std::array<WCCG, 3> mats = fact_t10_matrices();
        LagrangianResult r0 = maximize_exact(mats[0]);
        b.add("three independent half edges plus shared endpoint",
              std::abs(to_double(r0.density()) - 0.8696) <= 5e-5,
              rat_detail(r0.density()));
        LagrangianResult r1 = maximize_exact(mats[1]);
        b.add("three independent half edges plus spanned pair",
              std::abs(to_double(r1.density()) - 0.8707) <= 5e-5,
              rat_detail(r1.density()));
        LagrangianResult r2 = maximize_exact(mats[2]);
        bool zeros = !r2.optimal_candidates.empty();
        for (auto& cand : r2.optimal_candidates)
            if (cand.u[0] != 0 || cand.u[2] != 0) zeros = false;
        b.add("half four-cycle boundary maximum",
              r2.density() == Rat(7, 8) && !r2.interior && zeros,
              rat_detail(r2.density()) + ", boundary only, first and third corner vanish");
    }
    {
        int count = 0;
        bool ok = true;
        for (auto& [t, pk] : enumerate_w_specs(10)) {
            ++count;
            if (maximize_exact(build_w_structure(t, pk)).density() !=
                w_structure_density(t, pk))
                ok = false;
        }
        b.add("half-structure closed forms", ok,
              std::to_string(count) + " packings, t <= 10");
    }
    {
        int count = 0;
        bool ok = true;
        for (auto& [t, pk] : enumerate_l_specs(12)) {
            ++count;
            if (maximize_exact(build_l_structure(t, pk)).density() !=
                l_structure_density(t, pk))
                ok = false;
        }
        b.add("full-structure closed forms", ok,
              std::to_string(count) + " packings, t <= 12");
    }
    {
        size_t c5 = count_ramsey(5, 3, 3);
        size_t c6 = count_ramsey(6, 3, 3);
        b.add("double-triangle-free counts", c5 == 1 && c6 == 0,
              "n=5: " + std::to_string(c5) + ", n=6: " + std::to_string(c6));
    }
    {
        std::vector<ColoredGraph> family = gamma8_family();
        if (inject_fault)
            family[1].set_edge(0, 1, other(family[1].color(0, 1)));
        std::vector<std::string> want, got;
        for (auto& g : family) want.push_back(canonical_form(g));
        for (auto& g : enumerate_ramsey(8, 4, 3)) got.push_back(canonical_form(g));
        std::sort(want.begin(), want.end());
        std::sort(got.begin(), got.end());
        std::string detail = "3 classes";
        bool ok = want == got && got.size() == 3;
        if (!ok) {
            detail = "family {";
            for (auto& s : want) detail += s + " ";
            detail += "} vs enumerated {";
            for (auto& s : got) detail += s + " ";
            detail += "}";
        }
        b.add("eight-vertex family match", ok, detail);
    }
    {
        size_t c9 = count_ramsey(9, 4, 3);
        b.add("nine-vertex exclusion", c9 == 0, std::to_string(c9) + " classes");
    }
    {
        WCCG g = rho36_extremal();
        LagrangianResult r = maximize_exact(g);
        bool ok = r.g_max == Rat(5, 12) && r.interior &&
                  !has_generalized_clique(g, Color::blue, 3) &&
                  !has_generalized_clique(g, Color::red, 6);
        int violations = 0, blues = 0;
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j)
                if (g.color(i, j) == Color::blue) {
                    ++blues;
                    WCCG h = g;
                    h.set(i, j, Color::red, Weight::one);
                    if (has_generalized_clique(h, Color::red, 6)) ++violations;
                }
        ok = ok && blues == 5 && violations == 5;
        b.add("pentagon-hub extremal", ok,
              "g = " + rat_detail(r.g_max) + ", interior, clique-free, " +
                  std::to_string(violations) + "/5 recolorings violate");
    }
    for (int variant = 0; variant < 3; ++variant) {
        WCCG g = rho37_extremal(variant);
        LagrangianResult r = maximize_exact(g);
        bool ok = r.g_max == Rat(7, 16) &&
                  !has_generalized_clique(g, Color::blue, 3) &&
                  !has_generalized_clique(g, Color::red, 7);
        int completions = 0;
        for (int i = 0; i < 8; ++i)
            for (int j = i + 1; j < 8; ++j)
                if (g.color(i, j) == Color::blue) {
                    WCCG h = g;
                    h.set(i, j, Color::red, Weight::one);
                    BitGraph red(8);
                    for (int a = 0; a < 8; ++a)
                        for (int c = a + 1; c < 8; ++c)
                            if (h.color(a, c) == Color::red) red.add_edge(a, c);
                    if (has_clique(red, 4)) {
                        ++completions;
                        if (!has_generalized_clique(h, Color::red, 7)) ok = false;
                    }
                }
        ok = ok && completions > 0;
        b.add("eight-vertex extremal variant " + std::to_string(variant), ok,
              "g = " + rat_detail(r.g_max) + ", clique-free, " +
                  std::to_string(completions) + " completions all violate");
    }
    {
        BetaResult r = beta_search(3, 3, 3);
        WCCG expect(2, Color::blue);
        bool ok = r.value == Rat(1, 2) &&
                  wccg_canonical_key(r.witness) == wccg_canonical_key(expect);
        b.add("forbidden-triple search value", ok, rat_detail(r.value));
    }
    {
        BetaResult r = beta_search(3, 6, 6);
        bool ok = r.value == Rat(5, 6) &&
                  wccg_canonical_key(r.witness) == wccg_canonical_key(rho36_extremal());
        b.add("forbidden-six search value", ok, rat_detail(r.value));
    }
    {
        ColoredGraph u = u_graph(60, 3, 3, kBlowupSeed);
        bool ok = !find_mono_clique(u, Color::blue, 3) && !find_mono_clique(u, Color::red, 5);
        b.add("five-class blowup cliques", ok, "no blue triangle, no red K5");
    }
    {
        ColoredGraph h = h_graph(60, 3, 3, kBlowupSeed);
        bool ok = !find_mono_clique(h, Color::blue, 3) && !find_mono_clique(h, Color::red, 6);
        b.add("six-class blowup cliques", ok, "no blue triangle, no red K6");
    }
    {
        SphereGraph s = be_graph(200, 20, 0.1, kBeSeed);
        BitGraph adj = s.adjacency();
        bool no_k4 = !has_clique(adj, 4);
        bool tf = true;
        for (int cls = 0; cls < 2; ++cls) {
            std::vector<int> keep;
            for (int v = 0; v < s.n; ++v)
                if (s.class_of[v] == cls) keep.push_back(v);
            BitGraph sub(static_cast<int>(keep.size()));
            for (size_t a = 0; a < keep.size(); ++a)
                for (size_t c = a + 1; c < keep.size(); ++c)
                    if (adj.has_edge(keep[a], keep[c]))
                        sub.add_edge(static_cast<int>(a), static_cast<int>(c));
            if (has_clique(sub, 3)) tf = false;
        }
        long long cross = 0;
        for (auto& [u, v] : s.edges)
            if (s.class_of[u] != s.class_of[v]) ++cross;
        double mean = 2.0 * static_cast<double>(cross) / s.n;
        bool band = mean >= 0.15 * s.n && mean <= 0.30 * s.n;
        b.add("two-class sphere graph", no_k4 && tf && band,
              "K4-free, class-triangle-free, mean cross degree " + approx_str(mean));
    }
    {
        GBESpec spec;
        spec.base = rho36_extremal();
        spec.class_sizes.assign(6, 150);
        spec.dim = 20;
        spec.mu = 0.3;
        spec.seed = kGbeSeed;
        ColoredGraph g = gbe_graph(spec);
        bool ok = !find_mono_clique(g, Color::blue, 3) && !find_mono_clique(g, Color::red, 6);
        GBESpec mutated = spec;
        mutated.base.set(0, 2, Color::red, Weight::one);
        ColoredGraph gm = gbe_graph(mutated);
        ok = ok && find_mono_clique(gm, Color::red, 6).has_value();
        b.add("geometric blowup cliques", ok,
              "clique-free; recolored base yields a red K6");
    }
    {
        GBESpec spec;
        spec.base = WCCG(1);
        spec.class_sizes = {300};
        spec.dim = 20;
        spec.mu = 0.3;
        spec.seed = kSingleClassSeed;
        ColoredGraph g = gbe_graph(spec);
        BitGraph red = color_subgraph(g, Color::red);
        bool ok = has_clique(red, 2) && !has_clique(red, 3);
        double err = edge_count_check(g, spec);
        ok = ok && err < 0.02;
        b.add("single-class sphere graph", ok,
              "largest red clique 2, edge count error " + approx_str(err));
    }
    {
        GBESpec spec;
        spec.base = rho36_extremal();
        spec.class_sizes.assign(6, 100);
        spec.dim = 20;
        spec.mu = 0.3;
        spec.seed = kFullJoinSeed;
        double err = edge_count_check(gbe_graph(spec), spec);

        GBESpec spec2;
        spec2.base = rho36_extremal();
        spec2.class_sizes.assign(6, 150);
        spec2.dim = 40;
        spec2.mu = 0.1;
        spec2.seed = kFullJoinSeed;
        double err2 = edge_count_check(gbe_graph(spec2), spec2);

        GBESpec spec3;
        spec3.base = half_pentagon();
        spec3.class_sizes.assign(5, 120);
        spec3.dim = 40;
        spec3.mu = 0.02;
        spec3.seed = kHalfPairSeed;
        double err3 = edge_count_check(gbe_graph(spec3), spec3);

        b.add("edge count predictions", err < 0.02 && err2 < 0.05 && err3 < 0.05,
              "errors " + approx_str(err) + ", " + approx_str(err2) + ", " +
                  approx_str(err3));
    }
    {
        Rat m1 = mass(weighted_turan(12, 6));
        Rat m2 = mass(weighted_turan(24, 6));
        Rat m3 = mass(weighted_turan(16, 8));
        Rat m4 = mass(weighted_turan(32, 8));
        ClusterGraph k6 = weighted_turan(6, 6);
        bool full = true;
        for (auto& p : k6.pair_hu)
            if (p[0] + p[1] != 2) full = false;
        bool ok = m1 == 60 && m2 == 240 && m3 == 112 && m4 == 448 && full;
        b.add("weighted Turan masses", ok,
              rat_detail(m1) + ", " + rat_detail(m2) + ", " + rat_detail(m3) + ", " +
                  rat_detail(m4) + "; six parts at m=6 give the full K6");
    }
}

void properties_suite(SuiteBuilder& b, uint64_t seed) {
    SplitMix64 master(seed);

    {
        SplitMix64 r(master.next());
        int found = 0, attempts = 0;
        bool ok = true;
        while (found < 300 && attempts < 30000) {
            ++attempts;
            WCCG w = random_wccg(r, 2 + static_cast<int>(r.below(7)), false);
            LagrangianResult res = maximize_exact(w);
            if (!res.interior) continue;
            ++found;
            Rat want = 2 * w.t * res.g_max;
            for (int x = 0; x < w.t; ++x)
                if (weighted_degree(w, x, res.witness) != want) ok = false;
        }
        b.add("equal degrees at interior maxima", ok && found == 300,
              std::to_string(found) + " interior instances");
    }
    {
        SplitMix64 r(master.next());
        int found = 0, attempts = 0;
        bool ok = true;
        // The bound assumes a dense instance; degenerate ones can beat it by
        // concentrating mass on a subgraph with fewer half edges.
        while (found < 200 && attempts < 30000) {
            ++attempts;
            int t = 2 + static_cast<int>(r.below(7));
            WCCG w = random_wccg(r, t, true);
            LagrangianResult res = maximize_exact(w);
            if (!res.interior) continue;
            ++found;
            if (res.density() > half_degree_bound(t, min_half_degree(w))) ok = false;
        }
        b.add("half-degree bounds", ok && found == 200,
              "200 dense zero-free instances, t <= 8");
    }
    {
        SplitMix64 r(master.next());
        bool ok = true;
        for (int i = 0; i < 200; ++i) {
            int t = 2 + static_cast<int>(r.below(7));
            WCCG w = random_wccg(r, t, false);
            int x = static_cast<int>(r.below(t));
            Rat gdel = maximize_exact(delete_vertex(w, x)).g_max;
            int k = deletion_bound_index(gdel);
            if (!vertex_deletion_bound_check(w, x, k)) ok = false;
        }
        b.add("vertex deletion bounds", ok, "200 instances, t <= 8");
    }
    {
        SplitMix64 r(master.next());
        int made = 0, attempts = 0;
        bool ok = true;
        while (made < 50 && attempts < 20000) {
            ++attempts;
            WCCG a = random_wccg(r, 2 + static_cast<int>(r.below(4)), false);
            WCCG c = random_wccg(r, 2 + static_cast<int>(r.below(4)), false);
            LagrangianResult ra = maximize_exact(a);
            if (!ra.interior) continue;
            LagrangianResult rc = maximize_exact(c);
            if (!rc.interior) continue;
            ++made;
            LagrangianResult rj = maximize_exact(join_full(a, c));
            Rat lhs = Rat(1) / (1 - 2 * rj.g_max);
            Rat rhs = Rat(1) / (1 - 2 * ra.g_max) + Rat(1) / (1 - 2 * rc.g_max);
            if (lhs != rhs || !rj.interior) ok = false;
        }
        b.add("dense join identities", ok && made == 50,
              std::to_string(made) + " dense pairs, t <= 5");
    }
    {
        SplitMix64 r(master.next());
        bool ok = true;
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            WCCG w = random_wccg(r, 2 + static_cast<int>(r.below(6)), false);
            double exact = to_double(maximize_exact(w).g_max);
            double iter = maximize_iterative(w).g;
            worst = std::max(worst, std::abs(exact - iter));
            if (std::abs(exact - iter) > 1e-6) ok = false;
        }
        b.add("iterative solver agreement", ok,
              "100 instances, worst gap " + approx_str(worst));
    }
    {
        SplitMix64 r(master.next());
        bool ok = true;
        for (int i = 0; i < 50; ++i) {
            WCCG w = random_wccg(r, 2 + static_cast<int>(r.below(6)), false);
            for (Color c : {Color::blue, Color::red})
                if (max_generalized_clique(w, c).size() != brute_generalized_clique(w, c))
                    ok = false;
        }
        b.add("generalized clique brute-force agreement", ok, "50 instances, t <= 7");
    }
    {
        SplitMix64 r(master.next());
        bool ok = true;
        for (int i = 0; i < 100; ++i) {
            WCCG w = random_wccg(r, 2 + static_cast<int>(r.below(5)), false);
            std::vector<std::pair<int, int>> halves;
            for (int a = 0; a < w.t; ++a)
                for (int c = a + 1; c < w.t; ++c)
                    if (w.weight(a, c) == Weight::half) halves.emplace_back(a, c);
            if (halves.empty()) continue;
            auto& [x, y] = halves[r.below(halves.size())];
            WCCG up = w;
            up.set_weight(x, y, Weight::one);
            if (maximize_exact(up).g_max < maximize_exact(w).g_max) ok = false;
        }
        b.add("half replacement monotonicity", ok, "100 instances, t <= 6");
    }
    {
        SplitMix64 r(master.next());
        bool ok = true;
        for (int i = 0; i < 20; ++i) {
            int n = 50 + static_cast<int>(r.below(11));
            ColoredGraph g(n, true);
            g.vertex_colors.resize(n);
            for (int v = 0; v < n; ++v)
                g.vertex_colors[v] = r.below(2) ? Color::red : Color::blue;
            for (int a = 0; a < n; ++a)
                for (int c = a + 1; c < n; ++c)
                    g.set_edge(a, c, r.below(2) ? Color::red : Color::blue);
            auto [u1, u2] = two_color_partition(g, 0.02);
            std::vector<char> seen(n, 0);
            for (int v : u1) seen[v] = 1;
            for (int v : u2) {
                if (seen[v]) ok = false;
                seen[v] = 1;
            }
            for (int v = 0; v < n; ++v)
                if (!seen[v]) ok = false;
        }
        b.add("partition postconditions", ok, "20 random colorings, n in [50, 60]");
    }
    {
        SplitMix64 r(master.next());
        bool ok = true;
        for (int i = 0; i < 20; ++i) {
            int m = 2 + static_cast<int>(r.below(11));
            ClusterGraph h(m);
            for (int v = 0; v < m; ++v)
                h.chi[v] = r.below(2) ? Color::red : Color::blue;
            for (int a = 0; a < m; ++a)
                for (int c = a + 1; c < m; ++c) {
                    switch (r.below(10)) {
                        case 4: h.set_hu(a, c, Color::blue, 1); break;
                        case 5: h.set_hu(a, c, Color::blue, 2); break;
                        case 6: h.set_hu(a, c, Color::red, 1); break;
                        case 7: h.set_hu(a, c, Color::red, 2); break;
                        case 8:
                        case 9:
                            h.set_hu(a, c, Color::blue, 1);
                            h.set_hu(a, c, Color::red, 1);
                            break;
                        default: break;
                    }
                }
            auto [q, rep] = symmetrize(h);
            for (size_t s = 1; s < rep.mass_trace.size(); ++s)
                if (rep.mass_trace[s] < rep.mass_trace[s - 1]) ok = false;
            Rat total = 0;
            for (auto& cw : rep.class_weights) total += cw;
            if (total != 1) ok = false;
            if (q.t != static_cast<int>(rep.classes.size())) ok = false;
            for (Color c : {Color::blue, Color::red})
                if (max_generalized_clique(q, c).size() > cluster_generalized_clique(h, c))
                    ok = false;
        }
        b.add("symmetrization postconditions", ok, "20 random cluster graphs, m <= 12");
    }
}

}  // namespace

std::string SuiteReport::text() const {
    std::string out = "suite: " + suite + "\nseed: " + std::to_string(seed) + "\n";
    for (auto& c : checks)
        out += std::string(c.passed ? "[PASS] " : "[FAIL] ") + c.name + ": " + c.detail + "\n";
    int failed = 0;
    for (auto& c : checks)
        if (!c.passed) ++failed;
    out += failed == 0 ? "result: all passed\n"
                       : "result: " + std::to_string(failed) + " failed\n";
    return out;
}

std::string SuiteReport::json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["seed"] = seed;
    j["all_passed"] = all_passed;
    j["checks"] = nlohmann::ordered_json::array();
    for (auto& c : checks)
        j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return j.dump(2) + "\n";
}

SuiteReport run_suite(const std::string& suite, uint64_t seed, int threads,
                      bool inject_fault) {
    if (suite != "paper" && suite != "properties")
        throw std::invalid_argument("unknown suite");
    if (threads < 1) throw std::invalid_argument("threads must be positive");
    SuiteBuilder b;
    b.rep.suite = suite;
    b.rep.seed = seed;
    if (suite == "paper")
        paper_suite(b, inject_fault);
    else
        properties_suite(b, seed);
    return b.rep;
}

}  // namespace rtw
