#include "rtw/lagrangian.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

#include "rtw/rng.hpp"

namespace rtw {

namespace {

using i128 = __int128;

Int to_cpp_int(i128 v) {
    bool neg = v < 0;
    unsigned __int128 a = neg ? 0 - static_cast<unsigned __int128>(v)
                              : static_cast<unsigned __int128>(v);
    Int out = static_cast<uint64_t>(a >> 64);
    out <<= 64;
    out += static_cast<uint64_t>(a);
    return neg ? Int(-out) : out;
}

Rat rat_of(i128 v) { return Rat(to_cpp_int(v)); }

// Fraction-free (Bareiss) elimination of the augmented m x (m+1) system.
// Entries stay exact integer minors; with |A| entries <= 2 and m <= 17 every
// intermediate fits comfortably in 128 bits. Returns false when singular.
bool solve_integer_system(std::vector<i128>& a, int m, std::vector<Rat>& out) {
    const int w = m + 1;
    i128 prev = 1;
    for (int k = 0; k < m; ++k) {
        int piv = -1;
        for (int r = k; r < m; ++r)
            if (a[r * w + k] != 0) { piv = r; break; }
        if (piv < 0) return false;
        if (piv != k)
            for (int j = 0; j <= m; ++j) std::swap(a[k * w + j], a[piv * w + j]);
        i128 akk = a[k * w + k];
        for (int i = k + 1; i < m; ++i) {
            i128 aik = a[i * w + k];
            for (int j = k + 1; j <= m; ++j)
                a[i * w + j] = (akk * a[i * w + j] - aik * a[k * w + j]) / prev;
            a[i * w + k] = 0;
        }
        prev = akk;
    }
    out.assign(m, Rat(0));
    for (int i = m - 1; i >= 0; --i) {
        Rat acc = rat_of(a[i * w + m]);
        for (int j = i + 1; j < m; ++j) acc -= rat_of(a[i * w + j]) * out[j];
        out[i] = acc / rat_of(a[i * w + i]);
    }
    return true;
}

struct AffineSolutions {
    bool consistent = false;
    std::vector<Rat> x0;                 // one solution
    std::vector<std::vector<Rat>> basis; // nullspace of the coefficient matrix
};

// Rational RREF of the square augmented system; only reached on singular
// supports, so speed is secondary to plain correctness here.
AffineSolutions solve_affine(std::vector<Rat> a, int m) {
    const int w = m + 1;
    std::vector<int> pivot_cols;
    int row = 0;
    for (int col = 0; col < m && row < m; ++col) {
        int piv = -1;
        for (int r = row; r < m; ++r)
            if (a[r * w + col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j <= m; ++j) std::swap(a[row * w + j], a[piv * w + j]);
        Rat d = a[row * w + col];
        for (int j = 0; j <= m; ++j) a[row * w + j] /= d;
        for (int r = 0; r < m; ++r) {
            if (r == row || a[r * w + col] == 0) continue;
            Rat f = a[r * w + col];
            for (int j = 0; j <= m; ++j) a[r * w + j] -= f * a[row * w + j];
        }
        pivot_cols.push_back(col);
        ++row;
    }
    AffineSolutions sol;
    for (int r = row; r < m; ++r)
        if (a[r * w + m] != 0) return sol;  // inconsistent
    sol.consistent = true;
    sol.x0.assign(m, Rat(0));
    for (int i = 0; i < row; ++i) sol.x0[pivot_cols[i]] = a[i * w + m];
    std::vector<bool> is_pivot(m, false);
    for (int c : pivot_cols) is_pivot[c] = true;
    for (int f = 0; f < m; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(m, Rat(0));
        v[f] = 1;
        for (int i = 0; i < row; ++i) v[pivot_cols[i]] = -a[i * w + f];
        sol.basis.push_back(std::move(v));
    }
    return sol;
}

bool solve_rational_system(std::vector<Rat> a, int m, std::vector<Rat>& out) {
    const int w = m + 1;
    for (int k = 0; k < m; ++k) {
        int piv = -1;
        for (int r = k; r < m; ++r)
            if (a[r * w + k] != 0) { piv = r; break; }
        if (piv < 0) return false;
        if (piv != k)
            for (int j = 0; j <= m; ++j) std::swap(a[k * w + j], a[piv * w + j]);
        for (int i = k + 1; i < m; ++i) {
            if (a[i * w + k] == 0) continue;
            Rat f = a[i * w + k] / a[k * w + k];
            for (int j = k; j <= m; ++j) a[i * w + j] -= f * a[k * w + j];
        }
    }
    out.assign(m, Rat(0));
    for (int i = m - 1; i >= 0; --i) {
        Rat acc = a[i * w + m];
        for (int j = i + 1; j < m; ++j) acc -= a[i * w + j] * out[j];
        out[i] = acc / a[i * w + i];
    }
    return true;
}

// Vertices of {x0 + B z : u-coordinates >= 0} inside the face of support
// s; every vertex pins some k independent coordinates to zero, so scanning
// k-subsets of the support coordinates finds them all.
std::vector<std::vector<Rat>> polytope_vertices(const AffineSolutions& sol, int s) {
    const int k = static_cast<int>(sol.basis.size());
    std::vector<std::vector<Rat>> verts;
    if (k == 0) {
        verts.push_back(sol.x0);
        return verts;
    }
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    long combos = 1;
    for (int i = 0; i < k; ++i) {
        combos = combos * (s - i) / (i + 1);
        if (combos > 200000)
            throw std::runtime_error("degenerate stationary system exceeds vertex budget");
    }
    // iterate k-subsets of {0..s-1} in lexicographic order
    while (true) {
        std::vector<Rat> sys(static_cast<size_t>(k) * (k + 1));
        for (int r = 0; r < k; ++r) {
            for (int c = 0; c < k; ++c) sys[r * (k + 1) + c] = sol.basis[c][idx[r]];
            sys[r * (k + 1) + k] = -sol.x0[idx[r]];
        }
        std::vector<Rat> z;
        if (solve_rational_system(std::move(sys), k, z)) {
            std::vector<Rat> x = sol.x0;
            for (int c = 0; c < k; ++c)
                if (z[c] != 0)
                    for (size_t i = 0; i < x.size(); ++i) x[i] += z[c] * sol.basis[c][i];
            bool feasible = true;
            for (int i = 0; i < s; ++i)
                if (x[i] < 0) { feasible = false; break; }
            if (feasible) verts.push_back(std::move(x));
        }
        int i = k - 1;
        while (i >= 0 && idx[i] == s - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    return verts;
}

}  // namespace

LagrangianResult maximize_exact(const WCCG& W) {
    const int t = W.t;
    if (t < 1) throw std::invalid_argument("graph must have at least one vertex");
    if (t > 16) throw std::invalid_argument("exact maximization supports t <= 16");

    std::vector<int> a2(static_cast<size_t>(t) * t, 0);
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j)
            if (i != j) a2[i * t + j] = half_units(W.weight(i, j));

    Rat best(-1);
    std::map<std::vector<Rat>, bool> optimal;  // value -> presence, keyed by u
    std::vector<std::pair<std::vector<Rat>, Rat>> full_singular_vertices;
    bool full_mask_singular = false;

    std::vector<int> verts;
    for (uint32_t mask = 1; mask < (1u << t); ++mask) {
        verts.clear();
        for (int i = 0; i < t; ++i)
            if (mask >> i & 1) verts.push_back(i);
        const int s = static_cast<int>(verts.size());
        const int m = s + 1;

        // stationarity rows: sum_b 2w(a,b) u_b - L = 0; closing row: sum u = 1.
        // On the support, (Au)_a = 2g, so the solved L = 2(Au)_a = 4g.
        std::vector<i128> sys(static_cast<size_t>(m) * (m + 1), 0);
        for (int r = 0; r < s; ++r) {
            for (int c = 0; c < s; ++c) sys[r * (m + 1) + c] = a2[verts[r] * t + verts[c]];
            sys[r * (m + 1) + s] = -1;
        }
        for (int c = 0; c < s; ++c) sys[s * (m + 1) + c] = 1;
        sys[s * (m + 1) + m] = 1;

        std::vector<std::pair<std::vector<Rat>, Rat>> found;  // (u restricted + L)
        std::vector<Rat> sol;
        if (solve_integer_system(sys, m, sol)) {
            bool feasible = true;
            for (int i = 0; i < s; ++i)
                if (sol[i] < 0) { feasible = false; break; }
            if (feasible) found.emplace_back(sol, sol[s] / 4);
        } else {
            std::vector<Rat> rsys(static_cast<size_t>(m) * (m + 1));
            for (int r = 0; r < s; ++r) {
                for (int c = 0; c < s; ++c) rsys[r * (m + 1) + c] = a2[verts[r] * t + verts[c]];
                rsys[r * (m + 1) + s] = -1;
            }
            for (int c = 0; c < s; ++c) rsys[s * (m + 1) + c] = 1;
            rsys[s * (m + 1) + m] = 1;
            AffineSolutions aff = solve_affine(std::move(rsys), m);
            if (aff.consistent) {
                for (auto& x : polytope_vertices(aff, s)) found.emplace_back(x, x[s] / 4);
                if (mask + 1 == (1u << t)) {
                    full_mask_singular = true;
                    full_singular_vertices = found;
                }
            }
        }

        for (auto& [x, val] : found) {
            std::vector<Rat> u(t, Rat(0));
            for (int i = 0; i < s; ++i) u[verts[i]] = x[i];
            if (val > best) {
                best = val;
                optimal.clear();
                optimal[std::move(u)] = true;
            } else if (val == best) {
                optimal[std::move(u)] = true;
            }
        }
    }

    LagrangianResult res;
    res.g_max = best;

    // interior: a strictly positive maximizer solves the full-support
    // stationarity system, so it is either the unique full-support candidate
    // or a convex combination of the full system's optimal vertices.
    for (auto& [u, keep] : optimal) {
        (void)keep;
        bool positive = true;
        for (const Rat& x : u)
            if (x <= 0) { positive = false; break; }
        if (positive) { res.interior = true; break; }
    }
    if (!res.interior && full_mask_singular) {
        std::vector<Rat> centroid(t, Rat(0));
        int count = 0;
        for (auto& [x, val] : full_singular_vertices) {
            if (val != best) continue;
            for (int i = 0; i < t; ++i) centroid[i] += x[i];
            ++count;
        }
        if (count > 0) {
            bool positive = true;
            for (int i = 0; i < t; ++i) {
                centroid[i] /= count;
                if (centroid[i] <= 0) positive = false;
            }
            if (positive) {
                res.interior = true;
                optimal[centroid] = true;
            }
        }
    }

    for (auto& [u, keep] : optimal) {
        (void)keep;
        SimplexDistribution d;
        d.u = u;
        res.optimal_candidates.push_back(std::move(d));
    }

    std::vector<std::vector<int>> supports;
    for (auto& cand : res.optimal_candidates) supports.push_back(cand.support());
    std::sort(supports.begin(), supports.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
    res.kkt_supports = supports;

    // witness: largest support, then lexicographically smallest support
    const SimplexDistribution* pick = nullptr;
    std::vector<int> pick_support;
    for (auto& cand : res.optimal_candidates) {
        std::vector<int> sup = cand.support();
        if (!pick || sup.size() > pick_support.size() ||
            (sup.size() == pick_support.size() && sup < pick_support)) {
            pick = &cand;
            pick_support = sup;
        }
    }
    if (pick) res.witness = *pick;
    return res;
}

Rat evaluate_g(const WCCG& W, const SimplexDistribution& u) {
    if (static_cast<int>(u.u.size()) != W.t)
        throw std::invalid_argument("distribution length mismatch");
    Rat g = 0;
    for (int i = 0; i < W.t; ++i)
        for (int j = i + 1; j < W.t; ++j)
            if (W.weight(i, j) != Weight::zero)
                g += weight_value(W.weight(i, j)) * u.u[i] * u.u[j];
    return g;
}

Rat weighted_degree(const WCCG& W, int x, const SimplexDistribution& u) {
    Rat d = 0;
    for (int y = 0; y < W.t; ++y)
        if (y != x && W.weight(x, y) != Weight::zero)
            d += weight_value(W.weight(x, y)) * u.u[y];
    return d * W.t;
}

IterativeResult maximize_iterative(const WCCG& W, int max_iter, double tol) {
    const int t = W.t;
    if (t < 1) throw std::invalid_argument("graph must have at least one vertex");
    std::vector<double> A(static_cast<size_t>(t) * t, 0.0);
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j)
            if (i != j) A[i * t + j] = half_units(W.weight(i, j)) / 2.0;

    const int total_starts = 32;
    IterativeResult out;
    out.restarts = total_starts;

    std::vector<double> u(t), y(t);
    for (int start = 0; start < total_starts; ++start) {
        if (start == 0) {
            std::fill(u.begin(), u.end(), 1.0 / t);
        } else if (start <= t) {
            // mass 3/4 on one vertex, rest uniform
            std::fill(u.begin(), u.end(), 0.25 / t);
            u[start - 1] += 0.75;
        } else {
            SplitMix64 rng(0x9e3779b97f4a7c15ULL ^ (1000003ULL * start));
            double sum = 0;
            for (int i = 0; i < t; ++i) { u[i] = rng.uniform01() + 1e-3; sum += u[i]; }
            for (int i = 0; i < t; ++i) u[i] /= sum;
        }

        double prev = -1.0;
        bool converged = false;
        int iters = 0;
        for (; iters < max_iter; ++iters) {
            double val = 0;
            for (int i = 0; i < t; ++i) {
                double yi = 0;
                for (int j = 0; j < t; ++j) yi += A[i * t + j] * u[j];
                y[i] = yi;
                val += u[i] * yi;
            }
            if (val < 1e-300) { converged = true; break; }  // stuck at g = 0
            if (std::fabs(val - prev) <= tol * std::max(1.0, val)) { converged = true; break; }
            prev = val;
            double sum = 0;
            for (int i = 0; i < t; ++i) { u[i] *= y[i] / val; sum += u[i]; }
            for (int i = 0; i < t; ++i) u[i] /= sum;
        }
        double val = 0;
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j) val += A[i * t + j] * u[i] * u[j];
        if (val / 2 > out.g) {
            out.g = val / 2;
            out.u = u;
            out.converged = converged;
            out.iterations = iters;
        } else if (out.u.empty()) {
            out.u = u;
            out.converged = converged;
            out.iterations = iters;
        }
    }
    return out;
}

WCCG induced_subgraph(const WCCG& W, const std::vector<int>& keep) {
    WCCG out(static_cast<int>(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i) out.vertex_colors[i] = W.vertex_colors[keep[i]];
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = i + 1; j < keep.size(); ++j)
            out.set(static_cast<int>(i), static_cast<int>(j),
                    W.color(keep[i], keep[j]), W.weight(keep[i], keep[j]));
    return out;
}

WCCG delete_vertex(const WCCG& W, int x) {
    std::vector<int> keep;
    for (int i = 0; i < W.t; ++i)
        if (i != x) keep.push_back(i);
    return induced_subgraph(W, keep);
}

WCCG join_full(const WCCG& a, const WCCG& b) {
    WCCG out(a.t + b.t);
    for (int i = 0; i < a.t; ++i) out.vertex_colors[i] = a.vertex_colors[i];
    for (int i = 0; i < b.t; ++i) out.vertex_colors[a.t + i] = b.vertex_colors[i];
    for (int i = 0; i < a.t; ++i)
        for (int j = i + 1; j < a.t; ++j) out.set(i, j, a.color(i, j), a.weight(i, j));
    for (int i = 0; i < b.t; ++i)
        for (int j = i + 1; j < b.t; ++j)
            out.set(a.t + i, a.t + j, b.color(i, j), b.weight(i, j));
    for (int i = 0; i < a.t; ++i)
        for (int j = 0; j < b.t; ++j) out.set(i, a.t + j, Color::red, Weight::one);
    return out;
}

bool is_dense(const WCCG& W) { return maximize_exact(W).interior; }

Rat half_degree_bound(int t, int lambda) {
    if (t < 1) throw std::invalid_argument("t must be positive");
    if (lambda < 0 || lambda > t - 1)
        throw std::invalid_argument("lambda must lie in [0, t-1]");
    return Rat(1) - Rat(1, t) - Rat(lambda, 2 * static_cast<long>(t));
}

int min_half_degree(const WCCG& W) {
    int best = W.t;
    for (int i = 0; i < W.t; ++i) {
        int halves = 0;
        for (int j = 0; j < W.t; ++j)
            if (j != i && W.weight(i, j) == Weight::half) ++halves;
        best = std::min(best, halves);
    }
    return best;
}

int deletion_bound_index(const Rat& g_value) {
    if (g_value < 0 || 2 * g_value >= 1)
        throw std::invalid_argument("g must lie in [0, 1/2)");
    Rat q = Rat(1) / (Rat(1) - 2 * g_value);
    Int num = boost::multiprecision::numerator(q);
    Int den = boost::multiprecision::denominator(q);
    Int k = (num + den - 1) / den;
    return k.convert_to<int>();
}

bool vertex_deletion_bound_check(const WCCG& W, int x, int k) {
    if (x < 0 || x >= W.t) throw std::invalid_argument("vertex out of range");
    if (k < 1) throw std::invalid_argument("k must be positive");
    Rat premise = Rat(1, 2) * (Rat(1) - Rat(1, k));
    if (maximize_exact(delete_vertex(W, x)).g_max > premise) return true;
    Rat conclusion = Rat(1, 2) * (Rat(1) - Rat(1, k + 1));
    return maximize_exact(W).g_max <= conclusion;
}

}  // namespace rtw
