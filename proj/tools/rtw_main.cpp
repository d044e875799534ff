#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rtw/beta.hpp"
#include "rtw/constructions.hpp"
#include "rtw/genclique.hpp"
#include "rtw/lagrangian.hpp"
#include "rtw/model.hpp"
#include "rtw/ramsey.hpp"
#include "rtw/reduction.hpp"
#include "rtw/verification.hpp"

namespace {

using nlohmann::ordered_json;
using namespace rtw;

ordered_json rat_json(const Rat& r) {
    return ordered_json{{"exact", to_string(r)}, {"approx", to_double(r)}};
}

ordered_json approx_only_json(double v) {
    return ordered_json{{"exact", nullptr}, {"approx", v}};
}

std::string rat_line(const Rat& r) {
    std::ostringstream os;
    os << to_string(r) << " (~" << to_double(r) << ")";
    return os.str();
}

std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(v[i]);
    }
    return out;
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int run_lagrangian(const std::string& file, const std::string& method, bool json) {
    WCCG g = wccg_from_json(read_file(file));
    if (method == "iterative") {
        IterativeResult r = maximize_iterative(g);
        if (json) {
            ordered_json j;
            j["method"] = "iterative";
            j["g_max"] = approx_only_json(r.g);
            j["density"] = approx_only_json(2 * r.g);
            j["converged"] = r.converged;
            j["iterations"] = r.iterations;
            j["restarts"] = r.restarts;
            j["witness"] = r.u;
            emit(j);
        } else {
            std::cout << "g_max: ~" << r.g << "\n"
                      << "density: ~" << 2 * r.g << "\n"
                      << "converged: " << (r.converged ? "true" : "false")
                      << " (iterations " << r.iterations << ", restarts " << r.restarts
                      << ")\n"
                      << "witness:";
            for (double x : r.u) std::cout << " " << x;
            std::cout << "\n";
        }
        return 0;
    }
    LagrangianResult r = maximize_exact(g);
    if (json) {
        ordered_json j;
        j["method"] = "exact";
        j["g_max"] = rat_json(r.g_max);
        j["density"] = rat_json(r.density());
        j["interior"] = r.interior;
        j["witness"] = ordered_json::array();
        for (auto& x : r.witness.u) j["witness"].push_back(rat_json(x));
        j["kkt_supports"] = r.kkt_supports;
        emit(j);
    } else {
        std::cout << "g_max: " << rat_line(r.g_max) << "\n"
                  << "density: " << rat_line(r.density()) << "\n"
                  << "interior: " << (r.interior ? "true" : "false") << "\n"
                  << "witness:";
        for (auto& x : r.witness.u) std::cout << " " << to_string(x);
        std::cout << "\n";
        std::cout << "kkt supports:";
        for (auto& s : r.kkt_supports) std::cout << " {" << join_ints(s) << "}";
        std::cout << "\n";
    }
    return 0;
}

int run_genclique(const std::string& file, const std::string& color, int target,
                  bool json) {
    WCCG g = wccg_from_json(read_file(file));
    Color c = parse_color(color);
    GeneralizedCliqueWitness w;
    bool found = true;
    if (target < 0) {
        w = max_generalized_clique(g, c);
    } else {
        auto r = find_generalized_clique(g, c, target);
        found = r.has_value();
        if (found) w = *r;
    }
    if (json) {
        ordered_json j;
        j["color"] = color_name(c);
        if (target >= 0)
            j["target"] = target;
        else
            j["target"] = nullptr;
        j["found"] = found;
        if (found) {
            j["size"] = w.size();
            j["X"] = w.X;
            j["Y"] = w.Y;
        }
        emit(j);
    } else if (found) {
        std::cout << "size: " << w.size() << "\n"
                  << "X: " << join_ints(w.X) << "\n"
                  << "Y: " << join_ints(w.Y) << "\n";
    } else {
        std::cout << "no generalized " << color_name(c) << " clique of size " << target
                  << "\n";
    }
    return found ? 0 : 1;
}

int run_ramsey_enum(int n, int p_red, int q_blue, bool count_only,
                    const std::string& out_dir, bool json) {
    if (count_only) {
        size_t c = count_ramsey(n, p_red, q_blue);
        if (json)
            emit(ordered_json{{"n", n}, {"red", p_red}, {"blue", q_blue}, {"count", c}});
        else
            std::cout << c << "\n";
        return 0;
    }
    std::vector<ColoredGraph> classes = enumerate_ramsey(n, p_red, q_blue);
    std::vector<std::string> files;
    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        for (size_t i = 0; i < classes.size(); ++i) {
            std::string path = out_dir + "/class_" + std::to_string(i) + ".json";
            write_file(path, colored_to_json(classes[i]));
            files.push_back(path);
        }
    }
    if (json) {
        ordered_json j;
        j["n"] = n;
        j["red"] = p_red;
        j["blue"] = q_blue;
        j["count"] = classes.size();
        j["classes"] = ordered_json::array();
        for (size_t i = 0; i < classes.size(); ++i) {
            ordered_json e{{"canonical", canonical_form(classes[i])}};
            if (!files.empty()) e["file"] = files[i];
            j["classes"].push_back(e);
        }
        emit(j);
    } else {
        std::cout << "count: " << classes.size() << "\n";
        for (size_t i = 0; i < classes.size(); ++i) {
            std::cout << "class " << i << ": " << canonical_form(classes[i]);
            if (!files.empty()) std::cout << " -> " << files[i];
            std::cout << "\n";
        }
    }
    return 0;
}

void report_construct(const std::string& kind, const std::string& out, int n,
                      size_t edges, bool json) {
    if (json)
        emit(ordered_json{{"kind", kind}, {"n", n}, {"edges", edges}, {"file", out}});
    else
        std::cout << kind << ": n = " << n << ", edges = " << edges << " -> " << out
                  << "\n";
}

int run_alpha(const std::string& file, bool json) {
    PlainGraph g = plain_from_json(read_file(file));
    IndependenceResult r = independence_number(g);
    if (json)
        emit(ordered_json{{"alpha", r.alpha}, {"witness", r.witness}});
    else
        std::cout << "alpha: " << r.alpha << "\n"
                  << "witness: " << join_ints(r.witness) << "\n";
    return 0;
}

int run_partition(const std::string& file, double delta, bool json) {
    ColoredGraph g = colored_from_json(read_file(file));
    auto [u1, u2] = two_color_partition(g, delta);
    if (json)
        emit(ordered_json{{"delta", delta}, {"u1", u1}, {"u2", u2}});
    else
        std::cout << "U1 (" << u1.size() << " vertices, blue side): " << join_ints(u1)
                  << "\n"
                  << "U2 (" << u2.size() << " vertices, red side): " << join_ints(u2)
                  << "\n";
    return 0;
}

ordered_json cluster_json(const ClusterGraph& h) {
    ordered_json j;
    j["m"] = h.m;
    j["chi"] = ordered_json::array();
    for (Color c : h.chi) j["chi"].push_back(color_name(c));
    j["pairs"] = ordered_json::array();
    for (int i = 0; i < h.m; ++i)
        for (int k = i + 1; k < h.m; ++k)
            j["pairs"].push_back(ordered_json{
                {"u", i},
                {"v", k},
                {"blue", weight_string(static_cast<Weight>(h.hu(i, k, Color::blue)))},
                {"red", weight_string(static_cast<Weight>(h.hu(i, k, Color::red)))}});
    return j;
}

int run_reduce(const std::string& file, const std::string& parts_file, double mu,
               std::optional<double> eps, bool json) {
    ColoredGraph g = colored_from_json(read_file(file));
    ordered_json pj = ordered_json::parse(read_file(parts_file));
    if (!pj.contains("parts") || !pj["parts"].is_array())
        throw std::invalid_argument("parts file must hold a \"parts\" array");
    std::vector<std::vector<int>> parts;
    for (auto& p : pj["parts"]) parts.push_back(p.get<std::vector<int>>());
    ClusterGraph h = cluster_weights(g, parts, mu, eps);
    auto [q, rep] = symmetrize(h);
    ordered_json out;
    out["cluster"] = cluster_json(h);
    out["quotient"] = ordered_json::parse(wccg_to_json(q));
    ordered_json r;
    r["steps"] = ordered_json::array();
    for (auto& s : rep.steps)
        r["steps"].push_back(ordered_json{{"kept", s.kept}, {"overwritten", s.overwritten}});
    r["classes"] = rep.classes;
    r["class_weights"] = ordered_json::array();
    for (auto& w : rep.class_weights) r["class_weights"].push_back(rat_json(w));
    r["mass_trace"] = ordered_json::array();
    for (auto& m : rep.mass_trace) r["mass_trace"].push_back(rat_json(m));
    out["report"] = r;
    if (json) {
        emit(out);
    } else {
        std::cout << "clusters: " << h.m << ", mass " << rat_line(mass(h)) << "\n"
                  << "copy steps: " << rep.steps.size() << "\n"
                  << "classes:";
        for (auto& cls : rep.classes) std::cout << " {" << join_ints(cls) << "}";
        std::cout << "\n"
                  << "quotient order: " << q.t << ", mass " << rat_line(q.mass()) << "\n";
    }
    return 0;
}

int run_beta(int p_blue, int q_red, int t_max, bool json) {
    BetaResult r = beta_search(p_blue, q_red, t_max);
    if (json) {
        ordered_json j;
        j["blue"] = p_blue;
        j["red"] = q_red;
        j["tmax"] = t_max;
        j["value"] = rat_json(r.value);
        j["witness"] = ordered_json::parse(wccg_to_json(r.witness));
        j["candidates_scored"] = r.candidates_scored;
        emit(j);
    } else {
        std::cout << "value: " << rat_line(r.value) << "\n"
                  << "candidates scored: " << r.candidates_scored << "\n"
                  << "witness:\n"
                  << r.witness;
    }
    return 0;
}

int run_verify(const std::string& suite, uint64_t seed, int threads, bool inject,
               bool json) {
    SuiteReport rep = run_suite(suite, seed, threads, inject);
    std::cout << (json ? rep.json() : rep.text());
    return rep.all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Weighted colored graph toolkit: exact Lagrangian optimization, generalized "
        "cliques, Ramsey enumeration, extremal constructions, regularity reduction, "
        "and a reproduction suite."};
    app.require_subcommand(1);

    std::string lag_file, lag_method = "exact";
    bool lag_json = false;
    auto* lag = app.add_subcommand("lagrangian",
                                   "Maximize the weighted edge density over the simplex");
    lag->add_option("file", lag_file, "weighted colored graph JSON file")->required();
    lag->add_option("--method", lag_method, "exact or iterative solver")
        ->check(CLI::IsMember({"exact", "iterative"}));
    lag->add_flag("--json", lag_json, "emit JSON");

    std::string gc_file, gc_color;
    int gc_target = -1;
    bool gc_json = false;
    auto* gc = app.add_subcommand("genclique",
                                  "Search for generalized cliques in one color");
    gc->add_option("file", gc_file, "weighted colored graph JSON file")->required();
    gc->add_option("--color", gc_color, "red or blue")->required();
    gc->add_option("--target", gc_target,
                   "required size; exit 1 when no witness exists");
    gc->add_flag("--json", gc_json, "emit JSON");

    int re_n = 0, re_red = 0, re_blue = 0;
    bool re_count = false, re_json = false;
    std::string re_out;
    auto* ram = app.add_subcommand("ramsey", "Two-color Ramsey graph enumeration");
    ram->require_subcommand(1);
    auto* ren = ram->add_subcommand(
        "enum", "Enumerate colorings with no red K_p and no blue K_q, up to isomorphism");
    ren->add_option("--n", re_n, "number of vertices")->required();
    ren->add_option("--red", re_red, "forbidden red clique size")->required();
    ren->add_option("--blue", re_blue, "forbidden blue clique size")->required();
    ren->add_flag("--count-only", re_count, "print only the class count");
    ren->add_option("--out", re_out, "directory for one JSON file per class");
    ren->add_flag("--json", re_json, "emit JSON");

    auto* con = app.add_subcommand("construct", "Build a named graph family instance");
    con->require_subcommand(1);
    bool con_json = false;

    int tu_n = 0, tu_parts = 0;
    std::string tu_out;
    auto* tu = con->add_subcommand("turan", "Balanced complete multipartite graph");
    tu->add_option("--n", tu_n, "vertices")->required();
    tu->add_option("--parts", tu_parts, "number of parts")->required();
    tu->add_option("--out", tu_out, "output JSON file")->required();
    tu->add_flag("--json", con_json, "emit a JSON summary");

    int cay_k = 0;
    std::string cay_out;
    auto* cay = con->add_subcommand(
        "cayley", "Circulant coloring of K_{3k-1}: blue differences k..2k-1");
    cay->add_option("--k", cay_k, "parameter k >= 2")->required();
    cay->add_option("--out", cay_out, "output JSON file")->required();
    cay->add_flag("--json", con_json, "emit a JSON summary");

    int pe_n = 0;
    uint64_t pe_seed = 0;
    std::string pe_out;
    auto* pe = con->add_subcommand("pseudo-erdos",
                                   "Seeded maximal triangle-free process graph");
    pe->add_option("--n", pe_n, "vertices")->required();
    pe->add_option("--seed", pe_seed, "64-bit seed");
    pe->add_option("--out", pe_out, "output JSON file")->required();
    pe->add_flag("--json", con_json, "emit a JSON summary");

    int ug_n = 0, ug_p = 0, ug_q = 0;
    uint64_t ug_seed = 0;
    std::string ug_out;
    auto* ug = con->add_subcommand(
        "u-graph", "Blowup over r(p,q)-1 classes with triangle-free process interiors");
    ug->add_option("--n", ug_n, "vertices")->required();
    ug->add_option("--p", ug_p, "blue clique bound")->required();
    ug->add_option("--q", ug_q, "red clique parameter")->required();
    ug->add_option("--seed", ug_seed, "64-bit seed");
    ug->add_option("--out", ug_out, "output JSON file")->required();
    ug->add_flag("--json", con_json, "emit a JSON summary");

    int hg_n = 0, hg_p = 0, hg_q = 0;
    uint64_t hg_seed = 0;
    std::string hg_out;
    auto* hg = con->add_subcommand(
        "h-graph", "u-graph plus a blue class joined red to everything");
    hg->add_option("--n", hg_n, "vertices")->required();
    hg->add_option("--p", hg_p, "blue clique bound")->required();
    hg->add_option("--q", hg_q, "red clique parameter")->required();
    hg->add_option("--seed", hg_seed, "64-bit seed");
    hg->add_option("--out", hg_out, "output JSON file")->required();
    hg->add_flag("--json", con_json, "emit a JSON summary");

    int be_n = 0, be_h = 0;
    double be_eps = 0.0;
    uint64_t be_seed = 0;
    std::string be_out;
    auto* be = con->add_subcommand("be", "Two-class unit-sphere distance graph");
    be->add_option("--n", be_n, "vertices (even)")->required();
    be->add_option("--dim", be_h, "sphere parameter h; points live in R^{h+1}")
        ->required();
    be->add_option("--eps", be_eps, "threshold parameter; mu = eps / sqrt(h)")
        ->required();
    be->add_option("--seed", be_seed, "64-bit seed");
    be->add_option("--out", be_out, "output JSON file")->required();
    be->add_flag("--json", con_json, "emit a JSON summary");

    std::string gbe_base, gbe_out;
    std::vector<int> gbe_sizes;
    int gbe_dim = 2;
    double gbe_mu = 0.0;
    uint64_t gbe_seed = 0;
    auto* gbe = con->add_subcommand(
        "gbe", "Geometric blowup of a weighted colored base graph");
    gbe->add_option("--base", gbe_base, "base weighted colored graph JSON file")
        ->required();
    gbe->add_option("--sizes", gbe_sizes, "comma-separated class sizes")
        ->required()
        ->delimiter(',');
    gbe->add_option("--dim", gbe_dim, "sphere parameter h")->required();
    gbe->add_option("--mu", gbe_mu, "threshold parameter mu")->required();
    gbe->add_option("--seed", gbe_seed, "64-bit seed");
    gbe->add_option("--out", gbe_out, "output JSON file")->required();
    gbe->add_flag("--json", con_json, "emit a JSON summary");

    std::string al_file;
    bool al_json = false;
    auto* al = app.add_subcommand("alpha", "Exact independence number of a plain graph");
    al->add_option("file", al_file, "plain graph JSON file")->required();
    al->add_flag("--json", al_json, "emit JSON");

    std::string pa_file;
    double pa_delta = 0.0;
    bool pa_json = false;
    auto* pa = app.add_subcommand(
        "partition", "Two-color partition with verified independence bounds");
    pa->add_option("file", pa_file, "complete colored graph JSON file")->required();
    pa->add_option("--delta", pa_delta, "independence ratio bound")->required();
    pa->add_flag("--json", pa_json, "emit JSON");

    std::string rd_file, rd_parts;
    double rd_mu = 0.0;
    double rd_eps_val = 0.0;
    bool rd_json = false;
    auto* rd = app.add_subcommand(
        "reduce", "Cluster weighting and symmetrization over a vertex partition");
    rd->add_option("file", rd_file, "colored graph JSON file with vertex colors")
        ->required();
    rd->add_option("--parts-file", rd_parts, "JSON file with a \"parts\" array")
        ->required();
    rd->add_option("--mu", rd_mu, "density band parameter")->required();
    auto* rd_eps_opt =
        rd->add_option("--eps", rd_eps_val, "zero out colors failing eps-regularity");
    rd->add_flag("--json", rd_json, "emit JSON");

    int bt_blue = 0, bt_red = 0, bt_tmax = 0;
    bool bt_json = false;
    auto* bt = app.add_subcommand(
        "beta", "Maximum density with no blue and no red generalized clique");
    bt->add_option("--blue", bt_blue, "forbidden blue generalized clique size")
        ->required();
    bt->add_option("--red", bt_red, "forbidden red generalized clique size")->required();
    bt->add_option("--tmax", bt_tmax, "largest order searched (<= 6)")->required();
    bt->add_flag("--json", bt_json, "emit JSON");

    std::string vf_suite = "paper";
    uint64_t vf_seed = 0;
    int vf_threads = static_cast<int>(std::thread::hardware_concurrency());
    if (vf_threads < 1) vf_threads = 1;
    bool vf_json = false, vf_fault = false;
    auto* vf = app.add_subcommand("verify", "Run a reproduction suite");
    vf->add_option("--suite", vf_suite, "paper or properties")
        ->check(CLI::IsMember({"paper", "properties"}));
    vf->add_option("--seed", vf_seed, "64-bit seed for the properties suite");
    vf->add_option("--threads", vf_threads, "worker threads (results are identical)");
    vf->add_flag("--json", vf_json, "emit JSON");
    vf->add_flag("--inject-fault", vf_fault)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*lag) return run_lagrangian(lag_file, lag_method, lag_json);
        if (*gc) return run_genclique(gc_file, gc_color, gc_target, gc_json);
        if (*ren) return run_ramsey_enum(re_n, re_red, re_blue, re_count, re_out, re_json);
        if (*tu) {
            PlainGraph g = turan_graph(tu_n, tu_parts);
            write_file(tu_out, plain_to_json(g));
            report_construct("turan", tu_out, g.n, g.edges.size(), con_json);
            return 0;
        }
        if (*cay) {
            ColoredGraph g = nice_coloring(cay_k);
            write_file(cay_out, colored_to_json(g));
            report_construct("cayley", cay_out, g.n, g.edge_count(), con_json);
            return 0;
        }
        if (*pe) {
            PlainGraph g = pseudo_erdos_graph(pe_n, pe_seed);
            write_file(pe_out, plain_to_json(g));
            report_construct("pseudo-erdos", pe_out, g.n, g.edges.size(), con_json);
            return 0;
        }
        if (*ug) {
            ColoredGraph g = u_graph(ug_n, ug_p, ug_q, ug_seed);
            write_file(ug_out, colored_to_json(g));
            report_construct("u-graph", ug_out, g.n, g.edge_count(), con_json);
            return 0;
        }
        if (*hg) {
            ColoredGraph g = h_graph(hg_n, hg_p, hg_q, hg_seed);
            write_file(hg_out, colored_to_json(g));
            report_construct("h-graph", hg_out, g.n, g.edge_count(), con_json);
            return 0;
        }
        if (*be) {
            SphereGraph s = be_graph(be_n, be_h, be_eps, be_seed);
            PlainGraph g;
            g.n = s.n;
            g.edges = s.edges;
            write_file(be_out, plain_to_json(g));
            report_construct("be", be_out, g.n, g.edges.size(), con_json);
            return 0;
        }
        if (*gbe) {
            GBESpec spec;
            spec.base = wccg_from_json(read_file(gbe_base));
            spec.class_sizes = gbe_sizes;
            spec.dim = gbe_dim;
            spec.mu = gbe_mu;
            spec.seed = gbe_seed;
            ColoredGraph g = gbe_graph(spec);
            write_file(gbe_out, colored_to_json(g));
            report_construct("gbe", gbe_out, g.n, g.edge_count(), con_json);
            return 0;
        }
        if (*al) return run_alpha(al_file, al_json);
        if (*pa) return run_partition(pa_file, pa_delta, pa_json);
        if (*rd) {
            std::optional<double> eps;
            if (rd_eps_opt->count() > 0) eps = rd_eps_val;
            return run_reduce(rd_file, rd_parts, rd_mu, eps, rd_json);
        }
        if (*bt) return run_beta(bt_blue, bt_red, bt_tmax, bt_json);
        if (*vf) return run_verify(vf_suite, vf_seed, vf_threads, vf_fault, vf_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
