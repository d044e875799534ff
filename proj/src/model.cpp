#include "rtw/model.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace rtw {

using ordered_json = nlohmann::ordered_json;

std::string color_name(Color c) { return c == Color::blue ? "blue" : "red"; }

Color parse_color(const std::string& s) {
    if (s == "blue") return Color::blue;
    if (s == "red") return Color::red;
    throw std::invalid_argument("unknown color: " + s);
}

Rat weight_value(Weight w) { return Rat(half_units(w), 2); }

std::string weight_string(Weight w) {
    switch (w) {
        case Weight::zero: return "0";
        case Weight::half: return "1/2";
        default: return "1";
    }
}

Weight parse_weight(const std::string& s) {
    if (s == "0") return Weight::zero;
    if (s == "1/2") return Weight::half;
    if (s == "1") return Weight::one;
    throw std::invalid_argument("weight outside {0, 1/2, 1}: " + s);
}

Rat WCCG::mass() const {
    int halves = 0;
    for (Weight w : weights) halves += half_units(w);
    return Rat(halves, 2);
}

size_t ColoredGraph::edge_count() const {
    size_t e = 0;
    for (uint8_t c : pair_color) e += c != 0;
    return e;
}

size_t ColoredGraph::edge_count(Color c) const {
    size_t e = 0;
    for (uint8_t pc : pair_color) e += pc == static_cast<uint8_t>(c);
    return e;
}

bool SimplexDistribution::valid() const {
    Rat sum = 0;
    for (const Rat& x : u) {
        if (x < 0) return false;
        sum += x;
    }
    return sum == 1;
}

std::vector<int> SimplexDistribution::support() const {
    std::vector<int> s;
    for (size_t i = 0; i < u.size(); ++i)
        if (u[i] > 0) s.push_back(static_cast<int>(i));
    return s;
}

namespace {

ordered_json parse_json(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
}

int get_size_field(const ordered_json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw std::invalid_argument(std::string("missing integer field: ") + key);
    int n = j[key].get<int>();
    if (n < 0) throw std::invalid_argument(std::string("negative ") + key);
    return n;
}

std::vector<Color> get_vertex_colors(const ordered_json& j, int n) {
    std::vector<Color> vc;
    if (!j.contains("vertex_colors")) return vc;
    for (const auto& s : j["vertex_colors"]) vc.push_back(parse_color(s.get<std::string>()));
    if (static_cast<int>(vc.size()) != n)
        throw std::invalid_argument("vertex_colors length mismatch");
    return vc;
}

void check_endpoints(int u, int v, int n) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
        throw std::invalid_argument("invalid edge endpoints");
}

}  // namespace

std::string wccg_to_json(const WCCG& g) {
    ordered_json j;
    j["t"] = g.t;
    j["vertex_colors"] = ordered_json::array();
    for (Color c : g.vertex_colors) j["vertex_colors"].push_back(color_name(c));
    j["edges"] = ordered_json::array();
    for (int i = 0; i < g.t; ++i)
        for (int k = i + 1; k < g.t; ++k) {
            ordered_json e;
            e["u"] = i;
            e["v"] = k;
            e["color"] = color_name(g.color(i, k));
            e["weight"] = weight_string(g.weight(i, k));
            j["edges"].push_back(std::move(e));
        }
    return j.dump(2) + "\n";
}

WCCG wccg_from_json(const std::string& text) {
    ordered_json j = parse_json(text);
    int t = get_size_field(j, "t");
    WCCG g(t);
    auto vc = get_vertex_colors(j, t);
    if (static_cast<int>(vc.size()) != t)
        throw std::invalid_argument("vertex_colors required for weighted graphs");
    g.vertex_colors = vc;
    size_t pairs = static_cast<size_t>(t) * (t - 1) / 2;
    std::vector<bool> seen(pairs, false);
    if (!j.contains("edges") || !j["edges"].is_array())
        throw std::invalid_argument("missing edges array");
    for (const auto& e : j["edges"]) {
        int u = get_size_field(e, "u");
        int v = get_size_field(e, "v");
        check_endpoints(u, v, t);
        size_t idx = pair_index(u, v, t);
        if (seen[idx]) throw std::invalid_argument("duplicate edge");
        seen[idx] = true;
        if (!e.contains("weight") || !e["weight"].is_string())
            throw std::invalid_argument("weight outside {0, 1/2, 1}: non-string weight");
        g.edge_colors[idx] = parse_color(e["color"].get<std::string>());
        g.weights[idx] = parse_weight(e["weight"].get<std::string>());
    }
    for (size_t idx = 0; idx < pairs; ++idx)
        if (!seen[idx]) throw std::invalid_argument("incomplete pair data");
    return g;
}

std::string colored_to_json(const ColoredGraph& g) {
    ordered_json j;
    j["n"] = g.n;
    if (g.complete) j["complete"] = true;
    if (!g.vertex_colors.empty()) {
        j["vertex_colors"] = ordered_json::array();
        for (Color c : g.vertex_colors) j["vertex_colors"].push_back(color_name(c));
    }
    j["edges"] = ordered_json::array();
    for (int i = 0; i < g.n; ++i)
        for (int k = i + 1; k < g.n; ++k)
            if (g.has_edge(i, k)) {
                ordered_json e;
                e["u"] = i;
                e["v"] = k;
                e["color"] = color_name(g.color(i, k));
                j["edges"].push_back(std::move(e));
            }
    return j.dump(2) + "\n";
}

ColoredGraph colored_from_json(const std::string& text) {
    ordered_json j = parse_json(text);
    int n = get_size_field(j, "n");
    ColoredGraph g(n);
    g.complete = j.contains("complete") && j["complete"].get<bool>();
    g.vertex_colors = get_vertex_colors(j, n);
    if (!j.contains("edges") || !j["edges"].is_array())
        throw std::invalid_argument("missing edges array");
    size_t pairs = static_cast<size_t>(n) * (n - 1) / 2;
    std::vector<bool> seen(pairs, false);
    for (const auto& e : j["edges"]) {
        int u = get_size_field(e, "u");
        int v = get_size_field(e, "v");
        check_endpoints(u, v, n);
        size_t idx = pair_index(u, v, n);
        if (seen[idx]) throw std::invalid_argument("duplicate edge");
        seen[idx] = true;
        g.pair_color[idx] = static_cast<uint8_t>(parse_color(e["color"].get<std::string>()));
    }
    if (g.complete)
        for (size_t idx = 0; idx < pairs; ++idx)
            if (!seen[idx]) throw std::invalid_argument("incomplete pair data");
    return g;
}

std::string plain_to_json(const PlainGraph& g) {
    ordered_json j;
    j["n"] = g.n;
    j["edges"] = ordered_json::array();
    for (auto& [u, v] : g.edges) j["edges"].push_back(ordered_json::array({u, v}));
    return j.dump(2) + "\n";
}

PlainGraph plain_from_json(const std::string& text) {
    ordered_json j = parse_json(text);
    PlainGraph g;
    g.n = get_size_field(j, "n");
    if (!j.contains("edges") || !j["edges"].is_array())
        throw std::invalid_argument("missing edges array");
    size_t pairs = static_cast<size_t>(g.n) * (g.n - 1) / 2;
    std::vector<bool> seen(pairs, false);
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("edge entries must be [u, v] pairs");
        int u = e[0].get<int>();
        int v = e[1].get<int>();
        check_endpoints(u, v, g.n);
        size_t idx = pair_index(u, v, g.n);
        if (seen[idx]) throw std::invalid_argument("duplicate edge");
        seen[idx] = true;
        g.add_edge(u, v);
    }
    return g;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("Cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("Cannot open " + path);
    out << content;
}

std::ostream& operator<<(std::ostream& os, const WCCG& g) {
    os << "WCCG(t=" << g.t << ")\n";
    for (int i = 0; i < g.t; ++i) {
        os << "  " << i << "[" << color_name(g.vertex_colors[i])[0] << "]";
        for (int k = 0; k < g.t; ++k) {
            if (k == i) { os << "  . "; continue; }
            os << " " << color_name(g.color(i, k))[0] << weight_string(g.weight(i, k));
            if (g.weight(i, k) != Weight::half) os << " ";
        }
        os << "\n";
    }
    return os;
}

}  // namespace rtw
