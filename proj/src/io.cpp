#include "mobius/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace mobius {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

int get_count(const json& j, const char* field) {
    if (!j.is_object() || !j.contains(field) || !j[field].is_number_integer())
        throw ParseError(std::string("missing integer field \"") + field + "\"");
    const auto v = j[field].get<long long>();
    if (v < 0 || v > kMaxElements) throw ParseError(std::string("\"") + field + "\" must lie in [0, 64]");
    return static_cast<int>(v);
}

Matroid matroid_from(const json& j) {
    const int n = get_count(j, "ground");
    if (!j.contains("circuits") || !j["circuits"].is_array()) throw ParseError("missing array field \"circuits\"");
    std::vector<ElementSet> circuits;
    for (const auto& c : j["circuits"]) {
        if (!c.is_array() || c.empty()) throw ParseError("circuits must be nonempty arrays");
        ElementSet s;
        for (const auto& e : c) {
            if (!e.is_number_integer()) throw ParseError("circuit elements must be integers");
            const auto v = e.get<long long>();
            if (v < 0 || v >= n) throw ParseError("circuit element out of range: " + std::to_string(v));
            s.insert(static_cast<int>(v));
        }
        circuits.push_back(s);
    }
    return Matroid::from_circuits(n, std::move(circuits));
}

Graph graph_from(const json& j) {
    const int n = get_count(j, "vertices");
    if (!j.contains("edges") || !j["edges"].is_array()) throw ParseError("missing array field \"edges\"");
    Graph g(n);
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw ParseError("edges must be [u, v] integer pairs");
        const auto u = e[0].get<long long>();
        const auto v = e[1].get<long long>();
        if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("edge endpoint out of range");
        if (u == v) throw ParseError("loops are not allowed");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    if (g.edge_count() > kMaxElements) throw ParseError("graphs are limited to 64 edges");
    return g;
}

}  // namespace

Matroid parse_matroid_json(const std::string& text) { return matroid_from(parse(text)); }

std::string matroid_to_json(const Matroid& m) {
    json j;
    j["ground"] = m.ground_size();
    j["circuits"] = json::array();
    for (ElementSet c : m.circuits()) j["circuits"].push_back(c.elements());
    return j.dump();
}

Graph parse_graph_json(const std::string& text) { return graph_from(parse(text)); }

std::string graph_to_json(const Graph& g) {
    json j;
    j["vertices"] = g.vertex_count();
    j["edges"] = json::array();
    for (const auto& [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j.dump();
}

std::variant<Graph, Matroid> parse_input_json(const std::string& text) {
    const json j = parse(text);
    if (j.is_object() && j.contains("vertices")) return graph_from(j);
    if (j.is_object() && j.contains("ground")) return matroid_from(j);
    throw ParseError("input must have a \"vertices\" or a \"ground\" field");
}

std::string lattice_to_dot(const FlatLattice& l) {
    std::ostringstream os;
    os << "digraph lattice {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < l.size(); ++i)
        os << "  f" << i << " [label=\"" << l.flat(i).elements.to_string() << " r" << l.flat(i).rank << "\"];\n";
    for (std::size_t a = 0; a < l.size(); ++a)
        if (l.flat(a).rank < l.rank())
            for (int b : l.of_rank(l.flat(a).rank + 1))
                if (l.leq(static_cast<int>(a), b)) os << "  f" << a << " -> f" << b << ";\n";
    os << "}\n";
    return os.str();
}

std::string lattice_to_json(const FlatLattice& l) {
    json j;
    j["rank"] = l.rank();
    j["whitney"] = l.whitney_numbers();
    j["flats"] = json::array();
    for (std::size_t i = 0; i < l.size(); ++i)
        j["flats"].push_back({{"id", i}, {"rank", l.flat(i).rank}, {"elements", l.flat(i).elements.elements()}});
    j["covers"] = json::array();
    for (std::size_t a = 0; a < l.size(); ++a) {
        const int r = l.flat(a).rank + 1;
        if (r > l.rank()) continue;
        for (int b : l.of_rank(r))
            if (l.leq(static_cast<int>(a), b)) j["covers"].push_back({a, b});
    }
    return j.dump();
}

std::string mat_labeling_to_json(const Graph& g, const MatLabeling& labels) {
    json j = json::array();
    for (int e = 0; e < g.edge_count(); ++e)
        j.push_back({{"edge", {g.edge(e).first, g.edge(e).second}}, {"label", labels[e]}});
    return j.dump();
}

std::string edge_order_to_json(const Graph& g, const EdgeOrder& order) {
    json j = json::array();
    for (int e : order) j.push_back({g.edge(e).first, g.edge(e).second});
    return j.dump();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace mobius
