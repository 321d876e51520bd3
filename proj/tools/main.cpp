#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mobius/acceptance.hpp"
#include "mobius/gma.hpp"
#include "mobius/graph.hpp"
#include "mobius/groebner.hpp"
#include "mobius/io.hpp"
#include "mobius/matroid.hpp"
#include "mobius/named.hpp"
#include "mobius/resolution.hpp"

using nlohmann::json;
using namespace mobius;

namespace {

struct RunConfig {
    std::string named;
    std::string input;
    std::string format = "text";
    std::uint32_t characteristic = 32003;
    int steps = 3;
    int degree_cap = -1;
    std::string strategy = "dfs_pruned";
    std::string order;
    int threads = 1;
    std::uint64_t seed = 20240601;
    bool check_identities = false;
};

struct Loaded {
    std::string name;
    Matroid matroid;
    std::optional<Graph> graph;
};

Loaded load(const RunConfig& c) {
    if (!c.named.empty() && !c.input.empty()) throw BadArgument("use either --named or --input");
    if (!c.named.empty()) {
        auto inst = named_instance(c.named);
        return {inst.name, std::move(inst.matroid), std::move(inst.graph)};
    }
    if (c.input.empty()) throw BadArgument("an input is required: --named NAME or --input FILE");
    const std::string text = c.input == "-" ? std::string(std::istreambuf_iterator<char>(std::cin), {})
                                            : read_text_file(c.input);
    auto parsed = parse_input_json(text);
    if (auto* g = std::get_if<Graph>(&parsed)) return {c.input, cycle_matroid(*g), *g};
    return {c.input, std::get<Matroid>(std::move(parsed)), std::nullopt};
}

const char* yn(bool b) { return b ? "yes" : "no"; }

void require_format(const RunConfig& c, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (c.format == f) return;
    throw BadArgument("unsupported --format " + c.format);
}

int cmd_matroid(const RunConfig& c) {
    require_format(c, {"text", "json", "dot"});
    const auto in = load(c);
    const Matroid& m = in.matroid;
    const FlatLattice lat = m.flats();
    if (c.format == "dot") {
        std::cout << lattice_to_dot(lat);
        return 0;
    }
    std::map<int, int> by_size;
    for (ElementSet cc : m.circuits()) ++by_size[cc.size()];
    if (c.format == "json") {
        json j;
        j["name"] = in.name;
        j["ground"] = m.ground_size();
        j["rank"] = m.rank();
        j["circuits"] = m.circuits().size();
        json sizes = json::object();
        for (auto [s, k] : by_size) sizes[std::to_string(s)] = k;
        j["circuit_sizes"] = sizes;
        j["whitney"] = lat.whitney_numbers();
        j["simple"] = m.is_simple();
        j["matroid"] = json::parse(matroid_to_json(m));
        j["lattice"] = json::parse(lattice_to_json(lat));
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "name: " << in.name << "\nelements: " << m.ground_size() << "\nrank: " << m.rank()
              << "\ncircuits: " << m.circuits().size();
    if (!by_size.empty()) {
        std::cout << " (";
        bool first = true;
        for (auto [s, k] : by_size) {
            std::cout << (first ? "" : ", ") << k << " of size " << s;
            first = false;
        }
        std::cout << ")";
    }
    std::cout << "\nwhitney:";
    for (auto w : lat.whitney_numbers()) std::cout << " " << w;
    std::cout << "\nflats: " << lat.size() << "\nsimple: " << yn(m.is_simple()) << "\n";
    return 0;
}

int cmd_chordality(const RunConfig& c) {
    require_format(c, {"text", "json"});
    const auto in = load(c);
    json j;
    j["name"] = in.name;
    if (in.graph) {
        const Graph& g = *in.graph;
        const auto ch = is_chordal(g);
        j["chordal"] = ch.chordal();
        if (!ch.chordal()) j["chordless_cycle"] = ch.chordless_cycle;
        const auto seo = is_strongly_chordal(g);
        j["strongly_chordal"] = seo.has_value();
        if (seo) j["simple_elimination_order"] = *seo;
        if (ch.chordal()) {
            const auto w = find_induced_trampoline(g);
            j["trampoline"] = w ? json{{"n", w->n}, {"vertices", w->vertex_map}} : json(nullptr);
        }
        if (const auto labels = mat_labeling(g)) {
            j["mat_labeling"] = json::parse(mat_labeling_to_json(g, *labels));
            j["edge_elimination_order"] = json::parse(edge_order_to_json(g, edge_order_from_labels(*labels)));
        }
    }
    const Matroid& m = in.matroid;
    if (m.is_simple()) {
        j["quadratic"] = is_quadratic(m);
        j["c_chordal"] = is_c_chordal(m);
        j["t_chordal"] = is_t_chordal(m);
        j["line_closed"] = is_line_closed(m);
    } else {
        j["simple"] = false;
    }
    if (c.format == "json") {
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "name: " << in.name << "\n";
    auto flag = [&](const char* key, const char* label) {
        if (j.contains(key)) std::cout << label << ": " << yn(j[key].get<bool>()) << "\n";
    };
    flag("chordal", "chordal");
    if (j.contains("chordless_cycle")) std::cout << "chordless cycle: " << j["chordless_cycle"].dump() << "\n";
    flag("strongly_chordal", "strongly chordal");
    if (j.contains("trampoline"))
        std::cout << "induced trampoline: "
                  << (j["trampoline"].is_null() ? std::string("none") : j["trampoline"].dump()) << "\n";
    if (j.contains("mat_labeling")) std::cout << "MAT-labeling: " << j["mat_labeling"].dump() << "\n";
    if (j.contains("edge_elimination_order"))
        std::cout << "strong edge elimination order: " << j["edge_elimination_order"].dump() << "\n";
    flag("quadratic", "quadratic");
    flag("c_chordal", "C-chordal");
    flag("t_chordal", "T-chordal");
    flag("line_closed", "line-closed");
    if (j.contains("simple")) std::cout << "not simple: matroid predicates skipped\n";
    return 0;
}

ElementOrder parse_order(const std::string& s, const Loaded& in) {
    std::vector<int> seq;
    if (!s.empty() && s.front() == '[') {
        json j;
        try {
            j = json::parse(s);
        } catch (const json::parse_error& e) {
            throw ParseError(std::string("bad --order: ") + e.what());
        }
        for (const auto& x : j) {
            if (x.is_number_integer()) {
                seq.push_back(x.get<int>());
            } else if (x.is_array() && x.size() == 2 && in.graph) {
                const int id = in.graph->edge_id(x[0].get<int>(), x[1].get<int>());
                if (id < 0) throw ParseError("--order names a missing edge " + x.dump());
                seq.push_back(id);
            } else {
                throw ParseError("--order entries must be element ids or edge pairs");
            }
        }
    } else {
        std::stringstream ss(s);
        for (std::string tok; std::getline(ss, tok, ',');) {
            try {
                seq.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw ParseError("bad --order entry '" + tok + "'");
            }
        }
    }
    return ElementOrder(std::move(seq));
}

int cmd_groebner(const RunConfig& c) {
    require_format(c, {"text", "json"});
    const auto in = load(c);
    const Matroid& m = in.matroid;
    if (!c.order.empty()) {
        const ElementOrder order = parse_order(c.order, in);
        const auto cert = certify_order(m, order);
        const auto lead = lex_initial_ideal(m, order);
        json j{{"order", order.sequence()}, {"strong", cert.strong}};
        j["witness"] = cert.witness ? json(cert.witness->elements()) : json(nullptr);
        json hist = json::object();
        for (auto [d, k] : lead.degree_histogram) hist[std::to_string(d)] = k;
        j["initial_ideal_degrees"] = hist;
        if (c.format == "json") {
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "order: " << j["order"].dump() << "\nstrong elimination order: " << yn(cert.strong) << "\n";
            if (cert.witness) std::cout << "non-MAT circuit: " << cert.witness->to_string() << "\n";
            std::cout << "initial ideal generators by degree: " << hist.dump() << "\n";
        }
        return 0;
    }
    SearchOptions so;
    so.threads = c.threads;
    if (in.graph) so.graph = &*in.graph;
    const auto rep = search_strong_elimination_order(m, parse_strategy(c.strategy), so);
    if (c.format == "json") {
        std::cout << json::parse(rep.to_json()).dump(2) << "\n";
        return 0;
    }
    std::cout << "strategy: " << c.strategy << "\noutcome: " << to_string(rep.outcome)
              << "\norders examined: " << rep.orders_examined << "\nnodes: " << rep.nodes
              << "\npruned: " << rep.pruned << "\n";
    if (rep.order) {
        std::cout << "order:";
        for (int e : rep.order->sequence()) std::cout << " " << e;
        std::cout << "\n";
    }
    if (rep.witness_circuit) std::cout << "most frequent non-MAT 4-circuit: " << rep.witness_circuit->to_string() << "\n";
    return 0;
}

int cmd_betti(const RunConfig& c) {
    require_format(c, {"text", "json"});
    if (c.steps < 0) throw BadArgument("--steps must be non-negative");
    const auto in = load(c);
    const StructuredAlgebra a{GmaAlgebra(in.matroid)};
    ResolutionOptions o;
    o.max_step = c.steps;
    o.degree_cap = c.degree_cap;
    o.characteristic = c.characteristic;
    o.threads = c.threads;
    std::vector<std::tuple<int, int, long long>> partial;
    o.progress = [&](int i, int d, long long b) { partial.emplace_back(i, d, b); };
    ResolutionResult res;
    try {
        res = resolve_residue_field(a, o);
    } catch (const SizeLimit&) {
        std::cout << "PARTIAL RESULT (resource cap reached); entries computed so far:\n";
        for (auto [i, d, b] : partial)
            if (b) std::cout << "  beta_" << i << "," << d << " = " << b << "\n";
        throw;
    }
    const auto& t = res.table;
    int linear = c.steps;
    std::optional<std::pair<int, int>> nonlinear;
    for (const auto& [ij, b] : t.entries)
        if (ij.first != ij.second && (!nonlinear || ij.first < nonlinear->first)) nonlinear = ij;
    if (nonlinear) linear = nonlinear->first - 1;

    std::optional<ResidualReport> hs, fe;
    if (c.check_identities) {
        hs = hs_poincare_residual(a, t);
        if (c.named.rfind("trampoline", 0) == 0) {
            const int n = std::stoi(c.named.substr(10));
            fe = check_trampoline_functional_equation(n, c.steps, c.degree_cap, c.characteristic, c.threads);
        }
    }
    if (c.format == "json") {
        json j;
        j["name"] = in.name;
        j["betti"] = json::parse(t.to_json());
        j["linear_through"] = linear;
        j["first_nonlinear"] = nonlinear ? json{nonlinear->first, nonlinear->second} : json(nullptr);
        if (hs) j["hs_poincare_residual"] = json::parse(hs->to_json());
        if (fe) j["functional_equation_residual"] = json::parse(fe->to_json());
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << t.to_text();
    std::cout << "linear through step " << linear;
    if (nonlinear) std::cout << "; first nonlinear entry beta_" << nonlinear->first << "," << nonlinear->second;
    std::cout << "\n";
    auto residual = [](const char* what, const ResidualReport& r) {
        std::cout << what << ": " << (r.vanishes() ? "zero" : "NONZERO") << " over " << r.coefficients_checked
                  << " coefficients";
        for (auto [i, j, v] : r.nonzero) std::cout << " [" << i << "," << j << "]=" << v;
        std::cout << "\n";
    };
    if (hs) residual("HS(t)P(-t) - 1", *hs);
    if (fe) residual("functional equation residual", *fe);
    return 0;
}

int cmd_reproduce(const RunConfig& c) {
    require_format(c, {"text", "json"});
    AcceptanceOptions opt;
    opt.threads = c.threads;
    opt.seed = c.seed;
    if (c.format == "text")
        opt.on_result = [](const CriterionResult& r) { std::cout << manifest_text({r}) << std::flush; };
    const auto results = run_acceptance(opt);
    if (c.format == "json") std::cout << manifest_json(results) << "\n";
    for (const auto& r : results)
        if (!r.passed) return 1;
    return 0;
}

void add_common(CLI::App* sub, RunConfig& c) {
    sub->add_option("--named", c.named, "named instance");
    sub->add_option("--input", c.input, "matroid or graph JSON file, - for stdin");
    sub->add_option("--format", c.format, "text, json or dot");
    sub->add_option("--threads", c.threads, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--seed", c.seed, "random seed");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graded Moebius algebras of matroids: chordality, Groebner bases, Betti tables"};
    app.require_subcommand(1);
    RunConfig c;

    auto* matroid = app.add_subcommand("matroid", "ground set, rank, circuits, Whitney numbers, lattice export");
    add_common(matroid, c);
    auto* chord = app.add_subcommand("chordality", "graph and matroid chordality predicates");
    add_common(chord, c);
    auto* groeb = app.add_subcommand("groebner", "search or certify strong elimination orders");
    add_common(groeb, c);
    groeb->add_option("--strategy", c.strategy, "exhaustive, dfs_pruned or graphic_mat");
    groeb->add_option("--order", c.order, "certify this order: 0,1,2 or a JSON array");
    auto* betti = app.add_subcommand("betti", "Betti table of the residue field over GMA(M)");
    add_common(betti, c);
    betti->add_option("--char", c.characteristic, "prime characteristic, 0 for the rationals");
    betti->add_option("--steps", c.steps, "homological steps");
    betti->add_option("--degree-cap", c.degree_cap, "largest internal degree");
    betti->add_flag("--check-identities", c.check_identities, "HS*P(-t) and functional-equation residuals");
    auto* repro = app.add_subcommand("reproduce-paper", "run every acceptance check and print a manifest");
    add_common(repro, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*matroid) return cmd_matroid(c);
        if (*chord) return cmd_chordality(c);
        if (*groeb) return cmd_groebner(c);
        if (*betti) return cmd_betti(c);
        if (*repro) return cmd_reproduce(c);
    } catch (const SizeLimit& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const MismatchBug& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 4;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
