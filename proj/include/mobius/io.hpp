#pragma once

#include <string>
#include <variant>

#include "mobius/graph.hpp"
#include "mobius/matroid.hpp"

namespace mobius {

// {"ground": n, "circuits": [[...], ...]}. Throws ParseError, AxiomViolation.
Matroid parse_matroid_json(const std::string& text);
std::string matroid_to_json(const Matroid& m);

// {"vertices": n, "edges": [[u, v], ...]}. Throws ParseError.
Graph parse_graph_json(const std::string& text);
std::string graph_to_json(const Graph& g);

// Graph when the document has "vertices", matroid when it has "ground".
std::variant<Graph, Matroid> parse_input_json(const std::string& text);

// One node per flat labelled by its elements and rank; edges are covers.
std::string lattice_to_dot(const FlatLattice& l);
std::string lattice_to_json(const FlatLattice& l);

// [{"edge": [u, v], "label": k}, ...]
std::string mat_labeling_to_json(const Graph& g, const MatLabeling& labels);
// [[u, v], ...] in order.
std::string edge_order_to_json(const Graph& g, const EdgeOrder& order);

// Throws ParseError when the file cannot be read.
std::string read_text_file(const std::string& path);

}  // namespace mobius
