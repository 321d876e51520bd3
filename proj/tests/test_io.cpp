#include "doctest.h"
#include "mobius/io.hpp"
#include "mobius/named.hpp"

using namespace mobius;

TEST_CASE("lattice DOT export") {
    const FlatLattice l = cycle_matroid(example_2_1_graph()).flats();
    const std::string dot = lattice_to_dot(l);
    std::size_t nodes = 0, edges = 0;
    for (std::size_t p = 0; (p = dot.find("[label=", p)) != std::string::npos; ++p) ++nodes;
    for (std::size_t p = 0; (p = dot.find("->", p)) != std::string::npos; ++p) ++edges;
    CHECK(nodes == 13);
    // covers: 5 atoms over the bottom, rank-2 flats cover their atoms, top covers rank 2
    CHECK(edges == 5 + (3 + 3 + 2 + 2 + 2 + 2) + 6);
    CHECK(dot.rfind("digraph", 0) == 0);
}

TEST_CASE("lattice JSON export") {
    const FlatLattice l = fano().flats();
    const std::string j = lattice_to_json(l);
    CHECK(j.find("\"whitney\":[1,7,7,1]") != std::string::npos);
    CHECK(j.find("\"covers\"") != std::string::npos);
}

TEST_CASE("labeling and order JSON") {
    const Graph g(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(mat_labeling_to_json(g, {1, 1, 2}) ==
          R"([{"edge":[0,1],"label":1},{"edge":[1,2],"label":1},{"edge":[0,2],"label":2}])");
    CHECK(edge_order_to_json(g, {2, 0, 1}) == "[[0,2],[0,1],[1,2]]");
}

TEST_CASE("unreadable files") { CHECK_THROWS_AS(read_text_file("/nonexistent/file.json"), ParseError); }
