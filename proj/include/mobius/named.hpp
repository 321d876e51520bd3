#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mobius/graph.hpp"
#include "mobius/matroid.hpp"

namespace mobius {

struct NamedInstance {
    std::string name;
    Matroid matroid;
    // Present for graphic instances; the matroid is then its cycle matroid.
    std::optional<Graph> graph;
};

// fano, ag23, betsy-ross, whirl3, l23, example-2-1, u<r><n> (e.g. u25),
// trampoline<n>, broken-trampoline<n>. Throws BadArgument for unknown names.
NamedInstance named_instance(const std::string& name);

// Fixed-size names of the registry; parametrized families are listed once.
std::vector<std::string> named_instance_names();

Matroid fano();
Matroid ag23();
Matroid betsy_ross();
Matroid whirl3();
Matroid l23();
// Vertices 1..4 as 0..3; edges a=12, b=23, c=13, d=14, e=43 with ids 0..4.
Graph example_2_1_graph();

}  // namespace mobius
