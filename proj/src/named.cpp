#include "mobius/named.hpp"

#include <regex>

#include "mobius/error.hpp"

namespace mobius {

namespace {

// Point codes in figure order: 100, 010, 001, 011, 101, 110, 111.
constexpr int kFanoCode[7] = {4, 2, 1, 3, 5, 6, 7};

}  // namespace

Matroid fano() {
    std::vector<ElementSet> lines;
    for (int a = 0; a < 7; ++a)
        for (int b = a + 1; b < 7; ++b)
            for (int c = b + 1; c < 7; ++c)
                if ((kFanoCode[a] ^ kFanoCode[b] ^ kFanoCode[c]) == 0) lines.push_back({a, b, c});
    return Matroid::rank3_from_lines(7, lines);
}

Matroid ag23() {
    // Point (x, y) has id 3x + y; three distinct points are collinear iff
    // their coordinate sums vanish mod 3.
    std::vector<ElementSet> lines;
    for (int a = 0; a < 9; ++a)
        for (int b = a + 1; b < 9; ++b)
            for (int c = b + 1; c < 9; ++c)
                if ((a / 3 + b / 3 + c / 3) % 3 == 0 && (a % 3 + b % 3 + c % 3) % 3 == 0)
                    lines.push_back({a, b, c});
    return Matroid::rank3_from_lines(9, lines);
}

Matroid betsy_ross() {
    return Matroid::rank3_from_lines(11, {{0, 1, 6},
                                          {0, 2, 7},
                                          {0, 3, 8},
                                          {0, 4, 9},
                                          {0, 5, 10},
                                          {1, 3, 9, 10},
                                          {2, 4, 6, 10},
                                          {3, 5, 6, 7},
                                          {1, 4, 7, 8},
                                          {2, 5, 8, 9}});
}

Matroid whirl3() { return Matroid::rank3_from_lines(6, {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}}); }

Matroid l23() {
    // U(3,5) with the 3-set {3,4,5} (1-based) made dependent.
    return Matroid::rank3_from_lines(5, {{2, 3, 4}});
}

Graph example_2_1_graph() { return Graph(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 2}}); }

NamedInstance named_instance(const std::string& name) {
    auto graphic = [&](Graph g) { return NamedInstance{name, cycle_matroid(g), std::move(g)}; };
    if (name == "fano") return {name, fano(), std::nullopt};
    if (name == "ag23") return {name, ag23(), std::nullopt};
    if (name == "betsy-ross") return {name, betsy_ross(), std::nullopt};
    if (name == "whirl3") return {name, whirl3(), std::nullopt};
    if (name == "l23") return {name, l23(), std::nullopt};
    if (name == "example-2-1") return graphic(example_2_1_graph());
    std::smatch m;
    if (std::regex_match(name, m, std::regex(R"(u(\d)(\d+))"))) {
        const int r = std::stoi(m[1]), n = std::stoi(m[2]);
        if (r > n || n > kMaxElements) throw BadArgument("bad uniform matroid " + name);
        return {name, Matroid::uniform(r, n), std::nullopt};
    }
    if (std::regex_match(name, m, std::regex(R"(trampoline(\d+))"))) return graphic(trampoline(std::stoi(m[1])));
    if (std::regex_match(name, m, std::regex(R"(broken-trampoline(\d+))")))
        return graphic(broken_trampoline(std::stoi(m[1])));
    throw BadArgument("unknown named instance '" + name + "'");
}

std::vector<std::string> named_instance_names() {
    return {"fano", "ag23", "betsy-ross", "whirl3", "l23", "example-2-1", "u23", "u24", "u25",
            "trampoline3", "trampoline4", "broken-trampoline3", "broken-trampoline4"};
}

}  // namespace mobius
