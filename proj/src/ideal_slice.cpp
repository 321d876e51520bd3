#include "mobius/ideal_slice.hpp"

#include "mobius/gma.hpp"

namespace mobius {

std::vector<SquarefreeGenerator> presentation_generators(const Matroid& m) {
    const auto p = presentation(m, true);
    std::vector<SquarefreeGenerator> out;
    for (ElementSet c : p.stanley_reisner) out.push_back({c, std::nullopt});
    for (const auto& b : p.closure_binomials) out.push_back({b.lhs, b.rhs});
    return out;
}

std::vector<SquarefreeGenerator> quadratic_generators(const Matroid& m) {
    std::vector<SquarefreeGenerator> out;
    for (const auto& g : presentation_generators(m))
        if (g.degree() == 2) out.push_back(g);
    return out;
}

std::vector<SquarefreeGenerator> monomial_generators(const MonomialIdealSummary& ideal) {
    std::vector<SquarefreeGenerator> out;
    for (ElementSet s : ideal.squarefree) out.push_back({s, std::nullopt});
    return out;
}

}  // namespace mobius
