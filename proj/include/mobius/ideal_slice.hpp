#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "mobius/groebner.hpp"
#include "mobius/linalg.hpp"
#include "mobius/matroid.hpp"

namespace mobius {

// y_lead - y_other, or the monomial y_lead when `other` is empty. Used in
// the ring S / (y_i^2), where products with repeated variables vanish.
struct SquarefreeGenerator {
    ElementSet lead;
    std::optional<ElementSet> other;
    int degree() const { return lead.size(); }
};

// Circuit monomials and y_I - y_{I_F} for every independent I with closure F.
std::vector<SquarefreeGenerator> presentation_generators(const Matroid& m);
// The degree-2 part: binomials y_u y_v - y_w y_t with equal closure.
std::vector<SquarefreeGenerator> quadratic_generators(const Matroid& m);
std::vector<SquarefreeGenerator> monomial_generators(const MonomialIdealSummary& ideal);

// Hilbert function of S / ((y_i^2) + (gens)) in degrees 0..max_degree, by
// row reduction of every degree slice.
template <class F>
std::vector<std::size_t> squarefree_quotient_hilbert(int n, const std::vector<SquarefreeGenerator>& gens,
                                                     int max_degree, const F& field) {
    std::vector<std::size_t> out;
    for (int d = 0; d <= max_degree; ++d) {
        std::unordered_map<ElementSet, int, ElementSetHash> index;
        std::vector<std::vector<ElementSet>> by_size(d + 1);
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
            const ElementSet s(bits);
            if (s.size() == d) index.emplace(s, static_cast<int>(index.size()));
            if (s.size() <= d) by_size[s.size()].push_back(s);
        }
        Echelon<F> ech(field);
        for (const auto& g : gens) {
            if (g.degree() > d) continue;
            for (ElementSet u : by_size[d - g.degree()]) {
                std::vector<std::pair<int, typename F::value>> terms;
                if (!u.intersects(g.lead)) terms.emplace_back(index.at(u | g.lead), field.one());
                if (g.other && !u.intersects(*g.other))
                    terms.emplace_back(index.at(u | *g.other), field.neg(field.one()));
                auto v = make_sparse(field, std::move(terms));
                if (!v.empty()) ech.insert(std::move(v));
            }
        }
        out.push_back(index.size() - ech.rank());
    }
    return out;
}

}  // namespace mobius
