#include "mobius/gma.hpp"

#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"

#include "mobius/error.hpp"
#include "mobius/linalg.hpp"

namespace mobius {

namespace {

constexpr std::size_t kProductTableLimit = 3000;

}  // namespace

GmaAlgebra::GmaAlgebra(Matroid m, std::size_t flat_cap) : m_(std::move(m)), n_(m_.ground_size()) {
    if (!m_.is_simple()) throw NotSimple("graded Moebius algebras need a simple matroid");
    lattice_ = m_.flats(flat_cap);
    const int dim = dimension();
    atom_.resize(n_);
    for (int e = 0; e < n_; ++e) atom_[e] = *lattice_.index_of(ElementSet::single(e));
    atom_join_.resize(static_cast<std::size_t>(dim) * n_);
    canonical_.resize(dim);
    for (int f = 0; f < dim; ++f) {
        const ElementSet fl = lattice_.flat(f).elements;
        canonical_[f] = m_.basis_of(fl);
        for (int e = 0; e < n_; ++e)
            atom_join_[static_cast<std::size_t>(f) * n_ + e] =
                fl.contains(e) ? f : *lattice_.index_of(m_.closure(fl.with(e)));
    }
    if (static_cast<std::size_t>(dim) <= kProductTableLimit) {
        std::vector<int> table(static_cast<std::size_t>(dim) * dim);
        for (int a = 0; a < dim; ++a)
            for (int b = 0; b < dim; ++b) {
                const int j = join(a, b);
                table[static_cast<std::size_t>(a) * dim + b] = degree(j) == degree(a) + degree(b) ? j : -1;
            }
        table_ = std::move(table);
    }
}

int GmaAlgebra::join(int a, int b) const {
    int cur = a;
    canonical_[b].for_each([&](int e) { cur = join_element(cur, e); });
    return cur;
}

int GmaAlgebra::flat_of(ElementSet s) const {
    int cur = lattice_.bottom();
    s.for_each([&](int e) { cur = join_element(cur, e); });
    return cur;
}

int GmaAlgebra::monomial_value(ElementSet s) const {
    const int f = flat_of(s);
    return degree(f) == s.size() ? f : -1;
}

// ---------------------------------------------------------------------------
// Presentation

PresentationIdeal presentation(const Matroid& m, bool with_closure_form) {
    if (!m.is_simple()) throw NotSimple("presentation needs a simple matroid");
    PresentationIdeal p;
    p.variables = m.ground_size();
    p.squares.resize(p.variables);
    std::iota(p.squares.begin(), p.squares.end(), 0);
    for (ElementSet c : m.circuits()) {
        const int j = c.first();
        c.without(j).for_each([&](int i) { p.circuit_binomials.push_back({c, i, j}); });
    }
    if (with_closure_form) {
        p.stanley_reisner = m.circuits();
        const FlatLattice lat = m.flats();
        for (const Flat& f : lat.flats()) {
            const ElementSet canon = m.basis_of(f.elements);
            // Bases of F: rank-sized independent subsets of F.
            const auto elems = f.elements.elements();
            std::vector<int> pick;
            auto rec = [&](auto&& self, std::size_t start, ElementSet cur) -> void {
                if (cur.size() == f.rank) {
                    if (cur != canon && m.is_independent(cur)) p.closure_binomials.push_back({cur, canon});
                    return;
                }
                for (std::size_t k = start; k < elems.size(); ++k) self(self, k + 1, cur.with(elems[k]));
            };
            rec(rec, 0, ElementSet{});
        }
    }
    return p;
}

namespace {

std::string monomial_text(ElementSet s) {
    std::string out;
    s.for_each([&](int e) {
        if (!out.empty()) out += '*';
        out += "y" + std::to_string(e);
    });
    return out.empty() ? "1" : out;
}

}  // namespace

std::string presentation_text(const PresentationIdeal& p) {
    std::ostringstream os;
    os << "squares:";
    for (int i : p.squares) os << " y" << i << "^2";
    os << "\ncircuit binomials:\n";
    for (const auto& b : p.circuit_binomials)
        os << "  " << monomial_text(b.circuit.without(b.i)) << " - " << monomial_text(b.circuit.without(b.j)) << "\n";
    if (!p.stanley_reisner.empty()) {
        os << "circuit monomials:\n";
        for (ElementSet c : p.stanley_reisner) os << "  " << monomial_text(c) << "\n";
        os << "closure binomials:\n";
        for (const auto& b : p.closure_binomials)
            os << "  " << monomial_text(b.lhs) << " - " << monomial_text(b.rhs) << "\n";
    }
    return os.str();
}

std::string presentation_json(const PresentationIdeal& p) {
    nlohmann::json j;
    j["variables"] = p.variables;
    j["squares"] = p.squares;
    j["circuit_binomials"] = nlohmann::json::array();
    for (const auto& b : p.circuit_binomials)
        j["circuit_binomials"].push_back({{"circuit", b.circuit.elements()}, {"i", b.i}, {"j", b.j}});
    return j.dump(2);
}

// ---------------------------------------------------------------------------
// Quadraticity
//
// Modulo squares the ideal lives in squarefree monomials, graded by the
// flat spanned by the support and by size. In that grading each piece of
// S/Q is at most one-dimensional, and the ideal generated by the quadrics is
// spanned by monomials containing a triangle together with the exchanges
// y_I - y_{I-v+w} along triangles {u, v, w} with u, v in I. Its rank in a
// piece is the number of sets minus the components free of triangles.

namespace {

struct TriangleIndex {
    int n = 0;
    std::vector<ElementSet> third;  // n*n: w completing {u, v} to a triangle
    std::vector<ElementSet> triangles;

    explicit TriangleIndex(const Matroid& m) : n(m.ground_size()), third(static_cast<std::size_t>(n) * n) {
        for (ElementSet c : m.circuits()) {
            if (c.size() != 3) continue;
            triangles.push_back(c);
            const auto e = c.elements();
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b)
                    if (a != b) third[static_cast<std::size_t>(e[a]) * n + e[b]].insert(e[3 - a - b]);
        }
    }
    ElementSet at(int u, int v) const { return third[static_cast<std::size_t>(u) * n + v]; }
    bool contains_triangle(ElementSet s) const {
        for (ElementSet t : triangles)
            if (t.subset_of(s)) return true;
        return false;
    }
};

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::optional<QuadraticityWitness> quadraticity_failure(const Matroid& m, std::size_t subset_cap) {
    const GmaAlgebra alg(m);
    const TriangleIndex tri(m);
    const int n = m.ground_size();

    // Subsets of nullity <= 1 and size >= 3, bucketed by (flat, size).
    std::unordered_map<std::uint64_t, std::vector<ElementSet>> blocks;
    std::size_t visited = 0;
    auto rec = [&](auto&& self, int start, ElementSet cur, int flat) -> void {
        if (++visited > subset_cap) throw SizeLimit("quadraticity check exceeded the subset cap");
        const int size = cur.size();
        if (size >= 3) blocks[(static_cast<std::uint64_t>(flat) << 8) | size].push_back(cur);
        for (int e = start; e < n; ++e) {
            const int f = alg.join_element(flat, e);
            if (size + 1 - alg.degree(f) > 1) continue;
            self(self, e + 1, cur.with(e), f);
        }
    };
    rec(rec, 0, ElementSet{}, alg.lattice().bottom());

    std::vector<std::uint64_t> keys;
    keys.reserve(blocks.size());
    for (const auto& kv : blocks) keys.push_back(kv.first);
    std::sort(keys.begin(), keys.end(), [](std::uint64_t a, std::uint64_t b) {
        return (a & 0xff) != (b & 0xff) ? (a & 0xff) < (b & 0xff) : a < b;
    });

    for (std::uint64_t key : keys) {
        const auto& sets = blocks[key];
        const int flat = static_cast<int>(key >> 8), d = static_cast<int>(key & 0xff);
        std::unordered_map<ElementSet, int, ElementSetHash> pos;
        for (int k = 0; k < static_cast<int>(sets.size()); ++k) pos.emplace(sets[k], k);
        UnionFind uf(sets.size());
        std::vector<char> killed(sets.size(), 0);
        for (int k = 0; k < static_cast<int>(sets.size()); ++k) {
            const ElementSet s = sets[k];
            if (tri.contains_triangle(s)) killed[k] = 1;
            s.for_each([&](int u) {
                s.for_each([&](int v) {
                    if (u == v) return;
                    (tri.at(u, v) - s).for_each([&](int w) {
                        auto it = pos.find(s.without(v).with(w));
                        if (it == pos.end()) throw MismatchBug("triangle exchange left its graded piece");
                        uf.unite(k, it->second);
                    });
                });
            });
        }
        std::vector<char> root_killed(sets.size(), 0);
        for (int k = 0; k < static_cast<int>(sets.size()); ++k)
            if (killed[k]) root_killed[uf.find(k)] = 1;
        int clean = 0;
        for (int k = 0; k < static_cast<int>(sets.size()); ++k)
            if (uf.find(k) == k && !root_killed[k]) ++clean;
        const int expected = alg.degree(flat) == d ? 1 : 0;
        if (clean != expected) return QuadraticityWitness{alg.lattice().flat(flat).elements, d};
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Chordality predicates

bool is_c_chordal(const Matroid& m) {
    for (ElementSet c : m.circuits()) {
        if (c.size() < 4) continue;
        bool found = false;
        const ElementSet outside = m.ground() - c;
        outside.for_each([&](int e) {
            if (found) return;
            for (int ai : m.circuits_through(e)) {
                const ElementSet a = m.circuits()[ai];
                const ElementSet part = a.without(e);
                if (!part.subset_of(c) || part == c) continue;
                if (m.is_circuit((c - part).with(e))) {
                    found = true;
                    return;
                }
            }
        });
        if (!found) return false;
    }
    return true;
}

bool is_t_chordal(const Matroid& m) {
    std::vector<ElementSet> triangles;
    for (ElementSet c : m.circuits())
        if (c.size() == 3) triangles.push_back(c);
    for (ElementSet c : m.circuits()) {
        if (c.size() < 4) continue;
        bool found = false;
        for (ElementSet t : triangles)
            if ((t & c).size() == 2) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

bool is_line_closed(const Matroid& m, std::size_t cap) {
    const int n = m.ground_size();
    std::vector<ElementSet> line(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) line[static_cast<std::size_t>(i) * n + j] = m.closure({i, j});
    auto line_closure = [&](ElementSet s) {
        for (bool changed = true; changed;) {
            changed = false;
            const auto es = s.elements();
            ElementSet next = s;
            for (std::size_t a = 0; a < es.size(); ++a)
                for (std::size_t b = a + 1; b < es.size(); ++b) next |= line[static_cast<std::size_t>(es[a]) * n + es[b]];
            if (next != s) {
                s = next;
                changed = true;
            }
        }
        return s;
    };
    std::unordered_set<ElementSet, ElementSetHash> seen;
    std::vector<ElementSet> queue{line_closure(ElementSet{})};
    seen.insert(queue.front());
    for (std::size_t q = 0; q < queue.size(); ++q) {
        const ElementSet x = queue[q];
        if (!m.is_flat(x)) return false;
        (m.ground() - x).for_each([&](int e) {
            const ElementSet y = line_closure(x.with(e));
            if (seen.insert(y).second) queue.push_back(y);
        });
        if (seen.size() > cap) throw SizeLimit("line-closed enumeration exceeded its cap");
    }
    return true;
}

// ---------------------------------------------------------------------------
// Colon ideals

namespace {

using Vec = SparseVec<PrimeField::value>;

// Homogeneous element: flat index -> coefficient.
struct HomElement {
    int degree = 0;
    std::vector<std::pair<int, long long>> terms;
};

HomElement monomial_difference(const GmaAlgebra& a, ElementSet lhs, ElementSet rhs) {
    HomElement h;
    h.degree = lhs.size();
    const int l = a.monomial_value(lhs), r = a.monomial_value(rhs);
    if (l >= 0) h.terms.push_back({l, 1});
    if (r >= 0) h.terms.push_back({r, -1});
    return h;
}

// Dimension per degree of the ideal generated by the given elements.
std::vector<std::size_t> ideal_dims(const GmaAlgebra& a, const std::vector<HomElement>& gens) {
    const PrimeField f(32003);
    const int top = a.top_degree();
    std::vector<Echelon<PrimeField>> ech(top + 1, Echelon<PrimeField>(f));
    for (const auto& g : gens) {
        if (g.terms.empty()) continue;
        for (int h = 0; h < a.dimension(); ++h) {
            if (a.degree(h) + g.degree > top) continue;
            std::vector<std::pair<int, PrimeField::value>> terms;
            for (auto [fl, c] : g.terms) {
                const int p = a.product(h, fl);
                if (p >= 0) terms.push_back({p, f.from_int(c)});
            }
            auto v = make_sparse(f, std::move(terms));
            if (!v.empty()) ech[a.degree(h) + g.degree].insert(std::move(v));
        }
    }
    std::vector<std::size_t> dims(top + 1);
    for (int d = 0; d <= top; ++d) dims[d] = ech[d].rank();
    return dims;
}

}  // namespace

ColonIdealReport colon_ideal_basis(const GmaAlgebra& a, int element) {
    const Matroid& m = a.matroid();
    if (element < 0 || element >= m.ground_size()) throw BadArgument("element out of range");
    ColonIdealReport rep;
    rep.element = element;
    const int top = a.top_degree();
    const int ya = a.atom(element);

    // (i) kernel of multiplication by y_a, degree by degree.
    const PrimeField f(32003);
    rep.kernel_dims.assign(top + 1, 0);
    for (int d = 0; d <= top; ++d) {
        Echelon<PrimeField> ech(f);
        std::size_t cols = 0;
        for (int fl : a.lattice().of_rank(d)) {
            ++cols;
            Vec v;
            const int p = a.product(fl, ya);
            if (p >= 0) v.push(p, 1);
            ech.insert(std::move(v));
        }
        rep.kernel_dims[d] = cols - ech.rank();
    }

    // (ii) y_a and the binomials of the circuits of M/a.
    std::vector<HomElement> gens{{1, {{ya, 1}}}};
    const Minor con = m.contraction(ElementSet::single(element));
    for (ElementSet c : con.matroid.circuits()) {
        ElementSet orig;
        c.for_each([&](int k) { orig.insert(con.original[k]); });
        const int j = orig.first();
        orig.without(j).for_each([&](int i) { gens.push_back(monomial_difference(a, orig.without(i), orig.without(j))); });
    }
    rep.generated_dims = ideal_dims(a, gens);

    for (ElementSet c : m.circuits()) {
        if (c.size() != 3 || !c.contains(element)) continue;
        const auto ij = c.without(element).elements();
        rep.linear_generators.emplace_back(ij[0], ij[1]);
    }
    if (is_c_chordal(m)) {
        std::vector<HomElement> lin{{1, {{ya, 1}}}};
        for (auto [i, j] : rep.linear_generators) lin.push_back({1, {{a.atom(j), 1}, {a.atom(i), -1}}});
        rep.linear_form_dims = ideal_dims(a, lin);
    }

    if (rep.kernel_dims != rep.generated_dims)
        throw MismatchBug("colon ideal: kernel and contraction generators disagree");
    if (rep.linear_form_dims && *rep.linear_form_dims != rep.kernel_dims)
        throw MismatchBug("colon ideal: linear forms disagree for a C-chordal matroid");
    return rep;
}

GmaAlgebra quotient_by_colon(const GmaAlgebra& a, int element) {
    const ColonIdealReport rep = colon_ideal_basis(a, element);
    const Matroid& m = a.matroid();
    GmaAlgebra quotient(m.contraction(ElementSet::single(element)).matroid.simplification().matroid);
    const auto w = a.hilbert_function();
    std::vector<std::size_t> expect;
    for (std::size_t d = 0; d < w.size(); ++d) expect.push_back(w[d] - rep.kernel_dims[d]);
    while (!expect.empty() && expect.back() == 0) expect.pop_back();
    if (expect != quotient.hilbert_function())
        throw MismatchBug("quotient by the colon ideal does not match si(M/a)");
    return quotient;
}

}  // namespace mobius
