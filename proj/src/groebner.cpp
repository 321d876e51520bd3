#include "mobius/groebner.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <thread>

#include "json.hpp"
#include "mobius/gma.hpp"
#include "mobius/linalg.hpp"

namespace mobius {

namespace {

std::vector<int> to_vector(ElementSet s) { return s.elements(); }

// Leading monomials y_{C - i}, i != min C, of the circuit binomials.
std::vector<ElementSet> leading_monomials(const Matroid& m, const ElementOrder& order) {
    std::vector<ElementSet> out;
    for (ElementSet c : m.circuits()) {
        const int lo = order.min_of(c);
        c.for_each([&](int i) {
            if (i != lo) out.push_back(c.without(i));
        });
    }
    return out;
}

}  // namespace

MonomialIdealSummary lex_initial_ideal(const Matroid& m, const ElementOrder& order) {
    if (order.size() != m.ground_size()) throw BadArgument("order size does not match the ground set");
    if (!m.is_simple()) throw NotSimple("lex_initial_ideal needs a simple matroid");
    auto gens = leading_monomials(m, order);
    std::sort(gens.begin(), gens.end(), [](ElementSet a, ElementSet b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    const int n = m.ground_size();
    std::vector<ElementSet> pair_partners(n);
    MonomialIdealSummary out;
    out.variables = n;
    for (ElementSet g : gens) {
        bool divisible = false;
        if (g.size() == 2) {
            const int a = g.first();
            const int b = g.without(a).first();
            pair_partners[a].insert(b);
            pair_partners[b].insert(a);
        } else {
            g.for_each([&](int a) {
                if (!divisible && pair_partners[a].intersects(g)) divisible = true;
            });
            for (std::size_t k = 0; !divisible && k < out.squarefree.size(); ++k) {
                const ElementSet h = out.squarefree[k];
                if (h.size() > 2 && h.size() < g.size() && h.subset_of(g)) divisible = true;
            }
        }
        if (!divisible) out.squarefree.push_back(g);
    }
    if (n > 0) out.degree_histogram[2] = n;
    for (ElementSet g : out.squarefree) ++out.degree_histogram[g.size()];
    return out;
}

TriangleTable::TriangleTable(const Matroid& m) : n_(m.ground_size()), third_(static_cast<std::size_t>(n_) * n_) {
    for (ElementSet c : m.circuits()) {
        if (c.size() != 3) continue;
        const auto e = c.elements();
        for (int x = 0; x < 3; ++x) {
            const int u = e[(x + 1) % 3];
            const int v = e[(x + 2) % 3];
            third_[static_cast<std::size_t>(u) * n_ + v].insert(e[x]);
            third_[static_cast<std::size_t>(v) * n_ + u].insert(e[x]);
        }
    }
}

bool TriangleTable::has_mat_triple(ElementSet s, const ElementOrder& order) const {
    const auto e = s.elements();
    for (std::size_t a = 0; a < e.size(); ++a) {
        for (std::size_t b = a + 1; b < e.size(); ++b) {
            const int lo = order.precedes(e[a], e[b]) ? e[a] : e[b];
            bool found = false;
            third(e[a], e[b]).for_each([&](int w) {
                if (order.precedes(lo, w)) found = true;
            });
            if (found) return true;
        }
    }
    return false;
}

namespace {

bool mat_circuit(const TriangleTable& t, ElementSet c, const ElementOrder& order) {
    const int lo = order.min_of(c);
    bool ok = true;
    c.for_each([&](int i) {
        if (ok && i != lo && !t.has_mat_triple(c.without(i), order)) ok = false;
    });
    return ok;
}

}  // namespace

bool is_mat_circuit(const Matroid& m, ElementSet c, const ElementOrder& order) {
    if (!m.is_circuit(c)) throw BadArgument("not a circuit: " + c.to_string());
    if (order.size() != m.ground_size()) throw BadArgument("order size does not match the ground set");
    return mat_circuit(TriangleTable(m), c, order);
}

OrderCertificate certify_order(const Matroid& m, const ElementOrder& order) {
    if (order.size() != m.ground_size()) throw BadArgument("order size does not match the ground set");
    if (!m.is_simple()) throw NotSimple("certify_order needs a simple matroid");
    const TriangleTable t(m);
    OrderCertificate out;
    for (ElementSet c : m.circuits()) {
        if (c.size() >= 4 && !mat_circuit(t, c, order)) {
            out.witness = c;
            break;
        }
    }
    out.strong = !out.witness.has_value();
    const bool quadratic = lex_initial_ideal(m, order).quadratic();
    if (quadratic != out.strong)
        throw MismatchBug("MAT-circuit criterion and initial ideal disagree for order");
    return out;
}

SearchStrategy parse_strategy(const std::string& s) {
    if (s == "exhaustive") return SearchStrategy::Exhaustive;
    if (s == "dfs_pruned" || s == "dfs-pruned") return SearchStrategy::DfsPruned;
    if (s == "graphic_mat" || s == "graphic-mat") return SearchStrategy::GraphicMat;
    throw BadArgument("unknown strategy: " + s);
}

std::string to_string(SearchStrategy s) {
    switch (s) {
        case SearchStrategy::Exhaustive: return "exhaustive";
        case SearchStrategy::DfsPruned: return "dfs_pruned";
        case SearchStrategy::GraphicMat: return "graphic_mat";
    }
    return "";
}

std::string to_string(SearchOutcome o) {
    switch (o) {
        case SearchOutcome::Found: return "Found";
        case SearchOutcome::ExhaustedNone: return "ExhaustedNone";
        case SearchOutcome::TimedOut: return "TimedOut";
    }
    return "";
}

std::string SearchReport::to_json() const {
    nlohmann::json j;
    j["outcome"] = to_string(outcome);
    j["order"] = order ? nlohmann::json(order->sequence()) : nlohmann::json(nullptr);
    j["orders_examined"] = orders_examined;
    j["nodes"] = nodes;
    j["pruned"] = pruned;
    j["witness_circuit"] = witness_circuit ? nlohmann::json(to_vector(*witness_circuit)) : nlohmann::json(nullptr);
    return j.dump();
}

namespace {

// A 4-circuit with, for every element i, the three pairs of C - i.
struct FourCircuit {
    ElementSet c;
    std::array<int, 4> e{};
};

std::vector<FourCircuit> four_circuits(const Matroid& m) {
    std::vector<FourCircuit> out;
    for (ElementSet c : m.circuits()) {
        if (c.size() != 4) continue;
        FourCircuit f;
        f.c = c;
        const auto v = c.elements();
        std::copy(v.begin(), v.end(), f.e.begin());
        out.push_back(f);
    }
    return out;
}

// Fast test with element positions: index of the first failing 4-circuit.
int first_failing_four(const TriangleTable& t, const std::vector<FourCircuit>& fc, const std::vector<int>& pos) {
    for (std::size_t k = 0; k < fc.size(); ++k) {
        const auto& e = fc[k].e;
        int lo = 0;
        for (int x = 1; x < 4; ++x)
            if (pos[e[x]] < pos[e[lo]]) lo = x;
        for (int skip = 0; skip < 4; ++skip) {
            if (skip == lo) continue;
            bool triple = false;
            for (int a = 0; a < 4 && !triple; ++a) {
                if (a == skip) continue;
                for (int b = a + 1; b < 4 && !triple; ++b) {
                    if (b == skip) continue;
                    const int mp = std::min(pos[e[a]], pos[e[b]]);
                    t.third(e[a], e[b]).for_each([&](int w) {
                        if (pos[w] > mp) triple = true;
                    });
                }
            }
            if (!triple) return static_cast<int>(k);
        }
    }
    return -1;
}

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
    return f;
}

struct PartitionResult {
    std::optional<std::vector<int>> found;
    std::uint64_t examined = 0;
    std::vector<std::uint64_t> failures;
};

// All orders starting with `first`, in lexicographic order.
PartitionResult exhaustive_partition(const Matroid& m, const TriangleTable& t, const std::vector<FourCircuit>& fc,
                                     int first, const std::atomic<int>& best_found) {
    const int n = m.ground_size();
    PartitionResult r;
    r.failures.assign(fc.size(), 0);
    std::vector<int> seq;
    seq.push_back(first);
    for (int e = 0; e < n; ++e)
        if (e != first) seq.push_back(e);
    std::vector<int> pos(n);
    do {
        if (best_found.load(std::memory_order_relaxed) < first) return r;
        for (int k = 0; k < n; ++k) pos[seq[k]] = k;
        ++r.examined;
        const int bad = first_failing_four(t, fc, pos);
        if (bad >= 0) {
            ++r.failures[bad];
            continue;
        }
        if (certify_order(m, ElementOrder(seq)).strong) {
            r.found = seq;
            return r;
        }
    } while (std::next_permutation(seq.begin() + 1, seq.end()));
    return r;
}

SearchReport search_exhaustive(const Matroid& m, const SearchOptions& opt) {
    const int n = m.ground_size();
    if (n > opt.exhaustive_cap)
        throw SizeLimit("exhaustive search is capped at " + std::to_string(opt.exhaustive_cap) + " elements");
    SearchReport rep;
    if (n == 0) {
        rep.outcome = SearchOutcome::Found;
        rep.order = ElementOrder(std::vector<int>{});
        rep.orders_examined = 1;
        return rep;
    }
    const TriangleTable t(m);
    const auto fc = four_circuits(m);
    std::vector<PartitionResult> parts(n);
    std::atomic<int> best_found{n};
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int first; (first = next.fetch_add(1)) < n;) {
            parts[first] = exhaustive_partition(m, t, fc, first, best_found);
            if (parts[first].found) {
                int cur = best_found.load();
                while (first < cur && !best_found.compare_exchange_weak(cur, first)) {
                }
            }
        }
    };
    const int threads = std::max(1, std::min(opt.threads, n));
    std::vector<std::thread> pool;
    for (int k = 1; k < threads; ++k) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    const std::uint64_t per_part = factorial(n - 1);
    std::vector<std::uint64_t> failures(fc.size(), 0);
    for (int first = 0; first < n; ++first) {
        const auto& p = parts[first];
        for (std::size_t k = 0; k < fc.size() && k < p.failures.size(); ++k) failures[k] += p.failures[k];
        if (p.found) {
            rep.outcome = SearchOutcome::Found;
            rep.order = ElementOrder(*p.found);
            rep.orders_examined += p.examined;
            break;
        }
        rep.orders_examined += per_part;
    }
    if (!rep.order) {
        rep.outcome = SearchOutcome::ExhaustedNone;
        auto it = std::max_element(failures.begin(), failures.end());
        if (it != failures.end() && *it > 0) rep.witness_circuit = fc[it - failures.begin()].c;
    }
    return rep;
}

// Depth-first search over prefixes in lexicographic branching order.
class PrunedSearch {
public:
    PrunedSearch(const Matroid& m, std::uint64_t budget)
        : m_(m), t_(m), fc_(four_circuits(m)), n_(m.ground_size()), budget_(budget),
          pos_(n_, kUnplaced), failures_(fc_.size(), 0) {}

    SearchReport run() {
        SearchReport rep;
        // A strong elimination order forces quadratic generation.
        if (!is_quadratic(m_)) {
            rep.outcome = SearchOutcome::ExhaustedNone;
            rep.nodes = 1;
            rep.pruned = 1;
            return rep;
        }
        std::vector<int> seq;
        const Status s = dfs(seq);
        rep.nodes = nodes_;
        rep.pruned = pruned_;
        rep.orders_examined = leaves_;
        if (s == Status::Found) {
            rep.outcome = SearchOutcome::Found;
            rep.order = ElementOrder(found_);
        } else if (s == Status::Budget) {
            rep.outcome = SearchOutcome::TimedOut;
        } else {
            rep.outcome = SearchOutcome::ExhaustedNone;
            auto it = std::max_element(failures_.begin(), failures_.end());
            if (it != failures_.end() && *it > 0) rep.witness_circuit = fc_[it - failures_.begin()].c;
        }
        return rep;
    }

private:
    static constexpr int kUnplaced = 1 << 29;
    enum class Status { Found, Exhausted, Budget };

    // w is decided to precede both u and v.
    bool decided_before(int w, int u, int v) const {
        return pos_[w] != kUnplaced && pos_[w] < pos_[u] && pos_[w] < pos_[v];
    }

    // Some i is decided not to be min C and every pair of C - i only has
    // third elements decided to precede the pair.
    bool violated(const FourCircuit& f) const {
        const auto& e = f.e;
        int placed_min = -1;
        for (int x = 0; x < 4; ++x)
            if (pos_[e[x]] != kUnplaced && (placed_min < 0 || pos_[e[x]] < pos_[e[placed_min]])) placed_min = x;
        if (placed_min < 0) return false;
        for (int skip = 0; skip < 4; ++skip) {
            if (skip == placed_min) continue;
            bool possible = false;
            for (int a = 0; a < 4 && !possible; ++a) {
                if (a == skip) continue;
                for (int b = a + 1; b < 4 && !possible; ++b) {
                    if (b == skip) continue;
                    t_.third(e[a], e[b]).for_each([&](int w) {
                        if (!decided_before(w, e[a], e[b])) possible = true;
                    });
                }
            }
            if (!possible) return true;
        }
        return false;
    }

    Status dfs(std::vector<int>& seq) {
        if (++nodes_ > budget_) return Status::Budget;
        for (std::size_t k = 0; k < fc_.size(); ++k) {
            if (violated(fc_[k])) {
                ++pruned_;
                ++failures_[k];
                return Status::Exhausted;
            }
        }
        if (static_cast<int>(seq.size()) == n_) {
            ++leaves_;
            if (certify_order(m_, ElementOrder(seq)).strong) {
                found_ = seq;
                return Status::Found;
            }
            return Status::Exhausted;
        }
        for (int e = 0; e < n_; ++e) {
            if (pos_[e] != kUnplaced) continue;
            pos_[e] = static_cast<int>(seq.size());
            seq.push_back(e);
            const Status s = dfs(seq);
            seq.pop_back();
            pos_[e] = kUnplaced;
            if (s != Status::Exhausted) return s;
        }
        return Status::Exhausted;
    }

    const Matroid& m_;
    TriangleTable t_;
    std::vector<FourCircuit> fc_;
    int n_;
    std::uint64_t budget_;
    std::vector<int> pos_;
    std::vector<std::uint64_t> failures_;
    std::uint64_t nodes_ = 0;
    std::uint64_t pruned_ = 0;
    std::uint64_t leaves_ = 0;
    std::vector<int> found_;
};

SearchReport search_graphic(const Matroid& m, const SearchOptions& opt) {
    if (!opt.graph) throw BadArgument("graphic_mat needs the underlying graph");
    const Graph& g = *opt.graph;
    if (g.edge_count() != m.ground_size()) throw BadArgument("graph edges do not match the matroid's elements");
    SearchReport rep;
    rep.nodes = 1;
    const auto labels = mat_labeling(g);
    if (!labels) {
        rep.outcome = SearchOutcome::ExhaustedNone;
        return rep;
    }
    const ElementOrder order(edge_order_from_labels(*labels));
    rep.orders_examined = 1;
    const auto cert = certify_order(m, order);
    if (!cert.strong) throw MismatchBug("order from a MAT-labeling is not a strong elimination order");
    rep.outcome = SearchOutcome::Found;
    rep.order = order;
    return rep;
}

}  // namespace

SearchReport search_strong_elimination_order(const Matroid& m, SearchStrategy strategy, const SearchOptions& options) {
    if (!m.is_simple()) throw NotSimple("search needs a simple matroid");
    switch (strategy) {
        case SearchStrategy::Exhaustive: return search_exhaustive(m, options);
        case SearchStrategy::DfsPruned: return PrunedSearch(m, options.node_budget).run();
        case SearchStrategy::GraphicMat: return search_graphic(m, options);
    }
    throw BadArgument("unknown strategy");
}

namespace {

// Monomials in at most 8 variables, 4 bits per exponent. Variable k of the
// packed form is the k-th element of the order, stored in the most
// significant nibble first, so integer comparison is the lex order.
using Mono = std::uint32_t;

int exponent(Mono m, int k) { return static_cast<int>((m >> (4 * (7 - k))) & 0xF); }
Mono unit(int k, int e = 1) { return static_cast<Mono>(e) << (4 * (7 - k)); }

bool divides(Mono a, Mono b) {
    for (int k = 0; k < 8; ++k)
        if (exponent(a, k) > exponent(b, k)) return false;
    return true;
}

Mono lcm(Mono a, Mono b) {
    Mono r = 0;
    for (int k = 0; k < 8; ++k) r |= unit(k, std::max(exponent(a, k), exponent(b, k)));
    return r;
}

int mono_degree(Mono a) {
    int d = 0;
    for (int k = 0; k < 8; ++k) d += exponent(a, k);
    return d;
}

using Rational = RationalField::value;
// Terms in decreasing monomial order.
using Poly = std::map<Mono, Rational, std::greater<>>;

Poly times(const Poly& p, Mono m, const Rational& c) {
    Poly out;
    for (const auto& [mono, coef] : p) out.emplace(mono + m, coef * c);
    return out;
}

void add_into(Poly& p, const Poly& q) {
    for (const auto& [mono, coef] : q) {
        auto [it, inserted] = p.emplace(mono, coef);
        if (!inserted) {
            it->second += coef;
            if (it->second == 0) p.erase(it);
        }
    }
}

// Top-reduces p; true when it reaches zero.
bool reduces_to_zero(Poly p, const std::vector<Poly>& basis) {
    while (!p.empty()) {
        const auto [lm, lc] = *p.begin();
        const Poly* red = nullptr;
        for (const auto& g : basis) {
            if (divides(g.begin()->first, lm)) {
                red = &g;
                break;
            }
        }
        if (!red) return false;
        const auto [gm, gc] = *red->begin();
        add_into(p, times(*red, lm - gm, -lc / gc));
    }
    return true;
}

}  // namespace

bool buchberger_oracle(const Matroid& m, const ElementOrder& order, int degree_cap) {
    const int n = m.ground_size();
    if (n > 8) throw SizeLimit("buchberger_oracle is limited to 8 elements");
    if (order.size() != n) throw BadArgument("order size does not match the ground set");
    auto mono_of = [&](ElementSet s) {
        Mono r = 0;
        s.for_each([&](int e) { r += unit(order.position(e)); });
        return r;
    };
    // Squares, circuit monomials and y_I - y_I' for every pair of
    // independent sets with equal closure.
    std::vector<Poly> basis;
    for (int i = 0; i < n; ++i) basis.push_back(Poly{{unit(order.position(i), 2), Rational(1)}});
    for (ElementSet c : m.circuits()) basis.push_back(Poly{{mono_of(c), Rational(1)}});
    std::map<ElementSet, std::vector<ElementSet>> by_closure;
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
        const ElementSet s(bits);
        if (m.is_independent(s)) by_closure[m.closure(s)].push_back(s);
    }
    for (const auto& [flat, sets] : by_closure) {
        for (std::size_t a = 0; a < sets.size(); ++a) {
            for (std::size_t b = a + 1; b < sets.size(); ++b) {
                Poly p{{mono_of(sets[a]), Rational(1)}};
                add_into(p, Poly{{mono_of(sets[b]), Rational(-1)}});
                basis.push_back(std::move(p));
            }
        }
    }
    for (std::size_t a = 0; a < basis.size(); ++a) {
        for (std::size_t b = a + 1; b < basis.size(); ++b) {
            const auto [ma, ca] = *basis[a].begin();
            const auto [mb, cb] = *basis[b].begin();
            const Mono l = lcm(ma, mb);
            if (mono_degree(l) > degree_cap) continue;
            Poly s = times(basis[a], l - ma, 1 / ca);
            add_into(s, times(basis[b], l - mb, -1 / cb));
            if (!reduces_to_zero(std::move(s), basis)) return false;
        }
    }
    return true;
}

}  // namespace mobius
