#include "mobius/matroid.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_set>

namespace mobius {

std::string ElementSet::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for_each([&](int e) {
        if (!first) os << ',';
        os << e;
        first = false;
    });
    os << '}';
    return os.str();
}

ElementOrder::ElementOrder(std::vector<int> sequence) : sequence_(std::move(sequence)) {
    const int n = static_cast<int>(sequence_.size());
    position_.assign(n, -1);
    for (int k = 0; k < n; ++k) {
        const int e = sequence_[k];
        if (e < 0 || e >= n || position_[e] != -1)
            throw BadArgument("element order is not a permutation");
        position_[e] = k;
    }
}

ElementOrder ElementOrder::identity(int n) {
    std::vector<int> seq(n);
    std::iota(seq.begin(), seq.end(), 0);
    return ElementOrder(std::move(seq));
}

int ElementOrder::min_of(ElementSet s) const {
    int best = -1;
    s.for_each([&](int e) {
        if (best < 0 || position_[e] < position_[best]) best = e;
    });
    return best;
}

// ---------------------------------------------------------------------------

FlatLattice::FlatLattice(std::vector<Flat> flats) : flats_(std::move(flats)) {
    std::sort(flats_.begin(), flats_.end(), [](const Flat& a, const Flat& b) {
        if (a.rank != b.rank) return a.rank < b.rank;
        return a.elements.bits() < b.elements.bits();
    });
    int top_rank = flats_.empty() ? 0 : flats_.back().rank;
    by_rank_.assign(top_rank + 1, {});
    for (int i = 0; i < static_cast<int>(flats_.size()); ++i) {
        by_rank_[flats_[i].rank].push_back(i);
        index_.emplace(flats_[i].elements, i);
    }
}

std::vector<std::size_t> FlatLattice::whitney_numbers() const {
    std::vector<std::size_t> w;
    for (const auto& r : by_rank_) w.push_back(r.size());
    return w;
}

std::optional<int> FlatLattice::index_of(ElementSet s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int FlatLattice::join(int a, int b) const {
    const ElementSet u = flats_[a].elements | flats_[b].elements;
    const int start = std::max(flats_[a].rank, flats_[b].rank);
    for (int r = start; r < static_cast<int>(by_rank_.size()); ++r)
        for (int idx : by_rank_[r])
            if (u.subset_of(flats_[idx].elements)) return idx;
    return top();
}

int FlatLattice::meet(int a, int b) const {
    return index_.at(flats_[a].elements & flats_[b].elements);
}

// ---------------------------------------------------------------------------

namespace {

std::vector<ElementSet> minimalize(std::vector<ElementSet> sets) {
    std::sort(sets.begin(), sets.end(), [](ElementSet a, ElementSet b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.bits() < b.bits();
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<ElementSet> out;
    for (ElementSet s : sets) {
        bool minimal = std::none_of(out.begin(), out.end(), [&](ElementSet o) { return o.subset_of(s); });
        if (minimal) out.push_back(s);
    }
    return out;
}

}  // namespace

void Matroid::index() {
    std::sort(circuits_.begin(), circuits_.end(), [](ElementSet a, ElementSet b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.bits() < b.bits();
    });
    by_element_.assign(n_, {});
    circuit_index_.clear();
    for (int i = 0; i < static_cast<int>(circuits_.size()); ++i) {
        circuits_[i].for_each([&](int e) { by_element_[e].push_back(i); });
        circuit_index_.emplace(circuits_[i], i);
    }
}

Matroid Matroid::from_trusted_circuits(int ground_size, std::vector<ElementSet> circuits) {
    if (ground_size < 0 || ground_size > kMaxElements)
        throw BadArgument("ground set size must be in [0, 64]");
    Matroid m;
    m.n_ = ground_size;
    m.circuits_ = minimalize(std::move(circuits));
    m.index();
    return m;
}

Matroid Matroid::from_circuits(int ground_size, std::vector<ElementSet> circuits) {
    for (ElementSet c : circuits) {
        if (c.empty()) throw AxiomViolation("the empty set is not a circuit");
        if (!c.subset_of(ElementSet::full(ground_size)))
            throw AxiomViolation("circuit " + c.to_string() + " is not inside the ground set");
    }
    Matroid m = from_trusted_circuits(ground_size, std::move(circuits));
    if (auto bad = m.elimination_violation()) {
        throw AxiomViolation("circuit elimination fails for " + bad->first.to_string() + " and " +
                             bad->second.to_string());
    }
    return m;
}

Matroid Matroid::rank3_from_lines(int ground_size, const std::vector<ElementSet>& lines) {
    std::vector<ElementSet> circuits;
    for (ElementSet line : lines) {
        auto pts = line.elements();
        for (std::size_t a = 0; a < pts.size(); ++a)
            for (std::size_t b = a + 1; b < pts.size(); ++b)
                for (std::size_t c = b + 1; c < pts.size(); ++c)
                    circuits.push_back(ElementSet{pts[a], pts[b], pts[c]});
    }
    auto collinear = [&](ElementSet s) {
        return std::any_of(lines.begin(), lines.end(), [&](ElementSet l) { return (l & s).size() >= 3; });
    };
    const int n = ground_size;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    ElementSet s{a, b, c, d};
                    if (!collinear(s)) circuits.push_back(s);
                }
    return from_circuits(n, std::move(circuits));
}

Matroid Matroid::uniform(int rank, int n) {
    if (rank < 0 || rank > n) throw BadArgument("uniform matroid needs 0 <= r <= n");
    std::vector<ElementSet> circuits;
    if (rank < n) {
        // All (rank+1)-subsets.
        std::vector<int> pick(n, 0);
        std::fill(pick.begin(), pick.begin() + rank + 1, 1);
        do {
            ElementSet s;
            for (int i = 0; i < n; ++i)
                if (pick[i]) s.insert(i);
            circuits.push_back(s);
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return from_trusted_circuits(n, std::move(circuits));
}

bool Matroid::is_simple() const {
    return std::none_of(circuits_.begin(), circuits_.end(), [](ElementSet c) { return c.size() <= 2; });
}

bool Matroid::is_independent(ElementSet s) const {
    if (s.empty()) return true;
    // Any circuit inside s is listed under each of its elements.
    bool independent = true;
    s.for_each([&](int e) {
        if (!independent) return;
        for (int ci : by_element_[e])
            if (circuits_[ci].subset_of(s)) {
                independent = false;
                return;
            }
    });
    return independent;
}

ElementSet Matroid::basis_of(ElementSet s) const {
    ElementSet basis;
    s.for_each([&](int e) {
        const ElementSet cand = basis.with(e);
        for (int ci : by_element_[e])
            if (circuits_[ci].subset_of(cand)) return;
        basis = cand;
    });
    return basis;
}

int Matroid::rank(ElementSet s) const { return basis_of(s).size(); }

ElementSet Matroid::closure(ElementSet s) const {
    const ElementSet basis = basis_of(s);
    ElementSet cl = s;
    (ground() - s).for_each([&](int e) {
        const ElementSet cand = basis.with(e);
        for (int ci : by_element_[e])
            if (circuits_[ci].subset_of(cand)) {
                cl.insert(e);
                return;
            }
    });
    return cl;
}

FlatLattice Matroid::flats(std::size_t cap) const {
    std::vector<Flat> out;
    std::unordered_set<ElementSet, ElementSetHash> seen;
    std::deque<ElementSet> queue;
    const ElementSet bottom = closure(ElementSet{});
    seen.insert(bottom);
    queue.push_back(bottom);
    while (!queue.empty()) {
        const ElementSet f = queue.front();
        queue.pop_front();
        out.push_back({f, rank(f)});
        (ground() - f).for_each([&](int e) {
            const ElementSet g = closure(f.with(e));
            if (seen.insert(g).second) {
                if (seen.size() > cap) throw SizeLimit("flat enumeration exceeded cap");
                queue.push_back(g);
            }
        });
    }
    return FlatLattice(std::move(out));
}

Minor Matroid::restriction(ElementSet x) const {
    Minor minor;
    minor.original = x.elements();
    std::vector<int> new_id(n_, -1);
    for (int i = 0; i < static_cast<int>(minor.original.size()); ++i) new_id[minor.original[i]] = i;
    std::vector<ElementSet> circuits;
    for (ElementSet c : circuits_) {
        if (!c.subset_of(x)) continue;
        ElementSet r;
        c.for_each([&](int e) { r.insert(new_id[e]); });
        circuits.push_back(r);
    }
    minor.matroid = from_trusted_circuits(static_cast<int>(minor.original.size()), std::move(circuits));
    return minor;
}

Minor Matroid::contraction(ElementSet x) const {
    const ElementSet keep = ground() - x;
    Minor minor;
    minor.original = keep.elements();
    std::vector<int> new_id(n_, -1);
    for (int i = 0; i < static_cast<int>(minor.original.size()); ++i) new_id[minor.original[i]] = i;
    std::vector<ElementSet> circuits;
    for (ElementSet c : circuits_) {
        const ElementSet rest = c - x;
        if (rest.empty()) continue;
        ElementSet r;
        rest.for_each([&](int e) { r.insert(new_id[e]); });
        circuits.push_back(r);
    }
    minor.matroid = from_trusted_circuits(static_cast<int>(minor.original.size()), std::move(circuits));
    return minor;
}

Simplification Matroid::simplification() const {
    Simplification out;
    out.class_of.assign(n_, -1);
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    ElementSet loops;
    for (ElementSet c : circuits_) {
        if (c.size() == 1) loops |= c;
        if (c.size() == 2) {
            auto e = c.elements();
            int a = find(e[0]), b = find(e[1]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
    ElementSet reps;
    for (int e = 0; e < n_; ++e)
        if (!loops.contains(e) && find(e) == e) reps.insert(e);
    Minor restricted = restriction(reps);
    std::vector<int> rep_id(n_, -1);
    for (int i = 0; i < static_cast<int>(restricted.original.size()); ++i) rep_id[restricted.original[i]] = i;
    for (int e = 0; e < n_; ++e)
        if (!loops.contains(e)) out.class_of[e] = rep_id[find(e)];
    out.matroid = std::move(restricted.matroid);
    return out;
}

std::vector<ElementSet> Matroid::broken_circuits(const ElementOrder& order) const {
    std::vector<ElementSet> out;
    out.reserve(circuits_.size());
    for (ElementSet c : circuits_) out.push_back(c.without(order.min_of(c)));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<ElementSet> Matroid::nbc_sets(const ElementOrder& order, int max_size, std::size_t cap) const {
    const auto broken = broken_circuits(order);
    std::vector<ElementSet> out;
    // Grow sets by appending elements later in the order; every subset of an
    // nbc set is nbc, so depth-first growth reaches all of them.
    auto grow = [&](auto&& self, ElementSet s, int next_pos) -> void {
        out.push_back(s);
        if (out.size() > cap) throw SizeLimit("nbc enumeration exceeded cap");
        if (s.size() == max_size) return;
        for (int k = next_pos; k < order.size(); ++k) {
            const ElementSet t = s.with(order.element(k));
            bool ok = std::none_of(broken.begin(), broken.end(), [&](ElementSet b) { return b.subset_of(t); });
            if (ok && is_independent(t)) self(self, t, k + 1);
        }
    };
    grow(grow, ElementSet{}, 0);
    return out;
}

std::optional<std::pair<ElementSet, ElementSet>> Matroid::elimination_violation(int samples) const {
    auto check = [&](ElementSet a, ElementSet b) {
        const ElementSet common = a & b;
        if (common.empty() || a == b) return true;
        bool ok = true;
        common.for_each([&](int e) {
            if (ok && is_independent((a | b).without(e))) ok = false;
        });
        return ok;
    };
    const std::size_t m = circuits_.size();
    if (n_ <= 20) {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                if (!check(circuits_[i], circuits_[j])) return std::make_pair(circuits_[i], circuits_[j]);
        return std::nullopt;
    }
    if (m < 2) return std::nullopt;
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, m - 1);
    for (int s = 0; s < samples; ++s) {
        std::size_t i = pick(rng), j = pick(rng);
        if (!check(circuits_[i], circuits_[j])) return std::make_pair(circuits_[i], circuits_[j]);
    }
    return std::nullopt;
}

}  // namespace mobius
