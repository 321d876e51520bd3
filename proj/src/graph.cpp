#include "mobius/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "mobius/error.hpp"

namespace mobius {

Graph::Graph(int vertex_count) : n_(vertex_count), adj_(vertex_count) {
    if (vertex_count < 0 || vertex_count > kMaxElements) throw BadArgument("graphs are limited to 64 vertices");
}

Graph::Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges) : Graph(vertex_count) {
    for (auto [u, v] : edges) add_edge(u, v);
}

int Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw BadArgument("edge endpoint out of range");
    if (u == v) throw BadArgument("loops are not allowed in a simple graph");
    if (u > v) std::swap(u, v);
    auto [it, inserted] = edge_ids_.emplace(std::make_pair(u, v), static_cast<int>(edges_.size()));
    if (inserted) {
        edges_.emplace_back(u, v);
        adj_[u].insert(v);
        adj_[v].insert(u);
    }
    return it->second;
}

int Graph::edge_id(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = edge_ids_.find({u, v});
    return it == edge_ids_.end() ? -1 : it->second;
}

bool Graph::is_clique(ElementSet vs) const {
    bool ok = true;
    vs.for_each([&](int v) {
        if (!vs.without(v).subset_of(adj_[v])) ok = false;
    });
    return ok;
}

Graph Graph::induced(ElementSet vs, std::vector<int>* original) const {
    const auto verts = vs.elements();
    std::vector<int> id(n_, -1);
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) id[verts[i]] = i;
    Graph h(static_cast<int>(verts.size()));
    for (auto [u, v] : edges_)
        if (id[u] >= 0 && id[v] >= 0) h.add_edge(id[u], id[v]);
    if (original) *original = verts;
    return h;
}

Matroid cycle_matroid(const Graph& g) {
    if (g.edge_count() > kMaxElements) throw BadArgument("cycle matroids are limited to 64 edges");
    std::unordered_set<ElementSet, ElementSetHash> cycles;
    const int n = g.vertex_count();
    std::vector<int> path;
    ElementSet on_path;
    // Cycles are enumerated from their smallest vertex s through larger ones.
    auto extend = [&](auto&& self, int s, int v, ElementSet edges) -> void {
        g.neighbors(v).for_each([&](int w) {
            if (w == s && path.size() >= 3) {
                cycles.insert(edges.with(g.edge_id(v, s)));
                return;
            }
            if (w <= s || on_path.contains(w)) return;
            path.push_back(w);
            on_path.insert(w);
            self(self, s, w, edges.with(g.edge_id(v, w)));
            on_path.erase(w);
            path.pop_back();
        });
    };
    for (int s = 0; s < n; ++s) {
        path.assign(1, s);
        on_path = ElementSet::single(s);
        extend(extend, s, s, ElementSet{});
    }
    return Matroid::from_trusted_circuits(g.edge_count(), {cycles.begin(), cycles.end()});
}

// ---------------------------------------------------------------------------
// Chordality

bool is_perfect_elimination_order(const Graph& g, const VertexOrder& order) {
    ElementSet later = g.vertices();
    for (int v : order) {
        later.erase(v);
        if (!g.is_clique(g.neighbors(v) & later)) return false;
    }
    return true;
}

namespace {

std::vector<int> find_chordless_cycle(const Graph& g) {
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        const auto nbrs = g.neighbors(v).elements();
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                const int a = nbrs[i], b = nbrs[j];
                if (g.adjacent(a, b)) continue;
                // Shortest a-b path avoiding the rest of N[v] is induced and
                // closes a chordless cycle through v.
                const ElementSet blocked = g.closed_neighborhood(v).without(a).without(b);
                std::vector<int> prev(n, -1);
                std::deque<int> queue{a};
                prev[a] = a;
                while (!queue.empty() && prev[b] < 0) {
                    int x = queue.front();
                    queue.pop_front();
                    (g.neighbors(x) - blocked).for_each([&](int y) {
                        if (prev[y] < 0) {
                            prev[y] = x;
                            queue.push_back(y);
                        }
                    });
                }
                if (prev[b] < 0) continue;
                std::vector<int> cycle{v};
                std::vector<int> back;
                for (int x = b; x != a; x = prev[x]) back.push_back(x);
                back.push_back(a);
                cycle.insert(cycle.end(), back.rbegin(), back.rend());
                return cycle;
            }
    }
    return {};
}

}  // namespace

ChordalityResult is_chordal(const Graph& g) {
    const int n = g.vertex_count();
    // Maximum cardinality search; the reverse visit order is a perfect
    // elimination order iff the graph is chordal.
    std::vector<int> weight(n, 0);
    std::vector<int> visit;
    ElementSet numbered;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!numbered.contains(v) && (best < 0 || weight[v] > weight[best])) best = v;
        visit.push_back(best);
        numbered.insert(best);
        (g.neighbors(best) - numbered).for_each([&](int w) { ++weight[w]; });
    }
    VertexOrder peo(visit.rbegin(), visit.rend());
    ChordalityResult result;
    if (is_perfect_elimination_order(g, peo))
        result.perfect_elimination_order = std::move(peo);
    else
        result.chordless_cycle = find_chordless_cycle(g);
    return result;
}

// ---------------------------------------------------------------------------
// Strong chordality

bool is_simple_vertex(const Graph& g, int v, ElementSet alive) {
    std::vector<ElementSet> hoods;
    (g.closed_neighborhood(v) & alive).for_each([&](int w) { hoods.push_back(g.closed_neighborhood(w) & alive); });
    std::sort(hoods.begin(), hoods.end(), [](ElementSet a, ElementSet b) { return a.size() < b.size(); });
    for (std::size_t i = 1; i < hoods.size(); ++i)
        if (!hoods[i - 1].subset_of(hoods[i])) return false;
    return true;
}

std::vector<int> simple_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (is_simple_vertex(g, v, g.vertices())) out.push_back(v);
    return out;
}

std::optional<VertexOrder> is_strongly_chordal(const Graph& g) {
    ElementSet alive = g.vertices();
    VertexOrder order;
    while (!alive.empty()) {
        int pick = -1;
        alive.for_each([&](int v) {
            if (pick < 0 && is_simple_vertex(g, v, alive)) pick = v;
        });
        if (pick < 0) return std::nullopt;
        order.push_back(pick);
        alive.erase(pick);
    }
    return order;
}

std::optional<TrampolineWitness> find_induced_trampoline(const Graph& g, int cap) {
    if (!is_chordal(g).chordal()) throw BadArgument("trampoline search expects a chordal graph");
    const int nv = g.vertex_count();
    std::vector<int> vs, ws;
    ElementSet used;

    // vs = v_1..v_k, ws = w_1..w_{k-1}; w_i ~ v_i, v_{i+1} only.
    auto search = [&](auto&& self, int target) -> bool {
        const int k = static_cast<int>(vs.size());
        ElementSet vset = ElementSet::from(vs), wset = ElementSet::from(ws);
        if (k == target) {
            // Close with w_k ~ v_k, v_1.
            const ElementSet allowed = g.neighbors(vs.back()) & g.neighbors(vs.front());
            for (int w = 0; w < nv; ++w) {
                if (used.contains(w) || !allowed.contains(w)) continue;
                if ((g.neighbors(w) & (vset | wset)) != ElementSet{vs.front(), vs.back()}) continue;
                ws.push_back(w);
                return true;
            }
            return false;
        }
        for (int v = vs.front() + 1; v < nv; ++v) {
            if (used.contains(v) || !vset.subset_of(g.neighbors(v)) || g.neighbors(v).intersects(wset)) continue;
            for (int w = 0; w < nv; ++w) {
                if (used.contains(w) || w == v) continue;
                if ((g.neighbors(w) & (vset | wset).with(v)) != ElementSet{vs.back(), v}) continue;
                vs.push_back(v);
                ws.push_back(w);
                used.insert(v);
                used.insert(w);
                if (self(self, target)) return true;
                used.erase(v);
                used.erase(w);
                vs.pop_back();
                ws.pop_back();
            }
        }
        return false;
    };

    for (int target = 3; 2 * target <= nv; ++target) {
        for (int v1 = 0; v1 < nv; ++v1) {
            vs = {v1};
            ws.clear();
            used = ElementSet::single(v1);
            if (search(search, target)) {
                TrampolineWitness wit;
                wit.n = target;
                wit.vertex_map = vs;
                wit.vertex_map.insert(wit.vertex_map.end(), ws.begin(), ws.end());
                return wit;
            }
        }
    }
    if (nv > cap) throw SizeLimit("trampoline search above the vertex cap found no witness");
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// MAT-labelings

namespace {

struct LabelBuilder {
    const Graph& g;
    MatLabeling labels;
    std::vector<int> add_sequence;  // reverse elimination order
    long budget = 2'000'000;

    // Orders the clique K = N(w) among added vertices as x_1..x_l with
    // label(x_i x_j) < j for i < j, and labels w x_j with j.
    bool assign(std::size_t t) {
        if (t == add_sequence.size()) return true;
        if (--budget < 0) throw SizeLimit("MAT-labeling search budget exhausted");
        const int w = add_sequence[t];
        ElementSet added;
        for (std::size_t s = 0; s < t; ++s) added.insert(add_sequence[s]);
        const auto clique = (g.neighbors(w) & added).elements();
        std::vector<int> slot(clique.size(), -1);  // slot[j-1] = vertex x_j
        return place(t, w, clique, ElementSet::from(clique), static_cast<int>(clique.size()), slot);
    }

    bool place(std::size_t t, int w, const std::vector<int>& clique, ElementSet remaining, int j,
               std::vector<int>& slot) {
        if (j == 0) {
            for (std::size_t i = 0; i < slot.size(); ++i) labels[g.edge_id(w, slot[i])] = static_cast<int>(i) + 1;
            return assign(t + 1);
        }
        for (int x : clique) {
            if (!remaining.contains(x)) continue;
            bool ok = true;
            remaining.without(x).for_each([&](int y) {
                if (labels[g.edge_id(x, y)] >= j) ok = false;
            });
            if (!ok) continue;
            slot[j - 1] = x;
            if (place(t, w, clique, remaining.without(x), j - 1, slot)) return true;
        }
        return false;
    }
};

// Strong elimination orderings: each v_i is simple in G_i and, for
// neighbours x before y, N_i[x] is contained in N_i[y]. Labels are built
// along the reverse of such an ordering; reverse simple elimination orders
// alone can dead-end.
struct StrongOrderSearch {
    const Graph& g;
    std::vector<ElementSet> before;  // vertices that must be eliminated earlier
    VertexOrder order;
    std::optional<MatLabeling> found;
    long budget = 200'000;

    bool run(ElementSet alive) {
        if (alive.empty()) {
            LabelBuilder b{g, MatLabeling(g.edge_count(), 0), {order.rbegin(), order.rend()}};
            if (!b.assign(0)) return false;
            found = std::move(b.labels);
            return true;
        }
        if (--budget < 0) throw SizeLimit("MAT-labeling search budget exhausted");
        bool done = false;
        alive.for_each([&](int v) {
            if (done || before[v].intersects(alive) || !is_simple_vertex(g, v, alive)) return;
            const ElementSet rest = alive.without(v);
            const auto saved = before;
            const auto nb = (g.neighbors(v) & rest).elements();
            for (int x : nb)
                for (int y : nb) {
                    const ElementSet hx = g.closed_neighborhood(x) & rest, hy = g.closed_neighborhood(y) & rest;
                    if (x != y && hx.subset_of(hy) && hx != hy) before[y].insert(x);
                }
            order.push_back(v);
            done = run(rest);
            order.pop_back();
            if (!done) before = saved;
        });
        return done;
    }
};

}  // namespace

std::optional<MatLabeling> mat_labeling(const Graph& g) {
    if (!is_strongly_chordal(g)) return std::nullopt;
    StrongOrderSearch s{g, std::vector<ElementSet>(g.vertex_count()), {}, std::nullopt};
    if (!s.run(g.vertices())) return std::nullopt;
    return s.found;
}

std::optional<MatViolation> mat_labeling_violation(const Graph& g, const MatLabeling& labels) {
    if (static_cast<int>(labels.size()) != g.edge_count()) throw BadArgument("labeling size mismatch");
    int top = 0;
    for (int l : labels) {
        if (l <= 0) throw BadArgument("MAT labels must be positive");
        top = std::max(top, l);
    }
    const int n = g.vertex_count();
    for (int k = 1; k <= top; ++k) {
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int a) {
            while (parent[a] != a) a = parent[a] = parent[parent[a]];
            return a;
        };
        for (int e = 0; e < g.edge_count(); ++e) {
            if (labels[e] != k) continue;
            auto [u, v] = g.edge(e);
            int a = find(u), b = find(v);
            if (a == b) return MatViolation{1, k, e};
            parent[a] = b;
        }
        for (int e = 0; e < g.edge_count(); ++e) {
            if (labels[e] >= k) continue;
            auto [u, v] = g.edge(e);
            if (find(u) == find(v)) return MatViolation{2, k, e};
        }
        for (int e = 0; e < g.edge_count(); ++e) {
            if (labels[e] != k) continue;
            auto [u, v] = g.edge(e);
            int triangles = 0;
            (g.neighbors(u) & g.neighbors(v)).for_each([&](int x) {
                if (labels[g.edge_id(u, x)] < k && labels[g.edge_id(v, x)] < k) ++triangles;
            });
            if (triangles != k - 1) return MatViolation{3, k, e};
        }
    }
    return std::nullopt;
}

EdgeOrder edge_order_from_labels(const MatLabeling& labels) {
    EdgeOrder order(labels.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return labels[a] > labels[b]; });
    return order;
}

std::optional<EdgeOrder> strong_edge_elimination_order(const Graph& g) {
    auto labels = mat_labeling(g);
    if (!labels) return std::nullopt;
    return edge_order_from_labels(*labels);
}

namespace {

std::vector<ElementSet> four_cycles(const Graph& g) {
    std::unordered_set<ElementSet, ElementSetHash> found;
    const int n = g.vertex_count();
    for (int a = 0; a < n; ++a) {
        const auto nbrs = g.neighbors(a).elements();
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                const int b = nbrs[i], d = nbrs[j];
                (g.neighbors(b) & g.neighbors(d)).without(a).for_each([&](int c) {
                    found.insert(ElementSet{g.edge_id(a, b), g.edge_id(b, c), g.edge_id(c, d), g.edge_id(d, a)});
                });
            }
    }
    std::vector<ElementSet> out(found.begin(), found.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::optional<SeeoViolation> seeo_violation(const Graph& g, const EdgeOrder& order, bool all_cycles) {
    if (static_cast<int>(order.size()) != g.edge_count()) throw BadArgument("edge order size mismatch");
    const ElementOrder eo(order);
    if (!is_chordal(g).chordal()) return SeeoViolation{true, {}, -1};

    std::vector<ElementSet> cycles;
    if (all_cycles) {
        const Matroid m = cycle_matroid(g);
        for (ElementSet c : m.circuits())
            if (c.size() >= 4) cycles.push_back(c);
    } else {
        cycles = four_cycles(g);
    }
    // Triangles as edge triples; a MAT-triple inside S uses two edges of S
    // and a third edge w with w after min of the two.
    auto has_mat_triple = [&](ElementSet s) {
        const auto es = s.elements();
        for (std::size_t i = 0; i < es.size(); ++i)
            for (std::size_t j = i + 1; j < es.size(); ++j) {
                auto [a1, a2] = g.edge(es[i]);
                auto [b1, b2] = g.edge(es[j]);
                int shared = -1, x = -1, y = -1;
                if (a1 == b1) shared = a1, x = a2, y = b2;
                else if (a1 == b2) shared = a1, x = a2, y = b1;
                else if (a2 == b1) shared = a2, x = a1, y = b2;
                else if (a2 == b2) shared = a2, x = a1, y = b1;
                if (shared < 0) continue;
                const int w = g.edge_id(x, y);
                if (w < 0) continue;
                const int lo = eo.precedes(es[i], es[j]) ? es[i] : es[j];
                if (eo.precedes(lo, w)) return true;
            }
        return false;
    };
    for (ElementSet c : cycles) {
        const int lowest = eo.min_of(c);
        std::optional<SeeoViolation> bad;
        c.without(lowest).for_each([&](int e) {
            if (!bad && !has_mat_triple(c.without(e))) bad = SeeoViolation{false, c, e};
        });
        if (bad) return bad;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------

Graph trampoline(int n) {
    if (n < 3) throw BadArgument("trampolines need n >= 3");
    Graph g(2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    for (int i = 0; i < n; ++i) {
        g.add_edge(n + i, i);
        g.add_edge(n + i, (i + 1) % n);
    }
    return g;
}

Graph broken_trampoline(int n) {
    if (n < 3) throw BadArgument("broken trampolines need n >= 3");
    Graph g(2 * n - 1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    for (int i = 0; i + 1 < n; ++i) {
        g.add_edge(n + i, i);
        g.add_edge(n + i, i + 1);
    }
    return g;
}

}  // namespace mobius
