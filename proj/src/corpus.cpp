#include "mobius/corpus.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "mobius/error.hpp"

namespace mobius {

namespace {

// Stable color refinement; colors are ranks of sorted signatures.
std::vector<int> refine(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) color[v] = g.neighbors(v).size();
    for (int round = 0; round < n; ++round) {
        std::vector<std::pair<int, std::vector<int>>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].first = color[v];
            g.neighbors(v).for_each([&](int u) { sig[v].second.push_back(color[u]); });
            std::sort(sig[v].second.begin(), sig[v].second.end());
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> next(n);
        for (int v = 0; v < n; ++v)
            next[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
        const bool stable = std::set<int>(next.begin(), next.end()).size() == std::set<int>(color.begin(), color.end()).size();
        color = next;
        if (stable) break;
    }
    return color;
}

struct CodeSearch {
    const Graph& g;
    int n;
    std::vector<int> slot_color;  // color required at each position
    std::vector<int> color;
    std::vector<int> placed;
    std::uint64_t best = ~std::uint64_t{0};

    int bit(int i, int j) const {
        // pairs (i, j), i < j, ordered by j then i; earlier pairs are more significant
        return 63 - (j * (j - 1) / 2 + i);
    }

    void run(int pos, std::uint64_t code, ElementSet used) {
        if (pos == n) {
            best = std::min(best, code);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used.contains(v) || color[v] != slot_color[pos]) continue;
            std::uint64_t c = code;
            for (int i = 0; i < pos; ++i)
                if (g.adjacent(placed[i], v)) c |= std::uint64_t{1} << bit(i, pos);
            // codes only gain bits at less significant places from here on
            const int low = pos + 1 < n ? bit(0, pos + 1) + 1 : 0;
            const std::uint64_t mask = low >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << low) - 1;
            if ((c & ~mask) > (best & ~mask)) continue;
            placed[pos] = v;
            run(pos + 1, c, used.with(v));
        }
    }
};

bool connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    ElementSet seen = ElementSet::single(0), frontier = seen;
    while (!frontier.empty()) {
        ElementSet next;
        frontier.for_each([&](int v) { next |= g.neighbors(v); });
        frontier = next - seen;
        seen |= next;
    }
    return seen == g.vertices();
}

Graph random_chordal(int n, std::mt19937_64& rng) {
    Graph g(n);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double keep = 0.35 + 0.4 * unit(rng);
    for (int v = 1; v < n; ++v) {
        const int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
        ElementSet clique = ElementSet::single(u);
        std::vector<int> cand = g.neighbors(u).elements();
        std::shuffle(cand.begin(), cand.end(), rng);
        for (int w : cand)
            if (unit(rng) < keep && (g.neighbors(w) & clique) == clique) clique.insert(w);
        clique.for_each([&](int w) { g.add_edge(w, v); });
    }
    return g;
}

Graph random_gnp(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double p = 0.25 + 0.25 * unit(rng);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (unit(rng) < p) g.add_edge(u, v);
    return g;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 10) throw SizeLimit("canonical_code is limited to 10 vertices");
    CodeSearch s{g, n, {}, refine(g), std::vector<int>(n)};
    s.slot_color = s.color;
    std::sort(s.slot_color.begin(), s.slot_color.end());
    s.run(0, 0, ElementSet());
    return s.best;
}

std::vector<Graph> connected_graphs(int max_vertices) {
    if (max_vertices > 8) throw SizeLimit("connected_graphs is limited to 8 vertices");
    std::vector<Graph> out;
    if (max_vertices < 1) return out;
    std::vector<Graph> level{Graph(1)};
    out.push_back(level.front());
    for (int n = 2; n <= max_vertices; ++n) {
        std::map<std::uint64_t, Graph> found;
        for (const Graph& h : level) {
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
                Graph g(n, h.edges());
                ElementSet(mask).for_each([&](int u) { g.add_edge(u, n - 1); });
                found.try_emplace(canonical_code(g), std::move(g));
            }
        }
        level.clear();
        for (auto& [code, g] : found) level.push_back(std::move(g));
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::vector<Graph> random_graph_corpus(const RandomCorpusOptions& o) {
    if (o.min_vertices < 1 || o.max_vertices < o.min_vertices || o.max_vertices > 64)
        throw BadArgument("bad vertex range for the random corpus");
    std::mt19937_64 rng(o.seed);
    std::vector<Graph> out;
    std::uniform_int_distribution<int> size(o.min_vertices, o.max_vertices);
    std::size_t attempts = 0;
    while (static_cast<int>(out.size()) < o.count) {
        if (++attempts > 1000 * static_cast<std::size_t>(o.count) + 1000)
            throw SizeLimit("random corpus constraints are too tight");
        const int n = size(rng);
        Graph g = out.size() % 2 == 0 ? random_gnp(n, rng) : random_chordal(n, rng);
        if (g.edge_count() > o.max_edges || !connected(g)) continue;
        out.push_back(std::move(g));
    }
    return out;
}

Graph random_strongly_chordal(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        Graph g = random_chordal(n, rng);
        if (is_strongly_chordal(g)) return g;
    }
    throw SizeLimit("no strongly chordal sample found");
}

}  // namespace mobius
