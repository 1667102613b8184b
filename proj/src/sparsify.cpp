#include "vcut/sparsify.hpp"

#include <algorithm>
#include <set>

#include "vcut/errors.hpp"

namespace vcut {

std::vector<std::size_t> forest_indices(const Graph& g) {
    const std::size_t n = g.n();
    std::vector<std::size_t> label(n, 0);
    std::vector<bool> scanned(n, false);
    // Ordered by (-label, id): begin() is the next vertex to scan.
    std::set<std::pair<std::size_t, Vertex>, std::greater<>> unused;
    auto key = [&](Vertex v) { return std::pair<std::size_t, Vertex>{label[v], static_cast<Vertex>(n - 1 - v)}; };
    for (Vertex v = 0; v < n; ++v) unused.insert(key(v));

    const auto edges = g.edges();
    auto edge_slot = [&](Vertex a, Vertex b) {
        const Edge e{std::min(a, b), std::max(a, b)};
        return static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), e) - edges.begin());
    };
    std::vector<std::size_t> index(edges.size(), 0);
    while (!unused.empty()) {
        const Vertex v = static_cast<Vertex>(n - 1 - unused.begin()->second);
        unused.erase(unused.begin());
        scanned[v] = true;
        for (Vertex w : g.neighbors(v)) {
            if (scanned[w]) continue;
            unused.erase(key(w));
            ++label[w];
            index[edge_slot(v, w)] = label[w];
            unused.insert(key(w));
        }
    }
    return index;
}

Graph nagamochi_ibaraki(const Graph& g, std::size_t k) {
    if (k < 1) throw PreconditionError("sparsification needs k >= 1");
    if (!is_connected(g)) throw PreconditionError("sparsification needs a connected graph");
    const auto edges = g.edges();
    const auto index = forest_indices(g);
    std::vector<Edge> kept;
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (index[i] <= k + 1) kept.push_back(edges[i]);
    return Graph(g.n(), kept);
}

}  // namespace vcut
