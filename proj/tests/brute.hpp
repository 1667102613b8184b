// Exhaustive reference computations used to freeze expected values.
// Everything here is exponential and only meant for graphs with n <= 16.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "vcut/graph.hpp"

namespace brute {

using vcut::Graph;
using vcut::Vertex;
using vcut::VertexSet;

/// Calls fn with every k-subset of `pool` (in lexicographic order).
inline void for_each_subset(const std::vector<Vertex>& pool, std::size_t k,
                            const std::function<void(const VertexSet&)>& fn) {
    if (k > pool.size()) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::vector<Vertex> pick;
        pick.reserve(k);
        for (auto i : idx) pick.push_back(pool[i]);
        fn(VertexSet::from_unsorted(pick));
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == pool.size() - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// True when removing `x` (and optionally one edge) leaves no c-d path.
inline bool separates(const Graph& g, const VertexSet& x, const VertexSet& c, const VertexSet& d,
                      std::optional<vcut::Edge> skip = std::nullopt) {
    std::vector<char> seen(g.n(), 0);
    std::vector<Vertex> stack;
    for (Vertex v : c)
        if (!x.contains(v)) { seen[v] = 1; stack.push_back(v); }
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        if (d.contains(v)) return false;
        for (Vertex w : g.neighbors(v)) {
            if (seen[w] || x.contains(w)) continue;
            if (skip && ((skip->first == v && skip->second == w) || (skip->first == w && skip->second == v)))
                continue;
            seen[w] = 1;
            stack.push_back(w);
        }
    }
    return true;
}

inline std::vector<Vertex> outside(const Graph& g, const VertexSet& c, const VertexSet& d) {
    std::vector<Vertex> pool;
    for (Vertex v = 0; v < g.n(); ++v)
        if (!c.contains(v) && !d.contains(v)) pool.push_back(v);
    return pool;
}

/// All minimum vertex sets separating c from d (empty result when c, d touch).
struct Separators {
    std::size_t size = 0;
    std::vector<VertexSet> sets;
};

inline Separators min_separators(const Graph& g, const VertexSet& c, const VertexSet& d,
                                 std::optional<vcut::Edge> skip = std::nullopt) {
    const auto pool = outside(g, c, d);
    for (std::size_t k = 0; k <= pool.size(); ++k) {
        Separators out{k, {}};
        for_each_subset(pool, k, [&](const VertexSet& x) {
            if (separates(g, x, c, d, skip)) out.sets.push_back(x);
        });
        if (!out.sets.empty()) return out;
    }
    return {};
}

/// Mixed local connectivity straight from the definition.
inline std::size_t mixed(const Graph& g, Vertex u, Vertex v) {
    if (!g.has_edge(u, v)) return min_separators(g, {u}, {v}).size;
    return 1 + min_separators(g, {u}, {v}, vcut::Edge{u, v}).size;
}

/// Smallest disconnecting set size and all sets of that size.
inline Separators all_min_cuts(const Graph& g) {
    std::vector<Vertex> pool(g.n());
    for (Vertex v = 0; v < g.n(); ++v) pool[v] = v;
    for (std::size_t k = 0; k + 2 <= g.n(); ++k) {
        Separators out{k, {}};
        for_each_subset(pool, k, [&](const VertexSet& x) {
            if (vcut::components_after_removal(g, x).side_count() >= 2) out.sets.push_back(x);
        });
        if (!out.sets.empty()) return out;
    }
    return {g.n() - 1, {}};
}

/// Number of minimum source-sink cuts of the split network, counted from the
/// vertex side: every minimum separator X contributes one cut per placement of
/// the components of G - X that touch neither terminal set. A component of one
/// vertex has three placements (both split nodes on one side, or straddling
/// backwards), a larger one has two.
inline std::uint64_t split_network_min_cut_count(const Graph& g, const VertexSet& c, const VertexSet& d) {
    const auto seps = min_separators(g, c, d);
    std::uint64_t total = 0;
    for (const auto& x : seps.sets) {
        auto p = vcut::components_after_removal(g, x);
        std::uint64_t ways = 1;
        for (const auto& side : p.sides()) {
            const bool touches = intersects(side, c) || intersects(side, d);
            if (!touches) ways *= side.size() == 1 ? 3 : 2;
        }
        total += ways;
    }
    return total;
}

}  // namespace brute
