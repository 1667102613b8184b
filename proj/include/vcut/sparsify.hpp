#pragma once

#include <cstddef>
#include <vector>

#include "vcut/graph.hpp"

namespace vcut {

/// Scan-first-search forest index of every edge, in the order of g.edges().
/// Vertices are scanned by largest label first, ties broken by smallest id.
std::vector<std::size_t> forest_indices(const Graph& g);

/// Keeps the edges of the first k + 1 forests. The result has at most
/// (k + 1) n edges, min(kappa(u, v), k + 1) is unchanged for every pair under
/// the mixed definition, and G - X has the same components as the result
/// minus X whenever |X| <= k.
Graph nagamochi_ibaraki(const Graph& g, std::size_t k);

}  // namespace vcut
