#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "vcut/graph.hpp"

namespace vcut {

/// A graph read from text, with the original label of every dense id.
struct LabeledGraph {
    Graph graph;
    std::vector<std::string> labels;

    [[nodiscard]] Vertex id_of(const std::string& label) const;
};

/// Reads `u v` lines (`#` starts a comment). Labels that are all non-negative
/// integers keep their numeric order, so files already using 0..n-1 map to
/// themselves; other labels follow them in lexicographic order.
/// Throws GraphError on malformed lines, self-loops, parallel edges or a
/// disconnected result.
LabeledGraph read_edge_list(std::istream& in);
LabeledGraph load_edge_list(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g, const std::vector<std::string>& labels);

}  // namespace vcut
