#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "vcut/graph.hpp"

namespace vcut {

struct VertexCut {
    std::size_t value = 0;
    VertexSet cut;
};

/// Unit-vertex-capacity flow network: each vertex outside the terminal sets
/// becomes in -> out with capacity 1, each edge becomes two arcs of capacity
/// n + 1, and the source / sink sets are contracted to single nodes.
class SplitNetwork {
public:
    static constexpr std::int32_t kSource = 0;
    static constexpr std::int32_t kSink = 1;
    static constexpr std::int32_t kAbsent = -1;

    struct Arc {
        std::int32_t to;
        std::int32_t rev;  // index of the paired arc in adjacency_[to]
        std::uint32_t residual;
    };

    /// Throws PreconditionError for empty or overlapping terminal sets and
    /// NoVertexCut when a source vertex is adjacent to a sink vertex.
    /// `skip_edge`, when set, is left out of the network.
    SplitNetwork(const Graph& g, const VertexSet& sources, const VertexSet& sinks,
                 std::optional<Edge> skip_edge = std::nullopt);

    /// Augments along shortest residual paths until no path remains or the
    /// flow reaches `limit`. Returns the total flow value.
    std::size_t augment(std::size_t limit = std::numeric_limits<std::size_t>::max());

    [[nodiscard]] std::size_t flow_value() const noexcept { return flow_; }
    [[nodiscard]] std::size_t node_count() const noexcept { return adjacency_.size(); }
    [[nodiscard]] std::span<const Arc> arcs(std::int32_t node) const { return adjacency_[node]; }
    [[nodiscard]] std::int32_t in_node(Vertex v) const { return in_node_[v]; }
    [[nodiscard]] std::int32_t out_node(Vertex v) const { return in_node_[v] < 2 ? in_node_[v] : in_node_[v] + 1; }
    [[nodiscard]] std::size_t vertex_count() const noexcept { return in_node_.size(); }
    [[nodiscard]] bool is_terminal(Vertex v) const { return in_node_[v] < 2; }

    /// Nodes reachable from the source in the residual graph.
    [[nodiscard]] std::vector<bool> source_reachable() const;
    /// Vertices whose in-node is marked but whose out-node is not.
    [[nodiscard]] VertexSet frontier(const std::vector<bool>& marked) const;

private:
    void add_arc(std::int32_t from, std::int32_t to, std::uint32_t cap);

    std::vector<std::vector<Arc>> adjacency_;
    std::vector<std::int32_t> in_node_;  // kSource / kSink for terminals
    std::size_t flow_ = 0;
};

/// Maximum number of internally disjoint c-d paths, with the minimum cut
/// whose c-region is smallest.
VertexCut min_vertex_cut(const Graph& g, const VertexSet& c, const VertexSet& d);

/// The unique minimum c-d vertex cut whose region around c is contained in
/// the c-region of every other minimum c-d cut.
VertexSet minimal_cut_toward(const Graph& g, const VertexSet& c, const VertexSet& d);

/// Local connectivity counting a direct edge as one unit: for adjacent pairs
/// this is 1 + kappa(u, v) in g minus the edge.
std::size_t mixed_connectivity(const Graph& g, Vertex u, Vertex v);

struct Connectivity {
    std::size_t kappa = 0;
    std::optional<VertexSet> witness;  // absent for complete graphs
};

/// Vertex connectivity of g (n - 1 for complete graphs) with a minimum cut.
Connectivity vertex_connectivity(const Graph& g);

/// Residual graph of a maximum flow with strongly connected components
/// contracted. Closed node sets that hold the source and miss the sink are
/// exactly the minimum source-sink cuts of the network.
struct PQDag {
    std::vector<std::vector<std::uint32_t>> successors;
    std::uint32_t source = 0;
    std::uint32_t sink = 0;
    /// DAG node of each network node (or UINT32_MAX for missing nodes).
    std::vector<std::uint32_t> component;
    /// DAG node of out(v) for non-terminal v; nullopt when that node can
    /// reach the sink, i.e. v is never strictly on the source side.
    std::vector<std::optional<std::uint32_t>> embedding;
    std::vector<std::uint32_t> in_component;   // per vertex, UINT32_MAX for terminals
    std::vector<std::uint32_t> out_component;  // per vertex, UINT32_MAX for terminals

    [[nodiscard]] std::size_t size() const noexcept { return successors.size(); }
    /// Vertex cut of a closed set given as a membership mask over DAG nodes.
    [[nodiscard]] VertexSet cut_of(const std::vector<bool>& closed) const;
};

/// Requires `net` to carry a maximum flow.
PQDag pq_dag(const SplitNetwork& net);

/// Calls `visit` with every closed set that holds the source and misses the
/// sink, stopping early once `visit` returns false. Returns the number visited.
std::uint64_t for_each_closure(const PQDag& dag,
                               const std::function<bool(const std::vector<bool>&)>& visit);

std::uint64_t count_closures(const PQDag& dag);

/// For every vertex outside c and d, the cut of the smallest closed set that
/// contains its out-node; nullopt for terminals and for vertices that cannot
/// sit strictly on the source side of any minimum cut.
/// Throws NotMinimumConfiguration when the c-d flow value differs from kappa.
std::vector<std::optional<VertexSet>> bulk_small_cuts(const Graph& g, const VertexSet& c,
                                                      const VertexSet& d, std::size_t kappa);

}  // namespace vcut
