#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace vcut {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> ids);

    /// Sorts and deduplicates.
    static VertexSet from_unsorted(std::vector<Vertex> ids);
    /// Trusts the caller that `ids` is already sorted and unique.
    static VertexSet from_sorted(std::vector<Vertex> ids);
    static VertexSet range(Vertex first, Vertex last);

    [[nodiscard]] std::size_t size() const noexcept { return items_.size(); }
    [[nodiscard]] bool empty() const noexcept { return items_.empty(); }
    [[nodiscard]] bool contains(Vertex v) const noexcept;
    [[nodiscard]] Vertex front() const { return items_.front(); }
    [[nodiscard]] Vertex back() const { return items_.back(); }
    [[nodiscard]] Vertex operator[](std::size_t i) const { return items_[i]; }

    [[nodiscard]] auto begin() const noexcept { return items_.begin(); }
    [[nodiscard]] auto end() const noexcept { return items_.end(); }
    [[nodiscard]] std::span<const Vertex> ids() const noexcept { return items_; }
    [[nodiscard]] const std::vector<Vertex>& vec() const noexcept { return items_; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.items_ <=> b.items_; }

private:
    std::vector<Vertex> items_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& sub, const VertexSet& super);
bool intersects(const VertexSet& a, const VertexSet& b);
std::string to_string(const VertexSet& s);

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
public:
    Graph() = default;
    /// Throws GraphError on self-loops, parallel edges or ids >= n.
    Graph(std::size_t n, std::span<const Edge> edges);

    [[nodiscard]] std::size_t n() const noexcept { return adjacency_.size(); }
    [[nodiscard]] std::size_t m() const noexcept { return edge_count_; }
    [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
    [[nodiscard]] std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
    [[nodiscard]] bool has_edge(Vertex u, Vertex v) const;
    /// Every edge once, as (smaller, larger), lexicographically sorted.
    [[nodiscard]] std::vector<Edge> edges() const;
    [[nodiscard]] VertexSet vertices() const;
    [[nodiscard]] VertexSet neighborhood(Vertex v) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
};

bool is_connected(const Graph& g);
/// Subgraph induced by `keep`; vertex i of the result is keep[i].
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

/// A vertex set together with the connected components left after removing it.
class SidePartition {
public:
    SidePartition(VertexSet cut, std::vector<VertexSet> sides, std::vector<std::int32_t> labels);

    [[nodiscard]] const VertexSet& cut() const noexcept { return cut_; }
    [[nodiscard]] const std::vector<VertexSet>& sides() const noexcept { return sides_; }
    [[nodiscard]] std::size_t side_count() const noexcept { return sides_.size(); }
    /// Index of the side holding v, or nullopt when v is in the cut.
    [[nodiscard]] std::optional<std::size_t> side_of(Vertex v) const;
    /// The side holding v. Throws PreconditionError when v is in the cut.
    [[nodiscard]] const VertexSet& side_containing(Vertex v) const;

private:
    VertexSet cut_;
    std::vector<VertexSet> sides_;
    std::vector<std::int32_t> labels_;
};

/// Sides are ordered by their smallest vertex.
SidePartition components_after_removal(const Graph& g, const VertexSet& removed);
/// Requires removed to be a strict subset of V.
bool is_cut(const Graph& g, const VertexSet& removed);
/// Union of the sides that meet `a`; cut vertices in `a` are ignored.
VertexSet region_of(const SidePartition& p, const VertexSet& a);
/// Vertices of `a` adjacent to some vertex of `p`, excluding `p` itself.
VertexSet neighborhood_in(const Graph& g, const VertexSet& p, const VertexSet& a);
/// N(p) \ p.
VertexSet open_neighborhood(const Graph& g, const VertexSet& p);

}  // namespace vcut
