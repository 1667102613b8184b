#include "vcut/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "vcut/errors.hpp"

namespace vcut {

VertexSet::VertexSet(std::initializer_list<Vertex> ids) : items_(ids) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

VertexSet VertexSet::from_unsorted(std::vector<Vertex> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return from_sorted(std::move(ids));
}

VertexSet VertexSet::from_sorted(std::vector<Vertex> ids) {
    VertexSet s;
    s.items_ = std::move(ids);
    return s;
}

VertexSet VertexSet::range(Vertex first, Vertex last) {
    std::vector<Vertex> ids(last > first ? last - first : 0);
    std::iota(ids.begin(), ids.end(), first);
    return from_sorted(std::move(ids));
}

bool VertexSet::contains(Vertex v) const noexcept {
    return std::binary_search(items_.begin(), items_.end(), v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    std::vector<Vertex> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet::from_sorted(std::move(out));
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet::from_sorted(std::move(out));
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    std::vector<Vertex> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet::from_sorted(std::move(out));
}

bool is_subset(const VertexSet& sub, const VertexSet& super) {
    return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

bool intersects(const VertexSet& a, const VertexSet& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) return true;
        if (*i < *j) ++i; else ++j;
    }
    return false;
}

std::string to_string(const VertexSet& s) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << ']';
    return os.str();
}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) throw GraphError("edge endpoint out of range");
        if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (Vertex v = 0; v < n; ++v) {
        auto& list = adjacency_[v];
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end())
            throw GraphError("parallel edge at vertex " + std::to_string(v));
    }
    edge_count_ = edges.size();
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    const auto& list = adjacency_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < n(); ++u)
        for (Vertex v : adjacency_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

VertexSet Graph::vertices() const { return VertexSet::range(0, static_cast<Vertex>(n())); }

VertexSet Graph::neighborhood(Vertex v) const { return VertexSet::from_sorted(adjacency_[v]); }

bool is_connected(const Graph& g) {
    if (g.n() == 0) return true;
    return components_after_removal(g, {}).side_count() == 1;
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
    std::vector<std::int64_t> local(g.n(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) local[keep[i]] = static_cast<std::int64_t>(i);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (Vertex w : g.neighbors(keep[i]))
            if (local[w] > static_cast<std::int64_t>(i))
                edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(local[w]));
    return Graph(keep.size(), edges);
}

SidePartition::SidePartition(VertexSet cut, std::vector<VertexSet> sides,
                             std::vector<std::int32_t> labels)
    : cut_(std::move(cut)), sides_(std::move(sides)), labels_(std::move(labels)) {}

std::optional<std::size_t> SidePartition::side_of(Vertex v) const {
    if (labels_[v] < 0) return std::nullopt;
    return static_cast<std::size_t>(labels_[v]);
}

const VertexSet& SidePartition::side_containing(Vertex v) const {
    auto s = side_of(v);
    if (!s) throw PreconditionError("vertex " + std::to_string(v) + " lies in the cut");
    return sides_[*s];
}

SidePartition components_after_removal(const Graph& g, const VertexSet& removed) {
    const std::size_t n = g.n();
    std::vector<std::int32_t> label(n, -2);
    for (Vertex v : removed) {
        if (v >= n) throw PreconditionError("cut vertex out of range");
        label[v] = -1;
    }
    std::vector<VertexSet> sides;
    std::vector<Vertex> stack;
    for (Vertex start = 0; start < n; ++start) {
        if (label[start] != -2) continue;
        const auto id = static_cast<std::int32_t>(sides.size());
        std::vector<Vertex> members{start};
        label[start] = id;
        stack.push_back(start);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v)) {
                if (label[w] != -2) continue;
                label[w] = id;
                members.push_back(w);
                stack.push_back(w);
            }
        }
        sides.push_back(VertexSet::from_unsorted(std::move(members)));
    }
    return SidePartition(removed, std::move(sides), std::move(label));
}

bool is_cut(const Graph& g, const VertexSet& removed) {
    if (removed.size() >= g.n()) throw PreconditionError("a cut must be a strict subset of V");
    return components_after_removal(g, removed).side_count() >= 2;
}

VertexSet region_of(const SidePartition& p, const VertexSet& a) {
    VertexSet out;
    std::vector<bool> taken(p.side_count(), false);
    for (Vertex v : a) {
        auto s = p.side_of(v);
        if (!s || taken[*s]) continue;
        taken[*s] = true;
        out = set_union(out, p.sides()[*s]);
    }
    return out;
}

VertexSet neighborhood_in(const Graph& g, const VertexSet& p, const VertexSet& a) {
    std::vector<Vertex> out;
    for (Vertex v : p)
        for (Vertex w : g.neighbors(v))
            if (a.contains(w) && !p.contains(w)) out.push_back(w);
    return VertexSet::from_unsorted(std::move(out));
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& p) {
    std::vector<Vertex> out;
    for (Vertex v : p)
        for (Vertex w : g.neighbors(v))
            if (!p.contains(w)) out.push_back(w);
    return VertexSet::from_unsorted(std::move(out));
}

}  // namespace vcut
