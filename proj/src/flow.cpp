#include "vcut/flow.hpp"

#include <algorithm>
#include <deque>

#include "vcut/errors.hpp"

namespace vcut {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

void check_terminals(const Graph& g, const VertexSet& c, const VertexSet& d) {
    if (c.empty() || d.empty()) throw PreconditionError("terminal sets must be nonempty");
    if (intersects(c, d)) throw PreconditionError("terminal sets must be disjoint");
    if (c.back() >= g.n() || d.back() >= g.n()) throw PreconditionError("terminal out of range");
}

}  // namespace

SplitNetwork::SplitNetwork(const Graph& g, const VertexSet& sources, const VertexSet& sinks,
                           std::optional<Edge> skip_edge)
    : in_node_(g.n(), kAbsent) {
    check_terminals(g, sources, sinks);
    for (Vertex v : sources) in_node_[v] = kSource;
    for (Vertex v : sinks) in_node_[v] = kSink;
    std::int32_t next = 2;
    for (Vertex v = 0; v < g.n(); ++v) {
        if (in_node_[v] != kAbsent) continue;
        in_node_[v] = next;
        next += 2;
    }
    adjacency_.resize(static_cast<std::size_t>(next));

    const auto infinite = static_cast<std::uint32_t>(g.n() + 1);
    auto skipped = [&](Vertex a, Vertex b) {
        return skip_edge && ((skip_edge->first == a && skip_edge->second == b) ||
                             (skip_edge->first == b && skip_edge->second == a));
    };
    for (Vertex v = 0; v < g.n(); ++v)
        if (!is_terminal(v)) add_arc(in_node(v), out_node(v), 1);
    for (auto [a, b] : g.edges()) {
        if (skipped(a, b)) continue;
        const auto oa = out_node(a), ob = out_node(b);
        if (oa == ob && is_terminal(a)) continue;  // inside one terminal set
        if ((oa == kSource && ob == kSink) || (oa == kSink && ob == kSource)) throw NoVertexCut();
        add_arc(oa, in_node(b), infinite);
        add_arc(ob, in_node(a), infinite);
    }
}

void SplitNetwork::add_arc(std::int32_t from, std::int32_t to, std::uint32_t cap) {
    auto& fwd = adjacency_[from];
    auto& bwd = adjacency_[to];
    fwd.push_back({to, static_cast<std::int32_t>(bwd.size()), cap});
    bwd.push_back({from, static_cast<std::int32_t>(fwd.size() - 1), 0});
}

std::size_t SplitNetwork::augment(std::size_t limit) {
    const std::size_t count = adjacency_.size();
    std::vector<std::int32_t> parent_node(count);
    std::vector<std::int32_t> parent_arc(count);
    std::deque<std::int32_t> queue;
    while (flow_ < limit) {
        std::fill(parent_node.begin(), parent_node.end(), kAbsent);
        parent_node[kSource] = kSource;
        queue.assign(1, kSource);
        while (!queue.empty() && parent_node[kSink] == kAbsent) {
            const auto x = queue.front();
            queue.pop_front();
            const auto& list = adjacency_[x];
            for (std::size_t i = 0; i < list.size(); ++i) {
                const Arc& a = list[i];
                if (a.residual == 0 || parent_node[a.to] != kAbsent) continue;
                parent_node[a.to] = x;
                parent_arc[a.to] = static_cast<std::int32_t>(i);
                queue.push_back(a.to);
            }
        }
        if (parent_node[kSink] == kAbsent) break;
        // Every source-sink path crosses a unit arc, so the bottleneck is 1.
        for (auto x = kSink; x != kSource; x = parent_node[x]) {
            Arc& a = adjacency_[parent_node[x]][parent_arc[x]];
            a.residual -= 1;
            adjacency_[x][a.rev].residual += 1;
        }
        ++flow_;
    }
    return flow_;
}

std::vector<bool> SplitNetwork::source_reachable() const {
    std::vector<bool> seen(adjacency_.size(), false);
    std::vector<std::int32_t> stack{kSource};
    seen[kSource] = true;
    while (!stack.empty()) {
        const auto x = stack.back();
        stack.pop_back();
        for (const Arc& a : adjacency_[x]) {
            if (a.residual == 0 || seen[a.to]) continue;
            seen[a.to] = true;
            stack.push_back(a.to);
        }
    }
    return seen;
}

VertexSet SplitNetwork::frontier(const std::vector<bool>& marked) const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < in_node_.size(); ++v)
        if (!is_terminal(v) && marked[in_node(v)] && !marked[out_node(v)]) out.push_back(v);
    return VertexSet::from_sorted(std::move(out));
}

VertexCut min_vertex_cut(const Graph& g, const VertexSet& c, const VertexSet& d) {
    SplitNetwork net(g, c, d);
    const auto value = net.augment();
    return {value, net.frontier(net.source_reachable())};
}

VertexSet minimal_cut_toward(const Graph& g, const VertexSet& c, const VertexSet& d) {
    return min_vertex_cut(g, c, d).cut;
}

std::size_t mixed_connectivity(const Graph& g, Vertex u, Vertex v) {
    if (u == v) throw PreconditionError("mixed connectivity needs two distinct vertices");
    if (!g.has_edge(u, v)) return SplitNetwork(g, {u}, {v}).augment();
    SplitNetwork net(g, {u}, {v}, Edge{u, v});
    return 1 + net.augment();
}

Connectivity vertex_connectivity(const Graph& g) {
    const std::size_t n = g.n();
    Connectivity best{n == 0 ? 0 : n - 1, std::nullopt};
    if (n < 2) return best;
    // Order candidates by degree so the first probes already give a tight bound.
    std::vector<Vertex> order(n);
    for (Vertex v = 0; v < n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
    // Some minimum cut misses at least one of any kappa + 1 vertices, and that
    // vertex is separated from a non-neighbour, so probing kappa + 1 sources
    // against all their non-neighbours is exhaustive.
    for (std::size_t i = 0; i < n && i <= best.kappa; ++i) {
        const Vertex x = order[i];
        for (Vertex y = 0; y < n; ++y) {
            if (y == x || g.has_edge(x, y)) continue;
            SplitNetwork net(g, {x}, {y});
            // Stopping one past the bound keeps any smaller answer exact.
            const auto value = net.augment(best.kappa + 1);
            if (value < best.kappa || (value == best.kappa && !best.witness)) {
                best.kappa = value;
                best.witness = net.frontier(net.source_reachable());
            }
        }
    }
    return best;
}

VertexSet PQDag::cut_of(const std::vector<bool>& closed) const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < in_component.size(); ++v) {
        if (in_component[v] == kNone) continue;
        if (closed[in_component[v]] && !closed[out_component[v]]) out.push_back(v);
    }
    return VertexSet::from_sorted(std::move(out));
}

PQDag pq_dag(const SplitNetwork& net) {
    const std::size_t count = net.node_count();
    // Iterative Tarjan over residual arcs.
    std::vector<std::uint32_t> index(count, kNone), low(count, 0), comp(count, kNone);
    std::vector<std::uint32_t> stack;
    std::vector<bool> on_stack(count, false);
    std::vector<std::pair<std::uint32_t, std::size_t>> call;
    std::uint32_t next_index = 0, next_comp = 0;
    for (std::uint32_t root = 0; root < count; ++root) {
        if (index[root] != kNone) continue;
        call.emplace_back(root, 0);
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto& [x, pos] = call.back();
            const auto arcs = net.arcs(static_cast<std::int32_t>(x));
            if (pos < arcs.size()) {
                const auto& a = arcs[pos++];
                if (a.residual == 0) continue;
                const auto y = static_cast<std::uint32_t>(a.to);
                if (index[y] == kNone) {
                    index[y] = low[y] = next_index++;
                    stack.push_back(y);
                    on_stack[y] = true;
                    call.emplace_back(y, 0);
                } else if (on_stack[y]) {
                    low[x] = std::min(low[x], index[y]);
                }
                continue;
            }
            const auto done = x;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
            if (low[done] == index[done]) {
                std::uint32_t y;
                do {
                    y = stack.back();
                    stack.pop_back();
                    on_stack[y] = false;
                    comp[y] = next_comp;
                } while (y != done);
                ++next_comp;
            }
        }
    }

    PQDag dag;
    dag.successors.resize(next_comp);
    dag.component = comp;
    for (std::uint32_t x = 0; x < count; ++x)
        for (const auto& a : net.arcs(static_cast<std::int32_t>(x)))
            if (a.residual > 0 && comp[x] != comp[a.to]) dag.successors[comp[x]].push_back(comp[a.to]);
    for (auto& list : dag.successors) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    dag.source = comp[SplitNetwork::kSource];
    dag.sink = comp[SplitNetwork::kSink];

    // Nodes that can reach the sink are on the sink side of every cut.
    std::vector<std::vector<std::uint32_t>> predecessors(next_comp);
    for (std::uint32_t x = 0; x < next_comp; ++x)
        for (auto y : dag.successors[x]) predecessors[y].push_back(x);
    std::vector<bool> reaches_sink(next_comp, false);
    std::vector<std::uint32_t> todo{dag.sink};
    reaches_sink[dag.sink] = true;
    while (!todo.empty()) {
        auto y = todo.back();
        todo.pop_back();
        for (auto x : predecessors[y])
            if (!reaches_sink[x]) { reaches_sink[x] = true; todo.push_back(x); }
    }

    const std::size_t n = net.vertex_count();
    dag.embedding.assign(n, std::nullopt);
    dag.in_component.assign(n, kNone);
    dag.out_component.assign(n, kNone);
    for (Vertex v = 0; v < n; ++v) {
        if (net.is_terminal(v)) continue;
        dag.in_component[v] = comp[net.in_node(v)];
        dag.out_component[v] = comp[net.out_node(v)];
        if (!reaches_sink[dag.out_component[v]]) dag.embedding[v] = dag.out_component[v];
    }
    return dag;
}

namespace {

/// Nodes reachable from `start` in the DAG, as a mask.
std::vector<bool> descendants(const PQDag& dag, std::uint32_t start) {
    std::vector<bool> seen(dag.size(), false);
    std::vector<std::uint32_t> todo{start};
    seen[start] = true;
    while (!todo.empty()) {
        auto x = todo.back();
        todo.pop_back();
        for (auto y : dag.successors[x])
            if (!seen[y]) { seen[y] = true; todo.push_back(y); }
    }
    return seen;
}

/// Topological order with successors before predecessors.
std::vector<std::uint32_t> sinks_first_order(const PQDag& dag) {
    std::vector<std::uint32_t> order;
    std::vector<std::uint8_t> state(dag.size(), 0);
    std::vector<std::pair<std::uint32_t, std::size_t>> call;
    for (std::uint32_t root = 0; root < dag.size(); ++root) {
        if (state[root]) continue;
        call.emplace_back(root, 0);
        state[root] = 1;
        while (!call.empty()) {
            auto& [x, pos] = call.back();
            if (pos < dag.successors[x].size()) {
                auto y = dag.successors[x][pos++];
                if (!state[y]) { state[y] = 1; call.emplace_back(y, 0); }
                continue;
            }
            order.push_back(x);
            call.pop_back();
        }
    }
    return order;
}

}  // namespace

std::uint64_t for_each_closure(const PQDag& dag,
                               const std::function<bool(const std::vector<bool>&)>& visit) {
    std::vector<bool> in_set = descendants(dag, dag.source);
    if (in_set[dag.sink]) return 0;

    // Free nodes: neither forced in (below the source) nor forced out (above the sink).
    std::vector<bool> forced_out(dag.size(), false);
    {
        std::vector<std::vector<std::uint32_t>> preds(dag.size());
        for (std::uint32_t x = 0; x < dag.size(); ++x)
            for (auto y : dag.successors[x]) preds[y].push_back(x);
        std::vector<std::uint32_t> todo{dag.sink};
        forced_out[dag.sink] = true;
        while (!todo.empty()) {
            auto y = todo.back();
            todo.pop_back();
            for (auto x : preds[y])
                if (!forced_out[x]) { forced_out[x] = true; todo.push_back(x); }
        }
    }
    std::vector<std::uint32_t> free_nodes;
    for (auto x : sinks_first_order(dag))
        if (!in_set[x] && !forced_out[x]) free_nodes.push_back(x);

    std::uint64_t visited = 0;
    bool stop = false;
    std::function<void(std::size_t)> descend = [&](std::size_t i) {
        if (stop) return;
        if (i == free_nodes.size()) {
            ++visited;
            if (!visit(in_set)) stop = true;
            return;
        }
        const auto x = free_nodes[i];
        descend(i + 1);
        const bool allowed = std::all_of(dag.successors[x].begin(), dag.successors[x].end(),
                                         [&](std::uint32_t y) { return bool(in_set[y]); });
        if (allowed && !stop) {
            in_set[x] = true;
            descend(i + 1);
            in_set[x] = false;
        }
    };
    descend(0);
    return visited;
}

std::uint64_t count_closures(const PQDag& dag) {
    return for_each_closure(dag, [](const std::vector<bool>&) { return true; });
}

std::vector<std::optional<VertexSet>> bulk_small_cuts(const Graph& g, const VertexSet& c,
                                                      const VertexSet& d, std::size_t kappa) {
    SplitNetwork net(g, c, d);
    if (net.augment(kappa + 1) != kappa) throw NotMinimumConfiguration();
    const PQDag dag = pq_dag(net);

    // One pass in sinks-first order gives every node its descendant set.
    const std::size_t words = (dag.size() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> below(dag.size(), std::vector<std::uint64_t>(words, 0));
    for (auto x : sinks_first_order(dag)) {
        auto& mine = below[x];
        mine[x / 64] |= std::uint64_t{1} << (x % 64);
        for (auto y : dag.successors[x])
            for (std::size_t w = 0; w < words; ++w) mine[w] |= below[y][w];
    }
    auto has = [&](const std::vector<std::uint64_t>& bits, std::uint32_t x) {
        return (bits[x / 64] >> (x % 64)) & 1U;
    };

    std::vector<std::optional<VertexSet>> out(g.n());
    std::vector<std::uint64_t> closure(words);
    for (Vertex v = 0; v < g.n(); ++v) {
        if (!dag.embedding[v]) continue;
        const auto& from_v = below[*dag.embedding[v]];
        const auto& from_source = below[dag.source];
        for (std::size_t w = 0; w < words; ++w) closure[w] = from_v[w] | from_source[w];
        std::vector<Vertex> cut;
        for (Vertex x = 0; x < g.n(); ++x) {
            if (dag.in_component[x] == kNone) continue;
            if (has(closure, dag.in_component[x]) && !has(closure, dag.out_component[x]))
                cut.push_back(x);
        }
        out[v] = VertexSet::from_sorted(std::move(cut));
    }
    return out;
}

}  // namespace vcut
