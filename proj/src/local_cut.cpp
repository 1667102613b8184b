#include "vcut/local_cut.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "vcut/errors.hpp"
#include "vcut/flow.hpp"

namespace vcut {

std::size_t balance_threshold(std::size_t n, std::size_t kappa) {
    return n > kappa ? (n - kappa + 1) / 2 : 0;
}

namespace {

using Node = std::uint64_t;
constexpr Node in_of(Vertex v) { return Node{2} * v; }
constexpr Node out_of(Vertex v) { return Node{2} * v + 1; }
constexpr Vertex vertex_of(Node x) { return static_cast<Vertex>(x / 2); }
constexpr bool is_out(Node x) { return (x & 1U) != 0; }

[[noreturn]] void not_kappa_connected() {
    throw PreconditionError("graph is not kappa-connected");
}

/// Component of x in G minus `cut`.
VertexSet component_of(const Graph& g, const VertexSet& cut, Vertex x) {
    std::unordered_set<Vertex> seen{x};
    std::vector<Vertex> stack{x}, members{x};
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v)) {
            if (cut.contains(w) || !seen.insert(w).second) continue;
            members.push_back(w);
            stack.push_back(w);
        }
    }
    return VertexSet::from_unsorted(std::move(members));
}

/// Flow grown from x over the split graph, touching only what it explores.
/// Each round searches the residual graph until `budget` arcs have been
/// examined; if the search dies out first its reach is closed and its
/// frontier separates x from everything unexplored. Otherwise one unit is
/// pushed to the head of a uniformly sampled examined arc.
class LocalProbe {
public:
    LocalProbe(const Graph& g, Vertex x, std::size_t budget, std::mt19937_64& rng)
        : g_(g), x_(x), budget_(budget), rng_(rng) {}

    /// Frontier vertices of a closed reach after at most `kappa` pushes.
    std::optional<VertexSet> run(std::size_t kappa) {
        std::optional<Node> sink;
        for (std::size_t round = 0; round <= kappa; ++round) {
            const bool closed = search();
            if (closed) {
                if (auto cut = frontier(); !cut.empty()) return cut;
            }
            if (round == kappa || heads_.empty()) break;
            // A search that swallows the whole graph has no locality left to
            // exploit; from then on every unit goes to one sampled sink, which
            // turns the probe into an ordinary x-y flow.
            if (closed && !sink) {
                sink = sample_far_head();
                if (!sink) break;
            }
            push_to(sink && parent_.count(*sink) ? *sink : sample_head());
        }
        return std::nullopt;
    }

private:
    [[nodiscard]] std::uint32_t edge_flow(Vertex a, Vertex b) const {
        auto it = edge_flow_.find((Node{a} << 32) | b);
        return it == edge_flow_.end() ? 0 : it->second;
    }

    Node sample_head() {
        std::uniform_int_distribution<std::size_t> pick(0, heads_.size() - 1);
        return heads_[pick(rng_)];
    }

    /// A sampled head whose vertex is neither x nor adjacent to it; only
    /// such a vertex can end up across a cut from x.
    std::optional<Node> sample_far_head() {
        std::vector<Node> far;
        for (Node h : heads_) {
            const Vertex v = vertex_of(h);
            if (v != x_ && !g_.has_edge(x_, v)) far.push_back(h);
        }
        if (far.empty()) return std::nullopt;
        std::uniform_int_distribution<std::size_t> pick(0, far.size() - 1);
        return far[pick(rng_)];
    }

    template <typename Fn>
    void for_each_residual(Node node, Fn&& fn) const {
        const Vertex v = vertex_of(node);
        if (is_out(node)) {
            for (Vertex w : g_.neighbors(v))
                if (w != x_) fn(in_of(w));
            if (v != x_ && used_.count(v)) fn(in_of(v));
            return;
        }
        if (!used_.count(v)) fn(out_of(v));
        for (Vertex u : g_.neighbors(v))
            if (u != x_ && edge_flow(u, v) > 0) fn(out_of(u));
    }

    /// True when the search closed off before the budget ran out.
    bool search() {
        parent_.clear();
        heads_.clear();
        const Node start = out_of(x_);
        parent_[start] = start;
        std::vector<Node> stack{start};
        std::size_t examined = 0;
        bool exhausted = false;
        while (!stack.empty() && !exhausted) {
            const Node node = stack.back();
            stack.pop_back();
            for_each_residual(node, [&](Node next) {
                if (exhausted) return;
                heads_.push_back(next);
                if (parent_.emplace(next, node).second) stack.push_back(next);
                if (++examined >= budget_) exhausted = true;
            });
        }
        return !exhausted;
    }

    void push_to(Node end) {
        for (Node child = end; parent_.at(child) != child;) {
            const Node from = parent_.at(child);
            const Vertex a = vertex_of(from), b = vertex_of(child);
            if (a == b) {
                if (is_out(child)) used_.insert(a); else used_.erase(a);
            } else if (is_out(from)) {
                ++edge_flow_[(Node{a} << 32) | b];
            } else {
                auto it = edge_flow_.find((Node{b} << 32) | a);
                if (--it->second == 0) edge_flow_.erase(it);
            }
            child = from;
        }
    }

    [[nodiscard]] VertexSet frontier() const {
        std::vector<Vertex> cut;
        std::size_t reached = 1;  // x itself
        for (const auto& [node, from] : parent_) {
            const Vertex v = vertex_of(node);
            if (v == x_) continue;
            if (is_out(node)) ++reached;
            else if (!parent_.count(out_of(v))) cut.push_back(v);
        }
        if (reached + cut.size() >= g_.n()) return {};
        return VertexSet::from_unsorted(std::move(cut));
    }

    const Graph& g_;
    Vertex x_;
    std::size_t budget_;
    std::mt19937_64& rng_;
    std::unordered_set<Vertex> used_;
    std::unordered_map<Node, std::uint32_t> edge_flow_;
    std::unordered_map<Node, Node> parent_;
    std::vector<Node> heads_;
};

std::optional<SmallCut> probe_once(const Graph& g, Vertex x, std::size_t scale, std::size_t kappa,
                                   std::mt19937_64& rng, const FindSmallOptions& opt) {
    // A side of `scale` vertices spans at most scale * (scale + kappa) edges.
    const std::size_t budget = 2 * opt.budget_factor * (kappa + 1) * scale * (scale + kappa);
    LocalProbe probe(g, x, budget, rng);
    auto frontier = probe.run(kappa);
    if (!frontier || frontier->empty()) return std::nullopt;
    auto side = component_of(g, *frontier, x);
    auto cut = open_neighborhood(g, side);
    if (side.size() + cut.size() >= g.n()) return std::nullopt;
    if (cut.size() < kappa) not_kappa_connected();
    return SmallCut{std::move(cut), std::move(side)};
}

/// Pulls a found cut inward to the containment-minimal one, with a max-flow
/// confined to the found side, its cut and their outer boundary.
SmallCut tighten(const Graph& g, Vertex x, const SmallCut& found, std::size_t kappa) {
    const auto inner = set_union(found.side, found.cut);
    const auto boundary = open_neighborhood(g, inner);
    const auto keep = set_union(inner, boundary);
    const Graph local = induced_subgraph(g, keep);
    auto to_local = [&](Vertex v) {
        return static_cast<Vertex>(std::lower_bound(keep.begin(), keep.end(), v) - keep.begin());
    };
    std::vector<Vertex> sinks;
    for (Vertex b : boundary) sinks.push_back(to_local(b));
    const auto best = min_vertex_cut(local, {to_local(x)}, VertexSet::from_sorted(std::move(sinks)));
    if (best.value < kappa) not_kappa_connected();
    std::vector<Vertex> cut;
    for (Vertex v : best.cut) cut.push_back(keep[v]);
    auto cut_set = VertexSet::from_sorted(std::move(cut));
    auto side = component_of(g, cut_set, x);
    return {std::move(cut_set), std::move(side)};
}

void check_returned(const Graph& g, const SmallCut& c, std::size_t kappa, std::size_t bound) {
    if (c.cut.size() != kappa || c.side.size() > bound || !is_cut(g, c.cut))
        throw std::logic_error("local search produced an invalid cut");
}

struct RoundResult {
    std::optional<SmallCut> cut;
    bool settled = false;  // true when the answer for the full bound is known
};

RoundResult search_round(const Graph& g, Vertex x, std::size_t scale, std::size_t bound,
                         std::size_t kappa, std::mt19937_64& rng, const FindSmallOptions& opt) {
    const std::size_t threshold = balance_threshold(g.n(), kappa);
    const std::size_t reps = opt.repetitions
                                 ? opt.repetitions
                                 : static_cast<std::size_t>(std::ceil(std::log2(double(g.n()) + 1))) + 2;
    for (std::size_t rep = 0; rep < reps; ++rep) {
        auto found = probe_once(g, x, scale, kappa, rng, opt);
        if (!found || found->side.size() > threshold) continue;
        // Below the threshold the minimal side is unique and inside every
        // other qualifying side, so one tightening settles the question.
        auto minimal = tighten(g, x, *found, kappa);
        if (minimal.side.size() <= bound) {
            check_returned(g, minimal, kappa, bound);
            return {std::move(minimal), true};
        }
        return {std::nullopt, true};
    }
    return {};
}

std::vector<std::size_t> doubling_scales(std::size_t bound) {
    std::vector<std::size_t> out;
    for (std::size_t s = 1; s < bound; s *= 2) out.push_back(s);
    if (bound > 0) out.push_back(bound);
    return out;
}

}  // namespace

std::optional<SmallCut> find_small(const Graph& g, Vertex x, std::size_t s, std::size_t kappa,
                                   std::mt19937_64& rng, const FindSmallOptions& opt) {
    if (x >= g.n()) throw PreconditionError("vertex out of range");
    if (s > balance_threshold(g.n(), kappa)) throw PreconditionError("side bound exceeds ceil((n-kappa)/2)");
    for (std::size_t scale : doubling_scales(s)) {
        auto round = search_round(g, x, scale, s, kappa, rng, opt);
        if (round.settled) return round.cut;
    }
    return std::nullopt;
}

std::optional<SmallCut> find_small_reference(const Graph& g, Vertex x, std::size_t s,
                                             std::size_t kappa) {
    if (x >= g.n()) throw PreconditionError("vertex out of range");
    if (s > balance_threshold(g.n(), kappa)) throw PreconditionError("side bound exceeds ceil((n-kappa)/2)");
    std::optional<SmallCut> best;
    for (Vertex y = 0; y < g.n(); ++y) {
        if (y == x || g.has_edge(x, y)) continue;
        auto found = min_vertex_cut(g, {x}, {y});
        if (found.value < kappa) not_kappa_connected();
        if (found.value != kappa) continue;
        auto side = component_of(g, found.cut, x);
        if (side.size() > s || (best && best->side.size() <= side.size())) continue;
        best = SmallCut{std::move(found.cut), std::move(side)};
    }
    return best;
}

std::optional<Vertex> CliqueOverlay::local(Vertex original) const {
    if (original >= from_original.size() || from_original[original] < 0) return std::nullopt;
    return static_cast<Vertex>(from_original[original]);
}

VertexSet CliqueOverlay::to_original_set(const VertexSet& local_ids) const {
    std::vector<Vertex> out;
    out.reserve(local_ids.size());
    for (Vertex v : local_ids) out.push_back(to_original[v]);
    return VertexSet::from_unsorted(std::move(out));
}

CliqueOverlay build_overlay(const Graph& g, const SidePartition& cut, std::size_t side_index) {
    if (side_index >= cut.side_count()) throw PreconditionError("side index out of range");
    const VertexSet keep = set_difference(g.vertices(), cut.sides()[side_index]);
    CliqueOverlay ov;
    ov.to_original = keep.vec();
    ov.from_original.assign(g.n(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) ov.from_original[keep[i]] = static_cast<std::int64_t>(i);

    std::vector<Vertex> clique;
    for (Vertex u : cut.cut()) clique.push_back(static_cast<Vertex>(ov.from_original[u]));
    ov.clique = VertexSet::from_sorted(clique);

    std::vector<Edge> edges = induced_subgraph(g, keep).edges();
    for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j)
            if (!g.has_edge(cut.cut()[i], cut.cut()[j])) edges.emplace_back(clique[i], clique[j]);
    ov.graph = Graph(keep.size(), edges);
    return ov;
}

SmallCut expand(const Graph& g, Vertex u, const SmallCut& start, std::size_t m, std::size_t kappa,
                std::mt19937_64& rng, const FindSmallOptions& opt) {
    if (m > balance_threshold(g.n(), kappa)) throw PreconditionError("expand needs m <= ceil((n-kappa)/2)");
    if (!start.side.contains(u) || start.side.size() > 2 * m || start.cut.size() != kappa)
        throw PreconditionError("expand needs a kappa-cut whose side holds u and has at most 2m vertices");

    SmallCut current = start;
    while (current.side.size() < m) {
        const auto parts = components_after_removal(g, current.cut);
        const auto overlay = build_overlay(g, parts, *parts.side_of(u));
        const std::size_t bound = std::min(m, balance_threshold(overlay.graph.n(), kappa));

        std::optional<SmallCut> found;
        std::vector<bool> settled(overlay.clique.size(), false);
        for (std::size_t scale : doubling_scales(bound)) {
            for (std::size_t i = 0; i < overlay.clique.size() && !found; ++i) {
                if (settled[i]) continue;
                auto round = search_round(overlay.graph, overlay.clique[i], scale, bound, kappa, rng, opt);
                settled[i] = round.settled;
                found = std::move(round.cut);
            }
            if (found) break;
        }
        if (!found) break;

        auto cut = overlay.to_original_set(found->cut);
        auto side = component_of(g, cut, u);
        if (!is_subset(current.side, side) || side.size() <= current.side.size())
            throw std::logic_error("overlay cut did not enlarge the side of u");
        current = {std::move(cut), std::move(side)};
    }
    check_returned(g, current, kappa, 2 * m);
    return current;
}

}  // namespace vcut
