#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "vcut/graph.hpp"

namespace vcut {

/// A kappa-cut together with the side that holds the vertex it was found for.
struct SmallCut {
    VertexSet cut;
    VertexSet side;

    friend bool operator==(const SmallCut&, const SmallCut&) = default;
};

/// ceil((n - kappa) / 2): the side-size threshold below which small cuts are unique.
std::size_t balance_threshold(std::size_t n, std::size_t kappa);

struct FindSmallOptions {
    /// Probes per scale; 0 picks ceil(log2(n + 1)) + 2.
    std::size_t repetitions = 0;
    /// Multiplies the arc budget of each probe.
    std::size_t budget_factor = 4;
};

/// Randomized search for the kappa-cut minimizing |Side(x)| subject to
/// |Side(x)| <= s. Grows a flow from x inside an arc budget, samples flow
/// endpoints among explored arcs, and on getting stuck reads a candidate cut
/// off the residual frontier; candidates are then pulled inward to the
/// containment-minimal cut with one local max-flow. A returned cut is always
/// correct; a missed one is possible with small probability.
/// Throws PreconditionError when s > balance_threshold or a cut smaller than
/// kappa shows up.
std::optional<SmallCut> find_small(const Graph& g, Vertex x, std::size_t s, std::size_t kappa,
                                   std::mt19937_64& rng, const FindSmallOptions& opt = {});

/// Deterministic answer to the same question: minimal_cut_toward({x}, {y})
/// for every non-neighbour y, keeping the smallest qualifying side.
std::optional<SmallCut> find_small_reference(const Graph& g, Vertex x, std::size_t s,
                                             std::size_t kappa);

/// G(U, A-bar): the subgraph induced by U and every side other than A, plus a
/// clique on U.
struct CliqueOverlay {
    Graph graph;
    std::vector<Vertex> to_original;
    VertexSet clique;  // U in overlay ids
    std::vector<std::int64_t> from_original;  // -1 outside the overlay

    [[nodiscard]] std::optional<Vertex> local(Vertex original) const;
    [[nodiscard]] VertexSet to_original_set(const VertexSet& local_ids) const;
};

CliqueOverlay build_overlay(const Graph& g, const SidePartition& cut, std::size_t side_index);

/// Grows the side of `start` around u until it holds at least m vertices or
/// no laminar kappa-cut in the rest of the graph can enlarge it. Searches for
/// the vertices of the current cut are interleaved scale by scale; within a
/// scale the lowest vertex id that finds a cut wins.
/// Requires m <= balance_threshold and |start.side| <= 2m with u in it. The
/// guarantee that no m-bounded side around u is missed needs 2m <= threshold.
SmallCut expand(const Graph& g, Vertex u, const SmallCut& start, std::size_t m, std::size_t kappa,
                std::mt19937_64& rng, const FindSmallOptions& opt = {});

}  // namespace vcut
