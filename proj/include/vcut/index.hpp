#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "vcut/graph.hpp"
#include "vcut/local_cut.hpp"

namespace vcut {

/// Constant-size name for the side of a stored cut: the smallest vertex of the
/// side and a 64-bit digest of the cut. Absent cuts use {0, digest of {}}.
struct SideId {
    Vertex anchor = 0;
    std::uint64_t digest = 0;

    friend bool operator==(const SideId&, const SideId&) = default;
};

std::uint64_t cut_digest(const VertexSet& cut);

/// What the index keeps for one vertex u.
struct SmallRecord {
    /// The minimum cut whose side around u is smallest among sides of at most
    /// t vertices; absent when there is none.
    std::optional<VertexSet> small;
    /// Size of that side, or n when `small` is absent.
    std::size_t side_size = 0;
    SideId side_id;
    /// For each neighbour v of u inside `small`, whether removing the edge uv
    /// and small \ {v} separates u from v. Sorted by neighbour.
    std::vector<std::pair<Vertex, bool>> adjacent_bits;
    /// The side itself, kept only when it has at most kappa - 1 vertices.
    std::optional<VertexSet> tiny_side;

    [[nodiscard]] bool holds(Vertex v) const { return small && small->contains(v); }
    /// The stored bit for v, or nullopt when v is not a neighbour inside `small`.
    [[nodiscard]] std::optional<bool> bit(Vertex v) const;

    friend bool operator==(const SmallRecord&, const SmallRecord&) = default;
};

struct SmallCutIndex {
    std::size_t n = 0;
    std::size_t kappa = 0;
    std::size_t t = 0;
    std::vector<SmallRecord> records;
    /// Optional external names of the vertices, carried through serialization.
    std::vector<std::string> labels;

    friend bool operator==(const SmallCutIndex&, const SmallCutIndex&) = default;
};

/// Entries charged per record: |small| + |bits| + |tiny side| + 3 words for
/// the side size and the two halves of the side id.
std::size_t entry_count(const SmallCutIndex& ix);
/// The documented constant with entry_count(ix) <= kSpaceConstant * kappa * n.
inline constexpr std::size_t kSpaceConstant = 5;

/// The smallest-side cut for u with side size at most ceil((n - kappa) / 2).
std::optional<VertexSet> compute_small_reference(const Graph& g, Vertex u, std::size_t kappa);

enum class BuildMode { exact, randomized };

struct BuildOptions {
    /// Step 1 searches sides up to this many times kappa (clamped to t).
    std::size_t small_scale_factor = 100;
    /// Step 3 draws ceil(pair_factor * ln n) random pairs.
    double pair_factor = 3.0;
    FindSmallOptions search;
};

/// Sparsifies g, computes kappa and fills one record per vertex. Exact mode is
/// deterministic and ignores `seed`. Throws GraphError when g is disconnected
/// or has fewer than two vertices.
SmallCutIndex build_index(const Graph& g, BuildMode mode, std::uint64_t seed = 0,
                          const BuildOptions& opt = {});

struct Separated {
    VertexSet cut;
};
/// The edge together with kappa - 1 vertices separates its endpoints.
struct MixedSeparated {
    Edge edge;
    VertexSet vertices;
};
struct AtLeastKappaPlus1 {};

using Verdict = std::variant<Separated, MixedSeparated, AtLeastKappaPlus1>;

enum class QueryCase { same_side, outside_both, adjacent_member, mutual_members, one_sided_member };

struct QueryResult {
    Verdict verdict;
    QueryCase decided_by;
};

/// Answers whether kappa(u, v) = kappa from the stored records alone.
/// Throws PreconditionError for u = v or ids outside the index.
QueryResult query(const SmallCutIndex& ix, Vertex u, Vertex v);

std::string_view case_name(QueryCase c);

/// Versioned JSON text. deserialize throws CorruptIndex on malformed input,
/// a version mismatch or records that contradict each other.
std::string serialize(const SmallCutIndex& ix);
SmallCutIndex deserialize(std::string_view text);

}  // namespace vcut
