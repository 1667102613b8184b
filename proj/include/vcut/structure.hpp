#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vcut/graph.hpp"

namespace vcut {

/// Partition (T; C_0..C_{w-1}; S_0..S_{w-1}) of V where every C_i + T + C_{i+2}
/// is a kappa-cut cutting off S_i + C_{i+1} + S_{i+1}. Indices are cyclic and
/// sector S_i lies between spokes C_i and C_{i+1}.
struct Wheel {
    VertexSet center;
    std::vector<VertexSet> spokes;
    std::vector<VertexSet> sectors;

    [[nodiscard]] std::size_t size() const noexcept { return spokes.size(); }
    friend bool operator==(const Wheel&, const Wheel&) = default;
};

/// C(i, j) = C_i + T + C_j together with D(i, j) = S_i + C_{i+1} + ... + S_{j-1}.
struct WheelCut {
    VertexSet cut;
    VertexSet region;
};

WheelCut wheel_cut(const Wheel& wh, std::size_t i, std::size_t j);

/// Derives sectors from the spokes and checks the defining cuts. Returns
/// nullopt when any defining check fails. Throws PreconditionError for fewer
/// than four spokes.
std::optional<Wheel> verify_wheel(const Graph& g, const VertexSet& center,
                                  const std::vector<VertexSet>& spokes, std::size_t kappa);

/// Consequences that every genuine wheel must satisfy: equal spoke sizes of
/// (kappa - |T|) / 2, every C(i, j) a kappa-cut cutting off D(i, j), and exactly
/// the two sides D(i, j), D(j, i) for non-adjacent i, j. Empty when all hold,
/// otherwise a description of the first violation.
std::optional<std::string> check_wheel_laws(const Graph& g, const Wheel& wh, std::size_t kappa);

/// The side, if any, whose complement among the sides has at most t vertices.
/// Sides are indexed as in `p`. When several qualify the largest is returned.
std::optional<std::size_t> small_cut_large_side(const SidePartition& p, std::size_t t);

/// W lies inside U plus one side of U.
struct LaminarRelation {
    std::size_t host_side;   // side of the first cut holding the second cut's extra vertices
    std::size_t guest_side;  // side of the second cut holding the first cut's extra vertices
};

/// Both cuts have two sides and (T; U_1, W_1, U_2, W_2) is a 4-wheel.
struct WheelRelation {
    Wheel wheel;
};

/// With first-cut sides A_1, A_2 and second-cut sides B_1, B_2 (as indexed
/// here): A_1 and B_2 are disjoint, and the second cut is a crossing matching
/// cut of the first in side A_1 w.r.t. pivot = U cap B_2, matched to W cap A_1.
struct CrossingMatchingRelation {
    std::size_t first_side;   // A_1
    std::size_t second_side;  // B_1
    VertexSet pivot;
    VertexSet matched;
};

/// One of the two cuts has all but one side totalling at most kappa - 1
/// vertices, and those small sides lie inside the other cut.
struct SmallRelation {
    bool first_is_small;
    std::size_t large_side;
    VertexSet small_part;  // union of the small sides
};

using CutRelation = std::variant<LaminarRelation, WheelRelation, CrossingMatchingRelation, SmallRelation>;

std::string_view relation_name(const CutRelation& r);

/// Relation of w with respect to u. Predicates are tried in the order
/// laminar, small, wheel, crossing matching and the first that verifies wins.
/// Throws PreconditionError unless u and w are distinct kappa-cuts and
/// UnclassifiedRegime when n <= 2 kappa, where two cuts can cover V.
CutRelation classify_pair(const Graph& g, const VertexSet& u, const VertexSet& w, std::size_t kappa);

/// Re-checks a relation returned by classify_pair against its definition.
bool verify_relation(const Graph& g, const VertexSet& u, const VertexSet& w, std::size_t kappa,
                     const CutRelation& r);

/// Perfect matching between `left` and `right` in g, as (left, right) pairs,
/// or nullopt when none exists or the sizes differ.
std::optional<std::vector<Edge>> perfect_matching(const Graph& g, const VertexSet& left,
                                                  const VertexSet& right);

/// (U \ P) + N_A(P) when it is a matching cut of U in side a w.r.t. P.
/// Throws PreconditionError when p is empty or not inside the cut.
std::optional<VertexSet> matching_cut(const Graph& g, const SidePartition& u, std::size_t a,
                                      const VertexSet& p, std::size_t kappa);

/// The smallest pivot set containing x, for every x of U that has one,
/// deduplicated and sorted. Each is found as U minus a minimum cut between
/// the other sides plus x and a single vertex of A.
std::vector<VertexSet> theta_star(const Graph& g, const SidePartition& u, std::size_t a,
                                  std::size_t kappa);

/// The minimum cut between P and A \ Match(P) nearest to P. Throws
/// PreconditionError when U does not have exactly two sides or P has no
/// matching cut.
VertexSet min_crossing_matching(const Graph& g, const SidePartition& u, std::size_t a,
                                const VertexSet& p, std::size_t kappa);

/// (W \ Match(Q)) + (Q \ P) + Match(P) for a crossing matching cut W w.r.t. Q
/// and P inside Q. Throws PreconditionError when the inputs do not have that
/// shape.
VertexSet reduce_crossing_matching(const Graph& g, const SidePartition& u, std::size_t a,
                                   const VertexSet& w, const VertexSet& q, const VertexSet& p,
                                   std::size_t kappa);

/// True when w is a crossing matching cut of U in side a w.r.t. p: w meets the
/// other side, (U \ p) + (w cap A) is the matching cut of p, and w keeps p
/// apart from A \ w.
bool is_crossing_matching(const Graph& g, const SidePartition& u, std::size_t a, const VertexSet& w,
                          const VertexSet& p, std::size_t kappa);

}  // namespace vcut
