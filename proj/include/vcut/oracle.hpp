#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vcut/graph.hpp"
#include "vcut/index.hpp"
#include "vcut/structure.hpp"

namespace vcut {

/// Size gates for the exhaustive routines below.
struct OracleLimits {
    std::size_t max_n = 16;
    std::size_t max_kappa = 5;
    bool ignore_limits = false;
};

struct MinCutSet {
    /// n - 1 for complete graphs, which have no cuts at all.
    std::size_t kappa = 0;
    std::vector<VertexSet> cuts;  // sorted
};

/// Every minimum vertex cut, found by trying all subsets of growing size.
/// Throws OracleLimitExceeded when n or kappa passes the limits.
MinCutSet enumerate_min_cuts(const Graph& g, const OracleLimits& limits = {});

/// Mixed connectivity of every pair; the diagonal is 0.
std::vector<std::vector<std::size_t>> pairwise_connectivity_table(const Graph& g);

/// A failed check together with the cuts involved, for replay.
struct Counterexample {
    std::string check;
    std::string detail;
    std::vector<VertexSet> cuts;
};

struct ClassificationReport {
    std::size_t pairs = 0;
    std::map<std::string, std::size_t> by_relation;
    std::vector<Counterexample> failures;
};

/// Classifies every ordered pair of distinct minimum cuts and re-verifies each
/// witness. Throws PreconditionError when n <= 2 kappa and OracleLimitExceeded
/// past the limits (14 vertices by default).
ClassificationReport check_classification_exhaustive(const Graph& g, const OracleLimits& limits = {14, 5, false});

/// How a minimum cut sits relative to a wheel, in the order the checker tries.
enum class WheelCase {
    wheel_cut = 1,          // X = C(i, j)
    inside_sector,          // X within C(i, i+1) + S_i
    crossing_matching,      // crossing matching relation with C(i, i+1) or C(i, i+2)
    tiny_sides,             // all sides but one total at most kappa - 1
    small_wheel,            // all sectors but one total at most kappa
    extends_wheel,          // the wheel is a subwheel of one with X's pieces inserted
};

std::string_view wheel_case_name(WheelCase c);

/// The first case that holds, or nullopt when none does.
std::optional<WheelCase> check_wheel_interaction(const Graph& g, const Wheel& wh, const VertexSet& x,
                                                 std::size_t kappa);

/// The wheel with the pieces of x inserted as new spokes, when x is of the
/// extends_wheel kind.
std::optional<Wheel> extend_wheel(const Graph& g, const Wheel& wh, const VertexSet& x, std::size_t kappa);

/// Maximal wheels grown from every pair of cuts classified as a 4-wheel,
/// deduplicated up to rotation and reflection.
std::vector<Wheel> discover_wheels(const Graph& g, const MinCutSet& cuts);

struct LaminarReport {
    bool checked = false;
    std::string skip_reason;
    bool has_matching_cuts = false;
    std::size_t laminar_cuts = 0;
    std::size_t maximal_cuts = 0;
    std::vector<Counterexample> failures;
};

/// Checks how the laminar cuts of u in side `a` are organised: with matching
/// cuts present each one is a laminar cut of the innermost matching cut X, a
/// matching cut of u, or a crossing matching cut of X; without them each one
/// is maximal or nested in one side of a maximal one, and maximal ones have
/// disjoint inner regions. Skips when u has tiny sides, is a cut of one of
/// `wheels`, or the side has at most 2 kappa vertices.
LaminarReport check_laminar_structure(const Graph& g, const MinCutSet& cuts, const VertexSet& u,
                                      std::size_t a, const std::vector<Wheel>& wheels);

struct SmallReport {
    std::size_t candidates = 0;
    std::optional<VertexSet> small;
    std::vector<Counterexample> failures;
};

/// Among minimum cuts whose side around u has at most ceil((n - kappa) / 2)
/// vertices, the smallest such side must sit inside all the others, belong to
/// one cut only, and match compute_small_reference.
SmallReport check_small_uniqueness(const Graph& g, const MinCutSet& cuts, Vertex u);

struct NamedGraph {
    std::string name;
    Graph graph;
};

/// Named graphs (cycles, Petersen, ladders, barbells, clique chains and
/// friends) followed by `random_count` random connected graphs with
/// min_n..max_n vertices and varied density, reproducible from `seed`.
std::vector<NamedGraph> desk_corpus(std::uint64_t seed, std::size_t random_count, std::size_t min_n,
                                    std::size_t max_n);

/// Why the index answer for (u, v) is wrong, given their mixed connectivity;
/// nullopt when the verdict is right and its witness separates the pair in g.
std::optional<std::string> check_query(const Graph& g, const SmallCutIndex& ix, Vertex u, Vertex v,
                                       std::size_t mixed);

enum class Suite { classification, wheels, laminar, small, index };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite s);

struct SuiteReport {
    Suite suite{};
    std::size_t graphs = 0;
    std::size_t checks = 0;
    std::size_t skipped = 0;
    std::map<std::string, std::size_t> tally;
    std::vector<std::pair<std::string, Counterexample>> failures;  // graph name, failure
};

/// Runs one family of checks over desk_corpus(seed, ...) restricted to the
/// graphs the suite can handle.
SuiteReport run_suite(Suite s, std::uint64_t seed);

}  // namespace vcut
