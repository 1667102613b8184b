#include "brute.hpp"
#include "doctest.h"
#include "vcut/errors.hpp"
#include "vcut/flow.hpp"
#include "vcut/generators.hpp"
#include "vcut/local_cut.hpp"

using namespace vcut;

namespace {

/// Smallest side around x among the given minimum cuts, subject to size <= s.
std::optional<SmallCut> brute_small(const Graph& g, const std::vector<VertexSet>& cuts, Vertex x,
                                    std::size_t s) {
    std::optional<SmallCut> best;
    for (const auto& c : cuts) {
        if (c.contains(x)) continue;
        auto side = components_after_removal(g, c).side_containing(x);
        if (side.size() > s || (best && best->side.size() <= side.size())) continue;
        best = SmallCut{c, side};
    }
    return best;
}

VertexSet to_local(const CliqueOverlay& ov, const VertexSet& original) {
    std::vector<Vertex> ids;
    for (Vertex v : original) ids.push_back(*ov.local(v));
    return VertexSet::from_unsorted(std::move(ids));
}

struct Instance {
    Graph g;
    std::size_t kappa;
};

/// Graphs with a proper minimum cut and connectivity between 1 and 4.
std::vector<Instance> desk_instances(std::size_t count, std::size_t max_n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Instance> out;
    while (out.size() < count) {
        Graph g;
        switch (rng() % 4) {
            case 0: g = gen::clique_chain(2 + rng() % 3, 3 + rng() % 3, 1 + rng() % 3); break;
            case 1: g = gen::ladder(4 + rng() % 6); break;
            default: {
                const std::size_t n = 8 + rng() % (max_n - 7);
                g = gen::random_connected(n, 0.1 + 0.4 * static_cast<double>(rng() % 100) / 100.0, rng);
            }
        }
        if (g.n() > max_n) continue;
        const auto k = vertex_connectivity(g);
        if (!k.witness || k.kappa > 4) continue;
        out.push_back({std::move(g), k.kappa});
    }
    return out;
}

}  // namespace

TEST_CASE("find_small on named graphs") {
    std::mt19937_64 rng(7);
    const Graph pet = gen::petersen();
    const auto p = find_small(pet, 0, 4, 3, rng);
    REQUIRE(p);
    CHECK(p->cut == pet.neighborhood(0));
    CHECK(p->side == VertexSet{0});

    const Graph c8 = gen::cycle(8);
    const auto c = find_small(c8, 0, 3, 2, rng);
    REQUIRE(c);
    CHECK(c->cut == VertexSet{1, 7});
    CHECK(find_small_reference(c8, 0, 1, 2)->cut == VertexSet{1, 7});

    CHECK_FALSE(find_small(gen::complete(5), 0, 1, 4, rng));
    CHECK_FALSE(find_small_reference(gen::complete(5), 0, 1, 4));

    CHECK_THROWS_AS(find_small(c8, 0, 4, 2, rng), PreconditionError);
    CHECK_THROWS_AS(find_small_reference(c8, 0, 4, 2), PreconditionError);
    // C8 is not 3-connected.
    CHECK_THROWS_AS(find_small_reference(c8, 0, 2, 3), PreconditionError);
}

TEST_CASE("find_small_reference matches exhaustive enumeration") {
    for (const auto& [g, kappa] : desk_instances(60, 14, 41)) {
        const auto cuts = brute::all_min_cuts(g).sets;
        const std::size_t t = balance_threshold(g.n(), kappa);
        for (Vertex x = 0; x < g.n(); ++x)
            for (std::size_t s = 1; s <= t; ++s) CHECK(find_small_reference(g, x, s, kappa) == brute_small(g, cuts, x, s));
    }
}

TEST_CASE("find_small agrees with the reference on random desk instances") {
    std::mt19937_64 rng(43);
    std::size_t existing = 0, detected = 0, false_cuts = 0;
    for (const auto& [g, kappa] : desk_instances(200, 24, 42)) {
        const std::size_t t = balance_threshold(g.n(), kappa);
        for (int probe = 0; probe < 4; ++probe) {
            const Vertex x = static_cast<Vertex>(rng() % g.n());
            const std::size_t s = 1 + rng() % t;
            const auto want = find_small_reference(g, x, s, kappa);
            const auto got = find_small(g, x, s, kappa, rng);
            if (got && got != want) ++false_cuts;
            if (want) {
                ++existing;
                if (got == want) ++detected;
            }
        }
    }
    MESSAGE("find_small detected " << detected << " of " << existing);
    CHECK(false_cuts == 0);
    REQUIRE(existing > 100);
    CHECK(detected * 100 >= existing * 99);
}

TEST_CASE("clique overlay") {
    const Graph c8 = gen::cycle(8);
    const auto parts = components_after_removal(c8, {1, 5});
    const auto ov = build_overlay(c8, parts, *parts.side_of(2));
    CHECK(ov.to_original == std::vector<Vertex>{0, 1, 5, 6, 7});
    CHECK(ov.to_original_set(ov.clique) == VertexSet{1, 5});
    CHECK(ov.graph.m() == 5);
    CHECK(ov.graph.has_edge(*ov.local(1), *ov.local(5)));
    CHECK_FALSE(ov.local(3).has_value());

    SUBCASE("single-vertex remaining side has no cut") {
        const Graph pet = gen::petersen();
        const auto around = components_after_removal(pet, pet.neighborhood(0));
        const auto big = build_overlay(pet, around, *around.side_of(2));
        CHECK(big.graph.n() == 4);
        CHECK(brute::all_min_cuts(big.graph).sets.empty());
    }

    SUBCASE("overlay cuts are the laminar cuts on the other side") {
        std::size_t checked = 0;
        for (const auto& [g, kappa] : desk_instances(50, 13, 44)) {
            const auto all = brute::all_min_cuts(g).sets;
            for (const auto& u : all) {
                const auto p = components_after_removal(g, u);
                if (p.side_count() != 2) continue;
                for (std::size_t a = 0; a < 2; ++a) {
                    const auto ov = build_overlay(g, p, a);
                    const auto& other = p.sides()[1 - a];
                    std::vector<VertexSet> want;
                    for (const auto& w : all)
                        if (w != u && is_subset(w, set_union(u, other))) want.push_back(w);
                    std::vector<VertexSet> got;
                    const auto ov_cuts = brute::all_min_cuts(ov.graph);
                    if (ov_cuts.size == kappa)
                        for (const auto& w : ov_cuts.sets) got.push_back(ov.to_original_set(w));
                    std::sort(got.begin(), got.end());
                    CHECK(got == want);
                    for (const auto& w : want) {
                        const auto in_g = components_after_removal(g, w);
                        const auto in_ov = components_after_removal(ov.graph, to_local(ov, w));
                        for (Vertex v : set_difference(u, w)) {
                            const auto side = ov.to_original_set(in_ov.side_containing(*ov.local(v)));
                            CHECK(set_union(side, p.sides()[a]) == in_g.side_containing(v));
                        }
                    }
                    ++checked;
                }
            }
        }
        CHECK(checked > 20);
    }
}

TEST_CASE("expand postconditions") {
    std::mt19937_64 rng(9);
    const Graph c8 = gen::cycle(8);
    const SmallCut start{{1, 7}, {0}};
    CHECK(expand(c8, 0, start, 1, 2, rng) == start);
    const auto y = expand(c8, 0, start, 2, 2, rng);
    CHECK(y.side.contains(0));
    CHECK(y.side.size() >= 2);
    CHECK(y.side.size() <= 4);
    CHECK(is_cut(c8, y.cut));
    CHECK_THROWS_AS(expand(c8, 0, start, 4, 2, rng), PreconditionError);
    CHECK_THROWS_AS(expand(c8, 2, start, 2, 2, rng), PreconditionError);

    SUBCASE("nested chain of cliques") {
        // Five K4s in a row, consecutive ones joined at their first two
        // vertices: around vertex 3 the cuts {0,1} ⊂ {4,5} ⊂ {8,9} nest.
        const Graph chain = gen::clique_chain(5, 4, 2);
        const SmallCut inner{{0, 1}, {2, 3}};
        const auto grown = expand(chain, 3, inner, 4, 2, rng);
        CHECK(grown.cut == VertexSet{4, 5});
        CHECK(grown.side == VertexSet::range(0, 4));
    }

    SUBCASE("matches the largest m-bounded side found by enumeration") {
        std::size_t checked = 0;
        for (const auto& [g, kappa] : desk_instances(80, 14, 45)) {
            const auto cuts = brute::all_min_cuts(g).sets;
            const std::size_t t = balance_threshold(g.n(), kappa);
            for (Vertex u = 0; u < g.n(); u += 3) {
                for (std::size_t m = 1; 2 * m <= t; ++m) {
                    const auto first = brute_small(g, cuts, u, 2 * m);
                    if (!first) continue;
                    std::size_t largest = 0;
                    for (const auto& z : cuts)
                        if (!z.contains(u)) {
                            const auto sz = components_after_removal(g, z).side_containing(u).size();
                            if (sz <= m) largest = std::max(largest, sz);
                        }
                    const auto y = expand(g, u, *first, m, kappa, rng);
                    CHECK(is_subset(first->side, y.side));
                    CHECK(y.side.size() <= 2 * m);
                    CHECK(y.side.size() >= largest);
                    CHECK(components_after_removal(g, y.cut).side_containing(u) == y.side);
                    ++checked;
                }
            }
        }
        CHECK(checked > 50);
    }
}
