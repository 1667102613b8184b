#include <map>

#include "brute.hpp"
#include "doctest.h"
#include "vcut/errors.hpp"
#include "vcut/flow.hpp"
#include "vcut/generators.hpp"
#include "vcut/oracle.hpp"

using namespace vcut;

namespace {

std::string describe(const Counterexample& c) {
    std::string out = c.check + ": " + c.detail;
    for (const auto& x : c.cuts) out += " " + to_string(x);
    return out;
}

}  // namespace

TEST_CASE("minimum cut enumeration") {
    const auto c8 = enumerate_min_cuts(gen::cycle(8));
    CHECK(c8.kappa == 2);
    // Independent double loop: every non-adjacent pair of a cycle is a cut.
    std::size_t pairs = 0;
    for (Vertex a = 0; a < 8; ++a)
        for (Vertex b = a + 1; b < 8; ++b)
            if (!gen::cycle(8).has_edge(a, b)) ++pairs;
    CHECK(c8.cuts.size() == pairs);
    CHECK(pairs == 20);
    for (const auto& x : c8.cuts) CHECK(is_cut(gen::cycle(8), x));

    const auto k5 = enumerate_min_cuts(gen::complete(5));
    CHECK(k5.kappa == 4);
    CHECK(k5.cuts.empty());

    const Graph pet = gen::petersen();
    const auto p = enumerate_min_cuts(pet);
    CHECK(p.kappa == 3);
    for (Vertex u = 0; u < pet.n(); ++u)
        CHECK(std::binary_search(p.cuts.begin(), p.cuts.end(), pet.neighborhood(u)));

    CHECK_THROWS_AS(enumerate_min_cuts(gen::cycle(17)), OracleLimitExceeded);
    CHECK(enumerate_min_cuts(gen::cycle(17), {16, 5, true}).cuts.size() == 17 * 14 / 2);
    CHECK_THROWS_AS(enumerate_min_cuts(gen::complete_bipartite(6, 7)), OracleLimitExceeded);
    CHECK(enumerate_min_cuts(gen::complete_bipartite(6, 7), {16, 5, true}).kappa == 6);
}

TEST_CASE("enumeration agrees with the pairwise table and with brute force") {
    for (const auto& [name, g] : desk_corpus(61, 40, 6, 12)) {
        if (vertex_connectivity(g).kappa > 5) continue;
        const auto cuts = enumerate_min_cuts(g);
        const auto table = pairwise_connectivity_table(g);
        std::size_t least = g.n() - 1;
        for (Vertex u = 0; u < g.n(); ++u)
            for (Vertex v = u + 1; v < g.n(); ++v)
                if (!g.has_edge(u, v)) least = std::min(least, table[u][v]);
        CHECK_MESSAGE(cuts.kappa == least, name);
        const auto brute = brute::all_min_cuts(g);
        CHECK(cuts.kappa == brute.size);
        CHECK(cuts.cuts == brute.sets);
    }
}

TEST_CASE("exhaustive classification") {
    const auto c8 = check_classification_exhaustive(gen::cycle(8));
    CHECK(c8.failures.empty());
    CHECK(c8.pairs == 20 * 19);
    // The only wheel pairs are {0,4}/{2,6} and {1,5}/{3,7}, in both orders.
    CHECK(c8.by_relation.at("wheel") == 4);

    const auto ladder = check_classification_exhaustive(gen::ladder(6));
    CHECK(ladder.failures.empty());
    CHECK(ladder.by_relation.count("laminar") == 1);
    CHECK(ladder.by_relation.count("crossing_matching") == 1);

    CHECK_THROWS_AS(check_classification_exhaustive(gen::cycle(4)), PreconditionError);
    CHECK_THROWS_AS(check_classification_exhaustive(gen::cycle(15)), OracleLimitExceeded);

    std::size_t graphs = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        std::mt19937_64 rng(seed);
        const Graph g = gen::random_connected(12, 0.4, rng);
        if (vertex_connectivity(g).kappa > 5 || g.n() <= 2 * vertex_connectivity(g).kappa) continue;
        ++graphs;
        const auto r = check_classification_exhaustive(g);
        for (const auto& f : r.failures) FAIL_CHECK("seed " << seed << " " << describe(f));
    }
    CHECK(graphs > 90);
}

TEST_CASE("wheel interaction cases") {
    const Graph c8 = gen::cycle(8);
    const auto cuts = enumerate_min_cuts(c8);
    const auto wheels = discover_wheels(c8, cuts);
    REQUIRE(wheels.size() == 2);
    CHECK(wheels[0].spokes == std::vector<VertexSet>{{0}, {2}, {4}, {6}});
    CHECK(wheels[1].spokes == std::vector<VertexSet>{{1}, {3}, {5}, {7}});
    const Wheel& wh = wheels[0];
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (i != j) CHECK(check_wheel_interaction(c8, wh, wheel_cut(wh, i, j).cut, 2) == WheelCase::wheel_cut);
    for (const auto& x : cuts.cuts) CHECK(check_wheel_interaction(c8, wh, x, 2).has_value());
    // {1,3} cuts off vertex 2 alone.
    CHECK(check_wheel_interaction(c8, wh, {1, 3}, 2) == WheelCase::tiny_sides);

    SUBCASE("every case that shows up on the desk corpus") {
        std::map<WheelCase, std::size_t> seen;
        for (const auto& [name, g] : desk_corpus(62, 30, 8, 14)) {
            if (vertex_connectivity(g).kappa > 5) continue;
            const auto all = enumerate_min_cuts(g);
            for (const auto& found : discover_wheels(g, all)) {
                CHECK_FALSE(check_wheel_laws(g, found, all.kappa));
                for (const auto& x : all.cuts) {
                    const auto c = check_wheel_interaction(g, found, x, all.kappa);
                    CHECK_MESSAGE(c.has_value(), name << " " << to_string(x));
                    if (c) ++seen[*c];
                }
            }
        }
        CHECK(seen[WheelCase::wheel_cut] > 0);
        CHECK(seen[WheelCase::inside_sector] > 0);
        CHECK(seen[WheelCase::crossing_matching] > 0);
        CHECK(seen[WheelCase::tiny_sides] > 0);
    }

    SUBCASE("a subwheel extends to the full wheel") {
        // Five singleton spokes 1..5 around the centre 0, singleton sectors 6..10.
        const Graph g = gen::wheel_graph(5, 1, 1, 1);
        const auto all = enumerate_min_cuts(g);
        CHECK(all.kappa == 3);
        const auto full = verify_wheel(g, {0}, {{1}, {2}, {3}, {4}, {5}}, 3);
        REQUIRE(full);
        CHECK_FALSE(check_wheel_laws(g, *full, 3));
        const auto sub = verify_wheel(g, {0}, {{1}, {2}, {3}, {4}}, 3);
        REQUIRE(sub);
        CHECK(sub->sectors[3] == VertexSet{5, 9, 10});
        const auto bigger = extend_wheel(g, *sub, {0, 1, 5}, 3);
        REQUIRE(bigger);
        CHECK(bigger->spokes == full->spokes);
        CHECK(discover_wheels(g, all).size() == 1);
        for (const auto& x : all.cuts) CHECK(check_wheel_interaction(g, *sub, x, 3).has_value());
    }
}

TEST_CASE("laminar structure") {
    SUBCASE("pockets hanging off a hub have disjoint regions") {
        // Cut {3,4} splits the triangle 0..2 from side A: a K5 hub 5..9 with
        // triangles 10..12 on {5,6} and 13..15 on {8,9}. Each cut vertex has
        // two hub neighbours, so no matching cut exists in A.
        std::vector<Edge> e;
        auto clique = [&](Vertex first, Vertex count) {
            for (Vertex a = first; a < first + count; ++a)
                for (Vertex b = a + 1; b < first + count; ++b) e.emplace_back(a, b);
        };
        auto join = [&](std::initializer_list<Vertex> xs, std::initializer_list<Vertex> ys) {
            for (Vertex x : xs)
                for (Vertex y : ys) e.emplace_back(x, y);
        };
        clique(0, 3);
        clique(5, 5);
        clique(10, 3);
        clique(13, 3);
        join({3, 4}, {0, 1, 2});
        join({3}, {5, 6});
        join({4}, {7, 8});
        join({5, 6}, {10, 11, 12});
        join({8, 9}, {13, 14, 15});
        const Graph g(16, e);
        const auto cuts = enumerate_min_cuts(g);
        REQUIRE(cuts.kappa == 2);
        const VertexSet u{3, 4};
        const auto parts = components_after_removal(g, u);
        const auto r = check_laminar_structure(g, cuts, u, *parts.side_of(5), {});
        for (const auto& f : r.failures) FAIL_CHECK(describe(f));
        CHECK(r.checked);
        CHECK_FALSE(r.has_matching_cuts);
        CHECK(r.laminar_cuts == 2);
        CHECK(r.maximal_cuts == 2);
    }
    SUBCASE("chains of cliques") {
        for (const Graph& g : {gen::clique_chain(4, 3, 1), gen::clique_chain(3, 4, 2)}) {
            const auto cuts = enumerate_min_cuts(g);
            for (const auto& u : cuts.cuts) {
                const auto parts = components_after_removal(g, u);
                for (std::size_t a = 0; a < parts.side_count(); ++a)
                    for (const auto& f : check_laminar_structure(g, cuts, u, a, {}).failures) FAIL_CHECK(describe(f));
            }
        }
    }
    SUBCASE("ladder cuts with matching cuts") {
        const Graph g = gen::ladder(7);
        const auto cuts = enumerate_min_cuts(g);
        const auto wheels = discover_wheels(g, cuts);
        std::size_t with_matching = 0;
        for (const auto& u : cuts.cuts) {
            const auto parts = components_after_removal(g, u);
            for (std::size_t a = 0; a < parts.side_count(); ++a) {
                const auto r = check_laminar_structure(g, cuts, u, a, wheels);
                for (const auto& f : r.failures) FAIL_CHECK(describe(f));
                if (r.checked && r.has_matching_cuts) ++with_matching;
            }
        }
        CHECK(with_matching > 0);
    }
    SUBCASE("skips and vacuous passes") {
        const Graph pet = gen::petersen();
        const auto cuts = enumerate_min_cuts(pet);
        const auto r = check_laminar_structure(pet, cuts, pet.neighborhood(0), 1, {});
        CHECK_FALSE(r.checked);
        CHECK_FALSE(r.skip_reason.empty());

        const Graph c8 = gen::cycle(8);
        const auto c8cuts = enumerate_min_cuts(c8);
        const auto wheels = discover_wheels(c8, c8cuts);
        CHECK_FALSE(check_laminar_structure(c8, c8cuts, {0, 4}, 0, wheels).checked);

        const Graph chain = gen::clique_chain(2, 6, 1);
        const auto chain_cuts = enumerate_min_cuts(chain);
        REQUIRE(chain_cuts.cuts.size() == 2);
        const auto lone = check_laminar_structure(chain, chain_cuts, chain_cuts.cuts[0], 0, {});
        CHECK(lone.checked);
        CHECK(lone.laminar_cuts == 0);
        CHECK(lone.failures.empty());
    }
}

TEST_CASE("small cut uniqueness") {
    const Graph c8 = gen::cycle(8);
    const auto r = check_small_uniqueness(c8, enumerate_min_cuts(c8), 0);
    CHECK(r.failures.empty());
    CHECK(r.small == VertexSet{1, 7});

    const auto k5 = check_small_uniqueness(gen::complete(5), enumerate_min_cuts(gen::complete(5)), 0);
    CHECK(k5.candidates == 0);
    CHECK(k5.failures.empty());

    std::size_t graphs = 0;
    for (std::uint64_t seed = 1; graphs < 100; ++seed) {
        std::mt19937_64 rng(seed);
        const Graph g = gen::random_connected(6 + rng() % 10, 0.15 + 0.05 * static_cast<double>(rng() % 8), rng);
        if (vertex_connectivity(g).kappa > 5) continue;
        ++graphs;
        const auto cuts = enumerate_min_cuts(g);
        for (Vertex u = 0; u < g.n(); ++u)
            for (const auto& f : check_small_uniqueness(g, cuts, u).failures)
                FAIL_CHECK("seed " << seed << " " << describe(f));
    }
}

TEST_CASE("verification suites report no failures") {
    for (Suite s : {Suite::classification, Suite::wheels, Suite::laminar, Suite::small, Suite::index}) {
        const auto report = run_suite(s, 1);
        CHECK(parse_suite(suite_name(s)) == s);
        CHECK(report.checks > 0);
        for (const auto& [graph, f] : report.failures) FAIL_CHECK(suite_name(s) << " " << graph << " " << describe(f));
    }
    CHECK_FALSE(parse_suite("everything"));
}
