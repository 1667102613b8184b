#include <sstream>

#include "doctest.h"
#include "vcut/edge_list.hpp"
#include "vcut/errors.hpp"
#include "vcut/generators.hpp"
#include "vcut/graph.hpp"

using namespace vcut;

TEST_CASE("components after removing a cut from C8") {
    const Graph c8 = gen::cycle(8);
    const auto p = components_after_removal(c8, {1, 5});
    REQUIRE(p.side_count() == 2);
    CHECK(p.sides()[0] == VertexSet{0, 6, 7});
    CHECK(p.sides()[1] == VertexSet{2, 3, 4});
    CHECK(p.side_containing(3) == VertexSet{2, 3, 4});
    CHECK(p.side_containing(0) == VertexSet{6, 7, 0});
    CHECK_FALSE(p.side_of(5).has_value());
    CHECK(components_after_removal(c8, {}).side_count() == 1);
}

TEST_CASE("Petersen neighbourhood isolates its centre") {
    const Graph g = gen::petersen();
    const auto p = components_after_removal(g, g.neighborhood(0));
    REQUIRE(p.side_count() == 2);
    CHECK(p.sides()[0] == VertexSet{0});
    CHECK(p.sides()[1].size() == 6);
}

TEST_CASE("is_cut") {
    const Graph c8 = gen::cycle(8);
    CHECK(is_cut(c8, {1, 5}));
    CHECK_FALSE(is_cut(c8, {1, 2}));
    const Graph k5 = gen::complete(5);
    CHECK_FALSE(is_cut(k5, {0, 2, 4}));
    CHECK_THROWS_AS((void)is_cut(k5, k5.vertices()), PreconditionError);
}

TEST_CASE("region_of and neighborhood_in") {
    const Graph c8 = gen::cycle(8);
    const auto p = components_after_removal(c8, {1, 5});
    CHECK(region_of(p, {2, 7}) == VertexSet{0, 2, 3, 4, 6, 7});
    CHECK(region_of(p, {2, 3, 4}) == VertexSet{2, 3, 4});
    CHECK(region_of(p, {1, 5}).empty());
    CHECK(neighborhood_in(c8, {1}, {2, 3, 4}) == VertexSet{2});
    CHECK(neighborhood_in(c8, {}, {2, 3, 4}).empty());
    const Graph star = gen::complete_bipartite(1, 4);
    CHECK(neighborhood_in(star, {0}, {1, 2, 3, 4}) == VertexSet{1, 2, 3, 4});
}

TEST_CASE("no edge joins two distinct sides") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = gen::random_connected(12, 0.25, rng);
        std::vector<Vertex> pick;
        for (Vertex v = 0; v < g.n(); ++v)
            if (rng() % 4 == 0) pick.push_back(v);
        const auto p = components_after_removal(g, VertexSet::from_unsorted(pick));
        for (auto [a, b] : g.edges()) {
            auto sa = p.side_of(a), sb = p.side_of(b);
            if (sa && sb) CHECK(*sa == *sb);
        }
    }
}

TEST_CASE("set algebra") {
    const VertexSet a{1, 3, 5}, b{3, 4};
    CHECK(set_union(a, b) == VertexSet{1, 3, 4, 5});
    CHECK(set_intersection(a, b) == VertexSet{3});
    CHECK(set_difference(a, b) == VertexSet{1, 5});
    CHECK(is_subset(VertexSet{1, 5}, a));
    CHECK_FALSE(intersects(VertexSet{0, 2}, a));
    CHECK(to_string(a) == "[1,3,5]");
}

TEST_CASE("graph construction rejects non-simple input") {
    std::vector<Edge> loop{{0, 0}};
    CHECK_THROWS_AS(Graph(2, loop), GraphError);
    std::vector<Edge> twice{{0, 1}, {1, 0}};
    CHECK_THROWS_AS(Graph(2, twice), GraphError);
    std::vector<Edge> far{{0, 5}};
    CHECK_THROWS_AS(Graph(2, far), GraphError);
}

TEST_CASE("edge list loading relabels and keeps labels") {
    std::istringstream in("# a triangle with a tail\nx y\ny z\nz x  # closing edge\nz 7\n");
    const auto lg = read_edge_list(in);
    CHECK(lg.graph.n() == 4);
    CHECK(lg.graph.m() == 4);
    CHECK(lg.labels.front() == "7");
    CHECK(lg.graph.has_edge(lg.id_of("x"), lg.id_of("y")));

    std::istringstream numeric("0 1\n1 2\n2 10\n");
    const auto ng = read_edge_list(numeric);
    CHECK(ng.labels == std::vector<std::string>{"0", "1", "2", "10"});

    std::istringstream split("a b\nc d\n");
    CHECK_THROWS_AS(read_edge_list(split), GraphError);
    std::istringstream dup("a b\nb a\n");
    CHECK_THROWS_AS(read_edge_list(dup), GraphError);
    std::istringstream bad("a b c\n");
    CHECK_THROWS_AS(read_edge_list(bad), GraphError);

    std::ostringstream out;
    write_edge_list(out, ng.graph, ng.labels);
    CHECK(out.str() == "0 1\n1 2\n2 10\n");
}
