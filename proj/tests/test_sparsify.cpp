#include "brute.hpp"
#include "doctest.h"
#include "vcut/flow.hpp"
#include "vcut/generators.hpp"
#include "vcut/sparsify.hpp"

using namespace vcut;

namespace {

void check_preserved(const Graph& g, const Graph& sparse, std::size_t k) {
    CHECK(sparse.m() <= (k + 1) * g.n());
    for (auto [a, b] : sparse.edges()) CHECK(g.has_edge(a, b));
    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v = u + 1; v < g.n(); ++v)
            CHECK(std::min(mixed_connectivity(sparse, u, v), k + 1) ==
                  std::min(mixed_connectivity(g, u, v), k + 1));
}

}  // namespace

TEST_CASE("K8 with k = 2 keeps at most 24 edges") {
    const Graph k8 = gen::complete(8);
    const Graph sparse = nagamochi_ibaraki(k8, 2);
    CHECK(sparse.m() <= 24);
    check_preserved(k8, sparse, 2);
}

TEST_CASE("random G(20, 0.5) with k = 3") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 3; ++trial) {
        const Graph g = gen::random_connected(20, 0.5, rng);
        check_preserved(g, nagamochi_ibaraki(g, 3), 3);
    }
}

TEST_CASE("sparse input is returned unchanged") {
    const Graph c8 = gen::cycle(8);
    CHECK(nagamochi_ibaraki(c8, 1) == c8);
    const Graph pet = gen::petersen();
    CHECK(nagamochi_ibaraki(pet, 3) == pet);
}

TEST_CASE("small separators leave identical components") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = gen::random_connected(14, 0.45, rng);
        const std::size_t k = 1 + trial % 4;
        const Graph sparse = nagamochi_ibaraki(g, k);
        std::vector<Vertex> pool(g.n());
        for (Vertex v = 0; v < g.n(); ++v) pool[v] = v;
        brute::for_each_subset(pool, k, [&](const VertexSet& x) {
            const auto dense_parts = components_after_removal(g, x);
            const auto sparse_parts = components_after_removal(sparse, x);
            CHECK(dense_parts.sides() == sparse_parts.sides());
        });
    }
}

TEST_CASE("forest indices are deterministic and start at one") {
    const Graph g = gen::complete(5);
    const auto idx = forest_indices(g);
    CHECK(idx == forest_indices(g));
    CHECK(*std::min_element(idx.begin(), idx.end()) == 1);
    CHECK(*std::max_element(idx.begin(), idx.end()) == 4);
}
