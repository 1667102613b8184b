#include "vcut/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

namespace vcut::gen {

namespace {

Graph from_pairs(std::size_t n, std::set<Edge> edges) {
    std::vector<Edge> list(edges.begin(), edges.end());
    return Graph(n, list);
}

void add(std::set<Edge>& edges, std::size_t a, std::size_t b) {
    auto u = static_cast<Vertex>(std::min(a, b));
    auto v = static_cast<Vertex>(std::max(a, b));
    if (u != v) edges.emplace(u, v);
}

void add_clique(std::set<Edge>& edges, std::size_t first, std::size_t size) {
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = i + 1; j < size; ++j) add(edges, first + i, first + j);
}

}  // namespace

Graph cycle(std::size_t n) {
    std::set<Edge> e;
    for (std::size_t i = 0; i < n; ++i) add(e, i, (i + 1) % n);
    return from_pairs(n, e);
}

Graph path(std::size_t n) {
    std::set<Edge> e;
    for (std::size_t i = 0; i + 1 < n; ++i) add(e, i, i + 1);
    return from_pairs(n, e);
}

Graph complete(std::size_t n) {
    std::set<Edge> e;
    add_clique(e, 0, n);
    return from_pairs(n, e);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
    std::set<Edge> e;
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j) add(e, i, a + j);
    return from_pairs(a + b, e);
}

Graph petersen() {
    std::set<Edge> e;
    for (std::size_t i = 0; i < 5; ++i) {
        add(e, i, (i + 1) % 5);          // outer cycle
        add(e, i, i + 5);                // spokes
        add(e, 5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return from_pairs(10, e);
}

Graph ladder(std::size_t len) {
    std::set<Edge> e;
    for (std::size_t i = 0; i < len; ++i) {
        add(e, i, len + i);
        if (i + 1 < len) {
            add(e, i, i + 1);
            add(e, len + i, len + i + 1);
        }
    }
    return from_pairs(2 * len, e);
}

Graph barbell(std::size_t clique, std::size_t bridges) { return clique_chain(2, clique, bridges); }

Graph clique_chain(std::size_t count, std::size_t clique, std::size_t bridges) {
    std::set<Edge> e;
    for (std::size_t c = 0; c < count; ++c) {
        add_clique(e, c * clique, clique);
        if (c + 1 < count)
            for (std::size_t b = 0; b < std::min(bridges, clique); ++b)
                add(e, c * clique + b, (c + 1) * clique + b);
    }
    return from_pairs(count * clique, e);
}

Graph k5_plus_two(bool join_extra) {
    std::set<Edge> e;
    add_clique(e, 0, 5);
    for (std::size_t hub : {0, 1, 2}) {
        add(e, 5, hub);
        add(e, 6, hub);
    }
    if (join_extra) add(e, 5, 6);
    return from_pairs(7, e);
}

Graph wheel_graph(std::size_t spokes, std::size_t center, std::size_t spoke_size, std::size_t sector_size) {
    const std::size_t first_sector = center + spokes * spoke_size;
    const std::size_t n = first_sector + spokes * sector_size;
    std::set<Edge> e;
    for (std::size_t t = 0; t < center; ++t)
        for (std::size_t v = 0; v < n; ++v)
            if (v != t) add(e, t, v);
    for (std::size_t i = 0; i < spokes; ++i) {
        std::vector<std::size_t> block;
        for (std::size_t k = 0; k < sector_size; ++k) block.push_back(first_sector + i * sector_size + k);
        for (std::size_t k = 0; k < spoke_size; ++k) {
            block.push_back(center + i * spoke_size + k);
            block.push_back(center + ((i + 1) % spokes) * spoke_size + k);
        }
        for (std::size_t a = 0; a < block.size(); ++a)
            for (std::size_t b = a + 1; b < block.size(); ++b) add(e, block[a], block[b]);
    }
    return from_pairs(n, e);
}

Graph faux_wheel() {
    std::set<Edge> e;
    for (std::size_t i = 0; i < 4; ++i) {
        const std::size_t sector = 12 + 7 * i;
        add_clique(e, sector, 7);
        for (std::size_t s = sector; s < sector + 7; ++s)
            for (std::size_t k = 0; k < 3; ++k) {
                add(e, s, 3 * i + k);
                add(e, s, 3 * ((i + 1) % 4) + k);
            }
    }
    for (std::size_t i : {0, 1})
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = 0; b < 3; ++b) add(e, 3 * i + a, 3 * (i + 2) + b);
    return from_pairs(40, e);
}

Graph blob_ring(std::size_t ring, std::size_t blob) {
    std::set<Edge> e;
    for (std::size_t i = 0; i < ring; ++i) {
        const std::size_t first = ring + blob * i;
        add_clique(e, first, blob);
        for (std::size_t x = first; x < first + blob; ++x) {
            add(e, x, i);
            add(e, x, (i + 1) % ring);
        }
    }
    return from_pairs(ring + ring * blob, e);
}

Graph random_connected(std::size_t n, double p, std::mt19937_64& rng) {
    std::set<Edge> e;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i = 1; i < n; ++i) {
        std::uniform_int_distribution<std::size_t> pick(0, i - 1);
        add(e, order[i], order[pick(rng)]);
    }
    std::bernoulli_distribution coin(p);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (coin(rng)) add(e, i, j);
    return from_pairs(n, e);
}

}  // namespace vcut::gen
