#pragma once

#include <cstddef>
#include <random>

#include "vcut/graph.hpp"

namespace vcut::gen {

Graph cycle(std::size_t n);
Graph path(std::size_t n);
Graph complete(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph petersen();
/// 2 x len grid: rails 0..len-1 and len..2len-1, rung i joins i and len+i.
Graph ladder(std::size_t len);
/// Two cliques of `clique` vertices joined by `bridges` disjoint edges.
Graph barbell(std::size_t clique, std::size_t bridges);
/// `count` cliques in a row, consecutive ones joined by `bridges` disjoint edges.
Graph clique_chain(std::size_t count, std::size_t clique, std::size_t bridges);
/// K5 on 0..4 plus vertices 5 and 6, each adjacent to exactly {0,1,2},
/// optionally joined by the edge 5-6.
Graph k5_plus_two(bool join_extra);
/// Wheel with `spokes` spokes around a center of `center` vertices. Ids:
/// center 0..center-1, then spoke i as a block of `spoke_size`, then sector i
/// as a block of `sector_size`. The center is joined to everything and each
/// sector forms a clique with its two spokes.
Graph wheel_graph(std::size_t spokes, std::size_t center, std::size_t spoke_size, std::size_t sector_size);
/// Four spokes of three vertices (ids 3i..3i+2) and four K7 sectors (ids
/// 12 + 7i ..), sector i joined to spokes i and i+1, plus complete bipartite
/// joins between spokes 0, 2 and between spokes 1, 3. Every C_i + C_{i+1} is a
/// 6-cut, yet C_0 + C_2 is not a cut.
Graph faux_wheel();
/// `ring` pairwise non-adjacent vertices 0..ring-1 in a cycle, with a clique
/// of `blob` vertices between each consecutive pair: blob i starts at
/// ring + blob * i and is joined completely to ring vertices i and i + 1.
Graph blob_ring(std::size_t ring, std::size_t blob);
/// Random spanning tree plus independent edges with probability p.
Graph random_connected(std::size_t n, double p, std::mt19937_64& rng);

}  // namespace vcut::gen
