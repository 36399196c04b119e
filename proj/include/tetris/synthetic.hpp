#ifndef TETRIS_SYNTHETIC_HPP
#define TETRIS_SYNTHETIC_HPP

#include <cstdint>
#include <iosfwd>

#include "tetris/graph.hpp"

namespace tetris {

// Erdős–Rényi G(n,p) via geometric skip sampling.
Graph gnp_graph(std::uint32_t n, double p, std::uint64_t seed);

// G(n,p) retried over derived seeds until connected.
Graph connected_gnp_graph(std::uint32_t n, double p, std::uint64_t seed,
                          int max_attempts = 100);

// Preferential attachment with triad formation: each new vertex makes
// edges_per_vertex attachments, the first by degree-proportional
// choice and the rest with probability triad_probability to a random
// neighbor of the previous target (closing a triangle), otherwise by a
// fresh degree-proportional choice.
Graph preferential_attachment_graph(std::uint32_t n,
                                    std::uint32_t edges_per_vertex,
                                    double triad_probability,
                                    std::uint64_t seed);

// Dense blocks of block_size vertices wired as G(block_size, p_within),
// plus per-vertex random cross-block edges with probability p_cross;
// any leftover components are bridged so the result is connected.
Graph community_graph(std::uint32_t n, std::uint32_t block_size,
                      double p_within, double p_cross, std::uint64_t seed);

// One "u v" line per edge, dense ids, ascending.
void write_edge_list(const Graph& g, std::ostream& out);

} // namespace tetris

#endif // TETRIS_SYNTHETIC_HPP
