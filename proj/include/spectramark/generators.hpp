#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spectramark/graph.hpp"

namespace spectramark {

Graph complete_graph(std::size_t n);
/// Node 0 (label "1") is the center.
Graph star_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_bipartite_graph(std::size_t a, std::size_t b);

/// G(n, p). Pairs (i<j) are visited row-major; the edge is kept iff
/// (rng() >> 11) * 2^-53 < p with rng = mt19937_64(seed).
Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed);

/// Re-draws with seed + attempt * 0x9E3779B97F4A7C15 until connected.
Graph connected_erdos_renyi(std::size_t n, double p, std::uint64_t seed, int max_attempts = 10000);

/// kind is one of complete, star, path, cycle, complete_bipartite, erdos_renyi (alias er).
/// params: sizes for the deterministic kinds, {n, p} for erdos_renyi.
Graph generate(const std::string& kind, const std::vector<double>& params, std::uint64_t seed = 0);

} // namespace spectramark
