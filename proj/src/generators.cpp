#include "spectramark/generators.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace spectramark {

Graph complete_graph(std::size_t n) {
    if (n < 1) throw std::invalid_argument("complete: n must be >= 1");
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) e.push_back({i, j});
    return Graph(n, e);
}

Graph star_graph(std::size_t n) {
    if (n < 1) throw std::invalid_argument("star: n must be >= 1");
    std::vector<Edge> e;
    for (std::size_t i = 1; i < n; ++i) e.push_back({0, i});
    return Graph(n, e);
}

Graph path_graph(std::size_t n) {
    if (n < 1) throw std::invalid_argument("path: n must be >= 1");
    std::vector<Edge> e;
    for (std::size_t i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Graph(n, e);
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle: n must be >= 3");
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return Graph(n, e);
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite: both sides must be >= 1");
    std::vector<Edge> e;
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j) e.push_back({i, a + j});
    return Graph(a + b, e);
}

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("erdos_renyi: n must be >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("erdos_renyi: p must lie in [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double r = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (r < p) e.push_back({i, j});
        }
    }
    return Graph(n, e);
}

Graph connected_erdos_renyi(std::size_t n, double p, std::uint64_t seed, int max_attempts) {
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        Graph g = erdos_renyi(n, p, seed + static_cast<std::uint64_t>(attempt) * 0x9E3779B97F4A7C15ULL);
        if (connected(g)) return g;
    }
    throw std::runtime_error("connected_erdos_renyi: no connected draw within attempt budget");
}

namespace {

std::size_t size_param(const std::vector<double>& params, std::size_t i, const std::string& kind) {
    if (params.size() <= i) throw std::invalid_argument(kind + ": missing size parameter");
    const double v = params[i];
    if (v < 0 || v != std::floor(v)) throw std::invalid_argument(kind + ": size must be a non-negative integer");
    return static_cast<std::size_t>(v);
}

} // namespace

Graph generate(const std::string& kind, const std::vector<double>& params, std::uint64_t seed) {
    if (kind == "complete") return complete_graph(size_param(params, 0, kind));
    if (kind == "star") return star_graph(size_param(params, 0, kind));
    if (kind == "path") return path_graph(size_param(params, 0, kind));
    if (kind == "cycle") return cycle_graph(size_param(params, 0, kind));
    if (kind == "complete_bipartite")
        return complete_bipartite_graph(size_param(params, 0, kind), size_param(params, 1, kind));
    if (kind == "erdos_renyi" || kind == "er") {
        if (params.size() < 2) throw std::invalid_argument("erdos_renyi: needs n and p");
        return erdos_renyi(size_param(params, 0, kind), params[1], seed);
    }
    throw std::invalid_argument("unknown graph kind '" + kind + "'");
}

} // namespace spectramark
