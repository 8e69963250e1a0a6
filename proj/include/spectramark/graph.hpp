#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "spectramark/matrix.hpp"

namespace spectramark {

/// 0-based internally; the I/O and report layers add 1.
struct Edge {
    std::size_t u;
    std::size_t v;
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected simple graph on a dense 0/1 adjacency matrix. Immutable.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);
    Graph(std::size_t n, const std::vector<Edge>& edges, std::vector<std::string> labels = {});
    /// Validates symmetry, 0/1 entries and zero diagonal.
    static Graph from_adjacency(const std::vector<std::vector<int>>& adj, std::vector<std::string> labels = {});

    std::size_t size() const noexcept { return n_; }
    bool has_edge(std::size_t i, std::size_t j) const { return adj_[i * n_ + j] != 0; }
    int degree(std::size_t i) const { return deg_[i]; }
    const std::vector<int>& degrees() const noexcept { return deg_; }
    std::size_t num_links() const noexcept { return links_; }
    std::vector<Edge> edges() const;
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::vector<std::size_t> neighbors(std::size_t i) const;
    Matrix adjacency() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

private:
    std::size_t n_ = 0;
    std::vector<unsigned char> adj_;
    std::vector<int> deg_;
    std::size_t links_ = 0;
    std::vector<std::string> labels_;
    void finish(std::vector<std::string> labels);
};

struct GraphStats {
    std::size_t num_links = 0;
    std::vector<int> degree_vector;
    int d_min = 0;
    int d_max = 0;
    double d_av = 0.0;
    bool connected = false;
};

GraphStats stats(const Graph& g);
bool connected(const Graph& g);
bool is_regular(const Graph& g);
bool has_isolated_node(const Graph& g);

Graph delete_node(const Graph& g, std::size_t j);
Graph delete_node_pair(const Graph& g, std::size_t j, std::size_t m);
Graph complement(const Graph& g);
/// Node i of g becomes node perm[i] of the result.
Graph relabeled(const Graph& g, const std::vector<std::size_t>& perm);

} // namespace spectramark
