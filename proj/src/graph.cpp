#include "spectramark/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace spectramark {

Graph::Graph(std::size_t n) : n_(n), adj_(n * n, 0) { finish({}); }

Graph::Graph(std::size_t n, const std::vector<Edge>& edges, std::vector<std::string> labels)
    : n_(n), adj_(n * n, 0) {
    for (const Edge& e : edges) {
        if (e.u >= n || e.v >= n) throw std::out_of_range("edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("self-loop on node " + std::to_string(e.u + 1));
        adj_[e.u * n + e.v] = 1;
        adj_[e.v * n + e.u] = 1;
    }
    finish(std::move(labels));
}

Graph Graph::from_adjacency(const std::vector<std::vector<int>>& adj, std::vector<std::string> labels) {
    const std::size_t n = adj.size();
    Graph g;
    g.n_ = n;
    g.adj_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (adj[i].size() != n) throw std::invalid_argument("adjacency matrix is not square");
        for (std::size_t j = 0; j < n; ++j) {
            const int a = adj[i][j];
            if (a != 0 && a != 1) throw std::invalid_argument("adjacency entries must be 0 or 1");
            if (i == j && a != 0) throw std::invalid_argument("self-loop on node " + std::to_string(i + 1));
            g.adj_[i * n + j] = static_cast<unsigned char>(a);
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (adj[i][j] != adj[j][i])
                throw std::invalid_argument("adjacency matrix not symmetric at (" + std::to_string(i + 1) + "," +
                                            std::to_string(j + 1) + ")");
    g.finish(std::move(labels));
    return g;
}

void Graph::finish(std::vector<std::string> labels) {
    deg_.assign(n_, 0);
    links_ = 0;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) deg_[i] += adj_[i * n_ + j];
    for (int d : deg_) links_ += static_cast<std::size_t>(d);
    links_ /= 2;
    if (labels.empty()) {
        labels.reserve(n_);
        for (std::size_t i = 0; i < n_; ++i) labels.push_back(std::to_string(i + 1));
    }
    if (labels.size() != n_) throw std::invalid_argument("label count does not match node count");
    labels_ = std::move(labels);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(links_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (has_edge(i, j)) out.push_back({i, j});
    return out;
}

std::vector<std::size_t> Graph::neighbors(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < n_; ++j)
        if (has_edge(i, j)) out.push_back(j);
    return out;
}

Matrix Graph::adjacency() const {
    Matrix a(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) a(i, j) = adj_[i * n_ + j];
    return a;
}

GraphStats stats(const Graph& g) {
    GraphStats s;
    s.num_links = g.num_links();
    s.degree_vector = g.degrees();
    if (g.size() > 0) {
        s.d_min = s.degree_vector.front();
        s.d_max = s.degree_vector.front();
        for (int d : s.degree_vector) {
            s.d_min = std::min(s.d_min, d);
            s.d_max = std::max(s.d_max, d);
        }
        s.d_av = 2.0 * static_cast<double>(s.num_links) / static_cast<double>(g.size());
    }
    s.connected = connected(g);
    return s;
}

bool connected(const Graph& g) {
    const std::size_t n = g.size();
    if (n == 0) return false;
    std::vector<bool> seen(n, false);
    std::queue<std::size_t> q;
    q.push(0);
    seen[0] = true;
    std::size_t count = 1;
    while (!q.empty()) {
        const std::size_t i = q.front();
        q.pop();
        for (std::size_t j = 0; j < n; ++j) {
            if (g.has_edge(i, j) && !seen[j]) {
                seen[j] = true;
                ++count;
                q.push(j);
            }
        }
    }
    return count == n;
}

bool is_regular(const Graph& g) {
    for (std::size_t i = 1; i < g.size(); ++i)
        if (g.degree(i) != g.degree(0)) return false;
    return true;
}

bool has_isolated_node(const Graph& g) {
    for (int d : g.degrees())
        if (d == 0) return true;
    return false;
}

namespace {

Graph keep_nodes(const Graph& g, const std::vector<std::size_t>& keep) {
    std::vector<std::size_t> map(g.size(), g.size());
    for (std::size_t a = 0; a < keep.size(); ++a) map[keep[a]] = a;
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (map[e.u] < g.size() && map[e.v] < g.size()) edges.push_back({map[e.u], map[e.v]});
    std::vector<std::string> labels;
    for (std::size_t i : keep) labels.push_back(g.labels()[i]);
    return Graph(keep.size(), edges, std::move(labels));
}

} // namespace

Graph delete_node(const Graph& g, std::size_t j) {
    if (g.size() < 2) throw std::invalid_argument("delete_node: graph has a single node");
    if (j >= g.size()) throw std::out_of_range("delete_node: node " + std::to_string(j + 1) + " out of range");
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (i != j) keep.push_back(i);
    return keep_nodes(g, keep);
}

Graph delete_node_pair(const Graph& g, std::size_t j, std::size_t m) {
    if (j >= g.size() || m >= g.size()) throw std::out_of_range("delete_node_pair: node out of range");
    if (j == m) throw std::invalid_argument("delete_node_pair: indices must differ");
    if (g.size() < 3) throw std::invalid_argument("delete_node_pair: graph needs at least 3 nodes");
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (i != j && i != m) keep.push_back(i);
    return keep_nodes(g, keep);
}

Graph complement(const Graph& g) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (!g.has_edge(i, j)) edges.push_back({i, j});
    return Graph(g.size(), edges, g.labels());
}

Graph relabeled(const Graph& g, const std::vector<std::size_t>& perm) {
    if (perm.size() != g.size()) throw std::invalid_argument("relabeled: permutation size mismatch");
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
    return Graph(g.size(), edges);
}

} // namespace spectramark
