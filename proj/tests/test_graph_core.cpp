#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "spectramark/generators.hpp"
#include "spectramark/graph.hpp"
#include "spectramark/io.hpp"
#include "spectramark/polynomial.hpp"

using namespace spectramark;

namespace {

std::vector<Edge> sorted_edges(const Graph& g) {
    auto e = g.edges();
    std::sort(e.begin(), e.end(), [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
    return e;
}

} // namespace

TEST_CASE("delete_node") {
    SUBCASE("path center leaves two isolated nodes") {
        const Graph h = delete_node(path_graph(3), 1);
        CHECK(h.size() == 2);
        CHECK(h.num_links() == 0);
        CHECK_FALSE(connected(h));
    }
    SUBCASE("triangle minus a node is K2") {
        for (std::size_t j = 0; j < 3; ++j) CHECK(delete_node(complete_graph(3), j) == complete_graph(2));
    }
    SUBCASE("fixture minus node 2") {
        const Graph g = read_graph_file(SPECTRAMARK_DATA_DIR "/er10_fixture.edges", GraphFormat::edge_list);
        const IntPolynomial p = char_poly_exact(delete_node(g, 1));
        CHECK(p == IntPolynomial({0, -4, 0, 16, 0, -19, 0, 8, 0, -1}));
    }
    SUBCASE("surviving degrees drop by the adjacency to the removed node") {
        const Graph g = erdos_renyi(15, 0.4, 11);
        for (std::size_t j = 0; j < g.size(); ++j) {
            const Graph h = delete_node(g, j);
            for (std::size_t i = 0, r = 0; i < g.size(); ++i) {
                if (i == j) continue;
                CHECK(h.degree(r) == g.degree(i) - (g.has_edge(i, j) ? 1 : 0));
                ++r;
            }
        }
    }
    SUBCASE("single node and out of range are errors") {
        CHECK_THROWS_AS(delete_node(Graph(1), 0), std::invalid_argument);
        CHECK_THROWS_AS(delete_node(path_graph(3), 3), std::out_of_range);
    }
}

TEST_CASE("delete_node_pair") {
    CHECK(delete_node_pair(complete_graph(4), 0, 1) == complete_graph(2));
    const Graph p4 = delete_node_pair(path_graph(4), 1, 2);
    CHECK(p4.size() == 2);
    CHECK(p4.num_links() == 0);
    // C5 edges 1-2 2-3 3-4 4-5 5-1; removing 1 and 3 leaves 4-5 and isolated 2
    const Graph c = delete_node_pair(cycle_graph(5), 0, 2);
    CHECK(c.size() == 3);
    CHECK(c.num_links() == 1);
    CHECK(c.has_edge(1, 2));
    CHECK(c.degree(0) == 0);
    CHECK(delete_node_pair(cycle_graph(5), 0, 2) == delete_node_pair(cycle_graph(5), 2, 0));
    CHECK_THROWS(delete_node_pair(path_graph(3), 1, 1));
    CHECK_THROWS(delete_node_pair(complete_graph(2), 0, 1));
}

TEST_CASE("complement") {
    CHECK(complement(complete_graph(5)).num_links() == 0);
    const Graph c = complement(path_graph(3));
    CHECK(c.num_links() == 1);
    CHECK(c.has_edge(0, 2));
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Graph g = erdos_renyi(12, 0.3, seed);
        CHECK(complement(complement(g)) == g);
        CHECK(g.num_links() + complement(g).num_links() == 66);
    }
}

TEST_CASE("generators") {
    CHECK(complete_graph(4).num_links() == 6);
    CHECK(star_graph(5).degrees() == std::vector<int>{4, 1, 1, 1, 1});
    CHECK(path_graph(5).num_links() == 4);
    CHECK(is_regular(cycle_graph(7)));
    const Graph kb = complete_bipartite_graph(2, 3);
    CHECK(kb.num_links() == 6);
    CHECK_FALSE(kb.has_edge(0, 1));
    CHECK_FALSE(kb.has_edge(2, 3));

    SUBCASE("erdos_renyi is deterministic in the seed") {
        CHECK(erdos_renyi(10, 0.2, 42) == erdos_renyi(10, 0.2, 42));
        CHECK(generate("er", {10, 0.2}, 42) == erdos_renyi(10, 0.2, 42));
        bool differs = false;
        for (std::uint64_t s = 1; s < 20 && !differs; ++s) differs = !(erdos_renyi(10, 0.5, s) == erdos_renyi(10, 0.5, 0));
        CHECK(differs);
    }
    SUBCASE("edge rule matches a direct replay of the generator") {
        std::mt19937_64 rng(5);
        const Graph g = erdos_renyi(9, 0.35, 5);
        for (std::size_t i = 0; i < 9; ++i)
            for (std::size_t j = i + 1; j < 9; ++j) {
                const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
                CHECK(g.has_edge(i, j) == (u < 0.35));
            }
    }
    SUBCASE("extreme densities") {
        CHECK(erdos_renyi(8, 0.0, 1).num_links() == 0);
        CHECK(erdos_renyi(8, 1.0, 1) == complete_graph(8));
        CHECK(connected(connected_erdos_renyi(20, 0.1, 3)));
    }
    SUBCASE("bad parameters") {
        CHECK_THROWS(generate("er", {10, 1.5}, 0));
        CHECK_THROWS(generate("cycle", {2}, 0));
        CHECK_THROWS(generate("wheel", {5}, 0));
    }
}

TEST_CASE("parse_graph") {
    CHECK(parse_graph("1 2\n2 3\n", GraphFormat::edge_list) == path_graph(3));
    CHECK(parse_graph("0 1\n1 0\n", GraphFormat::adjacency_matrix) == complete_graph(2));
    CHECK(parse_graph("# comment\n1 2\n\n2 1\n2 3 # trailing\n", GraphFormat::edge_list) == path_graph(3));
    CHECK(parse_graph("# nodes 5\n1 2\n", GraphFormat::edge_list).size() == 5);

    CHECK_THROWS_AS(parse_graph("1 1\n", GraphFormat::edge_list), ParseError);
    CHECK_THROWS_AS(parse_graph("1 x\n", GraphFormat::edge_list), ParseError);
    CHECK_THROWS_AS(parse_graph("1 2 3\n", GraphFormat::edge_list), ParseError);
    CHECK_THROWS_AS(parse_graph("0 2\n", GraphFormat::edge_list), ParseError);
    CHECK_THROWS_AS(parse_graph("0 1\n0 0\n", GraphFormat::adjacency_matrix), ParseError);
    CHECK_THROWS_AS(parse_graph("0 1 0\n1 0\n0 0 0\n", GraphFormat::adjacency_matrix), ParseError);
    CHECK_THROWS_AS(parse_graph("1 0\n0 0\n", GraphFormat::adjacency_matrix), ParseError);

    try {
        parse_graph("1 2\n3 3\n", GraphFormat::edge_list);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }

    SUBCASE("round trips") {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const Graph g = erdos_renyi(11, 0.25, seed);
            CHECK(parse_graph(to_edge_list(g), GraphFormat::edge_list) == g);
            CHECK(parse_graph(to_adjacency_matrix(g), GraphFormat::adjacency_matrix) == g);
        }
    }
}

TEST_CASE("connected") {
    CHECK(connected(path_graph(3)));
    CHECK_FALSE(connected(oracle::two_disjoint_k2()));
    CHECK(connected(star_graph(7)));
    CHECK(connected(Graph(1)));
    CHECK_FALSE(connected(Graph(2)));
}

TEST_CASE("relabeling permutes the adjacency") {
    const Graph g = erdos_renyi(9, 0.4, 3);
    std::vector<std::size_t> perm(9);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), std::mt19937_64(1));
    const Graph h = relabeled(g, perm);
    CHECK(h.num_links() == g.num_links());
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = 0; j < 9; ++j) CHECK(h.has_edge(perm[i], perm[j]) == g.has_edge(i, j));
    CHECK(sorted_edges(relabeled(h, [&] {
              std::vector<std::size_t> inv(9);
              for (std::size_t i = 0; i < 9; ++i) inv[perm[i]] = i;
              return inv;
          }())) == sorted_edges(g));
}

TEST_CASE("stats") {
    const GraphStats s = stats(star_graph(5));
    CHECK(s.num_links == 4);
    CHECK(s.d_min == 1);
    CHECK(s.d_max == 4);
    CHECK(s.d_av == doctest::Approx(1.6));
    CHECK(s.connected);
    CHECK(has_isolated_node(Graph(3, {{0, 1}})));
}
