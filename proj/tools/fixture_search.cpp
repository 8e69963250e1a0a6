// Enumerates labeled simple graphs with degree sequence (3,3,1,4,2,2,1,2,2,2) and keeps those whose
// characteristic polynomial and all ten node-deleted polynomials match the published coefficients.

#include <array>
#include <iostream>
#include <vector>

#include "spectramark/graph.hpp"
#include "spectramark/polynomial.hpp"

using namespace spectramark;

namespace {

constexpr std::size_t n = 10;
constexpr std::array<int, n> degree = {3, 3, 1, 4, 2, 2, 1, 2, 2, 2};

// det(A - xI), lowest power first
const std::vector<std::vector<int>> whole = {{-4, 4, 27, -10, -52, 8, 38, -2, -11, 0, 1}};
const std::vector<std::vector<int>> deleted = {
    {-2, -5, 6, 17, -6, -19, 2, 8, 0, -1}, {0, -4, 0, 16, 0, -19, 0, 8, 0, -1},
    {0, -8, 4, 29, -6, -29, 2, 10, 0, -1}, {0, -4, 0, 14, 0, -16, 0, 7, 0, -1},
    {-2, -5, 8, 20, -8, -23, 2, 9, 0, -1}, {2, -7, -4, 25, 2, -25, 0, 9, 0, -1},
    {-2, -9, 6, 30, -6, -29, 2, 10, 0, -1}, {0, -4, 2, 18, -4, -22, 2, 9, 0, -1},
    {0, -4, 4, 20, -6, -23, 2, 9, 0, -1},  {0, -4, 4, 19, -6, -23, 2, 9, 0, -1}};

IntPolynomial poly(const std::vector<int>& c) { return IntPolynomial(std::vector<BigInt>(c.begin(), c.end())); }

struct Search {
    std::array<int, n> rem = degree;
    std::vector<Edge> edges;
    std::vector<std::vector<Edge>> found;
    IntPolynomial target = poly(whole[0]);
    std::vector<IntPolynomial> targets;
    long long candidates = 0;

    void check() {
        ++candidates;
        const Graph g(n, edges);
        if (char_poly_exact(g) != target) return;
        for (std::size_t j = 0; j < n; ++j)
            if (char_poly_exact(delete_node(g, j)) != targets[j]) return;
        found.push_back(edges);
    }

    void choose(std::size_t i, std::size_t from, int need) {
        if (need == 0) {
            rec(i + 1);
            return;
        }
        for (std::size_t j = from; j < n; ++j) {
            if (rem[j] == 0) continue;
            --rem[j];
            edges.push_back({i, j});
            choose(i, j + 1, need - 1);
            edges.pop_back();
            ++rem[j];
        }
    }

    void rec(std::size_t i) {
        if (i == n) {
            check();
            return;
        }
        const int need = rem[i];
        rem[i] = 0;
        choose(i, i + 1, need);
        rem[i] = need;
    }
};

} // namespace

int main() {
    Search s;
    for (const auto& c : deleted) s.targets.push_back(poly(c));
    s.rec(0);
    std::cout << "candidates with the degree sequence: " << s.candidates << '\n';
    std::cout << "matching graphs: " << s.found.size() << '\n';
    for (const auto& es : s.found) {
        for (const Edge& e : es) std::cout << e.u + 1 << '-' << e.v + 1 << ' ';
        std::cout << '\n';
    }
    return s.found.size() == 1 ? 0 : 1;
}
