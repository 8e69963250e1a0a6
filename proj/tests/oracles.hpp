#pragma once
// Independent reference computations used only by the tests.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "spectramark/graph.hpp"
#include "spectramark/matrix.hpp"

namespace oracle {

using Rational = boost::multiprecision::cpp_rational;

/// Laplace expansion along the first row. Exponential; n <= 9.
inline double cofactor_det(const std::vector<std::vector<double>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1.0;
    if (n == 1) return m[0][0];
    double total = 0.0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0.0) continue;
        std::vector<std::vector<double>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<double> row;
            for (std::size_t cc = 0; cc < n; ++cc)
                if (cc != c) row.push_back(m[r][cc]);
            minor.push_back(std::move(row));
        }
        total += (c % 2 == 0 ? 1.0 : -1.0) * m[0][c] * cofactor_det(minor);
    }
    return total;
}

inline std::vector<std::vector<double>> to_rows(const spectramark::Matrix& a) {
    std::vector<std::vector<double>> out(a.rows(), std::vector<double>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out[i][j] = a(i, j);
    return out;
}

/// Exact det(A - xI) for integer x by rational Gaussian elimination.
inline Rational shifted_det_exact(const spectramark::Graph& g, long x) {
    const std::size_t n = g.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = (g.has_edge(i, j) ? 1 : 0) - (i == j ? x : 0);
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            const Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

/// Number of walks of exactly m hops from i to j, by enumeration.
inline long count_walks(const spectramark::Graph& g, int m, std::size_t i, std::size_t j) {
    if (m == 0) return i == j ? 1 : 0;
    long total = 0;
    for (std::size_t v = 0; v < g.size(); ++v)
        if (g.has_edge(i, v)) total += count_walks(g, m - 1, v, j);
    return total;
}

/// max_k ||A x_k - lambda_k x_k||_inf
inline double eigen_residual(const spectramark::Graph& g, const std::vector<double>& lambda, const spectramark::Matrix& x) {
    double worst = 0.0;
    const std::size_t n = g.size();
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < n; ++j)
                if (g.has_edge(i, j)) s += x(j, k);
            worst = std::max(worst, std::abs(s - lambda[k] * x(i, k)));
        }
    return worst;
}

/// Monic gcd over Q of two integer polynomials, coefficients low to high. Euclid in exact arithmetic.
inline std::vector<Rational> poly_gcd(const std::vector<boost::multiprecision::cpp_int>& p,
                                      const std::vector<boost::multiprecision::cpp_int>& q) {
    auto trim = [](std::vector<Rational>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    std::vector<Rational> a(p.begin(), p.end()), b(q.begin(), q.end());
    trim(a);
    trim(b);
    while (!b.empty()) {
        while (a.size() >= b.size()) {
            const Rational f = a.back() / b.back();
            const std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    if (!a.empty()) {
        const Rational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

inline spectramark::Graph two_disjoint_k2() { return spectramark::Graph(4, {{0, 1}, {2, 3}}); }

} // namespace oracle
