#include "spectramark/kernels.hpp"

#include <omp.h>

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "spectramark/linalg.hpp"

namespace spectramark {

int thread_count() {
    if (const char* env = std::getenv("SPECTRAMARK_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
    }
    return omp_get_max_threads();
}

Matrix deleted_shifted(const Matrix& a, const std::vector<std::size_t>& drop, double lambda) {
    const std::size_t n = a.rows();
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i) {
        bool dropped = false;
        for (std::size_t d : drop) dropped = dropped || d == i;
        if (!dropped) keep.push_back(i);
    }
    Matrix m(keep.size(), keep.size());
    for (std::size_t r = 0; r < keep.size(); ++r)
        for (std::size_t c = 0; c < keep.size(); ++c) m(r, c) = a(keep[r], keep[c]);
    for (std::size_t r = 0; r < keep.size(); ++r) m(r, r) -= lambda;
    return m;
}

namespace {

double node_cell(const Matrix& a, std::size_t j, double lambda) { return determinant(deleted_shifted(a, {j}, lambda)); }

double pair_cell(const Matrix& a, std::size_t j, double lambda) {
    double s = 0.0;
    for (std::size_t m = 0; m < a.rows(); ++m)
        if (m != j) s += determinant(deleted_shifted(a, {j, m}, lambda));
    return s;
}

} // namespace

namespace serial {

Matrix node_deleted_shift_determinants(const Graph& g, const std::vector<double>& lambdas) {
    const Matrix a = g.adjacency();
    Matrix d(g.size(), lambdas.size());
    for (std::size_t j = 0; j < g.size(); ++j)
        for (std::size_t k = 0; k < lambdas.size(); ++k) d(j, k) = node_cell(a, j, lambdas[k]);
    return d;
}

std::vector<double> pair_deletion_sums(const Graph& g, double lambda) {
    const Matrix a = g.adjacency();
    std::vector<double> s(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) s[j] = pair_cell(a, j, lambda);
    return s;
}

std::vector<IntPolynomial> node_deleted_char_polys(const Graph& g, std::size_t limit) {
    std::vector<IntPolynomial> out(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) out[j] = char_poly_exact(delete_node(g, j), limit);
    return out;
}

} // namespace serial

namespace parallel {

Matrix node_deleted_shift_determinants(const Graph& g, const std::vector<double>& lambdas) {
    const Matrix a = g.adjacency();
    const long n = static_cast<long>(g.size());
    const long kk = static_cast<long>(lambdas.size());
    Matrix d(g.size(), lambdas.size());
#pragma omp parallel for collapse(2) schedule(dynamic) num_threads(thread_count())
    for (long j = 0; j < n; ++j)
        for (long k = 0; k < kk; ++k)
            d(static_cast<std::size_t>(j), static_cast<std::size_t>(k)) =
                node_cell(a, static_cast<std::size_t>(j), lambdas[static_cast<std::size_t>(k)]);
    return d;
}

std::vector<double> pair_deletion_sums(const Graph& g, double lambda) {
    const Matrix a = g.adjacency();
    const long n = static_cast<long>(g.size());
    std::vector<double> s(g.size());
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
    for (long j = 0; j < n; ++j) s[static_cast<std::size_t>(j)] = pair_cell(a, static_cast<std::size_t>(j), lambda);
    return s;
}

std::vector<IntPolynomial> node_deleted_char_polys(const Graph& g, std::size_t limit) {
    if (g.size() - 1 > limit)
        throw std::length_error("node_deleted_char_polys: N-1=" + std::to_string(g.size() - 1) +
                                " exceeds exact_poly_limit");
    const long n = static_cast<long>(g.size());
    std::vector<IntPolynomial> out(g.size());
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
    for (long j = 0; j < n; ++j)
        out[static_cast<std::size_t>(j)] = char_poly_exact(delete_node(g, static_cast<std::size_t>(j)), limit);
    return out;
}

} // namespace parallel

} // namespace spectramark
