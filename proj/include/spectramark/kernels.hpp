#pragma once

#include <vector>

#include "spectramark/graph.hpp"
#include "spectramark/matrix.hpp"
#include "spectramark/polynomial.hpp"

namespace spectramark {

/// Worker count: SPECTRAMARK_THREADS if set to a positive integer, else the OpenMP default.
int thread_count();

/// A with rows/columns in `drop` removed, minus lambda on the diagonal.
Matrix deleted_shifted(const Matrix& a, const std::vector<std::size_t>& drop, double lambda);

// Serial reference and OpenMP variants must agree bit-for-bit: each cell is computed by the same
// sequence of floating-point operations, only the assignment of cells to threads differs.

namespace serial {
/// D(j, k) = det(A_{\j} - lambda_k I).
Matrix node_deleted_shift_determinants(const Graph& g, const std::vector<double>& lambdas);
/// s[j] = sum_{n != j} det(A_{\{j,n}} - lambda I).
std::vector<double> pair_deletion_sums(const Graph& g, double lambda);
/// Exact det(A_{\j} - xI) for every j.
std::vector<IntPolynomial> node_deleted_char_polys(const Graph& g, std::size_t limit = default_exact_poly_limit);
} // namespace serial

namespace parallel {
Matrix node_deleted_shift_determinants(const Graph& g, const std::vector<double>& lambdas);
std::vector<double> pair_deletion_sums(const Graph& g, double lambda);
std::vector<IntPolynomial> node_deleted_char_polys(const Graph& g, std::size_t limit = default_exact_poly_limit);
} // namespace parallel

} // namespace spectramark
