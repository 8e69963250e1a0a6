#pragma once

#include <stdexcept>
#include <vector>

#include "spectramark/graph.hpp"
#include "spectramark/matrix.hpp"

namespace spectramark {

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SpectralOptions {
    double mult_tol = -1.0; ///< negative: 1e-7 * max(1, |lambda_1|)
    double sign_tol = 1e-9;
    int max_sweeps = 100;
    double orthogonality_tol = 1e-10;
    double residual_tol = 1e-8; ///< scaled by max(1, |lambda_1|)
};

/// Indices [first, last] (inclusive, 0-based) of one run of numerically equal eigenvalues.
struct MultiplicityGroup {
    std::size_t first;
    std::size_t last;
    std::size_t size() const noexcept { return last - first + 1; }
    bool contains(std::size_t k) const noexcept { return k >= first && k <= last; }
};

struct SpectralDecomposition {
    std::vector<double> eigenvalues; ///< descending
    Matrix vectors;                  ///< column k is x_k
    std::vector<MultiplicityGroup> groups;
    std::vector<std::size_t> group_index; ///< group of each frequency
    double mult_tol = 0.0;
    double orthogonality_error = 0.0;
    double residual = 0.0;

    std::size_t size() const noexcept { return eigenvalues.size(); }
    double x(std::size_t j, std::size_t k) const { return vectors(j, k); }
    const MultiplicityGroup& group_of(std::size_t k) const { return groups[group_index[k]]; }
    bool simple(std::size_t k) const { return group_of(k).size() == 1; }
    bool all_simple() const noexcept { return groups.size() == eigenvalues.size(); }
};

/// Cyclic Jacobi on a symmetric matrix, sorted descending, sign-canonicalized.
/// Throws ConvergenceError with a residual report if the contracts fail.
SpectralDecomposition decompose(const Matrix& a, const SpectralOptions& opt = {});
SpectralDecomposition decompose(const Graph& g, const SpectralOptions& opt = {});

/// det(A - lambda I) by LU.
double det_shift(const Graph& g, double lambda);

/// c'_A(lambda_k) = (-1)^N prod_{m != k} (lambda_k - lambda_m). Throws DomainError for repeated eigenvalues.
double char_poly_derivative_at(const SpectralDecomposition& dec, std::size_t k);

/// c''_A at a double eigenvalue: 2 (-1)^N prod_{m outside the group} (lambda_k - lambda_m).
double char_poly_second_derivative_at(const SpectralDecomposition& dec, std::size_t k);

/// Laplacian diag(d) - A.
Matrix laplacian(const Graph& g);

} // namespace spectramark
