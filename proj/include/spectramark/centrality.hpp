#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spectramark/graph.hpp"
#include "spectramark/matrix.hpp"
#include "spectramark/polynomial.hpp"
#include "spectramark/spectral.hpp"

namespace spectramark {

enum class ComponentMethod { determinantal, eigensolver, walk, resolvent, multiplicity2 };
const char* to_string(ComponentMethod m);

/// (x_k)_j^2 = -det(A_{\j} - lambda_k I) / c'_A(lambda_k). lambda_k must be simple.
double squared_component_det(const Graph& g, const SpectralDecomposition& dec, std::size_t j, std::size_t k);

/// (1/c''_A(lambda)) sum_{n != j} det(A_{\{j,n}} - lambda I) for a double eigenvalue; k is any index of the pair.
/// Equals half of sum_{l in group} (x_l)_j^2.
double squared_component_mult2(const Graph& g, const SpectralDecomposition& dec, std::size_t j, std::size_t k);

/// (x_k)_j (x_k)_m = (-1)^(j+m+1) / c'_A(lambda_k) * det((A - lambda_k I) without row j and column m).
double component_product(const Graph& g, const SpectralDecomposition& dec, std::size_t j, std::size_t m, std::size_t k);

struct SignedComponents {
    std::vector<double> values;
    std::vector<double> b;
    double beta = 0.0;
    std::string choice; ///< "given", "u", "degree" or "e<index>"
};

/// (x_k)_j = -det(A - lambda_k I with row j replaced by b) / (beta c'_A(lambda_k)), beta = b^T x_k.
/// Without b: tries u, then the degree vector, then e_{argmax |x_k|}.
SignedComponents signed_components(const Graph& g, const SpectralDecomposition& dec, std::size_t k,
                                   std::optional<std::vector<double>> b = std::nullopt);

struct RiDecomposition {
    Matrix r;            ///< r(i, k)
    Matrix non_neighbor; ///< sum_{j != i, j not adjacent to i} (x_k)_j^2
    Matrix spread;       ///< (1/2d_i) sum_j a_ij sum_l a_il ((x_k)_l - (x_k)_j)^2
};

/// Requires every node to have degree >= 1.
RiDecomposition r_decomposition(const Graph& g, const SpectralDecomposition& dec);

/// Count of k with Y(j, k) <= zero_tol, per node.
std::vector<int> redundancy(const Matrix& y, double zero_tol = 1e-8);

/// Appendix-style walk expansion. Eigenvalues are refined by Newton on the exact characteristic polynomial in
/// 50-digit arithmetic; b_r(k) come from synthetic division of det(xI - A) by (x - lambda_k).
class WalkExpansion {
public:
    WalkExpansion(const Graph& g, const SpectralDecomposition& dec);

    /// ((-1)^N / c'_A(lambda_k)) sum_r (A^r)_jj b_r(k)
    double squared(std::size_t j, std::size_t k) const;
    /// (-1)^N sum_r W_r b_r(k)
    double derivative_from_closed_walks(std::size_t k) const;
    /// b_r(k), r = 0..N-1.
    std::vector<double> coefficients(std::size_t k) const;
    double refined_eigenvalue(std::size_t k) const;

private:
    std::size_t n_;
    std::vector<std::vector<BigInt>> diag_;      // diag_[r][j] = (A^r)_jj
    std::vector<Float50> lambda_;
    std::vector<std::vector<Float50>> b_;        // b_[k][r]
    std::vector<Float50> q_at_root_;             // p'(lambda_k), p monic
};

double walk_expansion_squared(const Graph& g, const SpectralDecomposition& dec, std::size_t j, std::size_t k);

/// 1 / (1 + a^T (A_{\j} - lambda_k I)^{-2} a), a = column j of A without entry j.
/// Throws DomainError when lambda_k lies in the spectrum of A_{\j} (zero component).
double resolvent_squared(const Graph& g, const SpectralDecomposition& dec, std::size_t j, std::size_t k);

/// True iff some eigenvalue of A_{\j} lies within tol of lambda.
bool in_deleted_spectrum(const Graph& g, std::size_t j, double lambda, double tol);

struct BetaNormalization {
    double beta = 0.0;
    double sum_residual = 0.0;      ///< |sum_j b_j D_j / R_j - 1|
    double beta_sq_residual = 0.0;  ///< |beta^2 + (1/c') sum_j b_j R_j| / max(1, beta^2)
    double inv_beta_sq_residual = 0.0; ///< |1/beta^2 - sum_j D_j^2 / R_j^2| / max(1, 1/beta^2)
    double b_norm_sq = 0.0;
    bool beta_sq_within_norm = true; ///< beta^2 <= ||b||^2
};

BetaNormalization beta_normalization_check(const Graph& g, const SpectralDecomposition& dec, std::size_t k,
                                           const std::vector<double>& b);

struct CentralityOptions {
    double zero_tol = 1e-8;
    bool parallel = true;
};

struct CentralityReport {
    Matrix y;            ///< Y(j, k); degenerate groups hold the group average
    Matrix eigensolver_y; ///< same layout, from the eigensolver (group-averaged likewise)
    std::vector<std::vector<ComponentMethod>> method;
    Matrix residual;     ///< |y - eigensolver_y|
    std::vector<bool> group_averaged; ///< per frequency
    std::vector<int> redundancy;
};

CentralityReport centrality_report(const Graph& g, const SpectralDecomposition& dec, const CentralityOptions& opt = {});

/// X o X, with columns of each multiplicity group replaced by their average.
Matrix group_averaged_squares(const SpectralDecomposition& dec);

} // namespace spectramark
