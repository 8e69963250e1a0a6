#pragma once

#include <vector>

#include "spectramark/checks.hpp"
#include "spectramark/graph.hpp"
#include "spectramark/spectral.hpp"

namespace spectramark {

/// (x_k)_i^2 <= 1/(1 + lambda_k^2/d_i) for every (i, k).
BoundReport upper_bound_squared(const Graph& g, const SpectralDecomposition& dec);

/// min_j (x_k)_j^2 <= (1 - (d_min/2) s_k)/(lambda_k^2/d_min + N - d_min), s_k the minimal square spacing of x_k.
BoundReport nikiforov_extended(const Graph& g, const SpectralDecomposition& dec);

/// Walk bounds for one exponent m (0 <= m <= 16):
///   min_j (x_k)_j <= lambda_k^m w_k / N_m <= max_j (x_k)_j
///   |lambda_k^m| / sqrt(N_2m) <= max_j (x_k)_j
///   min_k (x_k)_j^2 <= (A^m)_jj / W_m <= max_k (x_k)_j^2
BoundReport walk_minmax_bounds(const Graph& g, const SpectralDecomposition& dec, int m);

/// max_j |(A^m)_jj / W_m - (x_1)_j^2|.
double walk_ratio_limit_error(const Graph& g, const SpectralDecomposition& dec, int m);

/// 4/(N(3 + (A^4)_ii/d_i^2)) <= max_k (x_k)_i^2.
BoundReport max_component_lb(const Graph& g, const SpectralDecomposition& dec);

/// Harmonic-mean bounds on the minimum over k (per node) and over i (per frequency).
BoundReport min_over_k_and_i_bounds(const Graph& g, const SpectralDecomposition& dec);

/// lambda_1 >= sqrt(d_max) and min lambda^2 <= d_min.
BoundReport classical_bounds(const Graph& g, const SpectralDecomposition& dec);

/// r_i(k) reconstruction, range, Sum_k (1 - r_i(k)) = 2 and both unity sums.
IdentityReport r_identity_suite(const Graph& g, const SpectralDecomposition& dec);

struct SiProfile {
    std::vector<double> s;
    double min_lambda_sq = 0.0;
    double reconstruction_residual = 0.0; ///< max_i |d_i(1-S_i)/(1+S_i) - min lambda^2| / max(1, min lambda^2)
    bool connected = false;
    BoundReport entries;
};

/// Requires every degree >= 1. On connected graphs asserts min lambda^2 < d_min strictly;
/// if min lambda^2 equals d_min the graph must be disconnected.
SiProfile si_profile(const Graph& g, const SpectralDecomposition& dec);

/// d_min - min lambda^2 - mu_{N-1}; reported only.
double xi_statistic(const Graph& g, const SpectralDecomposition& dec);

/// Every inequality above for m = 0..m_max, concatenated.
BoundReport full_bound_suite(const Graph& g, const SpectralDecomposition& dec, int m_max = 3);

} // namespace spectramark
