#pragma once

#include <vector>

#include "spectramark/checks.hpp"
#include "spectramark/graph.hpp"
#include "spectramark/polynomial.hpp"
#include "spectramark/spectral.hpp"

namespace spectramark {

struct WeightProfile {
    std::vector<double> w;   ///< w_k = u^T x_k
    std::vector<double> phi; ///< phi_j = row sum of X
    double s_x = 0.0;        ///< u^T X u
    double s_x2 = 0.0;       ///< u^T X^2 u = w^T phi
    std::vector<BigInt> closed_walks; ///< W_m, m = 0..m_max
    std::vector<BigInt> total_walks;  ///< N_m, m = 0..m_max
};

WeightProfile weight_profile(const Graph& g, const SpectralDecomposition& dec, int m_max = 6);

/// Every weight identity with its residual. Failures are data, not exceptions.
IdentityReport identity_suite(const Graph& g, const SpectralDecomposition& dec, const WeightProfile& profile);

/// 1 <= w_1, sqrt(lambda_1 / (1 - 1/omega)) <= w_1 and the reciprocal-component sandwiches for w_k and phi_j.
/// omega is the clique number, supplied by the caller (>= 2).
BoundReport w1_bounds_check(const SpectralDecomposition& dec, const WeightProfile& profile, int omega);

/// sum_{k<n} a_k (b_k - b_n) / (n sum a - sum_l l a_l), l 1-based. a >= 0, b descending.
double generic_spacing_fraction(const std::vector<double>& a, const std::vector<double>& b);

struct SpacingBounds {
    std::vector<double> sorted_phi;  ///< descending
    std::vector<std::size_t> order;  ///< sorted_phi[l] = phi[order[l]]
    double observed_min = 0.0;
    double observed_max = 0.0;
    double f_e1 = 0.0;
    double f_u = 0.0;
    double min_spacing_ub = 0.0;   ///< min(f_e1, f_u)
    double max_spacing_lb = 0.0;   ///< Cauchy-Schwarz bound
    double degree_weighted_lb = 0.0; ///< NaN unless phi_(N) < 0
    BoundReport report;
};

SpacingBounds spacing_bounds(const Graph& g, const WeightProfile& profile);

struct ComplementCoupling {
    std::vector<double> theta; ///< complement eigenvalues, descending
    Matrix z;                  ///< complement eigenvectors
    std::vector<double> v;     ///< v_k = u^T z_k
    Matrix overlap;            ///< x_m^T z_k
    IdentityReport identities;
    BoundReport bounds;
    std::size_t skipped_entries = 0; ///< overlap entries not checked (multiplicity or small denominator)
};

ComplementCoupling complement_coupling(const Graph& g, const SpectralDecomposition& dec,
                                       const SpectralDecomposition& dec_c);

} // namespace spectramark
