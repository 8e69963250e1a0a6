#include "spectramark/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "spectramark/kernels.hpp"
#include "spectramark/linalg.hpp"

namespace spectramark {

const char* to_string(ComponentMethod m) {
    switch (m) {
    case ComponentMethod::determinantal: return "determinantal";
    case ComponentMethod::eigensolver: return "eigensolver";
    case ComponentMethod::walk: return "walk";
    case ComponentMethod::resolvent: return "resolvent";
    case ComponentMethod::multiplicity2: return "multiplicity2";
    }
    return "?";
}

namespace {

void check_indices(const SpectralDecomposition& dec, std::size_t j, std::size_t k) {
    if (j >= dec.size()) throw std::out_of_range("node " + std::to_string(j + 1) + " out of range");
    if (k >= dec.size()) throw std::out_of_range("frequency " + std::to_string(k + 1) + " out of range");
}

void require_simple(const SpectralDecomposition& dec, std::size_t k) {
    if (!dec.simple(k))
        throw DomainError("eigenvalue " + std::to_string(k + 1) +
                          " is repeated; use squared_component_mult2 or the group sum");
}

// A - lambda I with row j replaced by b.
Matrix row_replaced(const Matrix& a, double lambda, std::size_t j, const std::vector<double>& b) {
    Matrix m = shifted(a, lambda);
    for (std::size_t c = 0; c < a.cols(); ++c) m(j, c) = b[c];
    return m;
}

} // namespace

double squared_component_det(const Graph& g, const SpectralDecomposition& dec, std::size_t j, std::size_t k) {
    check_indices(dec, j, k);
    require_simple(dec, k);
    const double d = determinant(deleted_shifted(g.adjacency(), {j}, dec.eigenvalues[k]));
    return -d / char_poly_derivative_at(dec, k);
}

double squared_component_mult2(const Graph& g, const SpectralDecomposition& dec, std::size_t j, std::size_t k) {
    check_indices(dec, j, k);
    const MultiplicityGroup& grp = dec.group_of(k);
    if (grp.size() != 2)
        throw DomainError("multiplicity-2 formula needs a group of size 2, got " + std::to_string(grp.size()));
    const double lam = 0.5 * (dec.eigenvalues[grp.first] + dec.eigenvalues[grp.last]);
    const Matrix a = g.adjacency();
    double s = 0.0;
    for (std::size_t m = 0; m < g.size(); ++m)
        if (m != j) s += determinant(deleted_shifted(a, {j, m}, lam));
    return s / char_poly_second_derivative_at(dec, k);
}

double component_product(const Graph& g, const SpectralDecomposition& dec, std::size_t j, std::size_t m, std::size_t k) {
    check_indices(dec, j, k);
    check_indices(dec, m, k);
    require_simple(dec, k);
    const std::size_t n = g.size();
    const Matrix a = shifted(g.adjacency(), dec.eigenvalues[k]);
    Matrix minor(n - 1, n - 1);
    for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
            if (c == m) continue;
            minor(rr, cc++) = a(r, c);
        }
        ++rr;
    }
    const double sign = ((j + m + 1) % 2 == 0) ? 1.0 : -1.0;
    return sign * determinant(minor) / char_poly_derivative_at(dec, k);
}

SignedComponents signed_components(const Graph& g, const SpectralDecomposition& dec, std::size_t k,
                                   std::optional<std::vector<double>> b) {
    check_indices(dec, 0, k);
    require_simple(dec, k);
    const std::size_t n = g.size();
    const auto beta_of = [&](const std::vector<double>& v) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) s += v[j] * dec.x(j, k);
        return s;
    };
    constexpr double beta_tol = 1e-8;

    SignedComponents out;
    if (b) {
        if (b->size() != n) throw std::invalid_argument("signed_components: b has wrong length");
        out.b = *b;
        out.choice = "given";
        out.beta = beta_of(out.b);
        if (std::abs(out.beta) <= beta_tol) throw DomainError("b orthogonal to eigenvector; choose another b");
    } else {
        std::vector<double> u(n, 1.0);
        std::vector<double> d(g.degrees().begin(), g.degrees().end());
        if (std::abs(beta_of(u)) > beta_tol) {
            out.b = u;
            out.choice = "u";
        } else if (std::abs(beta_of(d)) > beta_tol) {
            out.b = d;
            out.choice = "degree";
        } else {
            std::size_t best = 0;
            for (std::size_t j = 1; j < n; ++j)
                if (std::abs(dec.x(j, k)) > std::abs(dec.x(best, k))) best = j;
            out.b.assign(n, 0.0);
            out.b[best] = 1.0;
            out.choice = "e" + std::to_string(best + 1);
        }
        out.beta = beta_of(out.b);
    }

    const Matrix a = g.adjacency();
    const double cp = char_poly_derivative_at(dec, k);
    out.values.resize(n);
    for (std::size_t j = 0; j < n; ++j)
        out.values[j] = -determinant(row_replaced(a, dec.eigenvalues[k], j, out.b)) / (out.beta * cp);
    return out;
}

RiDecomposition r_decomposition(const Graph& g, const SpectralDecomposition& dec) {
    const std::size_t n = g.size();
    for (std::size_t i = 0; i < n; ++i)
        if (g.degree(i) == 0)
            throw DomainError("r_decomposition: node " + std::to_string(i + 1) + " is isolated (d_i = 0)");
    RiDecomposition out{Matrix(n, n), Matrix(n, n), Matrix(n, n)};
    std::vector<std::vector<std::size_t>> nbrs(n);
    for (std::size_t i = 0; i < n; ++i) nbrs[i] = g.neighbors(i);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            double non = 0.0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i && !g.has_edge(i, j)) non += dec.x(j, k) * dec.x(j, k);
            double spread = 0.0;
            for (std::size_t j : nbrs[i])
                for (std::size_t l : nbrs[i]) {
                    const double diff = dec.x(l, k) - dec.x(j, k);
                    spread += diff * diff;
                }
            spread /= 2.0 * g.degree(i);
            out.non_neighbor(i, k) = non;
            out.spread(i, k) = spread;
            out.r(i, k) = non + spread;
        }
    }
    return out;
}

std::vector<int> redundancy(const Matrix& y, double zero_tol) {
    std::vector<int> r(y.rows(), 0);
    for (std::size_t j = 0; j < y.rows(); ++j)
        for (std::size_t k = 0; k < y.cols(); ++k)
            if (y(j, k) <= zero_tol) ++r[j];
    return r;
}

WalkExpansion::WalkExpansion(const Graph& g, const SpectralDecomposition& dec) : n_(g.size()) {
    if (!dec.all_simple()) throw DomainError("walk expansion needs all eigenvalues simple");
    const IntPolynomial c = char_poly_exact(g);
    // monic p(x) = det(xI - A) = (-1)^N c_A(x)
    std::vector<Float50> p(n_ + 1);
    for (std::size_t r = 0; r <= n_; ++r) p[r] = Float50(n_ % 2 == 0 ? c.coeff(r) : BigInt(-c.coeff(r)));
    const auto eval = [&](const std::vector<Float50>& poly, const Float50& x) {
        Float50 acc = 0;
        for (std::size_t r = poly.size(); r-- > 0;) acc = acc * x + poly[r];
        return acc;
    };
    std::vector<Float50> dp(n_);
    for (std::size_t r = 1; r <= n_; ++r) dp[r - 1] = p[r] * static_cast<int>(r);

    diag_ = closed_walk_diagonals(g, static_cast<int>(n_) - 1);
    lambda_.resize(n_);
    b_.assign(n_, std::vector<Float50>(n_));
    q_at_root_.resize(n_);
    const Float50 eps = Float50(1e-45);
    for (std::size_t k = 0; k < n_; ++k) {
        Float50 l = dec.eigenvalues[k];
        for (int it = 0; it < 30; ++it) {
            const Float50 step = eval(p, l) / eval(dp, l);
            l -= step;
            if (abs(step) <= eps * (1 + abs(l))) break;
        }
        lambda_[k] = l;
        std::vector<Float50>& q = b_[k];
        q[n_ - 1] = p[n_];
        for (std::size_t r = n_ - 1; r >= 1; --r) q[r - 1] = p[r] + l * q[r];
        q_at_root_[k] = eval(q, l);
    }
}

double WalkExpansion::squared(std::size_t j, std::size_t k) const {
    Float50 s = 0;
    for (std::size_t r = 0; r < n_; ++r) s += Float50(diag_[r][j]) * b_[k][r];
    return static_cast<double>(s / q_at_root_[k]);
}

double WalkExpansion::derivative_from_closed_walks(std::size_t k) const {
    Float50 s = 0;
    for (std::size_t r = 0; r < n_; ++r) {
        BigInt w = 0;
        for (std::size_t j = 0; j < n_; ++j) w += diag_[r][j];
        s += Float50(w) * b_[k][r];
    }
    return static_cast<double>(n_ % 2 == 0 ? s : Float50(-s));
}

std::vector<double> WalkExpansion::coefficients(std::size_t k) const {
    std::vector<double> out(n_);
    for (std::size_t r = 0; r < n_; ++r) out[r] = static_cast<double>(b_[k][r]);
    return out;
}

double WalkExpansion::refined_eigenvalue(std::size_t k) const { return static_cast<double>(lambda_[k]); }

double walk_expansion_squared(const Graph& g, const SpectralDecomposition& dec, std::size_t j, std::size_t k) {
    check_indices(dec, j, k);
    return WalkExpansion(g, dec).squared(j, k);
}

double resolvent_squared(const Graph& g, const SpectralDecomposition& dec, std::size_t j, std::size_t k) {
    check_indices(dec, j, k);
    require_simple(dec, k);
    const double lam = dec.eigenvalues[k];
    const Matrix a = g.adjacency();
    if (g.size() == 1) return 1.0;
    const LuResult f = lu_factor(deleted_shifted(a, {j}, lam));
    if (f.singular || f.min_pivot < 1e-10 * std::max(1.0, std::abs(lam)))
        throw DomainError("lambda_k in spectrum of node-deleted graph; component is 0");
    std::vector<double> col;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (i != j) col.push_back(a(i, j));
    const std::vector<double> y = lu_solve(f, col);
    return 1.0 / (1.0 + dot(y, y));
}

bool in_deleted_spectrum(const Graph& g, std::size_t j, double lambda, double tol) {
    if (g.size() == 1) return false;
    const SpectralDecomposition sub = decompose(delete_node(g, j));
    for (double mu : sub.eigenvalues)
        if (std::abs(mu - lambda) <= tol) return true;
    return false;
}

BetaNormalization beta_normalization_check(const Graph& g, const SpectralDecomposition& dec, std::size_t k,
                                           const std::vector<double>& b) {
    check_indices(dec, 0, k);
    require_simple(dec, k);
    const std::size_t n = g.size();
    if (b.size() != n) throw std::invalid_argument("beta_normalization_check: b has wrong length");
    BetaNormalization out;
    for (std::size_t j = 0; j < n; ++j) {
        out.beta += b[j] * dec.x(j, k);
        out.b_norm_sq += b[j] * b[j];
    }
    if (std::abs(out.beta) <= 1e-8) throw DomainError("b orthogonal to eigenvector; choose another b");

    const Matrix a = g.adjacency();
    const double lam = dec.eigenvalues[k];
    const double cp = char_poly_derivative_at(dec, k);
    // R_j vanishes exactly where (x_k)_j does; those terms contribute 0 to both ratio sums
    const double r_floor = 1e-12 * std::abs(cp);
    double ratio_sum = 0.0, b_r_sum = 0.0, sq_sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double d = determinant(deleted_shifted(a, {j}, lam));
        const double r = determinant(row_replaced(a, lam, j, b));
        b_r_sum += b[j] * r;
        if (std::abs(r) <= r_floor) continue;
        ratio_sum += b[j] * d / r;
        sq_sum += (d * d) / (r * r);
    }
    const double beta_sq = out.beta * out.beta;
    out.sum_residual = std::abs(ratio_sum - 1.0);
    out.beta_sq_residual = std::abs(beta_sq + b_r_sum / cp) / std::max(1.0, beta_sq);
    out.inv_beta_sq_residual = std::abs(1.0 / beta_sq - sq_sum) / std::max(1.0, 1.0 / beta_sq);
    out.beta_sq_within_norm = beta_sq <= out.b_norm_sq * (1.0 + 1e-12) + 1e-12;
    return out;
}

Matrix group_averaged_squares(const SpectralDecomposition& dec) {
    const std::size_t n = dec.size();
    Matrix y(n, n);
    for (const MultiplicityGroup& grp : dec.groups) {
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t k = grp.first; k <= grp.last; ++k) s += dec.x(j, k) * dec.x(j, k);
            s /= static_cast<double>(grp.size());
            for (std::size_t k = grp.first; k <= grp.last; ++k) y(j, k) = s;
        }
    }
    return y;
}

CentralityReport centrality_report(const Graph& g, const SpectralDecomposition& dec, const CentralityOptions& opt) {
    const std::size_t n = g.size();
    CentralityReport rep;
    rep.y = Matrix(n, n);
    rep.eigensolver_y = group_averaged_squares(dec);
    rep.method.assign(n, std::vector<ComponentMethod>(n, ComponentMethod::determinantal));
    rep.group_averaged.assign(n, false);

    const Matrix det = opt.parallel ? parallel::node_deleted_shift_determinants(g, dec.eigenvalues)
                                    : serial::node_deleted_shift_determinants(g, dec.eigenvalues);
    for (const MultiplicityGroup& grp : dec.groups) {
        if (grp.size() == 1) {
            const std::size_t k = grp.first;
            const double cp = char_poly_derivative_at(dec, k);
            for (std::size_t j = 0; j < n; ++j) rep.y(j, k) = -det(j, k) / cp;
            continue;
        }
        for (std::size_t k = grp.first; k <= grp.last; ++k) rep.group_averaged[k] = true;
        if (grp.size() == 2) {
            const double lam = 0.5 * (dec.eigenvalues[grp.first] + dec.eigenvalues[grp.last]);
            const std::vector<double> sums =
                opt.parallel ? parallel::pair_deletion_sums(g, lam) : serial::pair_deletion_sums(g, lam);
            const double c2 = char_poly_second_derivative_at(dec, grp.first);
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = grp.first; k <= grp.last; ++k) {
                    rep.y(j, k) = sums[j] / c2;
                    rep.method[j][k] = ComponentMethod::multiplicity2;
                }
        } else {
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = grp.first; k <= grp.last; ++k) {
                    rep.y(j, k) = rep.eigensolver_y(j, k);
                    rep.method[j][k] = ComponentMethod::eigensolver;
                }
        }
    }
    rep.residual = Matrix(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) rep.residual(j, k) = std::abs(rep.y(j, k) - rep.eigensolver_y(j, k));
    rep.redundancy = redundancy(rep.y, opt.zero_tol);
    return rep;
}

} // namespace spectramark
