#include "spectramark/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "spectramark/linalg.hpp"

namespace spectramark {

namespace {

double off_diagonal_sq(const Matrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i + 1; j < a.cols(); ++j) s += a(i, j) * a(i, j);
    return s;
}

void rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
    const std::size_t n = a.rows();
    const double apq = a(p, q);
    const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
    const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;
    for (std::size_t r = 0; r < n; ++r) {
        const double arp = a(r, p);
        const double arq = a(r, q);
        a(r, p) = c * arp - s * arq;
        a(r, q) = s * arp + c * arq;
    }
    for (std::size_t r = 0; r < n; ++r) {
        const double apr = a(p, r);
        const double aqr = a(q, r);
        a(p, r) = c * apr - s * aqr;
        a(q, r) = s * apr + c * aqr;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
        const double vrp = v(r, p);
        const double vrq = v(r, q);
        v(r, p) = c * vrp - s * vrq;
        v(r, q) = s * vrp + c * vrq;
    }
}

} // namespace

SpectralDecomposition decompose(const Matrix& input, const SpectralOptions& opt) {
    if (input.rows() != input.cols()) throw std::invalid_argument("decompose: matrix not square");
    const std::size_t n = input.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (input(i, j) != input(j, i)) throw std::invalid_argument("decompose: matrix not symmetric");

    Matrix a = input;
    Matrix v = Matrix::identity(n);
    double frob = 0.0;
    for (double x : input.data()) frob += x * x;
    const double stop = 1e-30 * std::max(1.0, frob);

    bool converged = false;
    int sweep = 0;
    for (; sweep < opt.max_sweeps; ++sweep) {
        if (off_diagonal_sq(a) <= stop) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                if (a(p, q) != 0.0) rotate(a, v, p, q);
    }
    if (!converged && off_diagonal_sq(a) <= stop) converged = true;

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });

    SpectralDecomposition dec;
    dec.eigenvalues.resize(n);
    dec.vectors = Matrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        dec.eigenvalues[k] = a(order[k], order[k]);
        for (std::size_t j = 0; j < n; ++j) dec.vectors(j, k) = v(j, order[k]);
    }

    // sign canon: w_k > 0, else the largest-magnitude component positive
    for (std::size_t k = 0; k < n; ++k) {
        double w = 0.0;
        for (std::size_t j = 0; j < n; ++j) w += dec.vectors(j, k);
        bool flip = false;
        if (w < -opt.sign_tol) {
            flip = true;
        } else if (w <= opt.sign_tol) {
            std::size_t best = 0;
            for (std::size_t j = 1; j < n; ++j)
                if (std::abs(dec.vectors(j, k)) > std::abs(dec.vectors(best, k)) + 1e-12) best = j;
            flip = dec.vectors(best, k) < 0;
        }
        if (flip)
            for (std::size_t j = 0; j < n; ++j) dec.vectors(j, k) = -dec.vectors(j, k);
    }

    double scale = 1.0;
    for (double l : dec.eigenvalues) scale = std::max(scale, std::abs(l));
    dec.mult_tol = opt.mult_tol >= 0 ? opt.mult_tol : 1e-7 * scale;
    for (std::size_t k = 0; k < n; ++k) {
        if (k == 0 || dec.eigenvalues[k - 1] - dec.eigenvalues[k] > dec.mult_tol)
            dec.groups.push_back({k, k});
        else
            dec.groups.back().last = k;
        dec.group_index.push_back(dec.groups.size() - 1);
    }

    const Matrix& x = dec.vectors;
    const Matrix xt = x.transposed();
    const Matrix id = Matrix::identity(n);
    dec.orthogonality_error = std::max(max_abs_diff(xt * x, id), max_abs_diff(x * xt, id));
    Matrix ax = input * x;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) ax(j, k) -= x(j, k) * dec.eigenvalues[k];
    dec.residual = ax.max_abs();

    if (!converged || dec.orthogonality_error > opt.orthogonality_tol || dec.residual > opt.residual_tol * scale) {
        std::ostringstream msg;
        msg << "eigensolver failed after " << sweep << " sweeps: off-diagonal^2=" << off_diagonal_sq(a)
            << " orthogonality=" << dec.orthogonality_error << " residual=" << dec.residual;
        throw ConvergenceError(msg.str());
    }
    return dec;
}

SpectralDecomposition decompose(const Graph& g, const SpectralOptions& opt) { return decompose(g.adjacency(), opt); }

double det_shift(const Graph& g, double lambda) { return determinant(shifted(g.adjacency(), lambda)); }

double char_poly_derivative_at(const SpectralDecomposition& dec, std::size_t k) {
    if (k >= dec.size()) throw std::out_of_range("char_poly_derivative_at: frequency out of range");
    if (!dec.simple(k)) throw DomainError("derivative vanishes; use multiplicity-2 path");
    const std::size_t n = dec.size();
    double p = (n % 2 == 0) ? 1.0 : -1.0;
    for (std::size_t m = 0; m < n; ++m)
        if (m != k) p *= dec.eigenvalues[k] - dec.eigenvalues[m];
    return p;
}

double char_poly_second_derivative_at(const SpectralDecomposition& dec, std::size_t k) {
    if (k >= dec.size()) throw std::out_of_range("char_poly_second_derivative_at: frequency out of range");
    const MultiplicityGroup& grp = dec.group_of(k);
    if (grp.size() != 2) throw DomainError("second derivative form needs a multiplicity-2 eigenvalue");
    const std::size_t n = dec.size();
    const double lam = 0.5 * (dec.eigenvalues[grp.first] + dec.eigenvalues[grp.last]);
    double p = (n % 2 == 0) ? 2.0 : -2.0;
    for (std::size_t m = 0; m < n; ++m)
        if (!grp.contains(m)) p *= lam - dec.eigenvalues[m];
    return p;
}

Matrix laplacian(const Graph& g) {
    Matrix q = g.adjacency() * -1.0;
    for (std::size_t i = 0; i < g.size(); ++i) q(i, i) = g.degree(i);
    return q;
}

} // namespace spectramark
