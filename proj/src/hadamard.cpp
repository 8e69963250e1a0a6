#include "spectramark/hadamard.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "spectramark/matrix.hpp"

namespace spectramark {

IntMatrix sylvester_hadamard(int k) {
    if (k < 0 || k > 10) throw std::out_of_range("sylvester_hadamard: need 0 <= k <= 10 (2^k <= 1024)");
    IntMatrix h{{1}};
    for (int s = 0; s < k; ++s) {
        const std::size_t m = h.size();
        IntMatrix next(2 * m, std::vector<int>(2 * m));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                next[i][j] = h[i][j];
                next[i][j + m] = h[i][j];
                next[i + m][j] = h[i][j];
                next[i + m][j + m] = -h[i][j];
            }
        h = std::move(next);
    }
    return h;
}

BigInt exact_determinant(const IntMatrix& src) {
    const std::size_t n = src.size();
    if (n == 0) return 1;
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (src[i].size() != n) throw std::invalid_argument("exact_determinant: matrix not square");
        for (std::size_t j = 0; j < n; ++j) a[i][j] = src[i][j];
    }
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

IdentityReport hadamard_diagonalizes_complete(int k) {
    if (k < 2) throw std::invalid_argument("hadamard_diagonalizes_complete: n = 2^k must be >= 4");
    const IntMatrix h = sylvester_hadamard(k);
    const std::size_t n = h.size();
    const double nn = static_cast<double>(n);
    IdentityReport rep;

    long long gram_dev = 0, asym = 0, first_col = 0;
    for (std::size_t i = 0; i < n; ++i) {
        first_col = std::max<long long>(first_col, std::abs(h[i][0] - 1));
        for (std::size_t j = 0; j < n; ++j) {
            long long s = 0;
            for (std::size_t l = 0; l < n; ++l) s += static_cast<long long>(h[i][l]) * h[j][l];
            gram_dev = std::max<long long>(gram_dev, std::abs(s - (i == j ? static_cast<long long>(n) : 0)));
            asym = std::max<long long>(asym, std::abs(h[i][j] - h[j][i]));
        }
    }
    rep.add("hadamard_gram", "n=" + std::to_string(n), static_cast<double>(gram_dev), 0.0, "H H^T = nI");
    rep.add("hadamard_symmetric", "n=" + std::to_string(n), static_cast<double>(asym), 0.0, "H = H^T");
    rep.add("hadamard_first_column", "n=" + std::to_string(n), static_cast<double>(first_col), 0.0, "H e_1 = u");

    Matrix x(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) x(i, j) = h[i][j] / std::sqrt(nn);
    rep.add("orthogonal", "X = H/sqrt(n)", max_abs_diff(x.transposed() * x, Matrix::identity(n)), 1e-12, "X^T X = I");

    Matrix q(n, n, -1.0);
    Matrix a(n, n, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        q(i, i) = nn - 1.0;
        a(i, i) = 0.0;
    }
    Matrix dq(n, n), da(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        dq(i, i) = i == 0 ? 0.0 : nn;
        da(i, i) = i == 0 ? nn - 1.0 : -1.0;
    }
    rep.add("diagonalizes_laplacian", "Q = nI - J", max_abs_diff(x.transposed() * q * x, dq), 1e-10,
            "X^T Q X = diag(0, n, ..., n)");
    rep.add("diagonalizes_adjacency", "A = J - I", max_abs_diff(x.transposed() * a * x, da), 1e-10,
            "X^T A X = diag(n-1, -1, ..., -1)");

    double wphi = 0.0, we1 = 0.0;
    for (std::size_t m = 0; m < n; ++m) {
        double w = 0.0, phi = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            w += x(j, m);
            phi += x(m, j);
        }
        wphi = std::max(wphi, std::abs(w - phi));
        we1 = std::max(we1, std::abs(w - (m == 0 ? std::sqrt(nn) : 0.0)));
    }
    rep.add("w_equals_phi", "X = X^T", wphi, 1e-12, "w = phi");
    rep.add("w_is_scaled_e1", "X = H/sqrt(n)", we1, 1e-12, "w = sqrt(n) e_1");
    return rep;
}

} // namespace spectramark
