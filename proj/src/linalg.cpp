#include "spectramark/linalg.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace spectramark {

LuResult lu_factor(Matrix a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("lu_factor: matrix not square");
    const std::size_t n = a.rows();
    LuResult r;
    r.perm.resize(n);
    std::iota(r.perm.begin(), r.perm.end(), 0);
    r.min_pivot = n == 0 ? 0.0 : std::numeric_limits<double>::infinity();

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        double best = std::abs(a(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            if (std::abs(a(i, k)) > best) {
                best = std::abs(a(i, k));
                p = i;
            }
        }
        r.min_pivot = std::min(r.min_pivot, best);
        if (p != k) {
            auto rk = a.row(k);
            auto rp = a.row(p);
            std::swap_ranges(rk.begin(), rk.end(), rp.begin());
            std::swap(r.perm[k], r.perm[p]);
            r.sign = -r.sign;
        }
        if (best == 0.0) {
            r.singular = true;
            continue;
        }
        const double piv = a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = a(i, k) / piv;
            a(i, k) = f;
            if (f == 0.0) continue;
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    r.lu = std::move(a);
    return r;
}

double determinant(const Matrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix not square");
    if (a.rows() == 0) return 1.0;
    const LuResult f = lu_factor(a);
    if (f.singular) return 0.0;
    double det = f.sign;
    for (std::size_t i = 0; i < a.rows(); ++i) det *= f.lu(i, i);
    return det;
}

std::vector<double> lu_solve(const LuResult& f, std::span<const double> b) {
    const std::size_t n = f.lu.rows();
    if (b.size() != n) throw std::invalid_argument("lu_solve: size mismatch");
    if (f.singular) throw std::domain_error("lu_solve: singular matrix");
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = b[f.perm[i]];
        for (std::size_t j = 0; j < i; ++j) s -= f.lu(i, j) * x[j];
        x[i] = s;
    }
    for (std::size_t i = n; i-- > 0;) {
        double s = x[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= f.lu(i, j) * x[j];
        x[i] = s / f.lu(i, i);
    }
    return x;
}

Matrix shifted(const Matrix& a, double s) {
    Matrix m = a;
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) -= s;
    return m;
}

} // namespace spectramark
