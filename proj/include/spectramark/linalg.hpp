#pragma once

#include <span>
#include <vector>

#include "spectramark/matrix.hpp"

namespace spectramark {

struct LuResult {
    Matrix lu;
    std::vector<std::size_t> perm;
    int sign = 1;
    double min_pivot = 0.0;
    bool singular = false;
};

/// LU factorization with partial pivoting (PA = LU, unit lower L stored below the diagonal).
LuResult lu_factor(Matrix a);

/// Determinant via LU. The empty matrix has determinant 1.
double determinant(const Matrix& a);

/// Solves A x = b with a factorization from lu_factor. Throws if the factor is singular.
std::vector<double> lu_solve(const LuResult& f, std::span<const double> b);

/// A - s I.
Matrix shifted(const Matrix& a, double s);

} // namespace spectramark
