#pragma once

#include <vector>

#include "spectramark/checks.hpp"
#include "spectramark/polynomial.hpp"

namespace spectramark {

using IntMatrix = std::vector<std::vector<int>>;

/// H_{2^k} = H_{2^{k-1}} (x) H_2, H_1 = [1]. Requires 2^k <= 1024.
IntMatrix sylvester_hadamard(int k);

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt exact_determinant(const IntMatrix& m);

/// X = H_n / sqrt(n) against Q = nI - J and A = J - I for n = 2^k >= 4.
IdentityReport hadamard_diagonalizes_complete(int k);

} // namespace spectramark
