#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "spectramark/graph.hpp"

namespace spectramark {

using BigInt = boost::multiprecision::cpp_int;
using Float50 = boost::multiprecision::cpp_bin_float_50;

/// Polynomial with exact integer coefficients; coeffs()[r] multiplies x^r.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);

    const std::vector<BigInt>& coeffs() const noexcept { return c_; }
    /// Coefficient of x^r, zero beyond the degree.
    BigInt coeff(std::size_t r) const { return r < c_.size() ? c_[r] : BigInt(0); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }

    IntPolynomial derivative() const;
    double evaluate(double x) const;
    Float50 evaluate(const Float50& x) const;

    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator-(IntPolynomial a);
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    /// e.g. "-4 + 4x + 27x^2 - x^10".
    std::string to_string() const;

private:
    std::vector<BigInt> c_;
    void trim();
};

inline constexpr std::size_t default_exact_poly_limit = 64;

/// det(A - xI) with exact integer coefficients (Faddeev-LeVerrier).
IntPolynomial char_poly_exact(const Graph& g, std::size_t limit = default_exact_poly_limit);

/// (A^m)_ij as an exact integer. m <= 32.
BigInt matrix_power_entry(const Graph& g, int m, std::size_t i, std::size_t j);

/// diag[m][j] = (A^m)_jj for m = 0..m_max.
std::vector<std::vector<BigInt>> closed_walk_diagonals(const Graph& g, int m_max);

/// W_m = trace(A^m) and N_m = u^T A^m u for m = 0..m_max.
struct WalkCounts {
    std::vector<BigInt> closed;
    std::vector<BigInt> total;
};
WalkCounts walk_counts(const Graph& g, int m_max);

} // namespace spectramark
