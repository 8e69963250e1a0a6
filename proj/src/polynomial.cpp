#include "spectramark/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace spectramark {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::derivative() const {
    std::vector<BigInt> d;
    for (std::size_t r = 1; r < c_.size(); ++r) d.push_back(c_[r] * static_cast<long long>(r));
    return IntPolynomial(std::move(d));
}

double IntPolynomial::evaluate(double x) const {
    double acc = 0.0;
    for (std::size_t r = c_.size(); r-- > 0;) acc = acc * x + c_[r].convert_to<double>();
    return acc;
}

Float50 IntPolynomial::evaluate(const Float50& x) const {
    Float50 acc = 0;
    for (std::size_t r = c_.size(); r-- > 0;) acc = acc * x + Float50(c_[r]);
    return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t r = 0; r < o.c_.size(); ++r) c_[r] += o.c_[r];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t r = 0; r < o.c_.size(); ++r) c_[r] -= o.c_[r];
    trim();
    return *this;
}

IntPolynomial operator-(IntPolynomial a) {
    for (auto& c : a.c_) c = -c;
    return a;
}

std::string IntPolynomial::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t r = 0; r < c_.size(); ++r) {
        if (c_[r] == 0) continue;
        BigInt mag = abs(c_[r]);
        if (first) {
            if (c_[r] < 0) out << '-';
        } else {
            out << (c_[r] < 0 ? " - " : " + ");
        }
        first = false;
        if (mag != 1 || r == 0) out << mag;
        if (r >= 1) out << 'x';
        if (r >= 2) out << '^' << r;
    }
    return out.str();
}

namespace {

using BigMatrix = std::vector<std::vector<BigInt>>;

// (A M) using the adjacency lists: row i of AM is the sum of rows of M over neighbours of i.
BigMatrix adjacency_times(const std::vector<std::vector<std::size_t>>& nbrs, const BigMatrix& m) {
    const std::size_t n = m.size();
    BigMatrix out(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l : nbrs[i])
            for (std::size_t j = 0; j < n; ++j) out[i][j] += m[l][j];
    return out;
}

std::vector<std::vector<std::size_t>> neighbor_lists(const Graph& g) {
    std::vector<std::vector<std::size_t>> nb(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) nb[i] = g.neighbors(i);
    return nb;
}

} // namespace

IntPolynomial char_poly_exact(const Graph& g, std::size_t limit) {
    const std::size_t n = g.size();
    if (n > limit)
        throw std::length_error("char_poly_exact: N=" + std::to_string(n) + " exceeds exact_poly_limit " +
                                std::to_string(limit));
    const auto nbrs = neighbor_lists(g);
    // monic p(x) = det(xI - A) = sum_k c_k x^(n-k)
    std::vector<BigInt> c(n + 1);
    c[0] = 1;
    BigMatrix m(n, std::vector<BigInt>(n));
    for (std::size_t k = 1; k <= n; ++k) {
        BigMatrix am = adjacency_times(nbrs, m);
        for (std::size_t i = 0; i < n; ++i) am[i][i] += c[k - 1];
        m = std::move(am);
        BigInt tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l : nbrs[i]) tr += m[l][i];
        if (tr % static_cast<long long>(k) != 0) throw std::logic_error("char_poly_exact: non-integral trace");
        c[k] = -tr / static_cast<long long>(k);
    }
    // det(A - xI) = (-1)^n p(x)
    std::vector<BigInt> out(n + 1);
    for (std::size_t k = 0; k <= n; ++k) out[n - k] = (n % 2 == 0) ? c[k] : BigInt(-c[k]);
    return IntPolynomial(std::move(out));
}

BigInt matrix_power_entry(const Graph& g, int m, std::size_t i, std::size_t j) {
    if (m < 0 || m > 32) throw std::out_of_range("matrix_power_entry: exponent must lie in [0,32]");
    if (i >= g.size() || j >= g.size()) throw std::out_of_range("matrix_power_entry: node out of range");
    const auto nbrs = neighbor_lists(g);
    std::vector<BigInt> v(g.size());
    v[j] = 1;
    for (int s = 0; s < m; ++s) {
        std::vector<BigInt> nv(g.size());
        for (std::size_t a = 0; a < g.size(); ++a)
            for (std::size_t l : nbrs[a]) nv[a] += v[l];
        v = std::move(nv);
    }
    return v[i];
}

std::vector<std::vector<BigInt>> closed_walk_diagonals(const Graph& g, int m_max) {
    if (m_max < 0) throw std::out_of_range("closed_walk_diagonals: m_max must be >= 0");
    const std::size_t n = g.size();
    const auto nbrs = neighbor_lists(g);
    std::vector<std::vector<BigInt>> diag(static_cast<std::size_t>(m_max) + 1, std::vector<BigInt>(n));
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<BigInt> v(n);
        v[j] = 1;
        diag[0][j] = 1;
        for (int s = 1; s <= m_max; ++s) {
            std::vector<BigInt> nv(n);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t l : nbrs[a]) nv[a] += v[l];
            v = std::move(nv);
            diag[static_cast<std::size_t>(s)][j] = v[j];
        }
    }
    return diag;
}

WalkCounts walk_counts(const Graph& g, int m_max) {
    const std::size_t n = g.size();
    const auto diag = closed_walk_diagonals(g, m_max);
    const auto nbrs = neighbor_lists(g);
    WalkCounts w;
    std::vector<BigInt> v(n, BigInt(1));
    for (int m = 0; m <= m_max; ++m) {
        BigInt tr = 0;
        for (std::size_t j = 0; j < n; ++j) tr += diag[static_cast<std::size_t>(m)][j];
        w.closed.push_back(tr);
        BigInt tot = 0;
        for (const auto& x : v) tot += x;
        w.total.push_back(tot);
        std::vector<BigInt> nv(n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t l : nbrs[a]) nv[a] += v[l];
        v = std::move(nv);
    }
    return w;
}

} // namespace spectramark
