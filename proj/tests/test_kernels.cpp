#include "doctest.h"

#include <cstdlib>

#include "spectramark/generators.hpp"
#include "spectramark/kernels.hpp"
#include "spectramark/linalg.hpp"
#include "spectramark/polynomial.hpp"
#include "spectramark/spectral.hpp"

using namespace spectramark;

namespace {

struct ThreadEnv {
    explicit ThreadEnv(const char* v) { setenv("SPECTRAMARK_THREADS", v, 1); }
    ~ThreadEnv() { unsetenv("SPECTRAMARK_THREADS"); }
};

} // namespace

TEST_CASE("thread_count") {
    {
        ThreadEnv t("3");
        CHECK(thread_count() == 3);
    }
    {
        ThreadEnv t("zero");
        CHECK(thread_count() >= 1);
    }
    {
        ThreadEnv t("-2");
        CHECK(thread_count() >= 1);
    }
}

TEST_CASE("deleted_shifted") {
    const Matrix a = path_graph(4).adjacency();
    const Matrix m = deleted_shifted(a, {1}, 0.5);
    CHECK(m.rows() == 3);
    CHECK(m(0, 0) == -0.5);
    CHECK(m(1, 2) == 1.0);
    CHECK(m(0, 1) == 0.0);
    CHECK(deleted_shifted(a, {0, 3}, 0.0).rows() == 2);
}

TEST_CASE("serial and parallel kernels agree exactly") {
    for (const char* threads : {"1", "2", "4", "7"}) {
        ThreadEnv t(threads);
        for (std::uint64_t seed = 0; seed < 6; ++seed) {
            const Graph g = erdos_renyi(6 + 3 * seed, 0.35, seed);
            const auto d = decompose(g);
            const Matrix s = serial::node_deleted_shift_determinants(g, d.eigenvalues);
            const Matrix p = parallel::node_deleted_shift_determinants(g, d.eigenvalues);
            REQUIRE(s.rows() == p.rows());
            for (std::size_t j = 0; j < s.rows(); ++j)
                for (std::size_t k = 0; k < s.cols(); ++k) CHECK(s(j, k) == p(j, k));

            for (double lam : {d.eigenvalues[0], 0.25, -1.0})
                CHECK(serial::pair_deletion_sums(g, lam) == parallel::pair_deletion_sums(g, lam));

            CHECK(serial::node_deleted_char_polys(g) == parallel::node_deleted_char_polys(g));
        }
    }
}

TEST_CASE("kernel values against direct evaluation") {
    const Graph g = erdos_renyi(9, 0.4, 2);
    const auto d = decompose(g);
    const Matrix det = serial::node_deleted_shift_determinants(g, d.eigenvalues);
    const auto polys = serial::node_deleted_char_polys(g);
    for (std::size_t j = 0; j < 9; ++j) {
        CHECK(polys[j] == char_poly_exact(delete_node(g, j)));
        for (std::size_t k = 0; k < 9; ++k) {
            CHECK(det(j, k) == doctest::Approx(det_shift(delete_node(g, j), d.eigenvalues[k])).epsilon(1e-10));
            const double ref = polys[j].evaluate(d.eigenvalues[k]);
            CHECK(std::abs(det(j, k) - ref) < 1e-8 * std::max(1.0, std::abs(ref)));
        }
    }
    const auto sums = serial::pair_deletion_sums(g, 0.5);
    for (std::size_t j = 0; j < 9; ++j) {
        double s = 0.0;
        for (std::size_t m = 0; m < 9; ++m)
            if (m != j) s += det_shift(delete_node_pair(g, j, m), 0.5);
        CHECK(sums[j] == doctest::Approx(s).epsilon(1e-10));
    }
}

TEST_CASE("node-deleted polynomials sum to -c'") {
    // sum_j det(A_{\j} - xI) = -c'_A(x) for any graph
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Graph g = erdos_renyi(5 + seed, 0.4, seed);
        IntPolynomial s;
        for (const auto& p : parallel::node_deleted_char_polys(g)) s += p;
        CHECK(s == -char_poly_exact(g).derivative());
    }
}
