#include "doctest.h"

#include <cmath>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "spectramark/generators.hpp"
#include "spectramark/hadamard.hpp"
#include "spectramark/spectral.hpp"
#include "spectramark/weights.hpp"

using namespace spectramark;

namespace {

double max_residual_named(const IdentityReport& r, const std::string& name) {
    double worst = -1.0;
    for (const auto& c : r.checks)
        if (c.name == name) worst = std::max(worst, c.residual);
    return worst;
}

} // namespace

TEST_CASE("weight_profile") {
    const Graph p3 = path_graph(3);
    const auto d = decompose(p3);
    const auto p = weight_profile(p3, d);
    CHECK(p.w[0] == doctest::Approx(1.70711).epsilon(1e-5));
    CHECK(std::abs(p.w[1]) < 1e-12);
    CHECK(p.w[2] == doctest::Approx(0.29289).epsilon(1e-4));
    CHECK(p.phi[0] == doctest::Approx(1 + 1 / std::sqrt(2.0)));
    CHECK(std::abs(p.phi[1]) < 1e-12);
    CHECK(p.phi[2] == doctest::Approx(1 - 1 / std::sqrt(2.0)));

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Graph g = erdos_renyi(10, 0.35, seed);
        const auto wp = weight_profile(g, decompose(g));
        CHECK(wp.closed_walks[2] == 2 * BigInt(g.num_links()));
        BigInt dd = 0;
        for (int x : g.degrees()) dd += x * x;
        CHECK(wp.total_walks[2] == dd);
        double s = 0.0;
        for (double x : wp.w) s += x * x;
        CHECK(s == doctest::Approx(10.0));
    }
}

TEST_CASE("identity_suite") {
    SUBCASE("P3: phi_2 = 0 so phi^T A phi = 0") {
        const Graph p3 = path_graph(3);
        const auto d = decompose(p3);
        const auto r = identity_suite(p3, d, weight_profile(p3, d));
        CHECK(r.all_pass());
        CHECK(max_residual_named(r, "phi_a_phi") < 1e-12);
    }
    SUBCASE("random graphs") {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const Graph g = erdos_renyi(5 + seed % 12, 0.3, seed);
            const auto d = decompose(g);
            const auto r = identity_suite(g, d, weight_profile(g, d));
            for (const auto& c : r.checks) {
                INFO(c.name << " seed " << seed << " residual " << c.residual);
                CHECK(c.pass);
            }
            // independent w^T lambda = phi^T d
            const auto p = weight_profile(g, d);
            double lhs = 0.0, rhs = 0.0;
            for (std::size_t k = 0; k < g.size(); ++k) {
                lhs += p.w[k] * d.eigenvalues[k];
                rhs += p.phi[k] * g.degree(k);
            }
            CHECK(std::abs(lhs - rhs) < 1e-9);
        }
    }
    SUBCASE("regular graphs") {
        for (const Graph& g : {cycle_graph(8), complete_graph(6), complete_bipartite_graph(3, 3)}) {
            const auto d = decompose(g);
            const auto p = weight_profile(g, d);
            const double sq = std::sqrt(static_cast<double>(g.size()));
            CHECK(p.w[0] == doctest::Approx(sq));
            for (std::size_t k = 1; k < g.size(); ++k) CHECK(std::abs(p.w[k]) < 1e-8);
            CHECK(p.s_x == doctest::Approx(sq).epsilon(1e-10));
            const auto r = identity_suite(g, d, p);
            CHECK(r.all_pass());
            CHECK(max_residual_named(r, "regular_w") >= 0.0);
        }
    }
}

TEST_CASE("w1_bounds_check") {
    for (std::size_t n : {3u, 5u, 8u}) {
        const Graph k = complete_graph(n);
        const auto d = decompose(k);
        const auto r = w1_bounds_check(d, weight_profile(k, d), static_cast<int>(n));
        CHECK(r.all_pass());
        for (const auto& e : r.entries)
            if (e.name == "w1_clique") CHECK(std::abs(e.slack) < 1e-9);
    }
    const Graph s5 = star_graph(5);
    const auto ds = decompose(s5);
    const auto ps = weight_profile(s5, ds);
    CHECK(w1_bounds_check(ds, ps, 2).all_pass());
    const Graph p3 = path_graph(3);
    const auto dp = decompose(p3);
    const auto rp = w1_bounds_check(dp, weight_profile(p3, dp), 2);
    for (const auto& e : rp.entries)
        if (e.name == "w1_clique") {
            CHECK(e.lhs == doctest::Approx(std::sqrt(std::sqrt(2.0) / 0.5)));
            CHECK(e.rhs == doctest::Approx(1.70711).epsilon(1e-5));
        }
    CHECK_THROWS(w1_bounds_check(dp, weight_profile(p3, dp), 1));
}

TEST_CASE("generic_spacing_fraction") {
    CHECK(generic_spacing_fraction({1, 1, 1}, {3, 2, 1}) == doctest::Approx(1.0));
    CHECK(generic_spacing_fraction({1, 0, 0}, {5, 1, 0}) == doctest::Approx(2.5));
    CHECK(generic_spacing_fraction({0, 1, 0}, {5, 1, 0}) == doctest::Approx(1.0));
    CHECK(generic_spacing_fraction({0, 0, 1, 0}, {9, 4, 3.5, 1}) == doctest::Approx(2.5));
    CHECK_THROWS(generic_spacing_fraction({0, 0, 0}, {3, 2, 1}));
    CHECK_THROWS(generic_spacing_fraction({0, 0, 1}, {3, 2, 1}));
    CHECK_THROWS(generic_spacing_fraction({1, -1, 1}, {3, 2, 1}));
    CHECK_THROWS(generic_spacing_fraction({1, 1, 1}, {1, 2, 3}));

    SUBCASE("sandwich between the smallest and largest spacing") {
        std::mt19937_64 rng(17);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (int t = 0; t < 500; ++t) {
            const std::size_t n = 2 + rng() % 10;
            std::vector<double> a(n), b(n);
            for (auto& x : a) x = unit(rng) < 0.3 ? 0.0 : unit(rng);
            a[0] += 1e-3;
            for (auto& x : b) x = 10 * unit(rng) - 5;
            std::sort(b.rbegin(), b.rend());
            double lo = 1e300, hi = -1e300;
            for (std::size_t i = 0; i + 1 < n; ++i) {
                lo = std::min(lo, b[i] - b[i + 1]);
                hi = std::max(hi, b[i] - b[i + 1]);
            }
            const double f = generic_spacing_fraction(a, b);
            CHECK(f >= lo - 1e-12);
            CHECK(f <= hi + 1e-12);
        }
    }
}

TEST_CASE("spacing_bounds") {
    int degree_weighted = 0;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Graph g = connected_erdos_renyi(20, 0.3, seed);
        const auto d = decompose(g);
        const auto p = weight_profile(g, d);
        const auto s = spacing_bounds(g, p);
        CHECK(s.report.all_pass());
        CHECK(std::is_sorted(s.sorted_phi.rbegin(), s.sorted_phi.rend()));
        CHECK(s.observed_min <= s.min_spacing_ub + 1e-12);
        // direct evaluation of the Cauchy-Schwarz bound
        const double n = 20.0, last = s.sorted_phi.back();
        const double cs = (1.0 - last * p.s_x / n) / std::sqrt((n - 1) * (2 * n - 1) / 6 * (1 - last * last / n));
        CHECK(s.observed_max >= cs - 1e-12);
        if (!std::isnan(s.degree_weighted_lb)) ++degree_weighted;
    }
    CHECK(degree_weighted > 0);

    for (std::size_t n : {16u, 64u, 256u}) {
        const Graph g = connected_erdos_renyi(n, 0.3, 1);
        const auto d = decompose(g);
        CHECK(spacing_bounds(g, weight_profile(g, d)).f_u <= 4.0 / std::sqrt(static_cast<double>(n)));
    }
}

TEST_CASE("complement_coupling") {
    SUBCASE("P3") {
        const Graph p3 = path_graph(3);
        const auto c = complement_coupling(p3, decompose(p3), decompose(complement(p3)));
        for (const auto& chk : c.identities.checks)
            if (chk.name == "overlap_formula" || chk.name.rfind("sum_rule", 0) == 0 || chk.name == "overlap_orthogonal")
                CHECK(chk.pass);
        CHECK(c.bounds.all_pass());
    }
    SUBCASE("overlap formula against a direct product") {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const Graph g = connected_erdos_renyi(9, 0.4, seed);
            const auto d = decompose(g);
            const auto dc = decompose(complement(g));
            const auto c = complement_coupling(g, d, dc);
            double worst = 0.0;
            for (std::size_t m = 0; m < 9; ++m)
                for (std::size_t k = 0; k < 9; ++k) {
                    double dot = 0.0;
                    for (std::size_t j = 0; j < 9; ++j) dot += d.x(j, m) * dc.x(j, k);
                    worst = std::max(worst, std::abs(dot - c.overlap(m, k)));
                }
            CHECK(worst < 1e-12);
            CHECK(c.identities.max_residual("overlap_formula") < 1e-6);
            CHECK(c.identities.max_residual("sum_rule") < 1e-6);
            CHECK(c.bounds.all_pass());
        }
    }
    SUBCASE("higher powers only hold on regular graphs") {
        // (J - I - A)^n x_m needs A^c u proportional to u, which is regularity
        const Graph c7 = cycle_graph(7);
        const auto r = complement_coupling(c7, decompose(c7), decompose(complement(c7)));
        CHECK(r.identities.max_residual("overlap_power_2") < 1e-6);
        CHECK(r.identities.max_residual("overlap_power_3") < 1e-6);
        const Graph p5 = path_graph(5);
        const auto q = complement_coupling(p5, decompose(p5), decompose(complement(p5)));
        CHECK(q.identities.max_residual("overlap_power_2") > 1.0);
    }
    SUBCASE("regular graphs share eigenvectors with the complement") {
        const Graph k4 = complete_graph(4);
        const auto r = complement_coupling(k4, decompose(k4), decompose(complement(k4)));
        for (const auto& chk : r.identities.checks)
            if (chk.name == "regular_common_eigenvectors") CHECK(chk.pass);
    }
}

TEST_CASE("hadamard") {
    const auto h2 = sylvester_hadamard(1);
    CHECK(h2 == IntMatrix{{1, 1}, {1, -1}});
    CHECK(sylvester_hadamard(0) == IntMatrix{{1}});
    for (int k = 1; k <= 4; ++k) {
        const auto h = sylvester_hadamard(k);
        const std::size_t n = h.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                long s = 0;
                for (std::size_t l = 0; l < n; ++l) s += h[i][l] * h[j][l];
                CHECK(s == (i == j ? static_cast<long>(n) : 0));
                CHECK(h[i][j] == h[j][i]);
            }
        BigInt expect = 1;
        for (std::size_t i = 0; i < n / 2; ++i) expect *= static_cast<long>(n);
        const BigInt det = exact_determinant(h);
        CHECK((det == expect || det == -expect));
    }
    CHECK(exact_determinant({{2, 1}, {1, 3}}) == 5);
    CHECK(exact_determinant({{0, 1}, {1, 0}}) == -1);
    for (int k = 2; k <= 4; ++k) CHECK(hadamard_diagonalizes_complete(k).all_pass());
    CHECK_THROWS(sylvester_hadamard(11));
    CHECK_THROWS(hadamard_diagonalizes_complete(1));
}
