#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "spectramark/centrality.hpp"
#include "spectramark/generators.hpp"
#include "spectramark/kernels.hpp"
#include "spectramark/linalg.hpp"

using namespace spectramark;

namespace {

const double r2 = std::sqrt(2.0);

// Simple-spectrum connected ER graphs, sizes 4..20.
std::vector<Graph> simple_corpus(std::size_t count, std::uint64_t seed0 = 100) {
    std::vector<Graph> out;
    for (std::uint64_t s = seed0; out.size() < count; ++s) {
        const Graph g = connected_erdos_renyi(4 + s % 17, 0.3, s);
        if (decompose(g).all_simple()) out.push_back(g);
    }
    return out;
}

} // namespace

TEST_CASE("squared_component_det") {
    const auto k2 = decompose(complete_graph(2));
    CHECK(squared_component_det(complete_graph(2), k2, 0, 0) == doctest::Approx(0.5));
    const Graph p3 = path_graph(3);
    const auto d = decompose(p3);
    CHECK(squared_component_det(p3, d, 1, 0) == doctest::Approx(0.5));
    CHECK(std::abs(squared_component_det(p3, d, 1, 1)) < 1e-12);
    CHECK(squared_component_det(p3, d, 0, 1) == doctest::Approx(0.5));
    CHECK_THROWS_AS(squared_component_det(complete_graph(3), decompose(complete_graph(3)), 0, 1), DomainError);
    CHECK_THROWS_AS(squared_component_det(p3, d, 3, 0), std::out_of_range);

    SUBCASE("hand determinants with a cofactor oracle") {
        const Graph g = erdos_renyi(7, 0.5, 9);
        const auto dec = decompose(g);
        REQUIRE(dec.all_simple());
        for (std::size_t k = 0; k < 7; ++k) {
            double cp = 1.0;
            for (std::size_t m = 0; m < 7; ++m)
                if (m != k) cp *= dec.eigenvalues[k] - dec.eigenvalues[m];
            cp = -cp; // (-1)^7
            for (std::size_t j = 0; j < 7; ++j) {
                const double minor = oracle::cofactor_det(oracle::to_rows(deleted_shifted(g.adjacency(), {j}, dec.eigenvalues[k])));
                CHECK(squared_component_det(g, dec, j, k) == doctest::Approx(-minor / cp).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("squared_component_mult2") {
    const Graph k3 = complete_graph(3);
    const auto d3 = decompose(k3);
    for (std::size_t j = 0; j < 3; ++j) CHECK(squared_component_mult2(k3, d3, j, 1) == doctest::Approx(1.0 / 3));
    const Graph c4 = cycle_graph(4);
    const auto d4 = decompose(c4);
    REQUIRE(d4.group_of(1).size() == 2);
    for (std::size_t j = 0; j < 4; ++j) CHECK(squared_component_mult2(c4, d4, j, 1) == doctest::Approx(0.25));
    CHECK_THROWS_AS(squared_component_mult2(path_graph(3), decompose(path_graph(3)), 0, 0), DomainError);

    SUBCASE("half the eigenspace sum on random double eigenvalues") {
        int seen = 0;
        for (std::uint64_t s = 0; s < 400 && seen < 5; ++s) {
            const Graph g = erdos_renyi(9, 0.3, s);
            const auto dec = decompose(g);
            for (const auto& grp : dec.groups) {
                if (grp.size() != 2) continue;
                ++seen;
                for (std::size_t j = 0; j < 9; ++j) {
                    const double sum = dec.x(j, grp.first) * dec.x(j, grp.first) + dec.x(j, grp.last) * dec.x(j, grp.last);
                    CHECK(std::abs(squared_component_mult2(g, dec, j, grp.first) - sum / 2) < 1e-8);
                }
                break;
            }
        }
        CHECK(seen == 5);
    }
}

TEST_CASE("component_product") {
    const Graph k2 = complete_graph(2);
    CHECK(component_product(k2, decompose(k2), 0, 1, 0) == doctest::Approx(0.5));
    const Graph p3 = path_graph(3);
    const auto d = decompose(p3);
    CHECK(component_product(p3, d, 0, 2, 1) == doctest::Approx(-0.5));
    for (const Graph& g : simple_corpus(5)) {
        const auto dec = decompose(g);
        for (std::size_t k = 0; k < g.size(); ++k)
            for (std::size_t j = 0; j < g.size(); ++j) {
                CHECK(component_product(g, dec, j, j, k) == doctest::Approx(squared_component_det(g, dec, j, k)).epsilon(1e-9));
                const std::size_t m = (j + 1) % g.size();
                CHECK(std::abs(component_product(g, dec, j, m, k) - dec.x(j, k) * dec.x(m, k)) < 1e-7);
            }
    }
}

TEST_CASE("signed_components") {
    const Graph p3 = path_graph(3);
    const auto d = decompose(p3);
    const auto sc = signed_components(p3, d, 0, std::vector<double>(3, 1.0));
    CHECK(sc.values[0] == doctest::Approx(0.5));
    CHECK(sc.values[1] == doctest::Approx(r2 / 2));
    CHECK(sc.values[2] == doctest::Approx(0.5));
    CHECK(sc.choice == "given");

    SUBCASE("u is orthogonal to x_k on regular graphs") {
        const Graph k2 = complete_graph(2);
        CHECK_THROWS_AS(signed_components(k2, decompose(k2), 1, std::vector<double>(2, 1.0)), DomainError);
        CHECK(signed_components(complete_graph(2), decompose(complete_graph(2)), 1).choice == "e1");
    }
    SUBCASE("automatic b reproduces the eigenvector") {
        for (const Graph& g : simple_corpus(8)) {
            const auto dec = decompose(g);
            for (std::size_t k = 0; k < g.size(); ++k) {
                const auto s = signed_components(g, dec, k);
                for (std::size_t j = 0; j < g.size(); ++j) CHECK(std::abs(s.values[j] - dec.x(j, k)) < 1e-7);
            }
        }
    }
    SUBCASE("b = e_m gives component ratios") {
        const Graph g = simple_corpus(1, 300)[0];
        const auto dec = decompose(g);
        const std::size_t k = 1;
        std::size_t m = 0;
        for (std::size_t j = 1; j < g.size(); ++j)
            if (std::abs(dec.x(j, k)) > std::abs(dec.x(m, k))) m = j;
        std::vector<double> e(g.size(), 0.0);
        e[m] = 1.0;
        const auto s = signed_components(g, dec, k, e);
        for (std::size_t j = 0; j < g.size(); ++j)
            CHECK(s.values[j] / s.values[m] == doctest::Approx(dec.x(j, k) / dec.x(m, k)).epsilon(1e-7));
    }
}

TEST_CASE("r_decomposition") {
    const Graph k2 = complete_graph(2);
    const auto r = r_decomposition(k2, decompose(k2));
    CHECK(std::abs(r.r(0, 0)) < 1e-15);
    const Graph p3 = path_graph(3);
    const auto d = decompose(p3);
    const auto rp = r_decomposition(p3, d);
    CHECK(std::abs(rp.r(1, 0)) < 1e-12);
    // (x_k)_i^2 = (1 - r_i(k)) / (lambda_k^2/d_i + 1)
    for (const Graph& g : simple_corpus(6)) {
        const auto dec = decompose(g);
        const auto rd = r_decomposition(g, dec);
        for (std::size_t i = 0; i < g.size(); ++i) {
            double s = 0.0;
            for (std::size_t k = 0; k < g.size(); ++k) {
                const double l = dec.eigenvalues[k];
                const double pred = (1.0 - rd.r(i, k)) / (l * l / g.degree(i) + 1.0);
                CHECK(std::abs(pred - dec.x(i, k) * dec.x(i, k)) < 1e-9);
                s += 1.0 - rd.r(i, k);
            }
            CHECK(s == doctest::Approx(2.0).epsilon(1e-9));
        }
    }
    CHECK_THROWS_AS(r_decomposition(Graph(3, {{0, 1}}), decompose(Graph(3, {{0, 1}}))), DomainError);
}

TEST_CASE("redundancy") {
    const Graph p3 = path_graph(3);
    const auto rep = centrality_report(p3, decompose(p3));
    CHECK(rep.redundancy == std::vector<int>{0, 1, 0});

    const Graph k3 = complete_graph(3);
    CHECK(centrality_report(k3, decompose(k3)).redundancy == std::vector<int>{0, 0, 0});

    // star(5): the zero eigenspace (multiplicity 3) vanishes on the center and is spread over the leaves
    const Graph s5 = star_graph(5);
    const auto rs = centrality_report(s5, decompose(s5));
    CHECK(rs.redundancy == std::vector<int>{3, 0, 0, 0, 0});
    CHECK(rs.y(1, 2) == doctest::Approx(0.25));

    for (const Graph& g : simple_corpus(5)) {
        const auto rr = centrality_report(g, decompose(g));
        for (std::size_t j = 0; j < g.size(); ++j) {
            CHECK(rr.y(j, 0) > 1e-8);
            CHECK(rr.redundancy[j] <= static_cast<int>(g.size()) - 1);
        }
    }
}

TEST_CASE("walk expansion") {
    const Graph k2 = complete_graph(2);
    const auto dk = decompose(k2);
    const WalkExpansion wk(k2, dk);
    CHECK(wk.coefficients(0) == std::vector<double>{1.0, 1.0});
    CHECK(wk.squared(0, 0) == doctest::Approx(0.5));
    const Graph p3 = path_graph(3);
    CHECK(std::abs(walk_expansion_squared(p3, decompose(p3), 1, 1)) < 1e-15);
    CHECK_THROWS_AS(WalkExpansion(complete_graph(3), decompose(complete_graph(3))), DomainError);

    for (const Graph& g : simple_corpus(10)) {
        const auto dec = decompose(g);
        const WalkExpansion we(g, dec);
        for (std::size_t k = 0; k < g.size(); ++k) {
            const double cp = char_poly_derivative_at(dec, k);
            CHECK(std::abs(we.derivative_from_closed_walks(k) - cp) <= 1e-5 * std::max(1.0, std::abs(cp)));
            CHECK(std::abs(we.refined_eigenvalue(k) - dec.eigenvalues[k]) < 1e-10);
            for (std::size_t j = 0; j < g.size(); ++j) CHECK(std::abs(we.squared(j, k) - dec.x(j, k) * dec.x(j, k)) < 1e-5);
        }
    }
}

TEST_CASE("resolvent_squared") {
    const Graph k2 = complete_graph(2);
    CHECK(resolvent_squared(k2, decompose(k2), 0, 0) == doctest::Approx(0.5));
    const Graph p3 = path_graph(3);
    const auto d = decompose(p3);
    CHECK_THROWS_AS(resolvent_squared(p3, d, 1, 1), DomainError);
    CHECK(in_deleted_spectrum(p3, 1, d.eigenvalues[1], 1e-7));

    int compared = 0;
    for (std::uint64_t s = 0; compared < 3; ++s) {
        const Graph g = connected_erdos_renyi(12, 0.3, s);
        const auto dec = decompose(g);
        if (!dec.all_simple()) continue;
        ++compared;
        for (std::size_t k = 0; k < 12; ++k)
            for (std::size_t j = 0; j < 12; ++j) {
                double v = 0.0;
                try {
                    v = resolvent_squared(g, dec, j, k);
                } catch (const DomainError&) {
                    CHECK(in_deleted_spectrum(g, j, dec.eigenvalues[k], 1e-7));
                    continue;
                }
                CHECK(std::abs(v - squared_component_det(g, dec, j, k)) < 1e-6);
            }
    }
}

TEST_CASE("beta_normalization_check") {
    const Graph p3 = path_graph(3);
    const auto d = decompose(p3);
    const auto bu = beta_normalization_check(p3, d, 0, {1, 1, 1});
    CHECK(bu.beta == doctest::Approx(1 + r2 / 2));
    CHECK(bu.sum_residual < 1e-9);
    CHECK(bu.beta_sq_residual < 1e-9);
    CHECK(bu.inv_beta_sq_residual < 1e-9);
    CHECK(bu.beta_sq_within_norm);
    CHECK(beta_normalization_check(p3, d, 0, {1, 0, 0}).beta == doctest::Approx(d.x(0, 0)));
    const auto bx = beta_normalization_check(p3, d, 2, {d.x(0, 2), d.x(1, 2), d.x(2, 2)});
    CHECK(bx.beta == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(beta_normalization_check(p3, d, 1, {0, 1, 0}), DomainError);

    for (const Graph& g : simple_corpus(5)) {
        const auto dec = decompose(g);
        std::vector<double> b(g.size());
        for (std::size_t j = 0; j < g.size(); ++j) b[j] = 1.0 + 0.1 * j;
        for (std::size_t k = 0; k < g.size(); ++k) {
            const auto r = beta_normalization_check(g, dec, k, b);
            CHECK(r.sum_residual < 1e-6);
            CHECK(r.beta_sq_residual < 1e-6);
            CHECK(r.beta_sq_within_norm);
        }
    }
}

TEST_CASE("centrality_report") {
    for (const Graph& g : simple_corpus(6)) {
        const auto dec = decompose(g);
        const auto rep = centrality_report(g, dec);
        for (std::size_t j = 0; j < g.size(); ++j) {
            double row = 0.0, col = 0.0;
            for (std::size_t k = 0; k < g.size(); ++k) {
                row += rep.y(j, k);
                col += rep.y(k, j);
                CHECK(rep.residual(j, k) < 1e-7);
            }
            CHECK(row == doctest::Approx(1.0).epsilon(1e-8));
            CHECK(col == doctest::Approx(1.0).epsilon(1e-8));
        }
        const auto serial_rep = centrality_report(g, dec, {1e-8, false});
        for (std::size_t j = 0; j < g.size(); ++j)
            for (std::size_t k = 0; k < g.size(); ++k) CHECK(serial_rep.y(j, k) == rep.y(j, k));
    }
    SUBCASE("degenerate groups are averaged and doubly stochastic") {
        const Graph c6 = cycle_graph(6);
        const auto rep = centrality_report(c6, decompose(c6));
        for (std::size_t j = 0; j < 6; ++j) {
            double row = 0.0;
            for (std::size_t k = 0; k < 6; ++k) row += rep.y(j, k);
            CHECK(row == doctest::Approx(1.0));
            CHECK(rep.y(j, 1) == doctest::Approx(1.0 / 6));
        }
        CHECK(rep.group_averaged[1]);
        CHECK(rep.method[0][1] == ComponentMethod::multiplicity2);
    }
}
