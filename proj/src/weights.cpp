#include "spectramark/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace spectramark {

namespace {

std::vector<double> adjacency_apply(const Graph& g, const std::vector<double>& v) {
    std::vector<double> out(g.size(), 0.0);
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            if (g.has_edge(i, j)) out[i] += v[j];
    return out;
}

double rel(double lhs, double rhs) { return std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)); }

} // namespace

WeightProfile weight_profile(const Graph& g, const SpectralDecomposition& dec, int m_max) {
    const std::size_t n = g.size();
    WeightProfile p;
    p.w.assign(n, 0.0);
    p.phi.assign(n, 0.0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            p.w[k] += dec.x(j, k);
            p.phi[j] += dec.x(j, k);
        }
    p.s_x = std::accumulate(p.w.begin(), p.w.end(), 0.0);
    p.s_x2 = dot(p.w, p.phi);
    WalkCounts wc = walk_counts(g, m_max);
    p.closed_walks = std::move(wc.closed);
    p.total_walks = std::move(wc.total);
    return p;
}

IdentityReport identity_suite(const Graph& g, const SpectralDecomposition& dec, const WeightProfile& p) {
    const std::size_t n = g.size();
    const double nn = static_cast<double>(n);
    const auto& lam = dec.eigenvalues;
    IdentityReport rep;

    rep.add("norm_w", "graph", std::abs(dot(p.w, p.w) - nn), 1e-7, "w^T w = N");
    rep.add("norm_phi", "graph", std::abs(dot(p.phi, p.phi) - nn), 1e-7, "phi^T phi = N");
    const double sum_phi = std::accumulate(p.phi.begin(), p.phi.end(), 0.0);
    rep.add("s_x_sums", "graph", std::abs(p.s_x - sum_phi), 1e-7, "s_X = sum_k w_k = sum_j phi_j");
    rep.add("s_x_range", "graph", std::max(0.0, std::abs(p.s_x) - nn), 1e-7, "|s_X| <= N");
    rep.add("s_x2_range", "graph", std::max(0.0, std::abs(p.s_x2) - nn), 1e-7, "|s_X2| <= N, s_X2 = w^T phi");

    double coord = 0.0, row = 0.0, col = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < n; ++k) s += p.w[k] * dec.x(j, k);
        coord = std::max(coord, std::abs(s - 1.0));
    }
    for (std::size_t m = 0; m < n; ++m) {
        double wy = 0.0, px = 0.0;
        for (std::size_t k = 0; k < n; ++k) wy += p.w[k] * dec.x(m, k);
        for (std::size_t j = 0; j < n; ++j) px += p.phi[j] * dec.x(j, m);
        row = std::max(row, std::abs(wy - 1.0));
        col = std::max(col, std::abs(px - 1.0));
    }
    rep.add("u_coordinates", "graph", coord, 1e-6, "u = sum_k w_k x_k");
    rep.add("w_dot_row", "all m", row, 1e-6, "w^T y_m = 1");
    rep.add("phi_dot_column", "all m", col, 1e-6, "phi^T x_m = 1");

    const int m_max = static_cast<int>(p.closed_walks.size()) - 1;
    std::vector<double> amu(n, 1.0);   // A^m u
    std::vector<double> amphi = p.phi; // A^m phi
    for (int m = 0; m <= m_max; ++m) {
        const std::string scope = "m=" + std::to_string(m);
        double wl = 0.0, wlw = 0.0, wsum = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const double lm = std::pow(lam[k], m);
            wl += p.w[k] * lm;
            wlw += p.w[k] * p.w[k] * lm;
            wsum += lm;
        }
        const double wm = p.closed_walks[static_cast<std::size_t>(m)].convert_to<double>();
        const double nm = p.total_walks[static_cast<std::size_t>(m)].convert_to<double>();
        rep.add("w_lambda_power", scope, rel(wl, dot(p.phi, amu)), 1e-6, "w^T lambda^m = phi^T A^m u");
        rep.add("phi_walk_form", scope, rel(dot(p.phi, amphi), wm), 1e-6, "phi^T A^m phi = W_m");
        rep.add("total_walks", scope, rel(wlw, nm), 1e-6, "N_m = u^T A^m u = sum_k w_k^2 lambda_k^m");
        rep.add("closed_walks", scope, rel(wsum, wm), 1e-6, "W_m = trace(A^m) = sum_k lambda_k^m");
        amu = adjacency_apply(g, amu);
        amphi = adjacency_apply(g, amphi);
    }
    {
        const std::vector<double> aphi = adjacency_apply(g, p.phi);
        rep.add("phi_a_phi", "graph", std::abs(dot(p.phi, aphi)), 1e-6, "phi^T A phi = 0");
        std::vector<double> d(g.degrees().begin(), g.degrees().end());
        double wl = 0.0;
        for (std::size_t k = 0; k < n; ++k) wl += p.w[k] * lam[k];
        rep.add("w_lambda_degree", "graph", rel(wl, dot(p.phi, d)), 1e-6, "w^T lambda = phi^T d");

        // the same identity after flipping the sign of every other eigenvector
        std::vector<double> wf(n, 0.0), pf(n, 0.0);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const double x = (k % 2 == 1 ? -1.0 : 1.0) * dec.x(j, k);
                wf[k] += x;
                pf[j] += x;
            }
        double wlf = 0.0;
        for (std::size_t k = 0; k < n; ++k) wlf += wf[k] * lam[k];
        rep.add("w_lambda_degree_flipped", "graph", rel(wlf, dot(pf, d)), 1e-6, "w^T lambda = phi^T d under sign flips");

        if (g.num_links() > 0 && connected(g)) {
            const double lhs = std::abs(wl) / (std::sqrt(2.0 * static_cast<double>(g.num_links())) * std::sqrt(nn));
            const double rhs = std::abs(dot(p.phi, d)) / (std::sqrt(dot(d, d)) * std::sqrt(nn));
            rep.add("angle_order", "graph", std::max(0.0, rhs - lhs), 1e-9, "|cos(lambda,w)| >= |cos(d,phi)|");
        }
    }

    const auto [mn, mx] = std::minmax_element(p.phi.begin(), p.phi.end());
    const double sq = std::sqrt(nn);
    const double tol = 1e-9;
    rep.add("phi_range", "graph",
            std::max({0.0, -sq - *mn, *mn - 1.0, 1.0 - *mx, *mx - sq}), 1e-7,
            "-sqrt(N) <= min phi <= 1 <= max phi <= sqrt(N)");
    rep.add("phi_mixed_sign", "graph", (n > 1 && (*mn > tol || *mx < -tol)) ? std::max(*mn, -*mx) : 0.0, 0.0,
            "phi has components of both signs");
    rep.add("phi_min_average", "graph", std::max({0.0, *mn - p.s_x / nn, -sq - *mn}), 1e-9,
            "s_X/N >= phi_(N) >= -sqrt(N)");

    // x_1 = u/sqrt(N) needs lambda_1 simple, i.e. a connected regular graph
    if (is_regular(g) && dec.simple(0)) {
        double dev = std::abs(p.w[0] - sq);
        for (std::size_t k = 1; k < n; ++k) dev = std::max(dev, std::abs(p.w[k]));
        rep.add("regular_w", "graph", dev, 1e-8, "regular graph: w = sqrt(N) e_1");
        rep.add("regular_s_x", "graph", std::abs(p.s_x - sq), 1e-8, "regular graph: s_X = sqrt(N)");
    }
    return rep;
}

BoundReport w1_bounds_check(const SpectralDecomposition& dec, const WeightProfile& p, int omega) {
    if (omega < 2) throw std::invalid_argument("w1_bounds_check: clique number must be >= 2");
    const std::size_t n = dec.size();
    BoundReport rep;
    rep.add(make_bound("w1_at_least_one", 1.0, p.w[0], "1 <= w_1", std::nullopt, 0));
    rep.add(make_bound("w1_clique", std::sqrt(dec.eigenvalues[0] / (1.0 - 1.0 / omega)), p.w[0],
                       "sqrt(lambda_1/(1-1/omega)) <= w_1", std::nullopt, 0));
    constexpr double nz = 1e-9;
    for (std::size_t k = 0; k < n; ++k) {
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (std::size_t j = 0; j < n; ++j) {
            if (std::abs(dec.x(j, k)) <= nz) continue;
            lo = std::min(lo, 1.0 / dec.x(j, k));
            hi = std::max(hi, 1.0 / dec.x(j, k));
        }
        rep.add(make_bound("w_reciprocal_lower", lo, p.w[k], "min_j 1/(x_k)_j <= w_k", std::nullopt, k));
        rep.add(make_bound("w_reciprocal_upper", p.w[k], hi, "w_k <= max_j 1/(x_k)_j", std::nullopt, k));
    }
    for (std::size_t j = 0; j < n; ++j) {
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (std::size_t k = 0; k < n; ++k) {
            if (std::abs(dec.x(j, k)) <= nz) continue;
            lo = std::min(lo, 1.0 / dec.x(j, k));
            hi = std::max(hi, 1.0 / dec.x(j, k));
        }
        rep.add(make_bound("phi_reciprocal_lower", lo, p.phi[j], "min_k 1/(x_k)_j <= phi_j", j));
        rep.add(make_bound("phi_reciprocal_upper", p.phi[j], hi, "phi_j <= max_k 1/(x_k)_j", j));
    }
    return rep;
}

double generic_spacing_fraction(const std::vector<double>& a, const std::vector<double>& b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw std::invalid_argument("generic_spacing_fraction: a and b differ in length");
    if (n < 2) throw std::invalid_argument("generic_spacing_fraction: needs at least two terms");
    for (double x : a)
        if (x < 0) throw std::invalid_argument("generic_spacing_fraction: a must be non-negative");
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (b[i] < b[i + 1]) throw std::invalid_argument("generic_spacing_fraction: b must be sorted descending");
    double num = 0.0, sa = 0.0, sla = 0.0;
    bool any_before_last = false;
    for (std::size_t k = 0; k < n; ++k) {
        sa += a[k];
        sla += static_cast<double>(k + 1) * a[k];
        if (k + 1 < n) {
            num += a[k] * (b[k] - b[n - 1]);
            any_before_last = any_before_last || a[k] > 0;
        }
    }
    if (sa == 0.0) throw std::invalid_argument("generic_spacing_fraction: a is all zero");
    if (!any_before_last) throw std::invalid_argument("generic_spacing_fraction: all weight on last index");
    return num / (static_cast<double>(n) * sa - sla);
}

SpacingBounds spacing_bounds(const Graph& g, const WeightProfile& p) {
    const std::size_t n = p.phi.size();
    if (n < 2) throw std::invalid_argument("spacing_bounds: N must be >= 2");
    const double nn = static_cast<double>(n);
    SpacingBounds s;
    s.order.resize(n);
    std::iota(s.order.begin(), s.order.end(), 0);
    std::stable_sort(s.order.begin(), s.order.end(), [&](std::size_t a, std::size_t b) { return p.phi[a] > p.phi[b]; });
    for (std::size_t i : s.order) s.sorted_phi.push_back(p.phi[i]);
    const auto& f = s.sorted_phi;
    s.observed_min = std::numeric_limits<double>::infinity();
    s.observed_max = -std::numeric_limits<double>::infinity();
    for (std::size_t l = 0; l + 1 < n; ++l) {
        s.observed_min = std::min(s.observed_min, f[l] - f[l + 1]);
        s.observed_max = std::max(s.observed_max, f[l] - f[l + 1]);
    }
    const double last = f[n - 1];
    s.f_e1 = (f[0] - last) / (nn - 1.0);
    s.f_u = (p.s_x / nn - last) / ((nn - 1.0) / 2.0);
    s.min_spacing_ub = std::min(s.f_e1, s.f_u);
    const double cs_den = std::sqrt((nn - 1.0) * (2.0 * nn - 1.0) / 6.0 * (1.0 - last * last / nn));
    s.max_spacing_lb = (1.0 - last * p.s_x / nn) / cs_den;

    s.report.add(make_bound("spacing_min_telescoping", s.observed_min, s.f_e1,
                            "min spacing <= (phi_(1) - phi_(N))/(N-1)"));
    s.report.add(make_bound("spacing_min_uniform", s.observed_min, s.f_u,
                            "min spacing <= (s_X/N - phi_(N))/((N-1)/2)"));
    if (cs_den > 0.0)
        s.report.add(make_bound("spacing_max_cauchy_schwarz", s.max_spacing_lb, s.observed_max,
                                "(1 - phi_(N) s_X/N)/sqrt((N-1)(2N-1)/6 (1 - phi_(N)^2/N)) <= max spacing"));
    else
        s.report.add(skipped_bound("spacing_max_cauchy_schwarz", "phi_min_at_minus_sqrt_n",
                                   "(1 - phi_(N) s_X/N)/sqrt((N-1)(2N-1)/6 (1 - phi_(N)^2/N)) <= max spacing"));

    const double two_l = 2.0 * static_cast<double>(g.num_links());
    s.degree_weighted_lb = std::numeric_limits<double>::quiet_NaN();
    const char* cited = "sqrt(N/2L)/(N - (1/2L) sum_l l d_(l*)) < max spacing";
    if (last < 0.0 && two_l > 0.0) {
        double weighted = 0.0;
        for (std::size_t l = 0; l < n; ++l) weighted += static_cast<double>(l + 1) * g.degree(s.order[l]);
        s.degree_weighted_lb = std::sqrt(nn / two_l) / (nn - weighted / two_l);
        s.report.add(make_bound("spacing_max_degree_weighted", s.degree_weighted_lb, s.observed_max, cited));
    } else {
        s.report.add(skipped_bound("spacing_max_degree_weighted", "phi_min_nonnegative", cited));
    }
    return s;
}

ComplementCoupling complement_coupling(const Graph& g, const SpectralDecomposition& dec,
                                       const SpectralDecomposition& dec_c) {
    const std::size_t n = g.size();
    if (dec.size() != n || dec_c.size() != n) throw std::invalid_argument("complement_coupling: size mismatch");
    const double nn = static_cast<double>(n);
    constexpr double den_tol = 1e-8;
    constexpr double weight_tol = 1e-8;
    ComplementCoupling c;
    c.theta = dec_c.eigenvalues;
    c.z = dec_c.vectors;
    c.v.assign(n, 0.0);
    std::vector<double> w(n, 0.0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            c.v[k] += c.z(j, k);
            w[k] += dec.x(j, k);
        }
    c.overlap = dec.vectors.transposed() * c.z;
    const auto& lam = dec.eigenvalues;

    c.identities.add("overlap_orthogonal", "graph",
                     max_abs_diff(c.overlap * c.overlap.transposed(), Matrix::identity(n)), 1e-8,
                     "X^T Z is orthogonal");

    double res[3] = {0.0, 0.0, 0.0};
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t k = 0; k < n; ++k) {
            const double den = c.theta[k] + lam[m] + 1.0;
            if (!dec.simple(m) || !dec_c.simple(k) || std::abs(den) <= den_tol) {
                ++c.skipped_entries;
                continue;
            }
            for (int p = 1; p <= 3; ++p) {
                const double sgn = (p % 2 == 0) ? 1.0 : -1.0;
                const double gden = std::pow(c.theta[k], p) - sgn * std::pow(lam[m] + 1.0, p);
                if (std::abs(gden) <= den_tol) continue;
                const double num = std::pow(nn - 1.0 - lam[m], p) - sgn * std::pow(lam[m] + 1.0, p);
                const double pred = w[m] * c.v[k] / nn * num / gden;
                res[p - 1] = std::max(res[p - 1], std::abs(c.overlap(m, k) - pred));
            }
        }
    c.identities.add("overlap_formula", "simple pairs", res[0], 1e-6, "x_m^T z_k = w_m v_k/(theta_k + lambda_m + 1)");
    c.identities.add("overlap_power_2", "simple pairs", res[1], 1e-6,
                     "x_m^T z_k = (w_m v_k/N)((N-1-lambda_m)^2 - (lambda_m+1)^2)/(theta_k^2 - (lambda_m+1)^2)");
    c.identities.add("overlap_power_3", "simple pairs", res[2], 1e-6,
                     "x_m^T z_k = (w_m v_k/N)((N-1-lambda_m)^3 + (lambda_m+1)^3)/(theta_k^3 + (lambda_m+1)^3)");

    // sum rules; each needs the outer weight nonzero and no near-singular term
    double res_k = 0.0, res_m = 0.0;
    std::size_t used_k = 0, used_m = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (!dec_c.simple(k) || std::abs(c.v[k]) <= weight_tol) continue;
        double s = 0.0;
        bool ok = true;
        for (std::size_t j = 0; j < n && ok; ++j) {
            const double den = c.theta[k] + lam[j] + 1.0;
            if (std::abs(w[j]) <= weight_tol) continue;
            if (std::abs(den) <= den_tol) ok = false;
            else s += w[j] * w[j] / den;
        }
        if (!ok) continue;
        ++used_k;
        res_k = std::max(res_k, std::abs(s - 1.0));
    }
    for (std::size_t m = 0; m < n; ++m) {
        if (!dec.simple(m) || std::abs(w[m]) <= weight_tol) continue;
        double s = 0.0;
        bool ok = true;
        for (std::size_t j = 0; j < n && ok; ++j) {
            const double den = c.theta[j] + lam[m] + 1.0;
            if (std::abs(c.v[j]) <= weight_tol) continue;
            if (std::abs(den) <= den_tol) ok = false;
            else s += c.v[j] * c.v[j] / den;
        }
        if (!ok) continue;
        ++used_m;
        res_m = std::max(res_m, std::abs(s - 1.0));
    }
    c.identities.add("sum_rule_over_lambda", std::to_string(used_k) + " frequencies", res_k, 1e-6,
                     "sum_j w_j^2/(theta_k + lambda_j + 1) = 1");
    c.identities.add("sum_rule_over_theta", std::to_string(used_m) + " frequencies", res_m, 1e-6,
                     "sum_j v_j^2/(theta_j + lambda_m + 1) = 1");

    c.bounds.add(make_bound("complement_largest", nn - 1.0 - lam[0], c.theta[0], "N - 1 - lambda_1 <= theta_1"));

    if (is_regular(g) && dec.simple(0)) {
        // X also diagonalizes A^c: eigenvalue N-1-lambda_1 on x_1 and -1-lambda_k elsewhere
        const Matrix ac = complement(g).adjacency();
        Matrix r = ac * dec.vectors;
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                r(j, k) -= dec.x(j, k) * (k == 0 ? nn - 1.0 - lam[0] : -1.0 - lam[k]);
        c.identities.add("regular_common_eigenvectors", "graph", r.max_abs(), 1e-8,
                         "A^c X = X diag(N-1-lambda_1, -1-lambda_k)");
        if (dec.all_simple() && dec_c.all_simple()) {
            double dev = 0.0;
            for (std::size_t m = 0; m < n; ++m) {
                double big = 0.0, rest = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    const double a = std::abs(c.overlap(m, k));
                    rest += a * a;
                    big = std::max(big, a);
                }
                dev = std::max({dev, std::abs(big - 1.0), std::abs(rest - big * big)});
            }
            c.identities.add("regular_signed_permutation", "graph", dev, 1e-6, "X^T Z is a signed permutation");
        }
    }
    return c;
}

} // namespace spectramark
