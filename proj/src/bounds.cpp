#include "spectramark/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "spectramark/centrality.hpp"
#include "spectramark/polynomial.hpp"

namespace spectramark {

namespace {

void require_no_isolated(const Graph& g, const char* what) {
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g.degree(i) == 0)
            throw DomainError(std::string(what) + ": node " + std::to_string(i + 1) + " is isolated");
}

double sq(double x) { return x * x; }

int min_degree(const Graph& g) { return *std::min_element(g.degrees().begin(), g.degrees().end()); }
int max_degree(const Graph& g) { return *std::max_element(g.degrees().begin(), g.degrees().end()); }

double min_lambda_sq(const SpectralDecomposition& dec) {
    double m = std::numeric_limits<double>::infinity();
    for (double l : dec.eigenvalues) m = std::min(m, l * l);
    return m;
}

} // namespace

BoundReport upper_bound_squared(const Graph& g, const SpectralDecomposition& dec) {
    require_no_isolated(g, "upper_bound_squared");
    BoundReport rep;
    for (std::size_t k = 0; k < dec.size(); ++k)
        for (std::size_t i = 0; i < g.size(); ++i)
            rep.add(make_bound("upper_bound_squared", sq(dec.x(i, k)),
                               1.0 / (1.0 + sq(dec.eigenvalues[k]) / g.degree(i)),
                               "(x_k)_i^2 <= 1/(1 + lambda_k^2/d_i)", i, k));
    return rep;
}

BoundReport nikiforov_extended(const Graph& g, const SpectralDecomposition& dec) {
    const std::size_t n = g.size();
    BoundReport rep;
    const char* cited = "min_j (x_k)_j^2 <= (1 - (d_min/2) s_k)/(lambda_k^2/d_min + N - d_min)";
    const double dmin = min_degree(g);
    for (std::size_t k = 0; k < n; ++k) {
        if (dmin == 0 || n < 2) {
            rep.add(skipped_bound("nikiforov_extended", dmin == 0 ? "isolated_node" : "single_node", cited, std::nullopt, k));
            continue;
        }
        double s = std::numeric_limits<double>::infinity();
        double ymin = std::numeric_limits<double>::infinity();
        for (std::size_t l = 0; l < n; ++l) {
            ymin = std::min(ymin, sq(dec.x(l, k)));
            for (std::size_t j = l + 1; j < n; ++j) s = std::min(s, sq(dec.x(l, k) - dec.x(j, k)));
        }
        const double rhs = (1.0 - dmin / 2.0 * s) / (sq(dec.eigenvalues[k]) / dmin + static_cast<double>(n) - dmin);
        rep.add(make_bound("nikiforov_extended", ymin, rhs, cited, std::nullopt, k));
    }
    return rep;
}

BoundReport walk_minmax_bounds(const Graph& g, const SpectralDecomposition& dec, int m) {
    if (m < 0 || m > 16) throw std::out_of_range("walk_minmax_bounds: m must lie in [0,16]");
    const std::size_t n = g.size();
    const WalkCounts wc = walk_counts(g, 2 * m);
    const auto diag = closed_walk_diagonals(g, m);
    const double nm = wc.total[static_cast<std::size_t>(m)].convert_to<double>();
    const double n2m = wc.total[static_cast<std::size_t>(2 * m)].convert_to<double>();
    const double wm = wc.closed[static_cast<std::size_t>(m)].convert_to<double>();
    const std::string tag = "m=" + std::to_string(m);
    BoundReport rep;

    for (std::size_t k = 0; k < n; ++k) {
        double lo = std::numeric_limits<double>::infinity(), hi = -lo, w = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            lo = std::min(lo, dec.x(j, k));
            hi = std::max(hi, dec.x(j, k));
            w += dec.x(j, k);
        }
        const double lm = std::pow(dec.eigenvalues[k], m);
        if (nm == 0.0) {
            rep.add(skipped_bound("walk_weight_lower_" + tag, "total_walks_zero", "min_j (x_k)_j <= lambda_k^m w_k/N_m", std::nullopt, k));
            rep.add(skipped_bound("walk_weight_upper_" + tag, "total_walks_zero", "lambda_k^m w_k/N_m <= max_j (x_k)_j", std::nullopt, k));
        } else {
            const double mid = lm * w / nm;
            rep.add(make_bound("walk_weight_lower_" + tag, lo, mid, "min_j (x_k)_j <= lambda_k^m w_k/N_m", std::nullopt, k));
            rep.add(make_bound("walk_weight_upper_" + tag, mid, hi, "lambda_k^m w_k/N_m <= max_j (x_k)_j", std::nullopt, k));
        }
        if (n2m == 0.0)
            rep.add(skipped_bound("walk_max_lower_" + tag, "total_walks_zero", "|lambda_k^m|/sqrt(N_2m) <= max_j (x_k)_j", std::nullopt, k));
        else
            rep.add(make_bound("walk_max_lower_" + tag, std::abs(lm) / std::sqrt(n2m), hi,
                               "|lambda_k^m|/sqrt(N_2m) <= max_j (x_k)_j", std::nullopt, k));
    }

    for (std::size_t j = 0; j < n; ++j) {
        const char* lo_cited = "min_k (x_k)_j^2 <= (A^m)_jj/W_m";
        const char* hi_cited = "(A^m)_jj/W_m <= max_k (x_k)_j^2";
        if (wm == 0.0) {
            rep.add(skipped_bound("walk_closed_lower_" + tag, "closed_walks_zero", lo_cited, j));
            rep.add(skipped_bound("walk_closed_upper_" + tag, "closed_walks_zero", hi_cited, j));
            continue;
        }
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (std::size_t k = 0; k < n; ++k) {
            lo = std::min(lo, sq(dec.x(j, k)));
            hi = std::max(hi, sq(dec.x(j, k)));
        }
        const double mid = diag[static_cast<std::size_t>(m)][j].convert_to<double>() / wm;
        rep.add(make_bound("walk_closed_lower_" + tag, lo, mid, lo_cited, j));
        rep.add(make_bound("walk_closed_upper_" + tag, mid, hi, hi_cited, j));
    }
    return rep;
}

double walk_ratio_limit_error(const Graph& g, const SpectralDecomposition& dec, int m) {
    const auto diag = closed_walk_diagonals(g, m);
    BigInt tr = 0;
    for (const auto& v : diag[static_cast<std::size_t>(m)]) tr += v;
    double err = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j) {
        const Float50 ratio = Float50(diag[static_cast<std::size_t>(m)][j]) / Float50(tr);
        err = std::max(err, std::abs(static_cast<double>(ratio) - sq(dec.x(j, 0))));
    }
    return err;
}

BoundReport max_component_lb(const Graph& g, const SpectralDecomposition& dec) {
    require_no_isolated(g, "max_component_lb");
    const std::size_t n = g.size();
    const auto diag = closed_walk_diagonals(g, 4);
    BoundReport rep;
    for (std::size_t i = 0; i < n; ++i) {
        double hi = 0.0;
        for (std::size_t k = 0; k < n; ++k) hi = std::max(hi, sq(dec.x(i, k)));
        const double d = g.degree(i);
        const double lb = 4.0 / (static_cast<double>(n) * (3.0 + diag[4][i].convert_to<double>() / (d * d)));
        rep.add(make_bound("max_component_lower", lb, hi, "4/(N(3 + (A^4)_ii/d_i^2)) <= max_k (x_k)_i^2", i));
    }
    return rep;
}

BoundReport min_over_k_and_i_bounds(const Graph& g, const SpectralDecomposition& dec) {
    require_no_isolated(g, "min_over_k_and_i_bounds");
    const std::size_t n = g.size();
    const double nn = static_cast<double>(n);
    const double d_av = 2.0 * static_cast<double>(g.num_links()) / nn;
    const double d_max = max_degree(g);
    double e_inv = 0.0;
    for (int d : g.degrees()) e_inv += 1.0 / d;
    e_inv /= nn;
    BoundReport rep;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = g.degree(i);
        double ymin = std::numeric_limits<double>::infinity(), den = ymin;
        for (std::size_t k = 0; k < n; ++k) {
            ymin = std::min(ymin, sq(dec.x(i, k)));
            den = std::min(den, sq(dec.eigenvalues[k]) / d + 1.0);
        }
        const double rhs = std::min(1.0 + d_av / d, 2.0) / (nn * den);
        rep.add(make_bound("min_over_frequencies", ymin, rhs,
                           "min_k (x_k)_i^2 <= (1/N) min(1 + d_av/d_i, 2)/min_k(lambda_k^2/d_i + 1)", i));
    }
    for (std::size_t k = 0; k < n; ++k) {
        double ymin = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) ymin = std::min(ymin, sq(dec.x(i, k)));
        const double l2 = sq(dec.eigenvalues[k]);
        const double rhs = (1.0 + l2 * e_inv) / (nn * (1.0 + l2 / d_max));
        rep.add(make_bound("min_over_nodes", ymin, rhs,
                           "min_i (x_k)_i^2 <= (1/N)(1 + lambda_k^2 E[1/D])/(1 + lambda_k^2/d_max)", std::nullopt, k));
    }
    return rep;
}

BoundReport classical_bounds(const Graph& g, const SpectralDecomposition& dec) {
    BoundReport rep;
    rep.add(make_bound("lambda1_sqrt_dmax", std::sqrt(static_cast<double>(max_degree(g))), dec.eigenvalues[0],
                       "sqrt(d_max) <= lambda_1", std::nullopt, 0));
    rep.add(make_bound("min_lambda_sq_dmin", min_lambda_sq(dec), min_degree(g), "min_k lambda_k^2 <= d_min"));
    return rep;
}

IdentityReport r_identity_suite(const Graph& g, const SpectralDecomposition& dec) {
    const RiDecomposition rd = r_decomposition(g, dec);
    const std::size_t n = g.size();
    double recon = 0.0, range = 0.0, sum2 = 0.0, unity_node = 0.0, unity_freq = 0.0;
    std::vector<double> col(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double d = g.degree(i);
        double s2 = 0.0, su = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const double r = rd.r(i, k);
            const double den = sq(dec.eigenvalues[k]) / d + 1.0;
            recon = std::max(recon, std::abs(sq(dec.x(i, k)) - (1.0 - r) / den));
            range = std::max({range, -r, r - 1.0});
            s2 += 1.0 - r;
            su += (1.0 - r) / den;
            col[k] += (1.0 - r) / den;
        }
        sum2 = std::max(sum2, std::abs(s2 - 2.0));
        unity_node = std::max(unity_node, std::abs(su - 1.0));
    }
    for (double c : col) unity_freq = std::max(unity_freq, std::abs(c - 1.0));
    IdentityReport rep;
    rep.add("r_reconstruction", "all (i,k)", recon, 1e-9, "(x_k)_i^2 = (1 - r_i(k))/(lambda_k^2/d_i + 1)");
    rep.add("r_range", "all (i,k)", std::max(0.0, range), 1e-9, "0 <= r_i(k) <= 1");
    rep.add("r_sum_two", "all i", sum2, 1e-7, "sum_k (1 - r_i(k)) = 2");
    rep.add("r_unity_per_node", "all i", unity_node, 1e-8, "sum_k (1 - r_i(k))/(lambda_k^2/d_i + 1) = 1");
    rep.add("r_unity_per_frequency", "all k", unity_freq, 1e-8, "sum_i (1 - r_i(k))/(lambda_k^2/d_i + 1) = 1");
    return rep;
}

SiProfile si_profile(const Graph& g, const SpectralDecomposition& dec) {
    require_no_isolated(g, "si_profile");
    const std::size_t n = g.size();
    const RiDecomposition rd = r_decomposition(g, dec);
    SiProfile p;
    p.connected = connected(g);
    p.min_lambda_sq = min_lambda_sq(dec);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return sq(dec.eigenvalues[a]) > sq(dec.eigenvalues[b]); });
    p.s.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double d = g.degree(i);
        double prefix = 0.0, s = 0.0;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            prefix += 1.0 - rd.r(i, order[k]);
            const double hi = 1.0 / (sq(dec.eigenvalues[order[k + 1]]) / d + 1.0);
            const double lo = 1.0 / (sq(dec.eigenvalues[order[k]]) / d + 1.0);
            s += prefix * (hi - lo);
        }
        p.s[i] = s;
        p.reconstruction_residual =
            std::max(p.reconstruction_residual,
                     std::abs(d * (1.0 - s) / (1.0 + s) - p.min_lambda_sq) / std::max(1.0, p.min_lambda_sq));
    }

    const double dmin = min_degree(g);
    const char* strict_cited = "min_k lambda_k^2 < d_min (connected)";
    if (p.connected)
        p.entries.add(make_bound("min_lambda_sq_strict", p.min_lambda_sq, dmin, strict_cited, std::nullopt, std::nullopt, true));
    else
        p.entries.add(skipped_bound("min_lambda_sq_strict", "disconnected", strict_cited));
    // equality forces disconnection: encoded as 0 <= 0 when it holds, 0 <= -1 when violated
    const bool equal = std::abs(p.min_lambda_sq - dmin) <= 1e-9;
    p.entries.add(make_bound("equality_implies_disconnected", 0.0, (equal && p.connected) ? -1.0 : 0.0,
                             "min lambda^2 = d_min => disconnected"));
    for (std::size_t i = 0; i < n; ++i) {
        p.entries.add(make_bound("s_range_lower", 0.0, p.s[i], "0 <= S_i", i));
        p.entries.add(make_bound("s_range_upper", p.s[i], 1.0, "S_i <= 1", i));
        if (p.connected)
            p.entries.add(make_bound("s_positive", 0.0, p.s[i], "S_i > 0 (connected)", i, std::nullopt, true));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (g.degree(i) > g.degree(j))
                p.entries.add(make_bound("s_monotone_in_degree", p.s[j], p.s[i], "d_i > d_j => S_i > S_j", i));
    return p;
}

double xi_statistic(const Graph& g, const SpectralDecomposition& dec) {
    if (g.size() < 2) throw std::invalid_argument("xi_statistic: N must be >= 2");
    const SpectralDecomposition lap = decompose(laplacian(g));
    const double mu = lap.eigenvalues[g.size() - 2];
    return min_degree(g) - min_lambda_sq(dec) - mu;
}

BoundReport full_bound_suite(const Graph& g, const SpectralDecomposition& dec, int m_max) {
    BoundReport rep;
    const bool isolated = has_isolated_node(g);
    const auto guarded = [&](const char* name, auto&& fn) {
        if (isolated)
            rep.add(skipped_bound(name, "isolated_node", name));
        else
            rep.append(fn());
    };
    guarded("upper_bound_squared", [&] { return upper_bound_squared(g, dec); });
    rep.append(nikiforov_extended(g, dec));
    for (int m = 0; m <= m_max; ++m) rep.append(walk_minmax_bounds(g, dec, m));
    guarded("max_component_lower", [&] { return max_component_lb(g, dec); });
    guarded("min_over_frequencies", [&] { return min_over_k_and_i_bounds(g, dec); });
    rep.append(classical_bounds(g, dec));
    guarded("si_profile", [&] { return si_profile(g, dec).entries; });
    return rep;
}

} // namespace spectramark
