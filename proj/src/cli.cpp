#include "spectramark/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "spectramark/bounds.hpp"
#include "spectramark/centrality.hpp"
#include "spectramark/generators.hpp"
#include "spectramark/kernels.hpp"
#include "spectramark/polynomial.hpp"
#include "spectramark/spectral.hpp"
#include "spectramark/weights.hpp"

namespace spectramark {

using ojson = nlohmann::ordered_json;

const char* version_string() { return SPECTRAMARK_VERSION; }

namespace {

constexpr double zero_tol_default = 1e-8;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string header_line() { return std::string("# spectramark ") + version_string(); }

ojson big_to_json(const BigInt& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return ojson(v.convert_to<long long>());
    return ojson(v.str());
}

ojson number(double v) { return std::isfinite(v) ? ojson(v) : ojson(nullptr); }

ojson matrix_rows(const Matrix& m) {
    ojson rows = ojson::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ojson r = ojson::array();
        for (double v : m.row(i)) r.push_back(number(v));
        rows.push_back(std::move(r));
    }
    return rows;
}

ojson bound_entry_json(const BoundEntry& e) {
    ojson j;
    j["name"] = e.name;
    j["node"] = e.node ? ojson(*e.node + 1) : ojson(nullptr);
    j["frequency"] = e.frequency ? ojson(*e.frequency + 1) : ojson(nullptr);
    j["lhs"] = number(e.lhs);
    j["rhs"] = number(e.rhs);
    j["slack"] = number(e.slack);
    j["status"] = to_string(e.status);
    j["reason"] = e.reason;
    j["cited"] = e.cited;
    return j;
}

ojson identity_json(const IdentityCheck& c) {
    ojson j;
    j["name"] = c.name;
    j["scope"] = c.scope;
    j["residual"] = number(c.residual);
    j["tolerance"] = c.tolerance;
    j["pass"] = c.pass;
    j["cited"] = c.cited;
    return j;
}

ojson bound_summary(const BoundReport& r) {
    ojson j;
    j["entries"] = r.entries.size();
    j["pass"] = r.count(CheckStatus::pass);
    j["fail"] = r.count(CheckStatus::fail);
    j["skipped"] = r.count(CheckStatus::skipped);
    j["worst_slack"] = number(r.worst_slack());
    ojson f = ojson::array();
    for (const BoundEntry* e : r.failures()) f.push_back(bound_entry_json(*e));
    j["failures"] = std::move(f);
    return j;
}

Graph load(const InputSpec& in) { return read_graph_file(in.path, in.format); }

} // namespace

GraphVerification verify_graph(const Graph& g, const VerifyOptions& opt) {
    GraphVerification v;
    const std::size_t n = g.size();
    const SpectralDecomposition dec = decompose(g);
    const auto& lam = dec.eigenvalues;
    const double scale = std::max(1.0, std::abs(lam[0]));
    IdentityReport& id = v.identities;

    // spectral engine
    id.add("orthogonality", "X", dec.orthogonality_error, 1e-10, "X^T X = X X^T = I");
    id.add("eigen_residual", "X", dec.residual, 1e-8 * scale, "A X = X diag(lambda)");
    double tr = 0.0, tr2 = 0.0;
    for (double l : lam) {
        tr += l;
        tr2 += l * l;
    }
    id.add("trace_zero", "graph", std::abs(tr), 1e-8, "sum_k lambda_k = 0");
    id.add("trace_square", "graph", std::abs(tr2 - 2.0 * static_cast<double>(g.num_links())), 1e-6,
           "sum_k lambda_k^2 = 2L");
    {
        const Matrix a = g.adjacency();
        Matrix am = Matrix::identity(n);
        for (int m = 0; m <= 3; ++m) {
            Matrix f(n, n);
            for (std::size_t k = 0; k < n; ++k) {
                const double lm = std::pow(lam[k], m);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) f(i, j) += lm * dec.x(i, k) * dec.x(j, k);
            }
            id.add("matrix_function", "m=" + std::to_string(m), max_abs_diff(f, am), 1e-6,
                   "sum_k lambda_k^m x_k x_k^T = A^m");
            am = am * a;
        }
        double m1 = 0.0, m2 = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            double s1 = 0.0, s2 = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                s1 += lam[k] * dec.x(j, k) * dec.x(j, k);
                s2 += lam[k] * lam[k] * dec.x(j, k) * dec.x(j, k);
            }
            m1 = std::max(m1, std::abs(s1));
            m2 = std::max(m2, std::abs(s2 - g.degree(j)));
        }
        id.add("node_moment_1", "all j", m1, 1e-7, "sum_k lambda_k (x_k)_j^2 = 0");
        id.add("node_moment_2", "all j", m2, 1e-7, "sum_k lambda_k^2 (x_k)_j^2 = d_j");
    }
    if (n <= default_exact_poly_limit && n >= 2) {
        const IntPolynomial c = char_poly_exact(g);
        const auto deleted = parallel::node_deleted_char_polys(g);
        IntPolynomial sum;
        for (const auto& p : deleted) sum += p;
        id.add("deleted_poly_sum", "exact", sum == -c.derivative() ? 0.0 : 1.0, 0.0,
               "sum_n c_{A\\n}(x) = -c'_A(x)");
        double dres = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            if (!dec.simple(k)) continue;
            const double prod = char_poly_derivative_at(dec, k);
            dres = std::max(dres, std::abs(prod - c.derivative().evaluate(lam[k])) / std::max(1.0, std::abs(prod)));
        }
        id.add("derivative_product_form", "simple k", dres, 1e-6, "c'_A(lambda_k) = (-1)^N prod (lambda_k - lambda_m)");
    }

    // centrality
    CentralityReport rep = centrality_report(g, dec);
    if (opt.corrupt_y) rep.y(0, 0) += 1e-3;
    {
        double rows = 0.0, cols = 0.0, range = 0.0, ann = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            double r = 0.0, c = 0.0, a = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                r += rep.y(j, k);
                c += rep.y(k, j);
                a += rep.y(j, k) * lam[k];
                range = std::max({range, -rep.y(j, k), rep.y(j, k) - 1.0});
            }
            rows = std::max(rows, std::abs(r - 1.0));
            cols = std::max(cols, std::abs(c - 1.0));
            ann = std::max(ann, std::abs(a));
        }
        id.add("y_row_sums", "all j", rows, 1e-7, "sum_k (x_k)_j^2 = 1");
        id.add("y_column_sums", "all k", cols, 1e-7, "sum_j (x_k)_j^2 = 1");
        id.add("y_range", "all (j,k)", std::max(0.0, range), 1e-10, "0 <= (x_k)_j^2 <= 1");
        id.add("y_annihilates_lambda", "all j", ann, 1e-6 * scale, "Y lambda = 0");

        double det_res = 0.0, m2_res = 0.0;
        bool any_m2 = false;
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) {
                const double r = std::abs(rep.y(j, k) - rep.eigensolver_y(j, k));
                if (rep.method[j][k] == ComponentMethod::determinantal) det_res = std::max(det_res, r);
                if (rep.method[j][k] == ComponentMethod::multiplicity2) {
                    m2_res = std::max(m2_res, r);
                    any_m2 = true;
                }
            }
        id.add("determinantal_vs_eigensolver", "simple k", det_res, 1e-7,
               "(x_k)_j^2 = -det(A_{\\j} - lambda_k I)/c'_A(lambda_k)");
        if (any_m2)
            id.add("multiplicity2_vs_group_sum", "double k", m2_res, 1e-7,
                   "(1/c''_A) sum_{n!=j} det(A_{\\{j,n}} - lambda I) = (1/2) sum_group (x_l)_j^2");
    }
    {
        double res = 0.0;
        std::size_t skipped = 0;
        for (std::size_t k = 0; k < n; ++k) {
            if (!dec.simple(k)) continue;
            for (std::size_t j = 0; j < n; ++j) {
                try {
                    res = std::max(res, std::abs(resolvent_squared(g, dec, j, k) - dec.x(j, k) * dec.x(j, k)));
                } catch (const DomainError&) {
                    ++skipped;
                }
            }
        }
        id.add("resolvent_vs_eigensolver", "simple k", res, 1e-6,
               "(x_k)_j^2 = 1/(1 + a_j^T (A_{\\j} - lambda_k I)^-2 a_j)");
        if (skipped) v.notes.push_back("resolvent: " + std::to_string(skipped) + " zero-component entries skipped");
    }
    if (dec.all_simple() && n <= default_exact_poly_limit) {
        const WalkExpansion we(g, dec);
        double res = 0.0, dres = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t j = 0; j < n; ++j)
                res = std::max(res, std::abs(we.squared(j, k) - dec.x(j, k) * dec.x(j, k)));
            const double cp = char_poly_derivative_at(dec, k);
            dres = std::max(dres, std::abs(we.derivative_from_closed_walks(k) - cp) / std::max(1.0, std::abs(cp)));
        }
        id.add("walk_expansion_vs_eigensolver", "all (j,k)", res, 1e-5,
               "(x_k)_j^2 = ((-1)^N/c'_A) sum_r (A^r)_jj b_r(k)");
        id.add("closed_walk_derivative", "all k", dres, 1e-5, "c'_A(lambda_k) = (-1)^N sum_r W_r b_r(k)");
    } else {
        v.notes.push_back("walk expansion skipped: repeated eigenvalues or N above exact limit");
    }
    {
        double prod = 0.0, sign_res = 0.0, beta1 = 0.0, beta2 = 0.0, beta3 = 0.0, beta_norm = 0.0;
        const Matrix a = g.adjacency();
        const Matrix det = parallel::node_deleted_shift_determinants(g, lam);
        std::size_t same_sign_violations = 0;
        for (std::size_t k = 0; k < n; ++k) {
            if (!dec.simple(k)) continue;
            const double cp = char_poly_derivative_at(dec, k);
            for (std::size_t j = 0; j < n; ++j)
                if (std::abs(det(j, k)) > 1e-9 * std::abs(cp) && (det(j, k) > 0) == (cp > 0)) ++same_sign_violations;
            for (std::size_t j = 0; j < n; ++j) {
                const std::size_t partners = n <= 16 ? n : 2;
                for (std::size_t t = 0; t < partners; ++t) {
                    const std::size_t m = n <= 16 ? t : (j + t) % n;
                    prod = std::max(prod, std::abs(component_product(g, dec, j, m, k) - dec.x(j, k) * dec.x(m, k)));
                }
            }
            try {
                const SignedComponents sc = signed_components(g, dec, k);
                for (std::size_t j = 0; j < n; ++j) sign_res = std::max(sign_res, std::abs(sc.values[j] - dec.x(j, k)));
                const BetaNormalization bn = beta_normalization_check(g, dec, k, sc.b);
                beta1 = std::max(beta1, bn.sum_residual);
                beta2 = std::max(beta2, bn.beta_sq_residual);
                beta3 = std::max(beta3, bn.inv_beta_sq_residual);
                if (!bn.beta_sq_within_norm) beta_norm += 1.0;
            } catch (const DomainError& e) {
                v.notes.push_back("signed components k=" + std::to_string(k + 1) + ": " + e.what());
            }
        }
        id.add("deleted_determinants_same_sign", "simple k", static_cast<double>(same_sign_violations), 0.0,
               "sign det(A_{\\j} - lambda_k I) = -sign c'_A(lambda_k) for all j");
        id.add("component_product", "simple k", prod, 1e-7,
               "(x_k)_j (x_k)_m = (-1)^(j+m+1)/c'_A det((A - lambda_k I) without row j, column m)");
        id.add("signed_components", "simple k", sign_res, 1e-6, "(x_k)_j = -det(A - lambda_k I)_{row j = b}/(beta c'_A)");
        id.add("beta_ratio_sum", "simple k", beta1, 1e-6, "sum_j b_j det(A_{\\j} - lambda I)/det(...)_{row j=b} = 1");
        id.add("beta_squared", "simple k", beta2, 1e-6, "beta^2 = -(1/c'_A) sum_j b_j det(...)_{row j=b}");
        id.add("beta_inverse_squared", "simple k", beta3, 1e-6, "1/beta^2 = sum_j det^2(A_{\\j} - lambda I)/det^2(...)_{row j=b}");
        id.add("beta_within_norm", "simple k", beta_norm, 0.0, "beta^2 <= ||b||^2");

        std::size_t disagree = 0;
        for (std::size_t k = 0; k < n; ++k) {
            if (!dec.simple(k) || n < 2) continue;
            for (std::size_t j = 0; j < n; ++j) {
                const bool zero = rep.eigensolver_y(j, k) <= 1e-7;
                if (zero != in_deleted_spectrum(g, j, lam[k], 1e-7)) ++disagree;
            }
        }
        id.add("zero_component_predicate", "simple k", static_cast<double>(disagree), 0.0,
               "(x_k)_j = 0 <=> lambda_k in spectrum(A_{\\j})");
    }
    if (!has_isolated_node(g)) {
        id.append(r_identity_suite(g, dec));
        const SiProfile si = si_profile(g, dec);
        id.add("s_reconstruction", "all i", si.reconstruction_residual, 1e-7, "min_k lambda_k^2 = d_i (1 - S_i)/(1 + S_i)");
    } else {
        v.notes.push_back("r_i(k) and S_i suites skipped: isolated node");
    }

    // weights
    const WeightProfile wp = weight_profile(g, dec, opt.m_max);
    id.append(identity_suite(g, dec, wp));

    // inequalities
    v.bounds = full_bound_suite(g, dec, opt.bound_m_max);
    if (g.num_links() > 0 && dec.simple(0)) {
        const int omega = opt.omega.value_or(static_cast<int>(n));
        v.bounds.append(w1_bounds_check(dec, wp, std::max(2, omega)));
    }
    if (n >= 2) {
        v.bounds.append(spacing_bounds(g, wp).report);
        const Graph gc = complement(g);
        const SpectralDecomposition dc = decompose(gc);
        const ComplementCoupling cc = complement_coupling(g, dec, dc);
        id.append(cc.identities);
        v.bounds.append(cc.bounds);
        if (cc.skipped_entries) v.notes.push_back("complement overlap: " + std::to_string(cc.skipped_entries) + " entries skipped");
        if (g.num_links() > 0) v.notes.push_back("xi = " + fmt17(xi_statistic(g, dec)));
    }
    if (connected(g) && n >= 3) {
        const double second = std::max(std::abs(lam[1]), std::abs(lam[n - 1]));
        if (std::pow(second / lam[0], 16) <= 0.05 / 4)
            id.add("walk_ratio_limit", "m=16", walk_ratio_limit_error(g, dec, 16), 0.05,
                   "(A^m)_jj/W_m -> (x_1)_j^2");
    }
    return v;
}

GridSpec parse_grid(const std::string& text) {
    GridSpec s;
    const auto a = text.find(':');
    const auto b = a == std::string::npos ? std::string::npos : text.find(':', a + 1);
    if (b == std::string::npos) throw std::invalid_argument("grid must look like lo:hi:steps");
    try {
        std::size_t used = 0;
        s.lo = std::stod(text.substr(0, a), &used);
        if (used != a) throw std::invalid_argument("");
        const std::string his = text.substr(a + 1, b - a - 1);
        s.hi = std::stod(his, &used);
        if (used != his.size()) throw std::invalid_argument("");
        const std::string st = text.substr(b + 1);
        const long long steps = std::stoll(st, &used);
        if (used != st.size() || steps < 1) throw std::invalid_argument("");
        s.steps = static_cast<std::size_t>(steps);
    } catch (const std::exception&) {
        throw std::invalid_argument("grid must look like lo:hi:steps with steps >= 1, got '" + text + "'");
    }
    if (s.hi < s.lo) throw std::invalid_argument("grid: hi must be >= lo");
    return s;
}

namespace {

template <class F>
int guarded(std::ostream& err, F&& body) {
    try {
        return body();
    } catch (const ParseError& e) {
        err << "error: parse: " << e.what() << '\n';
        return exit_input_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    }
}

} // namespace

int cmd_analyze(const AnalyzeArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (args.out != "json" && args.out != "csv") throw std::invalid_argument("--out must be json or csv");
        const Graph g = load(args.input);
        const std::size_t n = g.size();
        const SpectralDecomposition dec = decompose(g);
        const CentralityReport rep = centrality_report(g, dec, {zero_tol_default, true});
        const WeightProfile wp = weight_profile(g, dec, args.m_max);

        if (args.out == "csv") {
            out << header_line() << '\n';
            out << "node,degree,phi,redundancy";
            for (std::size_t k = 0; k < n; ++k) out << ",Y_" << k + 1;
            out << '\n';
            for (std::size_t j = 0; j < n; ++j) {
                out << j + 1 << ',' << g.degree(j) << ',' << fmt17(wp.phi[j]) << ',' << rep.redundancy[j];
                for (std::size_t k = 0; k < n; ++k) out << ',' << fmt17(rep.y(j, k));
                out << '\n';
            }
            return int(exit_pass);
        }

        const GraphStats st = stats(g);
        ojson doc;
        doc["schema_version"] = schema_version;
        doc["tool"] = "spectramark";
        doc["version"] = version_string();
        doc["seed"] = nullptr;
        doc["tolerances"] = {{"mult_tol", dec.mult_tol},
                             {"sign_tol", 1e-9},
                             {"zero_tol", zero_tol_default},
                             {"bound_abs_tol", bound_abs_tol},
                             {"bound_rel_tol", bound_rel_tol}};
        ojson gj;
        gj["N"] = n;
        gj["L"] = st.num_links;
        gj["degrees"] = st.degree_vector;
        gj["d_min"] = st.d_min;
        gj["d_max"] = st.d_max;
        gj["d_av"] = st.d_av;
        gj["connected"] = st.connected;
        doc["graph"] = std::move(gj);

        ojson sp;
        sp["eigenvalues"] = dec.eigenvalues;
        ojson groups = ojson::array();
        for (const auto& grp : dec.groups) groups.push_back({grp.first + 1, grp.last + 1});
        sp["multiplicity_groups"] = std::move(groups);
        if (n <= default_exact_poly_limit) {
            ojson coeffs = ojson::array();
            const IntPolynomial c_a = char_poly_exact(g);
            for (const auto& c : c_a.coeffs()) coeffs.push_back(big_to_json(c));
            sp["char_poly"] = std::move(coeffs);
        } else {
            sp["char_poly"] = nullptr;
        }
        doc["spectrum"] = std::move(sp);

        ojson cj;
        cj["Y"] = matrix_rows(rep.y);
        ojson methods = ojson::array();
        for (const auto& row : rep.method) {
            ojson r = ojson::array();
            for (auto m : row) r.push_back(to_string(m));
            methods.push_back(std::move(r));
        }
        cj["method"] = std::move(methods);
        cj["group_averaged"] = rep.group_averaged;
        cj["max_residual"] = rep.residual.max_abs();
        cj["redundancy"] = rep.redundancy;
        doc["centrality"] = std::move(cj);

        ojson wj;
        wj["w"] = wp.w;
        wj["phi"] = wp.phi;
        wj["s_X"] = wp.s_x;
        wj["s_X2"] = wp.s_x2;
        ojson wc = ojson::array(), tc = ojson::array();
        for (const auto& x : wp.closed_walks) wc.push_back(big_to_json(x));
        for (const auto& x : wp.total_walks) tc.push_back(big_to_json(x));
        wj["closed_walks"] = std::move(wc);
        wj["total_walks"] = std::move(tc);
        doc["weights"] = std::move(wj);

        BoundReport bounds = full_bound_suite(g, dec, 3);
        if (n >= 2) bounds.append(spacing_bounds(g, wp).report);
        doc["bounds"] = bound_summary(bounds);

        out << doc.dump(2) << '\n';
        return int(exit_pass);
    });
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        std::vector<std::pair<std::string, Graph>> corpus;
        if (args.input && args.random) throw std::invalid_argument("give either an input file or --random, not both");
        if (args.input) {
            corpus.emplace_back(args.input->path, load(*args.input));
        } else if (args.random) {
            const RandomCorpus& r = *args.random;
            if (r.n < 1 || r.count < 1) throw std::invalid_argument("--random needs N >= 1 and count >= 1");
            for (std::size_t i = 0; i < r.count; ++i) {
                const std::uint64_t seed = r.seed + i;
                corpus.emplace_back("er(" + std::to_string(r.n) + "," + fmt17(r.p) + ",seed=" + std::to_string(seed) + ")",
                                    erdos_renyi(r.n, r.p, seed));
            }
        } else {
            throw std::invalid_argument("verify needs an input file or --random N p count seed");
        }

        VerifyOptions vo;
        vo.corrupt_y = args.corrupt_y;
        vo.omega = args.omega;
        std::size_t id_fail = 0, id_total = 0, b_fail = 0, b_pass = 0, b_skip = 0;
        std::map<std::string, std::size_t> fail_families;
        ojson graphs = ojson::array();
        for (auto& [label, g] : corpus) {
            GraphVerification gv = verify_graph(g, vo);
            gv.label = label;
            id_total += gv.identities.checks.size();
            id_fail += gv.identities.failures();
            b_fail += gv.bounds.count(CheckStatus::fail);
            b_pass += gv.bounds.count(CheckStatus::pass);
            b_skip += gv.bounds.count(CheckStatus::skipped);
            for (const auto& c : gv.identities.checks)
                if (!c.pass) ++fail_families[c.name];
            for (const BoundEntry* e : gv.bounds.failures()) ++fail_families[e->name];
            if (args.json) {
                ojson gj;
                gj["label"] = label;
                ojson ids = ojson::array();
                for (const auto& c : gv.identities.checks) ids.push_back(identity_json(c));
                gj["identities"] = std::move(ids);
                gj["bounds"] = bound_summary(gv.bounds);
                gj["notes"] = gv.notes;
                graphs.push_back(std::move(gj));
            } else {
                out << (gv.pass() ? "PASS " : "FAIL ") << label << "  identities " << gv.identities.checks.size() - gv.identities.failures()
                    << "/" << gv.identities.checks.size() << "  bounds pass=" << gv.bounds.count(CheckStatus::pass)
                    << " fail=" << gv.bounds.count(CheckStatus::fail) << " skipped=" << gv.bounds.count(CheckStatus::skipped)
                    << '\n';
                for (const auto& c : gv.identities.checks)
                    if (!c.pass || args.verbose)
                        out << "  " << (c.pass ? "ok   " : "FAIL ") << c.name << " [" << c.scope << "] residual=" << fmt17(c.residual)
                            << " tol=" << c.tolerance << "  " << c.cited << '\n';
                for (const auto& e : gv.bounds.entries) {
                    if (e.status != CheckStatus::fail && !args.verbose) continue;
                    out << "  " << (e.status == CheckStatus::fail ? "FAIL " : e.status == CheckStatus::pass ? "ok   " : "skip ") << e.name;
                    if (e.node) out << " node=" << *e.node + 1;
                    if (e.frequency) out << " k=" << *e.frequency + 1;
                    if (e.status == CheckStatus::skipped)
                        out << " reason=" << e.reason;
                    else
                        out << " lhs=" << fmt17(e.lhs) << " rhs=" << fmt17(e.rhs) << " slack=" << fmt17(e.slack);
                    out << "  " << e.cited << '\n';
                }
                if (args.verbose)
                    for (const auto& note : gv.notes) out << "  note: " << note << '\n';
            }
        }
        const bool failed = id_fail > 0 || b_fail > 0 || (args.strict && b_skip > 0);
        if (args.json) {
            ojson doc;
            doc["schema_version"] = schema_version;
            doc["tool"] = "spectramark";
            doc["version"] = version_string();
            doc["seed"] = args.random ? ojson(args.random->seed) : ojson(nullptr);
            doc["strict"] = args.strict;
            doc["graphs"] = std::move(graphs);
            ojson fam;
            for (const auto& [k, c] : fail_families) fam[k] = c;
            doc["summary"] = {{"graphs", corpus.size()}, {"identity_checks", id_total}, {"identity_failures", id_fail},
                              {"bound_pass", b_pass}, {"bound_fail", b_fail}, {"bound_skipped", b_skip},
                              {"failing_families", fam}, {"result", failed ? "fail" : "pass"}};
            out << doc.dump(2) << '\n';
        } else {
            out << "summary: graphs=" << corpus.size() << " identity_checks=" << id_total << " identity_failures=" << id_fail
                << " bound_pass=" << b_pass << " bound_fail=" << b_fail << " bound_skipped=" << b_skip << '\n';
            for (const auto& [k, c] : fail_families) out << "failing family: " << k << " x" << c << '\n';
            out << "result: " << (failed ? "FAIL" : "PASS") << '\n';
        }
        return int(failed ? exit_verification_failure : exit_pass);
    });
}

int cmd_polynomials(const PolynomialsArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Graph g = load(args.input);
        const std::size_t n = g.size();
        const IntPolynomial c = char_poly_exact(g);
        std::vector<IntPolynomial> deleted;
        if (n >= 2) deleted = parallel::node_deleted_char_polys(g);
        const SpectralDecomposition dec = decompose(g);
        GridSpec grid;
        if (args.grid) {
            grid = *args.grid;
        } else {
            const double eps = 0.05 * (dec.eigenvalues.front() - dec.eigenvalues.back());
            grid = {dec.eigenvalues.back() - eps, dec.eigenvalues.front() + eps, 201};
        }
        out << header_line() << '\n';
        out << "# eigenvalues";
        for (double l : dec.eigenvalues) out << ' ' << fmt17(l);
        out << '\n';
        out << "x,c_A";
        for (std::size_t j = 0; j < deleted.size(); ++j) out << ",c_A\\" << j + 1;
        out << '\n';
        for (std::size_t s = 0; s < grid.steps; ++s) {
            const double x = grid.steps == 1 ? grid.lo
                                             : grid.lo + (grid.hi - grid.lo) * static_cast<double>(s) /
                                                             static_cast<double>(grid.steps - 1);
            out << fmt17(x) << ',' << fmt17(c.evaluate(x));
            for (const auto& p : deleted) out << ',' << fmt17(p.evaluate(x));
            out << '\n';
        }
        return int(exit_pass);
    });
}

int cmd_centrality_grid(const CentralityGridArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Graph g = load(args.input);
        const std::size_t n = g.size();
        const SpectralDecomposition dec = decompose(g);
        const CentralityReport rep = centrality_report(g, dec);
        double dd = 0.0;
        for (int d : g.degrees()) dd += static_cast<double>(d) * d;
        out << header_line() << '\n';
        for (std::size_t k = 0; k < n; ++k) out << (k ? "," : "") << "Y_" << k + 1;
        out << ",normalized_degree\n";
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) out << (k ? "," : "") << fmt17(rep.y(j, k));
            const double d = g.degree(j);
            out << ',' << fmt17(dd > 0 ? d * d / dd : 0.0) << '\n';
        }
        return int(exit_pass);
    });
}

int cmd_gen(const GenArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Graph g = generate(args.kind, args.params, args.seed);
        std::ostringstream body;
        body << header_line() << " gen " << args.kind;
        for (double p : args.params) body << ' ' << fmt17(p);
        body << " seed " << args.seed << '\n';
        body << (args.format == GraphFormat::edge_list ? to_edge_list(g) : to_adjacency_matrix(g));
        if (args.out.empty()) {
            out << body.str();
        } else {
            std::ofstream f(args.out, std::ios::binary);
            if (!f) throw std::runtime_error("cannot write '" + args.out + "'");
            f << body.str();
        }
        return int(exit_pass);
    });
}

int cmd_complement(const ComplementArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Graph g = load(args.input);
        if (g.size() < 2) throw std::invalid_argument("complement coupling needs N >= 2");
        const SpectralDecomposition dec = decompose(g);
        const SpectralDecomposition dc = decompose(complement(g));
        const ComplementCoupling cc = complement_coupling(g, dec, dc);
        const bool ok = cc.identities.all_pass() && cc.bounds.all_pass();
        if (args.json) {
            ojson doc;
            doc["schema_version"] = schema_version;
            doc["tool"] = "spectramark";
            doc["version"] = version_string();
            doc["lambda"] = dec.eigenvalues;
            doc["theta"] = cc.theta;
            doc["v"] = cc.v;
            doc["overlap"] = matrix_rows(cc.overlap);
            ojson ids = ojson::array();
            for (const auto& c : cc.identities.checks) ids.push_back(identity_json(c));
            doc["identities"] = std::move(ids);
            ojson bs = ojson::array();
            for (const auto& e : cc.bounds.entries) bs.push_back(bound_entry_json(e));
            doc["bounds"] = std::move(bs);
            doc["skipped_entries"] = cc.skipped_entries;
            doc["result"] = ok ? "pass" : "fail";
            out << doc.dump(2) << '\n';
        } else {
            out << header_line() << '\n';
            out << "regular: " << (is_regular(g) ? "yes" : "no") << "  simple spectra: "
                << (dec.all_simple() && dc.all_simple() ? "yes" : "no") << '\n';
            for (const auto& c : cc.identities.checks)
                out << (c.pass ? "ok   " : "FAIL ") << c.name << " [" << c.scope << "] residual=" << fmt17(c.residual)
                    << " tol=" << c.tolerance << "  " << c.cited << '\n';
            for (const auto& e : cc.bounds.entries)
                out << (e.status == CheckStatus::pass ? "ok   " : "FAIL ") << e.name << " lhs=" << fmt17(e.lhs)
                    << " rhs=" << fmt17(e.rhs) << " slack=" << fmt17(e.slack) << "  " << e.cited << '\n';
            out << "skipped overlap entries: " << cc.skipped_entries << '\n';
            out << "result: " << (ok ? "PASS" : "FAIL") << '\n';
        }
        return int(ok ? exit_pass : exit_verification_failure);
    });
}

} // namespace spectramark
