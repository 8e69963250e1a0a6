#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spectramark/cli.hpp"

using namespace spectramark;

namespace {

void add_input(CLI::App* cmd, InputSpec& in, std::string& format) {
    cmd->add_option("input", in.path, "graph file")->required();
    cmd->add_option("--format", format, "edge_list | adjacency_matrix")->default_val("edge_list");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral centrality, fundamental weights and bound verification"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(version_string()));

    std::string format = "edge_list";

    AnalyzeArgs analyze;
    auto* c_an = app.add_subcommand("analyze", "spectrum, centrality, weights and bound summary");
    add_input(c_an, analyze.input, format);
    c_an->add_option("--out", analyze.out, "json | csv")->default_val("json");
    c_an->add_option("--mmax", analyze.m_max, "largest walk length in the weight profile")->default_val(6);

    VerifyArgs verify;
    std::string verify_input;
    std::vector<std::string> random;
    int omega = 0;
    auto* c_ve = app.add_subcommand("verify", "run every identity and inequality check");
    c_ve->add_option("input", verify_input, "graph file");
    c_ve->add_option("--format", format, "edge_list | adjacency_matrix")->default_val("edge_list");
    c_ve->add_option("--random", random, "N p count seed")->expected(4);
    c_ve->add_flag("--strict", verify.strict, "count skipped checks as failures");
    c_ve->add_flag("--corrupt-y", verify.corrupt_y, "perturb Y before checking (negative control)");
    c_ve->add_flag("--json", verify.json, "JSON report");
    c_ve->add_flag("-v,--verbose", verify.verbose, "list every check");
    c_ve->add_option("--omega", omega, "clique number for the w_1 bound");

    PolynomialsArgs polys;
    std::string grid;
    auto* c_po = app.add_subcommand("polynomials", "sample c_A and every node-deleted polynomial");
    add_input(c_po, polys.input, format);
    c_po->add_option("--grid", grid, "lo:hi:steps");

    CentralityGridArgs cgrid;
    auto* c_cg = app.add_subcommand("centrality-grid", "Y matrix with normalized degree column");
    add_input(c_cg, cgrid.input, format);

    GenArgs gen;
    auto* c_ge = app.add_subcommand("gen", "generate a graph");
    c_ge->add_option("kind", gen.kind, "complete | star | path | cycle | complete_bipartite | erdos_renyi")->required();
    c_ge->add_option("params", gen.params, "sizes, or n p for erdos_renyi");
    c_ge->add_option("--seed", gen.seed, "PRNG seed")->default_val(0);
    c_ge->add_option("--out", gen.out, "output path (default stdout)");
    c_ge->add_option("--format", format, "edge_list | adjacency_matrix")->default_val("edge_list");

    ComplementArgs comp;
    auto* c_co = app.add_subcommand("complement", "eigenvector coupling with the complement graph");
    add_input(c_co, comp.input, format);
    c_co->add_flag("--json", comp.json, "JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : exit_input_error;
    }

    GraphFormat fmt;
    try {
        fmt = parse_format_name(format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input_error;
    }

    if (c_an->parsed()) {
        analyze.input.format = fmt;
        return cmd_analyze(analyze, std::cout, std::cerr);
    }
    if (c_ve->parsed()) {
        if (!verify_input.empty()) verify.input = InputSpec{verify_input, fmt};
        if (!random.empty()) {
            try {
                verify.random = RandomCorpus{std::stoul(random[0]), std::stod(random[1]), std::stoul(random[2]),
                                             std::stoull(random[3])};
            } catch (const std::exception&) {
                std::cerr << "error: --random expects N p count seed\n";
                return exit_input_error;
            }
        }
        if (omega > 0) verify.omega = omega;
        return cmd_verify(verify, std::cout, std::cerr);
    }
    if (c_po->parsed()) {
        polys.input.format = fmt;
        if (!grid.empty()) {
            try {
                polys.grid = parse_grid(grid);
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << '\n';
                return exit_input_error;
            }
        }
        return cmd_polynomials(polys, std::cout, std::cerr);
    }
    if (c_cg->parsed()) {
        cgrid.input.format = fmt;
        return cmd_centrality_grid(cgrid, std::cout, std::cerr);
    }
    if (c_ge->parsed()) {
        gen.format = fmt;
        return cmd_gen(gen, std::cout, std::cerr);
    }
    if (c_co->parsed()) {
        comp.input.format = fmt;
        return cmd_complement(comp, std::cout, std::cerr);
    }
    return exit_input_error;
}
