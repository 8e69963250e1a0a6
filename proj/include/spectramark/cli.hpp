#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "spectramark/checks.hpp"
#include "spectramark/graph.hpp"
#include "spectramark/io.hpp"

namespace spectramark {

inline constexpr int schema_version = 1;
const char* version_string();

enum ExitCode : int { exit_pass = 0, exit_verification_failure = 1, exit_input_error = 2 };

struct InputSpec {
    std::string path;
    GraphFormat format = GraphFormat::edge_list;
};

struct VerifyOptions {
    int m_max = 6;
    int bound_m_max = 3;
    std::optional<int> omega;  ///< clique number; defaults to N, which is always an upper bound
    bool corrupt_y = false;    ///< test hook: perturbs Y before the checks run
};

struct GraphVerification {
    std::string label;
    IdentityReport identities;
    BoundReport bounds;
    std::vector<std::string> notes;
    bool pass() const { return identities.all_pass() && bounds.all_pass(); }
};

/// Runs every identity and inequality suite on one graph.
GraphVerification verify_graph(const Graph& g, const VerifyOptions& opt = {});

struct AnalyzeArgs {
    InputSpec input;
    std::string out = "json"; ///< json | csv
    int m_max = 6;
};

struct RandomCorpus {
    std::size_t n = 12;
    double p = 0.3;
    std::size_t count = 50;
    std::uint64_t seed = 7;
};

struct VerifyArgs {
    std::optional<InputSpec> input;
    std::optional<RandomCorpus> random;
    bool strict = false;  ///< skipped checks count as failures
    bool corrupt_y = false;
    bool json = false;
    bool verbose = false;
    std::optional<int> omega;
};

struct GridSpec {
    double lo = 0.0;
    double hi = 0.0;
    std::size_t steps = 0;
};
GridSpec parse_grid(const std::string& text);

struct PolynomialsArgs {
    InputSpec input;
    std::optional<GridSpec> grid;
};

struct CentralityGridArgs {
    InputSpec input;
};

struct GenArgs {
    std::string kind;
    std::vector<double> params;
    std::uint64_t seed = 0;
    std::string out; ///< empty: write to the output stream
    GraphFormat format = GraphFormat::edge_list;
};

struct ComplementArgs {
    InputSpec input;
    bool json = false;
};

int cmd_analyze(const AnalyzeArgs& args, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);
int cmd_polynomials(const PolynomialsArgs& args, std::ostream& out, std::ostream& err);
int cmd_centrality_grid(const CentralityGridArgs& args, std::ostream& out, std::ostream& err);
int cmd_gen(const GenArgs& args, std::ostream& out, std::ostream& err);
int cmd_complement(const ComplementArgs& args, std::ostream& out, std::ostream& err);

} // namespace spectramark
