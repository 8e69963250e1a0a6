#include "spectramark/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace spectramark {

namespace {

std::vector<std::string_view> tokens_of(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

long long to_integer(std::string_view tok, std::size_t line) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line, "non-integer token '" + std::string(tok) + "'");
    return v;
}

Graph parse_edge_list(std::string_view text) {
    std::vector<Edge> edges;
    std::size_t n = 0;
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        ++lineno;
        const std::string_view raw = text.substr(pos, end - pos);
        const auto toks = tokens_of(raw);
        pos = end + 1;
        if (toks.empty()) {
            // "# nodes N" keeps trailing isolated nodes across a round trip
            const auto hint = tokens_of(raw.substr(std::min(raw.find('#') + 1, raw.size())));
            if (raw.find('#') != std::string_view::npos && hint.size() == 2 && hint[0] == "nodes")
                n = std::max<std::size_t>(n, static_cast<std::size_t>(std::max(0LL, to_integer(hint[1], lineno))));
            continue;
        }
        if (toks.size() != 2) throw ParseError(lineno, "expected two node indices, got " + std::to_string(toks.size()));
        const long long a = to_integer(toks[0], lineno);
        const long long b = to_integer(toks[1], lineno);
        if (a < 1 || b < 1) throw ParseError(lineno, "node index must be >= 1");
        if (a == b) throw ParseError(lineno, "self-loop on node " + std::to_string(a));
        edges.push_back({static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1)});
        n = std::max<std::size_t>(n, static_cast<std::size_t>(std::max(a, b)));
    }
    if (n == 0) throw ParseError(lineno, "no edges found");
    return Graph(n, edges);
}

Graph parse_matrix(std::string_view text) {
    std::vector<std::vector<int>> rows;
    std::vector<std::size_t> row_line;
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        ++lineno;
        const auto toks = tokens_of(text.substr(pos, end - pos));
        pos = end + 1;
        if (toks.empty()) continue;
        std::vector<int> row;
        for (auto t : toks) {
            const long long v = to_integer(t, lineno);
            if (v != 0 && v != 1) throw ParseError(lineno, "adjacency entries must be 0 or 1");
            row.push_back(static_cast<int>(v));
        }
        rows.push_back(std::move(row));
        row_line.push_back(lineno);
    }
    const std::size_t n = rows.size();
    if (n == 0) throw ParseError(lineno, "empty adjacency matrix");
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n)
            throw ParseError(row_line[i], "row has " + std::to_string(rows[i].size()) + " entries, expected " +
                                              std::to_string(n));
        if (rows[i][i] != 0) throw ParseError(row_line[i], "self-loop on node " + std::to_string(i + 1));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rows[i][j] != rows[j][i])
                throw ParseError(row_line[j], "matrix not symmetric at (" + std::to_string(i + 1) + "," +
                                                  std::to_string(j + 1) + ")");
    return Graph::from_adjacency(rows);
}

} // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
    return format == GraphFormat::edge_list ? parse_edge_list(text) : parse_matrix(text);
}

Graph read_graph_file(const std::string& path, GraphFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str(), format);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "# nodes " << g.size() << "\n";
    for (const Edge& e : g.edges()) out << e.u + 1 << ' ' << e.v + 1 << '\n';
    return out.str();
}

std::string to_adjacency_matrix(const Graph& g) {
    std::ostringstream out;
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = 0; j < g.size(); ++j) out << (j ? " " : "") << (g.has_edge(i, j) ? 1 : 0);
        out << '\n';
    }
    return out.str();
}

GraphFormat parse_format_name(std::string_view name) {
    if (name == "edge_list" || name == "edges") return GraphFormat::edge_list;
    if (name == "adjacency_matrix" || name == "matrix") return GraphFormat::adjacency_matrix;
    throw std::invalid_argument("unknown graph format '" + std::string(name) + "'");
}

} // namespace spectramark
