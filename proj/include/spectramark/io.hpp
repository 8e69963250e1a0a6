#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "spectramark/graph.hpp"

namespace spectramark {

enum class GraphFormat { edge_list, adjacency_matrix };

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Edge lists: "i j" per line, 1-based, '#' starts a comment, duplicates collapse.
/// The node count is the largest index seen.
/// Adjacency matrices: n lines of n 0/1 integers, must be symmetric.
Graph parse_graph(std::string_view text, GraphFormat format);
Graph read_graph_file(const std::string& path, GraphFormat format);

std::string to_edge_list(const Graph& g);
std::string to_adjacency_matrix(const Graph& g);

GraphFormat parse_format_name(std::string_view name);

} // namespace spectramark
