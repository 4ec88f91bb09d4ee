#pragma once

#include <string>
#include <vector>

#include "cgk/graph.hpp"

namespace cgk {

/// Parse failure with the 1-based line it occurred on.
class ParseError : public GraphError {
public:
    ParseError(const std::string& what, int line)
        : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

enum class GraphFormat { EdgeList, Graph6 };

/// Edge-list format: a header line "n m" followed by m lines "u v" with
/// 1-based endpoints. Blank lines and lines starting with '#' are ignored.
Graph parse_edge_list(const std::string& text);
std::string serialize_edge_list(const Graph& g);

/// graph6 format, one graph per line, supported for 1 <= n <= 62: byte
/// n+63, then the upper triangle of the adjacency matrix in column order
/// ((0,1), (0,2), (1,2), (0,3), ...) packed six bits per byte, high bit
/// first, zero padded, each data byte offset by 63.
Graph parse_graph6(const std::string& line);
std::string serialize_graph6(const Graph& g);

/// One meaningful input line: blank lines and '#' comments are dropped,
/// trailing '\r' stripped, original 1-based numbering kept for messages.
struct SignificantLine {
    std::string text;
    int number;
};

std::vector<SignificantLine> significant_lines(const std::string& text);

/// parse_graph6 for one line of a multi-line stream; errors carry the
/// supplied line number.
Graph parse_graph6_line(const std::string& line, int line_number);

/// Decides between the two formats: an edge-list header starts with a
/// digit, which is never a valid graph6 byte.
GraphFormat detect_format(const std::string& text);

Graph parse_graph(const std::string& text, GraphFormat format);

}  // namespace cgk
