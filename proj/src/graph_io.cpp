#include "cgk/graph_io.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace cgk {

std::vector<SignificantLine> significant_lines(const std::string& text) {
    std::vector<SignificantLine> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        std::size_t start = raw.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        if (raw[start] == '#') continue;
        lines.push_back({raw, number});
    }
    return lines;
}

namespace {

bool parse_int(std::istringstream& in, int& out) {
    long long v;
    if (!(in >> v)) return false;
    if (v < -(1ll << 31) || v >= (1ll << 31)) return false;
    out = static_cast<int>(v);
    return true;
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
    std::vector<SignificantLine> lines = significant_lines(text);
    if (lines.empty()) throw ParseError("missing \"n m\" header", 1);

    std::istringstream header(lines[0].text);
    int n = 0;
    int m = 0;
    std::string extra;
    if (!parse_int(header, n) || !parse_int(header, m) || (header >> extra)) {
        throw ParseError("malformed header, expected \"n m\"", lines[0].number);
    }
    if (n < 0) throw ParseError("vertex count must be nonnegative", lines[0].number);
    if (m < 0) throw ParseError("edge count must be nonnegative", lines[0].number);
    if (static_cast<int>(lines.size()) - 1 != m) {
        throw ParseError("header announces " + std::to_string(m) + " edges but " +
                             std::to_string(lines.size() - 1) + " edge lines follow",
                         lines[0].number);
    }

    Graph g(n);
    for (int k = 1; k <= m; ++k) {
        std::istringstream row(lines[k].text);
        int u = 0;
        int v = 0;
        if (!parse_int(row, u) || !parse_int(row, v) || (row >> extra)) {
            throw ParseError("malformed edge, expected \"u v\"", lines[k].number);
        }
        if (u < 1 || u > n || v < 1 || v > n) {
            throw ParseError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                 "): vertex out of range [1, " + std::to_string(n) + "]",
                             lines[k].number);
        }
        if (u == v) {
            throw ParseError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                 ") is a loop",
                             lines[k].number);
        }
        g.add_edge(u - 1, v - 1);
    }
    return g;
}

std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edge_list()) {
        out << (u + 1) << ' ' << (v + 1) << '\n';
    }
    return out.str();
}

Graph parse_graph6_line(const std::string& line, int line_number) {
    std::string s = line;
    if (!s.empty() && s.back() == '\r') s.pop_back();
    if (s.empty()) throw ParseError("empty graph6 line", line_number);
    for (std::size_t i = 0; i < s.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126) {
            throw ParseError("invalid graph6 byte at offset " + std::to_string(i), line_number);
        }
    }
    if (s[0] == 126) {
        throw ParseError("multi-byte graph6 vertex counts (n > 62) are not supported",
                         line_number);
    }
    int n = s[0] - 63;
    if (n < 1) throw ParseError("graph6 vertex count must be at least 1", line_number);

    int bits = n * (n - 1) / 2;
    int expected = 1 + (bits + 5) / 6;
    if (static_cast<int>(s.size()) != expected) {
        throw ParseError("graph6 line for n = " + std::to_string(n) + " must have " +
                             std::to_string(expected) + " bytes, got " +
                             std::to_string(s.size()),
                         line_number);
    }

    Graph g(n);
    int bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            int value = s[1 + bit / 6] - 63;
            if ((value >> (5 - bit % 6)) & 1) g.add_edge(i, j);
            ++bit;
        }
    }
    // padding bits must be zero
    for (; bit < 6 * ((bits + 5) / 6); ++bit) {
        int value = s[1 + bit / 6] - 63;
        if ((value >> (5 - bit % 6)) & 1) {
            throw ParseError("nonzero padding bit at offset " + std::to_string(1 + bit / 6),
                             line_number);
        }
    }
    return g;
}

Graph parse_graph6(const std::string& line) { return parse_graph6_line(line, 1); }

std::string serialize_graph6(const Graph& g) {
    int n = g.vertex_count();
    if (n < 1 || n > 62) {
        throw GraphError("graph6 output supports 1 <= n <= 62, got " + std::to_string(n));
    }
    int bits = n * (n - 1) / 2;
    std::string out(static_cast<std::size_t>(1 + (bits + 5) / 6), '?');
    out[0] = static_cast<char>(n + 63);
    int bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (g.has_edge(i, j)) {
                out[1 + bit / 6] = static_cast<char>(out[1 + bit / 6] + (1 << (5 - bit % 6)));
            }
            ++bit;
        }
    }
    return out;
}

GraphFormat detect_format(const std::string& text) {
    std::vector<SignificantLine> lines = significant_lines(text);
    if (lines.empty()) throw ParseError("empty input", 1);
    unsigned char first = static_cast<unsigned char>(lines[0].text[lines[0].text.find_first_not_of(" \t")]);
    return std::isdigit(first) ? GraphFormat::EdgeList : GraphFormat::Graph6;
}

Graph parse_graph(const std::string& text, GraphFormat format) {
    if (format == GraphFormat::EdgeList) return parse_edge_list(text);
    std::vector<SignificantLine> lines = significant_lines(text);
    if (lines.empty()) throw ParseError("empty input", 1);
    if (lines.size() > 1) {
        throw ParseError("expected a single graph6 line, found " +
                             std::to_string(lines.size()),
                         lines[1].number);
    }
    return parse_graph6_line(lines[0].text, lines[0].number);
}

}  // namespace cgk
