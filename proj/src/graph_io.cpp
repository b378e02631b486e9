#include "spantree/graph_io.hpp"

#include <cctype>
#include <sstream>
#include <string>

namespace spantree {

namespace {

struct LineScanner {
    explicit LineScanner(std::string_view text) : text_(text) {}

    // Returns false at end of input; skips blank lines.
    bool next_line(std::string_view& line) {
        while (pos_ < text_.size()) {
            std::size_t end = text_.find('\n', pos_);
            if (end == std::string_view::npos) end = text_.size();
            line = text_.substr(pos_, end - pos_);
            line_start_ = pos_;
            pos_ = end + 1;
            ++line_no_;
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            bool blank = true;
            for (char c : line)
                if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
            if (!blank) return true;
        }
        return false;
    }

    std::size_t line_no() const { return line_no_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_start_ = 0;
    std::size_t line_no_ = 0;
};

int parse_int_field(std::string_view line, std::size_t& cursor, std::size_t line_no,
                    const char* what) {
    while (cursor < line.size() && std::isspace(static_cast<unsigned char>(line[cursor]))) ++cursor;
    if (cursor >= line.size())
        throw ParseError(std::string("missing ") + what, line_no, cursor + 1);
    const std::size_t start = cursor;
    while (cursor < line.size() && std::isdigit(static_cast<unsigned char>(line[cursor]))) ++cursor;
    if (cursor == start)
        throw ParseError(std::string("expected a nonnegative integer for ") + what, line_no,
                         start + 1);
    int value = 0;
    for (std::size_t i = start; i < cursor; ++i) {
        value = value * 10 + (line[i] - '0');
        if (value > 1000000) throw ParseError(std::string(what) + " too large", line_no, start + 1);
    }
    return value;
}

void expect_line_end(std::string_view line, std::size_t cursor, std::size_t line_no) {
    while (cursor < line.size()) {
        if (!std::isspace(static_cast<unsigned char>(line[cursor])))
            throw ParseError("unexpected trailing characters", line_no, cursor + 1);
        ++cursor;
    }
}

}  // namespace

SimpleGraph parse_edge_list(std::string_view text) {
    LineScanner scanner(text);
    std::string_view line;
    if (!scanner.next_line(line)) throw ParseError("empty input", 1, 1);

    std::size_t cursor = 0;
    const int n = parse_int_field(line, cursor, scanner.line_no(), "vertex count");
    const int m = parse_int_field(line, cursor, scanner.line_no(), "edge count");
    expect_line_end(line, cursor, scanner.line_no());
    if (n > SimpleGraph::kMaxVertices)
        throw ParseError("vertex count exceeds 64", scanner.line_no(), 1);

    SimpleGraph g(n);
    for (int i = 0; i < m; ++i) {
        if (!scanner.next_line(line))
            throw ParseError("expected " + std::to_string(m) + " edges, got " + std::to_string(i),
                             scanner.line_no() + 1, 1);
        cursor = 0;
        const int u = parse_int_field(line, cursor, scanner.line_no(), "edge endpoint");
        const int v = parse_int_field(line, cursor, scanner.line_no(), "edge endpoint");
        expect_line_end(line, cursor, scanner.line_no());
        if (u >= n || v >= n)
            throw ParseError("vertex index out of range: " + std::to_string(std::max(u, v)) +
                                 " >= " + std::to_string(n),
                             scanner.line_no(), 1);
        if (u == v) throw ParseError("self-loop not allowed", scanner.line_no(), 1);
        if (g.has_edge(u, v)) throw ParseError("duplicate edge", scanner.line_no(), 1);
        g.add_edge(u, v);
    }
    if (scanner.next_line(line))
        throw ParseError("unexpected extra line after " + std::to_string(m) + " edges",
                         scanner.line_no(), 1);
    return g;
}

std::string to_edge_list(const SimpleGraph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

SimpleGraph parse_graph6(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) throw ParseError("empty graph6 input", 1, 1);
    for (std::size_t i = 0; i < line.size(); ++i) {
        const unsigned char c = static_cast<unsigned char>(line[i]);
        if (c < 63 || c > 126) throw ParseError("invalid graph6 byte", 1, i + 1);
    }

    std::size_t pos = 0;
    long n = 0;
    if (line[0] != '~') {
        n = line[0] - 63;
        pos = 1;
    } else {
        if (line.size() >= 2 && line[1] == '~')
            throw ParseError("graph6 8-byte order not supported", 1, 2);
        if (line.size() < 4) throw ParseError("truncated graph6 header", 1, line.size() + 1);
        n = 0;
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | (line[i] - 63);
        pos = 4;
    }
    if (n > SimpleGraph::kMaxVertices)
        throw ParseError("graph6 order exceeds 64 vertices", 1, 1);

    const long bits_needed = n * (n - 1) / 2;
    const std::size_t bytes_needed = static_cast<std::size_t>((bits_needed + 5) / 6);
    if (line.size() - pos != bytes_needed)
        throw ParseError("graph6 body has wrong length", 1, line.size() + 1);

    SimpleGraph g(static_cast<int>(n));
    long bit_index = 0;
    for (std::size_t i = pos; i < line.size(); ++i) {
        const int chunk = line[i] - 63;
        for (int b = 5; b >= 0; --b, ++bit_index) {
            const bool set = (chunk >> b) & 1;
            if (bit_index >= bits_needed) {
                if (set) throw ParseError("nonzero graph6 padding bits", 1, i + 1);
                continue;
            }
            if (set) {
                // bit order: (0,1), (0,2), (1,2), (0,3), ... column by column
                long idx = bit_index;
                int col = 1;
                while (idx >= col) {
                    idx -= col;
                    ++col;
                }
                g.add_edge(static_cast<int>(idx), col);
            }
        }
    }
    return g;
}

std::string to_graph6(const SimpleGraph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int chunk = 0;
    int filled = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) {
            chunk = (chunk << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + 63));
                chunk = 0;
                filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
    return out;
}

SimpleGraph parse_graph(std::string_view text, GraphFormat format) {
    return format == GraphFormat::edge_list ? parse_edge_list(text) : parse_graph6(text);
}

SimpleGraph parse_graph_auto(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == text.size()) throw ParseError("empty input", 1, 1);
    const unsigned char first = static_cast<unsigned char>(text[i]);
    if (std::isdigit(first)) return parse_edge_list(text);
    return parse_graph6(text.substr(i));
}

}  // namespace spantree
