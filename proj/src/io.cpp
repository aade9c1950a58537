#include "viz/io.hpp"

#include <fstream>
#include <sstream>

namespace viz {

namespace {

constexpr int kG6Lo = 63;   // '?'
constexpr int kG6Hi = 126;  // '~'

int payload_byte(std::string_view line, std::size_t pos) {
    if (pos >= line.size()) throw ParseError("graph6: truncated payload at byte " + std::to_string(pos));
    const int c = static_cast<unsigned char>(line[pos]);
    if (c < kG6Lo || c > kG6Hi)
        throw ParseError("graph6: byte value " + std::to_string(c) + " out of range at byte " +
                         std::to_string(pos));
    return c - kG6Lo;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) throw ParseError("graph6: empty line");

    std::size_t pos = 0;
    long n;
    const int first = payload_byte(line, pos);
    if (first < 63) {
        n = first;
        pos = 1;
    } else {
        // '~' header: next three bytes hold an 18-bit order
        n = 0;
        for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | payload_byte(line, k);
        pos = 4;
    }
    if (n < 1 || n > kMaxVertices)
        throw ParseError("graph6: order " + std::to_string(n) + " unsupported (1.." +
                         std::to_string(kMaxVertices) + ")");

    std::vector<std::pair<int, int>> edges;
    int cur = 0, bits_left = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (bits_left == 0) {
                cur = payload_byte(line, pos++);
                bits_left = 6;
            }
            if (cur & (1 << (bits_left - 1))) edges.emplace_back(i, j);
            --bits_left;
        }
    }
    if (bits_left > 0 && (cur & ((1 << bits_left) - 1)))
        throw ParseError("graph6: nonzero trailing bits in final byte at offset " + std::to_string(pos - 1));
    if (pos != line.size())
        throw ParseError("graph6: trailing bytes after payload at offset " + std::to_string(pos));
    return Graph(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kG6Lo));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Lo));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Lo));
        out.push_back(static_cast<char>((n & 63) + kG6Lo));
    }
    int cur = 0, bits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            cur = (cur << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(cur + kG6Lo));
                cur = 0;
                bits = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>((cur << (6 - bits)) + kG6Lo));
    return out;
}

Graph parse_edgelist(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n) || n < 1)
                throw ParseError("edge list: bad order line " + std::to_string(lineno));
            continue;
        }
        int u, v;
        if (!(ls >> u)) continue;  // blank line
        if (!(ls >> v)) throw ParseError("edge list: malformed line " + std::to_string(lineno));
        if (u == v)
            throw ParseError("edge list: self-loop at line " + std::to_string(lineno));
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("edge list: vertex out of range at line " + std::to_string(lineno));
        edges.emplace_back(u, v);
    }
    if (n < 0) throw ParseError("edge list: missing order line");
    return Graph(n, edges);  // Graph constructor deduplicates
}

std::string emit_edgelist(const Graph& g) {
    std::ostringstream out;
    out << g.order() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

std::vector<Graph> parse_graph6_file(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<Graph> out;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        try {
            out.push_back(parse_graph6(line));
        } catch (const ParseError& e) {
            throw ParseError(std::string(e.what()) + " (line " + std::to_string(lineno) + ")");
        }
    }
    return out;
}

Graph load_graph_file(const std::string& path, const std::string& format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();

    std::string fmt = format;
    if (fmt.empty()) {
        if (path.size() >= 3 && path.compare(path.size() - 3, 3, ".g6") == 0)
            fmt = "g6";
        else if (path.size() >= 3 && path.compare(path.size() - 3, 3, ".el") == 0)
            fmt = "el";
        else
            throw ParseError("cannot infer format of " + path + "; pass an explicit format");
    }
    if (fmt == "g6") {
        std::istringstream ls(text);
        std::string line;
        while (std::getline(ls, line))
            if (!line.empty() && line != "\r") return parse_graph6(line);
        throw ParseError("no graph6 line found in " + path);
    }
    if (fmt == "el") return parse_edgelist(text);
    throw ParseError("unknown format '" + fmt + "' (expected g6 or el)");
}

}  // namespace viz
