#include "bnkit/graph_io.hpp"

#include <sstream>

#include "bnkit/error.hpp"

namespace bnkit {
namespace {

constexpr int kBias = 63;
constexpr int kMaxPrintable = 126;
constexpr std::size_t kShortHeaderLimit = 62;

bool printable(char c) { return c >= kBias && c <= kMaxPrintable; }

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

}  // namespace

Graph parse_graph6(std::string_view record) {
    if (record.empty()) throw InputError("empty graph6 record");
    if (record.front() == '>') throw InputError("graph6 header directives are not supported");
    if (record.front() == ':' || record.front() == '&') {
        throw InputError("sparse6/digraph6 records are not graph6");
    }

    std::size_t n = 0;
    std::size_t pos = 0;
    if (!printable(record[0])) throw InputError("bad graph6 header byte");
    if (record[0] != kMaxPrintable) {
        n = static_cast<std::size_t>(record[0] - kBias);
        pos = 1;
    } else {
        if (record.size() >= 2 && record[1] == kMaxPrintable) {
            throw InputError("graph6 vertex count exceeds " + std::to_string(Graph::kMaxVertices));
        }
        if (record.size() < 4) throw InputError("truncated graph6 header");
        for (std::size_t i = 1; i < 4; ++i) {
            if (!printable(record[i])) throw InputError("bad graph6 header byte");
            n = (n << 6) | static_cast<std::size_t>(record[i] - kBias);
        }
        if (n <= kShortHeaderLimit) throw InputError("non-canonical graph6 header");
        pos = 4;
    }
    if (n == 0) throw InputError("graph6 record with zero vertices");
    if (n > Graph::kMaxVertices) {
        throw InputError("graph6 vertex count " + std::to_string(n) + " exceeds " +
                         std::to_string(Graph::kMaxVertices));
    }

    const std::size_t bit_count = n * (n - 1) / 2;
    const std::size_t body = (bit_count + 5) / 6;
    const std::size_t have = record.size() - pos;
    if (have < body) throw InputError("truncated graph6 body");
    if (have > body) throw InputError("trailing bytes after graph6 body");

    for (std::size_t c = pos; c < record.size(); ++c) {
        if (!printable(record[c])) throw InputError("graph6 byte out of range at offset " + std::to_string(c));
    }
    const std::size_t padding = body * 6 - bit_count;
    if (padding != 0 && ((record.back() - kBias) & ((1 << padding) - 1)) != 0) {
        throw InputError("nonzero graph6 padding bits");
    }

    // Bits run over the upper triangle column by column: (0,1), (0,2), (1,2), ...
    Graph g(n);
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            const int chunk = record[pos + k / 6] - kBias;
            if ((chunk >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::string out;
    if (n <= kShortHeaderLimit) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back(static_cast<char>(kMaxPrintable));
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kBias));
        out.push_back(static_cast<char>((n & 0x3f) + kBias));
    }
    int chunk = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + kBias));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled != 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
    return out;
}

Graph parse_edge_list(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    auto next_line = [&](std::string& out) {
        while (std::getline(in, line)) {
            ++line_no;
            out = trim(line);
            if (!out.empty()) return true;
        }
        return false;
    };
    auto read_pair = [&](const std::string& text, long long& a, long long& b) {
        std::istringstream fields(text);
        std::string rest;
        if (!(fields >> a >> b) || (fields >> rest)) {
            throw InputError("expected two integers, got '" + text + "'", line_no);
        }
    };

    std::string text;
    if (!next_line(text)) throw InputError("empty edge list");
    long long n = 0;
    long long m = 0;
    read_pair(text, n, m);
    if (n < 1 || n > static_cast<long long>(Graph::kMaxVertices)) {
        throw InputError("vertex count " + std::to_string(n) + " outside [1, " +
                             std::to_string(Graph::kMaxVertices) + "]",
                         line_no);
    }
    if (m < 0) throw InputError("negative edge count", line_no);

    Graph g(static_cast<std::size_t>(n));
    for (long long e = 0; e < m; ++e) {
        if (!next_line(text)) {
            throw InputError("expected " + std::to_string(m) + " edges, found " + std::to_string(e), line_no);
        }
        long long u = 0;
        long long v = 0;
        read_pair(text, u, v);
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range", line_no);
        }
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u), line_no);
        g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (next_line(text)) throw InputError("unexpected content after the last edge", line_no);
    return g;
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const auto& [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

std::size_t read_graph6_stream(std::istream& in,
                               const std::function<void(std::size_t, Graph&&)>& on_graph,
                               const std::function<void(std::size_t, const std::string&)>& on_error) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            on_graph(line_no, parse_graph6(line));
        } catch (const InputError& e) {
            on_error(line_no, e.what());
        }
    }
    return line_no;
}

}  // namespace bnkit
