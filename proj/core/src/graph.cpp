#include "bnkit/graph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "bnkit/error.hpp"

namespace bnkit {

Graph::Graph(std::size_t n) : n_(n), words_((n + 63) / 64) {
    if (n == 0 || n > kMaxVertices) {
        throw std::invalid_argument("vertex count " + std::to_string(n) + " outside [1, " +
                                    std::to_string(kMaxVertices) + "]");
    }
    bits_.assign(n_ * words_, 0);
}

void Graph::check_pair(Vertex u, Vertex v) const {
    if (u >= n_ || v >= n_) {
        throw std::out_of_range("vertex out of range: (" + std::to_string(u) + ", " +
                                std::to_string(v) + ") with n = " + std::to_string(n_));
    }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    check_pair(u, v);
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U;
}

std::size_t Graph::degree(Vertex u) const {
    std::size_t d = 0;
    for (std::uint64_t w : row(u)) d += static_cast<std::size_t>(std::popcount(w));
    return d;
}

bool Graph::add_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (adjacent(u, v)) return false;
    bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
    ++m_;
    return true;
}

bool Graph::remove_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    if (u == v || !adjacent(u, v)) return false;
    bits_[u * words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
    bits_[v * words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
    --m_;
    return true;
}

void Graph::toggle_edge(Vertex u, Vertex v) {
    if (!remove_edge(u, v)) add_edge(u, v);
}

std::vector<Vertex> Graph::neighbours(Vertex u) const {
    std::vector<Vertex> out;
    for_each_bit(row(u), [&](Vertex v) { out.push_back(v); });
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u) {
        for_each_bit(row(u), [&](Vertex v) {
            if (u < v) out.emplace_back(u, v);
        });
    }
    return out;
}

Graph Graph::complement() const {
    Graph c(n_);
    for (Vertex u = 0; u < n_; ++u) {
        for (std::size_t w = 0; w < words_; ++w) {
            c.bits_[u * words_ + w] = ~bits_[u * words_ + w];
        }
        c.bits_[u * words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
        if (n_ % 64 != 0) c.bits_[u * words_ + words_ - 1] &= (std::uint64_t{1} << (n_ % 64)) - 1;
    }
    c.m_ = n_ * (n_ - 1) / 2 - m_;
    return c;
}

Graph Graph::permuted(std::span<const Vertex> perm) const {
    if (perm.size() != n_) throw std::invalid_argument("permutation length mismatch");
    std::vector<bool> seen(n_, false);
    for (Vertex p : perm) {
        if (p >= n_ || seen[p]) throw std::invalid_argument("not a permutation");
        seen[p] = true;
    }
    Graph out(n_);
    for (const auto& [u, v] : edges()) out.add_edge(perm[u], perm[v]);
    return out;
}

std::vector<bool> Graph::upper_triangle() const {
    std::vector<bool> out;
    out.reserve(n_ * (n_ - 1) / 2);
    for (Vertex u = 0; u < n_; ++u) {
        for (Vertex v = u + 1; v < n_; ++v) out.push_back(adjacent(u, v));
    }
    return out;
}

PartSizes::PartSizes(std::vector<std::size_t> sizes) : sizes_(std::move(sizes)) {
    if (sizes_.size() < 2) throw std::invalid_argument("a complete multipartite graph needs r >= 2 parts");
    for (std::size_t s : sizes_) {
        if (s == 0) throw std::invalid_argument("part sizes must be positive");
        n_ += s;
        if (n_ > Graph::kMaxVertices) {
            throw std::invalid_argument("total part size exceeds " + std::to_string(Graph::kMaxVertices));
        }
    }
    std::sort(sizes_.begin(), sizes_.end(), std::greater<>());
}

PartSizes PartSizes::parse(const std::string& text) {
    if (!text.empty() && text.back() == ',') throw InputError("trailing comma in part list");
    std::vector<std::size_t> sizes;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) throw InputError("empty part size");
        std::size_t pos = 0;
        unsigned long long value = 0;
        try {
            value = std::stoull(item, &pos);
        } catch (const std::exception&) {
            throw InputError("bad part size '" + item + "'");
        }
        if (pos != item.size() || !std::isdigit(static_cast<unsigned char>(item.front()))) {
            throw InputError("bad part size '" + item + "'");
        }
        sizes.push_back(static_cast<std::size_t>(value));
    }
    try {
        return PartSizes(std::move(sizes));
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

std::size_t PartSizes::edge_count() const noexcept {
    std::size_t sum_sq = 0;
    for (std::size_t s : sizes_) sum_sq += s * s;
    return (n_ * n_ - sum_sq) / 2;
}

std::vector<PartSizes::Distinct> PartSizes::distinct() const {
    std::vector<Distinct> out;
    for (std::size_t s : sizes_) {
        if (!out.empty() && out.back().size == s) {
            ++out.back().multiplicity;
        } else {
            out.push_back({s, 1});
        }
    }
    return out;
}

std::string PartSizes::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
        if (i != 0) out += ',';
        out += std::to_string(sizes_[i]);
    }
    return out;
}

Graph complete_multipartite(const PartSizes& parts) {
    Graph g(parts.vertex_count());
    std::vector<std::size_t> part_of;
    part_of.reserve(parts.vertex_count());
    for (std::size_t i = 0; i < parts.part_count(); ++i) part_of.insert(part_of.end(), parts.sizes()[i], i);
    for (Vertex u = 0; u < part_of.size(); ++u) {
        for (Vertex v = u + 1; v < part_of.size(); ++v) {
            if (part_of[u] != part_of[v]) g.add_edge(u, v);
        }
    }
    return g;
}

Graph turan_graph(std::size_t n, std::size_t r) {
    if (r < 1 || r > n) {
        throw std::invalid_argument("turan_graph requires 1 <= r <= n (n = " + std::to_string(n) +
                                    ", r = " + std::to_string(r) + ")");
    }
    if (r == 1) return Graph(n);
    std::vector<std::size_t> sizes(r, n / r);
    for (std::size_t i = 0; i < n % r; ++i) ++sizes[i];
    return complete_multipartite(PartSizes(std::move(sizes)));
}

Graph complete_graph(std::size_t n) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
    Graph g(n);
    for (Vertex u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
    return g;
}

Graph path_graph(std::size_t n) {
    Graph g(n);
    for (Vertex u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
    return g;
}

Graph petersen_graph() {
    Graph g(10);
    for (Vertex i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer cycle
        g.add_edge(i, i + 5);                // spokes
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return g;
}

Graph from_edge_list(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n) {
            throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                             ") out of range for n = " + std::to_string(n));
        }
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        g.add_edge(u, v);
    }
    return g;
}

Graph zykov(const Graph& g, Vertex u, Vertex v) {
    if (u == v) throw std::invalid_argument("zykov requires distinct vertices");
    if (g.adjacent(u, v)) {
        throw std::invalid_argument("zykov requires non-adjacent vertices (" + std::to_string(u) +
                                    ", " + std::to_string(v) + ")");
    }
    Graph out = g;
    for (Vertex w : g.neighbours(u)) out.remove_edge(u, w);
    for (Vertex w : g.neighbours(v)) out.add_edge(u, w);
    return out;
}

}  // namespace bnkit
