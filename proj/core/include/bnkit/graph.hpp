#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bnkit {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph with bitset adjacency rows.
///
/// Row u holds the neighbourhood of u as ceil(n/64) little-endian words.
/// Every mutator keeps the matrix symmetric with a zero diagonal, and the
/// edge count is maintained incrementally.
class Graph {
public:
    static constexpr std::size_t kMaxVertices = 2048;

    /// Edgeless graph on n vertices, 1 <= n <= kMaxVertices.
    explicit Graph(std::size_t n);

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return m_; }
    std::size_t words_per_row() const noexcept { return words_; }

    bool adjacent(Vertex u, Vertex v) const;
    std::size_t degree(Vertex u) const;
    std::span<const std::uint64_t> row(Vertex u) const {
        return {bits_.data() + u * words_, words_};
    }

    /// Returns true if the edge was newly inserted.
    bool add_edge(Vertex u, Vertex v);
    /// Returns true if the edge was present.
    bool remove_edge(Vertex u, Vertex v);
    void toggle_edge(Vertex u, Vertex v);

    bool is_complete() const noexcept { return m_ == n_ * (n_ - 1) / 2; }
    std::vector<Vertex> neighbours(Vertex u) const;
    std::vector<Edge> edges() const;

    Graph complement() const;
    /// Relabels vertex u as perm[u].
    Graph permuted(std::span<const Vertex> perm) const;

    /// Upper-triangle bits in (0,1),(0,2),...,(1,2),... order; used for
    /// deterministic lexicographic tie-breaking.
    std::vector<bool> upper_triangle() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }

private:
    void check_pair(Vertex u, Vertex v) const;

    std::size_t n_;
    std::size_t words_;
    std::size_t m_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Calls fn(v) for every set bit of a bitset row, lowest index first.
template <typename Fn>
void for_each_bit(std::span<const std::uint64_t> words, Fn&& fn) {
    for (std::size_t w = 0; w < words.size(); ++w) {
        std::uint64_t word = words[w];
        while (word != 0) {
            const int bit = std::countr_zero(word);
            fn(w * 64 + static_cast<std::size_t>(bit));
            word &= word - 1;
        }
    }
}

/// Part sizes of a complete multipartite graph, canonicalized to
/// non-increasing order. Requires r >= 2, every size >= 1, and a total of at
/// most Graph::kMaxVertices.
class PartSizes {
public:
    struct Distinct {
        std::size_t size;
        std::size_t multiplicity;
    };

    explicit PartSizes(std::vector<std::size_t> sizes);

    /// Parses "a,b,c".
    static PartSizes parse(const std::string& text);

    const std::vector<std::size_t>& sizes() const noexcept { return sizes_; }
    std::size_t part_count() const noexcept { return sizes_.size(); }
    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept;
    bool balanced() const noexcept { return sizes_.front() == sizes_.back(); }

    /// Distinct sizes p_1 > p_2 > ... with their multiplicities.
    std::vector<Distinct> distinct() const;

    std::string to_string() const;

    friend bool operator==(const PartSizes&, const PartSizes&) = default;

private:
    std::vector<std::size_t> sizes_;
    std::size_t n_ = 0;
};

// Families.

/// K_{n_1,...,n_r}; vertices are numbered part by part in canonical order.
Graph complete_multipartite(const PartSizes& parts);
/// Balanced complete r-partite graph, larger parts first; r = 1 is edgeless.
Graph turan_graph(std::size_t n, std::size_t r);
Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph petersen_graph();
Graph from_edge_list(std::size_t n, std::span<const Edge> edges);

/// Zykov symmetrization: u takes over the neighbourhood of v.
/// Requires u != v and u, v non-adjacent.
Graph zykov(const Graph& g, Vertex u, Vertex v);

// Combinatorial parameters.

/// Exact clique number by branch and bound with greedy-colouring bounds.
std::size_t clique_number(const Graph& g);
std::size_t independence_number(const Graph& g);
bool is_k4_free(const Graph& g);
std::size_t triangle_count(const Graph& g);

}  // namespace bnkit
