#include <algorithm>
#include <numeric>

#include "bnkit/graph.hpp"

namespace bnkit {
namespace {

using Bits = std::vector<std::uint64_t>;

bool any_bit(const Bits& b) {
    return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}

void reset_bit(Bits& b, std::size_t v) { b[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }

std::size_t lowest_bit(const Bits& b) {
    for (std::size_t w = 0; w < b.size(); ++w) {
        if (b[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(b[w]));
    }
    return b.size() * 64;
}

// Bits strictly above v.
void mask_above(std::span<std::uint64_t> b, std::size_t v) {
    const std::size_t word = v / 64;
    for (std::size_t w = 0; w < word && w < b.size(); ++w) b[w] = 0;
    const std::size_t bit = v % 64;
    b[word] &= bit == 63 ? 0 : ~((std::uint64_t{2} << bit) - 1);
}

// Branch and bound over bitset candidate sets. Vertices are relabelled by
// non-increasing degree (ties by index) so the colouring bound is tight
// early; the colour classes are built greedily from the lowest label.
class MaxClique {
public:
    explicit MaxClique(const Graph& g) : n_(g.vertex_count()), words_(g.words_per_row()) {
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), Vertex{0});
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
        std::vector<Vertex> label(n_);
        for (Vertex i = 0; i < n_; ++i) label[order_[i]] = i;
        adj_.assign(n_ * words_, 0);
        for (Vertex u = 0; u < n_; ++u) {
            for_each_bit(g.row(u), [&](Vertex v) {
                adj_[label[u] * words_ + label[v] / 64] |= std::uint64_t{1} << (label[v] % 64);
            });
        }
    }

    std::size_t solve() {
        Bits all(words_, ~std::uint64_t{0});
        if (n_ % 64 != 0) all.back() = (std::uint64_t{1} << (n_ % 64)) - 1;
        best_ = 1;
        expand(std::move(all), 0);
        return best_;
    }

private:
    void colour_sort(const Bits& p, std::vector<std::size_t>& verts, std::vector<std::size_t>& colours) const {
        Bits uncoloured = p;
        std::size_t colour = 0;
        while (any_bit(uncoloured)) {
            ++colour;
            Bits q = uncoloured;
            while (any_bit(q)) {
                const std::size_t v = lowest_bit(q);
                reset_bit(q, v);
                reset_bit(uncoloured, v);
                const std::uint64_t* row = adj_.data() + v * words_;
                for (std::size_t w = 0; w < words_; ++w) q[w] &= ~row[w];
                verts.push_back(v);
                colours.push_back(colour);
            }
        }
    }

    void expand(Bits p, std::size_t size) {
        std::vector<std::size_t> verts;
        std::vector<std::size_t> colours;
        colour_sort(p, verts, colours);
        for (std::size_t i = verts.size(); i-- > 0;) {
            if (size + colours[i] <= best_) return;
            const std::size_t v = verts[i];
            const std::uint64_t* row = adj_.data() + v * words_;
            Bits next(words_);
            for (std::size_t w = 0; w < words_; ++w) next[w] = p[w] & row[w];
            if (any_bit(next)) {
                expand(std::move(next), size + 1);
            } else {
                best_ = std::max(best_, size + 1);
            }
            reset_bit(p, v);
        }
    }

    std::size_t n_;
    std::size_t words_;
    std::vector<Vertex> order_;
    Bits adj_;
    std::size_t best_ = 1;
};

}  // namespace

std::size_t clique_number(const Graph& g) {
    if (g.edge_count() == 0) return 1;
    return MaxClique(g).solve();
}

std::size_t independence_number(const Graph& g) { return clique_number(g.complement()); }

bool is_k4_free(const Graph& g) {
    const std::size_t words = g.words_per_row();
    Bits common(words);
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        const auto ru = g.row(u);
        bool found = false;
        for_each_bit(ru, [&](Vertex v) {
            if (found || v <= u) return;
            const auto rv = g.row(v);
            for (std::size_t w = 0; w < words; ++w) common[w] = ru[w] & rv[w];
            for_each_bit(common, [&](Vertex x) {
                if (found) return;
                const auto rx = g.row(x);
                for (std::size_t w = 0; w < words; ++w) {
                    if ((rx[w] & common[w]) != 0) {
                        found = true;
                        return;
                    }
                }
            });
        });
        if (found) return false;
    }
    return true;
}

std::size_t triangle_count(const Graph& g) {
    const std::size_t words = g.words_per_row();
    Bits common(words);
    std::size_t count = 0;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        const auto ru = g.row(u);
        for_each_bit(ru, [&](Vertex v) {
            if (v <= u) return;
            const auto rv = g.row(v);
            for (std::size_t w = 0; w < words; ++w) common[w] = ru[w] & rv[w];
            mask_above(common, v);
            for (std::uint64_t w : common) count += static_cast<std::size_t>(std::popcount(w));
        });
    }
    return count;
}

}  // namespace bnkit
