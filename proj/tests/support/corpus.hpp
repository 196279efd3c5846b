#pragma once

#include <string>
#include <vector>

#include "bnkit/graph.hpp"

namespace bnkit::testing {

struct NamedGraph {
    std::string name;
    Graph graph;
};

/// Hand-built families: complete, cycles, paths, stars, Petersen, complete
/// multipartite and Turan graphs, edgeless graphs.
std::vector<NamedGraph> named_graphs();

/// One graph per isomorphism class for 1 <= n <= max_n (max_n <= 8), read
/// from tests/data/graphs_upto8.g6.
std::vector<NamedGraph> isomorph_free_graphs(std::size_t max_n);

/// Seeded G(n, p), random K4-free and perturbed Turan graphs up to 64 vertices.
std::vector<NamedGraph> random_graphs();

/// named_graphs() + isomorph_free_graphs(7) + random_graphs().
const std::vector<NamedGraph>& test_corpus();

std::string data_path(const std::string& file);

}  // namespace bnkit::testing
