#pragma once

#include <cstddef>
#include <functional>
#include <istream>
#include <string>
#include <string_view>

#include "bnkit/graph.hpp"

namespace bnkit {

/// Decodes one graph6 record (no trailing newline, no ">>graph6<<" header).
/// Throws InputError on a bad header, truncated body, trailing bytes,
/// out-of-range bytes, or nonzero padding bits.
Graph parse_graph6(std::string_view record);
std::string to_graph6(const Graph& g);

/// Edge-list text: a first line "n m", then m lines "u v" (0-indexed).
/// Blank lines are ignored. Errors carry the offending line number.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

/// Reads one graph6 record per line. Malformed lines are passed to on_error
/// with their 1-based line number and reading continues. Blank lines are
/// skipped. Returns the number of lines read.
std::size_t read_graph6_stream(std::istream& in,
                               const std::function<void(std::size_t line, Graph&&)>& on_graph,
                               const std::function<void(std::size_t line, const std::string&)>& on_error);

}  // namespace bnkit
