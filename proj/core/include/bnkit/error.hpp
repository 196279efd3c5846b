#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace bnkit {

/// Malformed external input (graph6 records, edge lists, part lists).
/// Carries the 1-based line number when the input came from a stream.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what, std::optional<std::size_t> line = std::nullopt)
        : std::runtime_error(line ? "line " + std::to_string(*line) + ": " + what : what),
          line_(line) {}

    std::optional<std::size_t> line() const noexcept { return line_; }

private:
    std::optional<std::size_t> line_;
};

}  // namespace bnkit
