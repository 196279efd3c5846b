#pragma once

#include <cstddef>
#include <vector>

#include "bnkit/eigensolver.hpp"
#include "bnkit/graph.hpp"

namespace bnkit {

/// Absolute tolerance for trace identities.
inline constexpr double kTraceTolerance = 1e-8;
/// Relative tolerance for comparing spectra computed by different routes.
inline constexpr double kCrossOracleTolerance = 1e-9;

/// Adjacency spectrum, sorted non-increasing.
struct Spectrum {
    std::vector<double> values;
    std::size_t source_m = 0;
    double tol = kTraceTolerance;

    std::size_t size() const noexcept { return values.size(); }
    double largest() const { return values.front(); }
    double second() const { return values.size() > 1 ? values[1] : values.front(); }
    double smallest() const { return values.back(); }
    /// max |lambda_i|
    double spectral_radius() const;
};

SymmetricMatrix adjacency_matrix(const Graph& g);
Spectrum eigenvalues(const Graph& g, double tol = kTraceTolerance);

/// sum of lambda_i^k
double power_sum(const std::vector<double>& values, int k);

struct TraceReport {
    double sum_residual = 0.0;     // |sum lambda_i|
    double square_residual = 0.0;  // |sum lambda_i^2 - 2m|
    double sum_limit = 0.0;        // tol * n
    double square_limit = 0.0;     // tol * max(1, 2m)
    bool pass = false;
};

TraceReport trace_check(const Spectrum& s);

/// |sum lambda_i^3 - 6 * triangles|; zero in exact arithmetic.
double cubic_trace_residual(const Spectrum& s, std::size_t triangles);

struct WeylReport {
    double spectral_norm = 0.0;   // ||A(g) - A(h)||_2
    double frobenius_norm = 0.0;  // sqrt(2 |E(g) symmetric-difference E(h)|)
    std::size_t symmetric_difference = 0;
    std::vector<double> deviations;  // |lambda_k(g) - lambda_k(h)|
    double max_deviation = 0.0;
    bool holds = false;  // every deviation <= spectral_norm + tol
};

/// Throws std::invalid_argument when the vertex counts differ.
WeylReport weyl_check(const Graph& g, const Graph& h, double tol = kCrossOracleTolerance);

/// Largest absolute eigenvalue of A(g) - A(h).
double difference_norm(const Graph& g, const Graph& h);

}  // namespace bnkit
