#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bnkit/graph.hpp"
#include "bnkit/spectral.hpp"

namespace bnkit {

// Exact spectrum of the complete multipartite graph K_{n_1,...,n_r}.
//
// The adjacency matrix splits into a zero eigenspace of dimension n - r
// (differences of two vertices inside one part) and a part-constant
// complement. On the complement an eigenvector takes the value
// c_i = s / (lambda + n_i) on part i, and consistency of s = sum n_i c_i
// gives the secular equation
//
//     f(lambda) = sum_i n_i / (lambda + n_i) = 1.
//
// f is strictly decreasing between its poles -p_k (p_1 > ... > p_s the
// distinct part sizes), so it has one root in (0, n] and one root in each
// gap (-p_k, -p_{k+1}). A size repeated t_k times additionally contributes
// the pole value -p_k with multiplicity t_k - 1 (differences of the constant
// vectors on equal-sized parts).

struct PoleEigenvalue {
    double value;  // -p_k
    std::size_t multiplicity;  // t_k - 1
};

struct SecularSpectrum {
    PartSizes parts;
    std::vector<PartSizes::Distinct> distinct;
    std::vector<double> secular_roots;  // descending; the first is the positive root
    std::vector<PoleEigenvalue> pole_eigenvalues;  // only sizes with t_k > 1
    std::size_t zero_multiplicity = 0;  // n - r

    /// All n eigenvalues, sorted non-increasing.
    std::vector<double> flatten() const;
    Spectrum to_spectrum() const;
};

/// One vector of the zero eigenspace: +1 on the member_index-th vertex of
/// part part_index, -1 on the last vertex of that part.
struct ZeroBasisVector {
    std::size_t part_index;
    std::size_t member_index;
    std::vector<int> coefficients;
};

/// f(lambda). Throws std::domain_error when lambda is a pole.
double secular_value(const PartSizes& parts, double lambda);

/// The s roots of f(lambda) = 1, descending.
std::vector<double> secular_roots(const PartSizes& parts);

SecularSpectrum multipartite_spectrum(const PartSizes& parts);

/// 0 when n > r; -1 for the complete graph K_r.
double lambda2_multipartite(const PartSizes& parts);

std::vector<ZeroBasisVector> zero_eigenbasis(const PartSizes& parts);

/// Part-constant eigenvector coefficients for a secular root, normalized so
/// that sum n_i c_i = 1 (hence c_i = 1 / (root + n_i)). Throws
/// std::domain_error when root lies within 1e-9 of a pole.
std::vector<double> quotient_eigenvector(const PartSizes& parts, double root);

/// Closed-form spectrum for bipartite, all-singleton, and balanced part
/// sizes; empty for every other shape.
std::optional<Spectrum> closed_forms(const PartSizes& parts);

}  // namespace bnkit
