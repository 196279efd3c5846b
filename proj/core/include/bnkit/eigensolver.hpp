#pragma once

#include <cstddef>
#include <vector>

namespace bnkit {

/// Dense row-major n x n matrix; callers keep it symmetric.
class SymmetricMatrix {
public:
    explicit SymmetricMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

    std::size_t size() const noexcept { return n_; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    /// Sets (i, j) and (j, i).
    void set_symmetric(std::size_t i, std::size_t j, double value) {
        (*this)(i, j) = value;
        (*this)(j, i) = value;
    }

private:
    std::size_t n_;
    std::vector<double> data_;
};

/// All eigenvalues of a real symmetric matrix, sorted non-increasing.
///
/// Householder reduction to tridiagonal form followed by implicit-shift QL
/// iteration. Only the lower triangle of the input is read. Throws
/// std::runtime_error if QL fails to converge (which does not happen for
/// finite symmetric input in practice).
std::vector<double> symmetric_eigenvalues(SymmetricMatrix a);

}  // namespace bnkit
