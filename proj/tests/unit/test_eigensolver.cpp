#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>

#include "bnkit/eigensolver.hpp"
#include "bnkit/random.hpp"

using namespace bnkit;

namespace {

std::vector<double> eigen_values(const SymmetricMatrix& a) {
    const auto n = static_cast<Eigen::Index>(a.size());
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            m(i, j) = a(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace

TEST(Eigensolver, TrivialSizes) {
    SymmetricMatrix one(1);
    one(0, 0) = 3.5;
    EXPECT_EQ(symmetric_eigenvalues(one), std::vector<double>{3.5});
    SymmetricMatrix two(2);
    two(0, 0) = 2.0;
    two(1, 1) = 2.0;
    two.set_symmetric(0, 1, 1.0);
    const auto v = symmetric_eigenvalues(two);
    EXPECT_NEAR(v[0], 3.0, 1e-14);
    EXPECT_NEAR(v[1], 1.0, 1e-14);
}

TEST(Eigensolver, DiagonalIsSorted) {
    SymmetricMatrix a(4);
    a(0, 0) = -1.0;
    a(1, 1) = 5.0;
    a(2, 2) = 0.0;
    a(3, 3) = 2.0;
    EXPECT_EQ(symmetric_eigenvalues(a), (std::vector<double>{5.0, 2.0, 0.0, -1.0}));
}

TEST(Eigensolver, MatchesEigenOnRandomDenseMatrices) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Rng rng(seed);
        const std::size_t n = 1 + rng.below(80);
        SymmetricMatrix a(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j <= i; ++j) a.set_symmetric(i, j, 2.0 * rng.uniform() - 1.0);
        const auto ours = symmetric_eigenvalues(a);
        const auto ref = eigen_values(a);
        ASSERT_EQ(ours.size(), n);
        double scale = 1.0;
        for (double x : ref) scale = std::max(scale, std::abs(x));
        for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(ours[i], ref[i], 1e-11 * scale) << "seed " << seed;
        EXPECT_TRUE(std::is_sorted(ours.rbegin(), ours.rend()));
    }
}

TEST(Eigensolver, HighlyDegenerate) {
    // J - I on 50 vertices: 49 once and -1 with multiplicity 49.
    const std::size_t n = 50;
    SymmetricMatrix a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) a.set_symmetric(i, j, 1.0);
    const auto v = symmetric_eigenvalues(a);
    EXPECT_NEAR(v[0], 49.0, 1e-10);
    for (std::size_t i = 1; i < n; ++i) EXPECT_NEAR(v[i], -1.0, 1e-10);
}
