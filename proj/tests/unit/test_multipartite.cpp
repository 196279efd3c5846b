#include <gtest/gtest.h>

#include <cmath>

#include "bnkit/multipartite.hpp"
#include "bnkit/search.hpp"
#include "oracles.hpp"

using namespace bnkit;
using namespace bnkit::testing;

namespace {

void expect_spectra_near(const std::vector<double>& a, const std::vector<double>& b, double rel) {
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], rel * std::max(1.0, std::abs(b[i]))) << i;
}

}  // namespace

TEST(Secular, Examples) {
    expect_spectra_near(multipartite_spectrum(PartSizes({2, 2, 2})).flatten(), {4, 0, 0, 0, -2, -2}, 1e-12);
    const double s5 = std::sqrt(5.0);
    expect_spectra_near(multipartite_spectrum(PartSizes({1, 2, 2})).flatten(), {1 + s5, 0, 0, 1 - s5, -2}, 1e-12);
    expect_spectra_near(multipartite_spectrum(PartSizes({1, 1, 1})).flatten(), {2, -1, -1}, 1e-12);
    expect_spectra_near(multipartite_spectrum(PartSizes({3, 3})).flatten(), {3, 0, 0, 0, 0, -3}, 1e-12);
}

TEST(Secular, StructureOfK122) {
    const SecularSpectrum s = multipartite_spectrum(PartSizes({1, 2, 2}));
    ASSERT_EQ(s.secular_roots.size(), 2u);
    EXPECT_NEAR(s.secular_roots[0], 1 + std::sqrt(5.0), 1e-12);
    EXPECT_NEAR(s.secular_roots[1], 1 - std::sqrt(5.0), 1e-12);
    ASSERT_EQ(s.pole_eigenvalues.size(), 1u);
    EXPECT_EQ(s.pole_eigenvalues[0].value, -2.0);
    EXPECT_EQ(s.pole_eigenvalues[0].multiplicity, 1u);
    EXPECT_EQ(s.zero_multiplicity, 2u);
}

TEST(Secular, ValueAndPoles) {
    const PartSizes p({2, 1});
    EXPECT_NEAR(secular_value(p, 0.0), 2.0, 1e-15);
    EXPECT_NEAR(secular_value(p, std::sqrt(2.0)), 1.0, 1e-12);
    EXPECT_THROW(secular_value(p, -2.0), std::domain_error);
    EXPECT_THROW(secular_value(p, -1.0), std::domain_error);
}

TEST(Secular, MatchesDenseSolverForAllSmallPartitions) {
    std::size_t cases = 0;
    for (const auto& parts : multipartite_family(12, 12)) {
        SCOPED_TRACE(parts.to_string());
        const auto exact = multipartite_spectrum(parts).flatten();
        expect_spectra_near(exact, eigen_oracle(complete_multipartite(parts)), 1e-9);
        double sum = 0.0;
        double sq = 0.0;
        for (double x : exact) {
            sum += x;
            sq += x * x;
        }
        const double two_m = 2.0 * static_cast<double>(parts.edge_count());
        EXPECT_NEAR(sum, 0.0, 1e-9 * two_m);
        EXPECT_NEAR(sq, two_m, 1e-9 * two_m);
        ++cases;
    }
    EXPECT_EQ(cases, 259u);
}

TEST(Secular, SignStructure) {
    for (const auto& parts : multipartite_family(20, 8)) {
        SCOPED_TRACE(parts.to_string());
        const SecularSpectrum s = multipartite_spectrum(parts);
        const std::size_t positive =
            std::count_if(s.secular_roots.begin(), s.secular_roots.end(), [](double x) { return x > 0; });
        EXPECT_EQ(positive, 1u);
        const double smallest_size = static_cast<double>(parts.sizes().back());
        for (std::size_t i = 1; i < s.secular_roots.size(); ++i) EXPECT_LE(s.secular_roots[i], -smallest_size);
        const auto flat = s.flatten();
        if (parts.vertex_count() > parts.part_count()) {
            EXPECT_EQ(lambda2_multipartite(parts), 0.0);
            EXPECT_NEAR(flat[1], 0.0, 1e-10);
        } else {
            EXPECT_EQ(lambda2_multipartite(parts), -1.0);
        }
    }
}

TEST(Secular, LargeAndSkewedParts) {
    for (const auto& sizes : std::vector<std::vector<std::size_t>>{
             {1000, 1}, {500, 499, 1}, {700, 300, 2, 1}, {1, 1, 1, 1, 1, 1, 1, 2}, {2000, 47, 1}}) {
        const PartSizes parts(sizes);
        const SecularSpectrum s = multipartite_spectrum(parts);
        for (double root : s.secular_roots) EXPECT_NEAR(secular_value(parts, root), 1.0, 1e-9) << parts.to_string();
        const auto flat = s.flatten();
        EXPECT_EQ(flat.size(), parts.vertex_count());
        double sq = 0.0;
        for (double x : flat) sq += x * x;
        EXPECT_NEAR(sq, 2.0 * static_cast<double>(parts.edge_count()), 1e-9 * static_cast<double>(parts.edge_count()));
    }
}

TEST(ZeroBasis, AnnihilatedExactly) {
    EXPECT_TRUE(zero_eigenbasis(PartSizes({1, 1, 1})).empty());
    const auto two = zero_eigenbasis(PartSizes({2, 2}));
    ASSERT_EQ(two.size(), 2u);
    int dot = 0;
    for (std::size_t i = 0; i < 4; ++i) dot += two[0].coefficients[i] * two[1].coefficients[i];
    EXPECT_EQ(dot, 0);
    for (const auto& parts : multipartite_family(12, 12)) {
        const auto basis = zero_eigenbasis(parts);
        EXPECT_EQ(basis.size(), parts.vertex_count() - parts.part_count());
        const auto a = int_adjacency(complete_multipartite(parts));
        for (const auto& vec : basis) {
            for (std::size_t i = 0; i < a.size(); ++i) {
                long long acc = 0;
                for (std::size_t j = 0; j < a.size(); ++j) acc += a[i][j] * vec.coefficients[j];
                ASSERT_EQ(acc, 0) << parts.to_string();
            }
        }
    }
}

TEST(QuotientEigenvector, Examples) {
    const auto c = quotient_eigenvector(PartSizes({2, 2, 2}), 4.0);
    for (double x : c) EXPECT_NEAR(x, 1.0 / 6.0, 1e-15);
    const double s5 = std::sqrt(5.0);
    const auto d = quotient_eigenvector(PartSizes({1, 2, 2}), 1 + s5);
    // Canonical order is (2, 2, 1).
    EXPECT_NEAR(d[0], 1 / (3 + s5), 1e-15);
    EXPECT_NEAR(d[1], 1 / (3 + s5), 1e-15);
    EXPECT_NEAR(d[2], 1 / (2 + s5), 1e-15);
    const auto e = quotient_eigenvector(PartSizes({3, 3}), 3.0);
    EXPECT_NEAR(e[0], 1.0 / 6.0, 1e-15);
    EXPECT_THROW(quotient_eigenvector(PartSizes({3, 3}), -3.0), std::domain_error);
}

TEST(QuotientEigenvector, SatisfiesEigenEquation) {
    for (const auto& parts : multipartite_family(12, 6)) {
        const auto s = multipartite_spectrum(parts);
        const auto a = int_adjacency(complete_multipartite(parts));
        for (double root : s.secular_roots) {
            const auto c = quotient_eigenvector(parts, root);
            std::vector<double> x;
            for (std::size_t i = 0; i < parts.part_count(); ++i) x.insert(x.end(), parts.sizes()[i], c[i]);
            for (std::size_t i = 0; i < x.size(); ++i) {
                double ax = 0.0;
                for (std::size_t j = 0; j < x.size(); ++j) ax += a[i][j] * x[j];
                ASSERT_NEAR(ax, root * x[i], 1e-8) << parts.to_string();
            }
        }
    }
}

TEST(ClosedForms, ExamplesAndAgreement) {
    expect_spectra_near(closed_forms(PartSizes({4, 4}))->values, {4, 0, 0, 0, 0, 0, 0, -4}, 0.0);
    expect_spectra_near(closed_forms(PartSizes({1, 1, 1, 1, 1}))->values, {4, -1, -1, -1, -1}, 0.0);
    expect_spectra_near(closed_forms(PartSizes({3, 3, 3}))->values, {6, 0, 0, 0, 0, 0, 0, -3, -3}, 0.0);
    EXPECT_FALSE(closed_forms(PartSizes({3, 2, 1})).has_value());
    std::size_t present = 0;
    for (const auto& parts : multipartite_family(16, 16)) {
        const auto closed = closed_forms(parts);
        if (!closed) continue;
        ++present;
        expect_spectra_near(closed->values, multipartite_spectrum(parts).flatten(), 1e-12);
    }
    EXPECT_GT(present, 50u);
}
