#include "bnkit/multipartite.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace bnkit {
namespace {

constexpr double kPoleOffset = 1e-12;
constexpr double kBisectionWidth = 1e-13;
constexpr double kPoleGuard = 1e-9;

// f(lambda) - 1 over the distinct sizes, so every pole is simple.
class Secular {
public:
    explicit Secular(std::vector<PartSizes::Distinct> distinct) : distinct_(std::move(distinct)) {}

    double residual(double x) const {
        double sum = 0.0;
        for (const auto& d : distinct_) {
            const double p = static_cast<double>(d.size);
            sum += static_cast<double>(d.multiplicity) * p / (x + p);
        }
        return sum - 1.0;
    }

    double derivative(double x) const {
        double sum = 0.0;
        for (const auto& d : distinct_) {
            const double p = static_cast<double>(d.size);
            sum -= static_cast<double>(d.multiplicity) * p / ((x + p) * (x + p));
        }
        return sum;
    }

    // residual(lo) > 0 > residual(hi), residual decreasing on [lo, hi].
    double root_in(double lo, double hi) const {
        double x = 0.5 * (lo + hi);
        while (hi - lo > kBisectionWidth * std::max({1.0, std::abs(lo), std::abs(hi)})) {
            x = 0.5 * (lo + hi);
            if (x == lo || x == hi) break;
            if (residual(x) > 0.0) {
                lo = x;
            } else {
                hi = x;
            }
        }
        x = 0.5 * (lo + hi);
        const double fx = residual(x);
        const double polished = x - fx / derivative(x);
        if (polished >= lo && polished <= hi && std::abs(residual(polished)) <= std::abs(fx)) return polished;
        return x;
    }

private:
    std::vector<PartSizes::Distinct> distinct_;
};

double pole_offset(std::size_t p) { return std::max(kPoleOffset, kPoleOffset * static_cast<double>(p)); }

}  // namespace

double secular_value(const PartSizes& parts, double lambda) {
    double sum = 0.0;
    for (std::size_t size : parts.sizes()) {
        const double p = static_cast<double>(size);
        if (lambda + p == 0.0) throw std::domain_error("secular function evaluated at a pole");
        sum += p / (lambda + p);
    }
    return sum;
}

std::vector<double> secular_roots(const PartSizes& parts) {
    const auto distinct = parts.distinct();
    const Secular f(distinct);
    std::vector<double> roots;
    roots.reserve(distinct.size());

    // f(0) = r > 1 and f(n) < sum n_i / n = 1.
    roots.push_back(f.root_in(0.0, static_cast<double>(parts.vertex_count())));

    // One root per gap between consecutive poles, nearest to zero first.
    for (std::size_t k = distinct.size() - 1; k-- > 0;) {
        const double left_pole = -static_cast<double>(distinct[k].size);
        const double right_pole = -static_cast<double>(distinct[k + 1].size);
        double eps_left = pole_offset(distinct[k].size);
        double eps_right = pole_offset(distinct[k + 1].size);
        // Shrink the offsets if a root sits closer to a pole than the default.
        for (int i = 0; i < 40 && !(f.residual(left_pole + eps_left) > 0.0); ++i) eps_left *= 0.5;
        for (int i = 0; i < 40 && !(f.residual(right_pole - eps_right) < 0.0); ++i) eps_right *= 0.5;
        roots.push_back(f.root_in(left_pole + eps_left, right_pole - eps_right));
    }
    return roots;
}

std::vector<double> SecularSpectrum::flatten() const {
    std::vector<double> out = secular_roots;
    for (const auto& pole : pole_eigenvalues) out.insert(out.end(), pole.multiplicity, pole.value);
    out.insert(out.end(), zero_multiplicity, 0.0);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

Spectrum SecularSpectrum::to_spectrum() const { return Spectrum{flatten(), parts.edge_count(), kTraceTolerance}; }

SecularSpectrum multipartite_spectrum(const PartSizes& parts) {
    SecularSpectrum s{parts, parts.distinct(), secular_roots(parts), {}, 0};
    for (const auto& d : s.distinct) {
        if (d.multiplicity > 1) s.pole_eigenvalues.push_back({-static_cast<double>(d.size), d.multiplicity - 1});
    }
    s.zero_multiplicity = parts.vertex_count() - parts.part_count();
    return s;
}

double lambda2_multipartite(const PartSizes& parts) {
    return parts.vertex_count() > parts.part_count() ? 0.0 : -1.0;
}

std::vector<ZeroBasisVector> zero_eigenbasis(const PartSizes& parts) {
    const std::size_t n = parts.vertex_count();
    std::vector<ZeroBasisVector> basis;
    basis.reserve(n - parts.part_count());
    std::size_t offset = 0;
    for (std::size_t i = 0; i < parts.part_count(); ++i) {
        const std::size_t size = parts.sizes()[i];
        for (std::size_t k = 0; k + 1 < size; ++k) {
            ZeroBasisVector f{i, k, std::vector<int>(n, 0)};
            f.coefficients[offset + k] = 1;
            f.coefficients[offset + size - 1] = -1;
            basis.push_back(std::move(f));
        }
        offset += size;
    }
    return basis;
}

std::vector<double> quotient_eigenvector(const PartSizes& parts, double root) {
    std::vector<double> c;
    c.reserve(parts.part_count());
    for (std::size_t size : parts.sizes()) {
        const double denom = root + static_cast<double>(size);
        if (std::abs(denom) < kPoleGuard) throw std::domain_error("root lies on a pole of the secular function");
        c.push_back(1.0 / denom);
    }
    return c;
}

std::optional<Spectrum> closed_forms(const PartSizes& parts) {
    const std::size_t n = parts.vertex_count();
    const std::size_t r = parts.part_count();
    std::vector<double> values;
    values.reserve(n);
    if (parts.balanced()) {
        // Covers K_r (p = 1): lambda_1 = (r - 1) p, zeros n - r, -p with multiplicity r - 1.
        const double p = static_cast<double>(parts.sizes().front());
        values.push_back(static_cast<double>(r - 1) * p);
        values.insert(values.end(), n - r, 0.0);
        values.insert(values.end(), r - 1, -p);
    } else if (r == 2) {
        const double root = std::sqrt(static_cast<double>(parts.sizes()[0] * parts.sizes()[1]));
        values.push_back(root);
        values.insert(values.end(), n - 2, 0.0);
        values.push_back(-root);
    } else {
        return std::nullopt;
    }
    return Spectrum{std::move(values), parts.edge_count(), kTraceTolerance};
}

}  // namespace bnkit
