#include "latdet/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>

namespace latdet {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

std::vector<double> interior(const std::vector<double>& y) {
    return {y.begin() + 1, y.end() - 1};
}

double dot(std::span<const double> a, std::span<const double> b) noexcept {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// k-th smallest eigenvalue (0-based) of the Jacobi matrix, bracketed by [lo, hi].
std::pair<double, double> bisect_eigenvalue(std::span<const double> d, std::size_t k, double lo,
                                            double hi) {
    for (int it = 0; it < 256; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (hi - lo <= 2.0 * kEps * std::max(std::abs(lo), std::abs(hi))) break;
        if (sturm_count(d, mid) > k) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return {lo, hi};
}

}  // namespace

Spectrum::Spectrum(std::vector<double> eigenvalues, std::vector<std::vector<double>> eigenvectors)
    : eigenvalues_(std::move(eigenvalues)), eigenvectors_(std::move(eigenvectors)) {
    if (eigenvalues_.size() != eigenvectors_.size()) {
        throw std::invalid_argument("spectrum: eigenvalue and eigenvector counts differ");
    }
    for (std::size_t n = 1; n < eigenvalues_.size(); ++n) {
        if (!(eigenvalues_[n - 1] < eigenvalues_[n])) {
            throw std::invalid_argument("spectrum: eigenvalues must be strictly increasing");
        }
    }
}

std::vector<double> jacobi_diagonal(const PotentialTable& v, const BoundaryCondition& bc) {
    std::vector<double> d(v.size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = 2.0 + v.values()[j];
    if (bc.kind() != BoundaryCondition::Kind::dirichlet) {
        // y(0) = y(1)/(1+alpha), y(p+1) = y(p)/(1+beta)
        d.front() -= 1.0 / bc.left_factor();
        d.back() -= 1.0 / bc.right_factor();
    }
    return d;
}

std::size_t sturm_count(std::span<const double> diagonal, double x) noexcept {
    constexpr double pivmin = std::numeric_limits<double>::min();
    std::size_t count = 0;
    double q = 1.0;
    for (std::size_t i = 0; i < diagonal.size(); ++i) {
        q = diagonal[i] - x - (i == 0 ? 0.0 : 1.0 / q);
        if (std::abs(q) < pivmin) q = -pivmin;
        if (q < 0.0) ++count;
    }
    return count;
}

Spectrum eigenvalues(const PotentialTable& v, const BoundaryCondition& bc) {
    const auto d = jacobi_diagonal(v, bc);
    const auto p = d.size();
    // Gershgorin: every row has off-diagonal mass at most 2.
    const auto [dmin, dmax] = std::minmax_element(d.begin(), d.end());
    const double lo = *dmin - 2.0 - kEps * std::abs(*dmin);
    const double hi = *dmax + 2.0 + kEps * std::abs(*dmax);

    std::vector<double> values(p);
    std::vector<std::vector<double>> vectors(p);
    const auto seed = boundary_seed(bc);
    for (std::size_t k = 0; k < p; ++k) {
        auto [a, b] = bisect_eigenvalue(d, k, lo, hi);
        double x = 0.5 * (a + b);
        for (int step = 0; step < 2; ++step) {
            const auto [f, df] = characteristic_with_derivative(x, v, bc);
            if (f == 0.0 || df == 0.0) break;
            const double next = x - f / df;
            if (!std::isfinite(next) || next < a || next > b) break;
            x = next;
        }
        values[k] = x;
        auto y = interior(solution_values(v, x, seed));
        const double y1 = y.front();
        for (auto& e : y) e /= y1;
        vectors[k] = std::move(y);
    }
    // Distinct eigenvalues closer than the bracket width can tie after
    // polishing; the Jacobi matrix has simple spectrum so nudge by one ulp.
    for (std::size_t k = 1; k < p; ++k) {
        if (!(values[k] > values[k - 1])) {
            values[k] = std::nextafter(values[k - 1], std::numeric_limits<double>::infinity());
        }
    }
    return Spectrum(std::move(values), std::move(vectors));
}

double det_ratio(const PotentialTable& v, const BoundaryCondition& bc) {
    const double free = characteristic(0.0, PotentialTable::zeros(v.size()), bc);
    if (free == 0.0) {
        throw std::domain_error("det_ratio: free characteristic vanishes at lambda = 0");
    }
    return characteristic(0.0, v, bc) / free;
}

double zero_mode_scale(const PotentialTable& v) {
    if (v.size() <= kCharPolyMaxVertices) {
        return char_poly_coefficients(v, BoundaryCondition::dirichlet()).max_abs_coefficient();
    }
    const auto y = solution_values(v, 0.0, {0.0, 1.0});
    double m = 0.0;
    for (double e : y) m = std::max(m, std::abs(e));
    return m;
}

ReducedDeterminant reduced_determinant_zero_mode(const PotentialTable& v) {
    const double c0 = characteristic(0.0, v, BoundaryCondition::dirichlet());
    const double scale = zero_mode_scale(v);
    if (!(std::abs(c0) < kZeroModeTolerance * scale)) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "no zero mode: characteristic(0) = %.10g", c0);
        throw std::domain_error(buf);
    }
    ReducedDeterminant r;
    r.zero_mode = interior(solution_values(v, 0.0, {0.0, 1.0}));
    r.inner = dot(r.zero_mode, r.zero_mode);
    r.delta_terminal = -r.zero_mode.back();
    r.value = -r.inner / r.delta_terminal;
    return r;
}

IdentityResidual christoffel_darboux_residual(const PotentialTable& v, double lambda,
                                              double mu, std::size_t k) {
    if (k > v.size()) {
        throw std::out_of_range("christoffel_darboux_residual: k = " + std::to_string(k) +
                                " exceeds p = " + std::to_string(v.size()));
    }
    const auto y = solution_values(v, lambda, {0.0, 1.0});
    const auto w = solution_values(v, mu, {0.0, 1.0});
    double sum = 0.0, abs_sum = 0.0;
    for (std::size_t j = 1; j <= k; ++j) {
        sum += y[j] * w[j];
        abs_sum += std::abs(y[j] * w[j]);
    }
    const double left = y[k + 1] * w[k];
    const double right = w[k + 1] * y[k];
    return {(lambda - mu) * sum + (left - right),
            std::abs(lambda - mu) * abs_sum + std::abs(left) + std::abs(right)};
}

GramMatrix gram_matrix(const Spectrum& spectrum) {
    const auto p = spectrum.size();
    GramMatrix g(p);
    for (std::size_t n = 0; n < p; ++n) {
        for (std::size_t m = n; m < p; ++m) {
            g(n, m) = g(m, n) = dot(spectrum.eigenvector(n), spectrum.eigenvector(m));
        }
    }
    return g;
}

GramMatrix gram_matrix(const PotentialTable& v) {
    return gram_matrix(eigenvalues(v, BoundaryCondition::dirichlet()));
}

SamplingInterpolator::SamplingInterpolator(PotentialTable v)
    : v_(std::move(v)), spectrum_(eigenvalues(v_, BoundaryCondition::dirichlet())) {
    norms_.reserve(spectrum_.size());
    for (std::size_t n = 0; n < spectrum_.size(); ++n) {
        norms_.push_back(dot(spectrum_.eigenvector(n), spectrum_.eigenvector(n)));
    }
}

double SamplingInterpolator::operator()(std::span<const double> samples, double lambda) const {
    if (samples.size() != spectrum_.size()) {
        throw std::invalid_argument("sample_interpolate: expected " +
                                    std::to_string(spectrum_.size()) + " samples, got " +
                                    std::to_string(samples.size()));
    }
    const auto y = interior(solution_values(v_, lambda, {0.0, 1.0}));
    double f = 0.0;
    for (std::size_t n = 0; n < samples.size(); ++n) {
        f += samples[n] * dot(y, spectrum_.eigenvector(n)) / norms_[n];
    }
    return f;
}

double sample_interpolate(std::span<const double> samples, const PotentialTable& v,
                          double lambda) {
    return SamplingInterpolator(v)(samples, lambda);
}

}  // namespace latdet
