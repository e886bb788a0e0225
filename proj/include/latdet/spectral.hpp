#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "latdet/lattice.hpp"
#include "latdet/lommel.hpp"

namespace latdet {

/// The p eigenvalues (ascending) of V under a boundary condition, with
/// interior eigenvector values y(1..p) normalized to y(1) = 1.
class Spectrum {
public:
    Spectrum(std::vector<double> eigenvalues, std::vector<std::vector<double>> eigenvectors);

    std::size_t size() const noexcept { return eigenvalues_.size(); }
    std::span<const double> eigenvalues() const noexcept { return eigenvalues_; }
    double eigenvalue(std::size_t n) const { return eigenvalues_.at(n); }
    std::span<const double> eigenvector(std::size_t n) const { return eigenvectors_.at(n); }

private:
    std::vector<double> eigenvalues_;
    std::vector<std::vector<double>> eigenvectors_;
};

/// Diagonal of the symmetric tridiagonal matrix (off-diagonal -1)
/// equivalent to the recurrence with the boundary values eliminated.
std::vector<double> jacobi_diagonal(const PotentialTable& v, const BoundaryCondition& bc);

/// Number of eigenvalues strictly below x (Sturm sequence of the LDL^T pivots).
std::size_t sturm_count(std::span<const double> diagonal, double x) noexcept;

/// Sturm-count bisection on jacobi_diagonal(), polished by Newton steps on
/// characteristic(); eigenvectors by the seeded forward recurrence.
Spectrum eigenvalues(const PotentialTable& v, const BoundaryCondition& bc);

/// characteristic(0, V) / characteristic(0, 0). Throws std::domain_error if
/// the free value vanishes.
double det_ratio(const PotentialTable& v, const BoundaryCondition& bc);

struct ReducedDeterminant {
    double value = 0.0;           // product of the nonzero eigenvalues
    std::vector<double> zero_mode;  // y(1..p) with y(1) = 1
    double inner = 0.0;           // <y, y>
    double delta_terminal = 0.0;  // Delta y(p) = y(p+1) - y(p) = -y(p)
};

/// Relative threshold on |characteristic(0)| for declaring a zero mode.
inline constexpr double kZeroModeTolerance = 1e-8;

/// Dirichlet determinant with the zero eigenvalue omitted, from the zero mode
/// alone: -<y, y>/Delta y(p). Throws std::domain_error when lambda = 0 is not
/// an eigenvalue.
ReducedDeterminant reduced_determinant_zero_mode(const PotentialTable& v);

/// Magnitude against which |characteristic(0)| is compared when detecting a
/// zero mode: the coefficient norm for p <= 60, max |y(j, 0)| beyond.
double zero_mode_scale(const PotentialTable& v);

/// (lambda - mu) sum_{j=1}^k y(j,lambda) y(j,mu)
///   + [y(k+1,lambda) y(k,mu) - y(k+1,mu) y(k,lambda)]
/// for the Dirichlet solutions, 0 <= k <= p. Vanishes identically.
IdentityResidual christoffel_darboux_residual(const PotentialTable& v, double lambda,
                                              double mu, std::size_t k);

/// Symmetric p x p matrix, row-major.
class GramMatrix {
public:
    explicit GramMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

    std::size_t size() const noexcept { return n_; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

private:
    std::size_t n_;
    std::vector<double> data_;
};

/// Entries sum_j y(j, lambda_n) y(j, lambda_m) over the Dirichlet eigenvectors.
GramMatrix gram_matrix(const PotentialTable& v);
GramMatrix gram_matrix(const Spectrum& spectrum);

/// Reconstructs F(lambda) = sum_n f(lambda_n) <y(lambda), y_n>/<y_n, y_n> from
/// samples at the Dirichlet eigenvalues of V.
class SamplingInterpolator {
public:
    explicit SamplingInterpolator(PotentialTable v);

    const Spectrum& spectrum() const noexcept { return spectrum_; }
    double operator()(std::span<const double> samples, double lambda) const;

private:
    PotentialTable v_;
    Spectrum spectrum_;
    std::vector<double> norms_;
};

double sample_interpolate(std::span<const double> samples, const PotentialTable& v,
                          double lambda);

}  // namespace latdet
