#pragma once

// Discrete Schrodinger problem on the interval j = 0..p+1:
//
//     y(j+1) + (lambda - V(j) - 2) y(j) + y(j-1) = 0,   j = 1..p
//
// solved by propagating the pair (y(j), y(j+1)) with unimodular 2x2
// transfer matrices.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace latdet {

/// p interior vertices plus the two boundary vertices 0 and p+1.
class LatticeInterval {
public:
    explicit LatticeInterval(std::size_t interior);

    std::size_t interior() const noexcept { return p_; }
    std::size_t vertex_count() const noexcept { return p_ + 2; }
    double step() const noexcept { return 1.0 / static_cast<double>(p_ + 1); }

private:
    std::size_t p_;
};

/// Interior potential values V(1..p). Indexing through at() is 1-based to
/// match the vertex labels; values() exposes the contiguous storage.
class PotentialTable {
public:
    explicit PotentialTable(std::vector<double> values);

    static PotentialTable zeros(std::size_t p);

    std::size_t size() const noexcept { return values_.size(); }
    double at(std::size_t j) const;  // 1 <= j <= p
    std::span<const double> values() const noexcept { return values_; }

    LatticeInterval interval() const { return LatticeInterval(size()); }

    /// Copy with one extra vertex appended at the right end.
    PotentialTable appended(double v) const;
    /// Copy with every entry shifted by `delta`.
    PotentialTable shifted(double delta) const;

private:
    std::vector<double> values_;
};

class BoundaryCondition {
public:
    enum class Kind { dirichlet, neumann, robin };

    static BoundaryCondition dirichlet() noexcept { return {Kind::dirichlet, 0.0, 0.0}; }
    static BoundaryCondition neumann() noexcept { return {Kind::neumann, 0.0, 0.0}; }
    /// Delta y(0) = alpha y(0), Delta y(p) = -beta y(p+1). Throws
    /// std::invalid_argument when 1+alpha or 1+beta vanishes.
    static BoundaryCondition robin(double alpha, double beta);

    Kind kind() const noexcept { return kind_; }
    double alpha() const noexcept { return alpha_; }
    double beta() const noexcept { return beta_; }

    // Neumann is Robin with alpha = beta = 0; the elimination below treats
    // both through the same arithmetic so the two agree bit for bit.
    double left_factor() const noexcept { return 1.0 + alpha_; }
    double right_factor() const noexcept { return 1.0 + beta_; }

private:
    BoundaryCondition(Kind kind, double alpha, double beta) noexcept
        : kind_(kind), alpha_(alpha), beta_(beta) {}

    Kind kind_;
    double alpha_;
    double beta_;
};

/// The pair Upsilon(j) = (y(j), y(j+1)).
struct StateVector {
    double y = 0.0;
    double y_next = 0.0;

    friend bool operator==(const StateVector&, const StateVector&) = default;
};

/// Row-major 2x2 real matrix. A single step C(j) has the form
/// [[0, 1], [-1, phi]]; products of steps (propagators) are general.
struct TransferMatrix {
    double a00 = 1.0, a01 = 0.0;
    double a10 = 0.0, a11 = 1.0;

    static TransferMatrix identity() noexcept { return {}; }
    static TransferMatrix step(double phi) noexcept { return {0.0, 1.0, -1.0, phi}; }

    double determinant() const noexcept { return a00 * a11 - a01 * a10; }
    StateVector apply(const StateVector& s) const noexcept {
        return {a00 * s.y + a01 * s.y_next, a10 * s.y + a11 * s.y_next};
    }

    /// Largest entry of |C^T J C - J| with J = [[0, 1], [-1, 0]].
    double symplectic_defect() const noexcept;

    friend TransferMatrix operator*(const TransferMatrix& l, const TransferMatrix& r) noexcept {
        return {l.a00 * r.a00 + l.a01 * r.a10, l.a00 * r.a01 + l.a01 * r.a11,
                l.a10 * r.a00 + l.a11 * r.a10, l.a10 * r.a01 + l.a11 * r.a11};
    }
    friend bool operator==(const TransferMatrix&, const TransferMatrix&) = default;
};

/// lambda-independent part B(j) of the split C(j) = B(j) - lambda D.
TransferMatrix driving_part(std::size_t j, const PotentialTable& v);
/// The constant spectral part D = [[0, 0], [0, 1]].
TransferMatrix spectral_part() noexcept;

/// C(j) for 1 <= j <= p; throws std::out_of_range otherwise.
TransferMatrix transfer_matrix(std::size_t j, double lambda, const PotentialTable& v);

/// Propagator K(j_end, 0) = C(j_end) ... C(1).
TransferMatrix propagator(const PotentialTable& v, double lambda, std::size_t j_end);

/// Upsilon(j_end) from Upsilon(0) = start, 0 <= j_end <= p.
StateVector propagate(const PotentialTable& v, double lambda, StateVector start,
                      std::size_t j_end);

/// All values y(0..p+1) of the solution seeded by `start`.
std::vector<double> solution_values(const PotentialTable& v, double lambda,
                                    StateVector start);

/// Seed Upsilon(0) that satisfies the left boundary condition.
StateVector boundary_seed(const BoundaryCondition& bc) noexcept;

/// Boundary-adapted terminal value whose zeros in lambda are the eigenvalues.
///   Dirichlet: y(p+1) from (0, 1)
///   Neumann:   y(p+1) - y(p) from (1, 1)
///   Robin:     (1+beta) y(p+1) - y(p) from (1, 1+alpha)
double characteristic(double lambda, const PotentialTable& v, const BoundaryCondition& bc);

/// characteristic() together with its lambda-derivative, propagated jointly.
std::pair<double, double> characteristic_with_derivative(double lambda,
                                                         const PotentialTable& v,
                                                         const BoundaryCondition& bc);

/// u(j) J v(j) = u.y * v.y_next - u.y_next * v.y
double casoratian(const StateVector& u, const StateVector& v) noexcept;

/// Characteristic function as a polynomial in lambda, c[0] + c[1] lambda + ...
class CharPoly {
public:
    explicit CharPoly(std::vector<double> coefficients);

    std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    std::span<const double> coefficients() const noexcept { return coeffs_; }
    double operator[](std::size_t k) const { return coeffs_.at(k); }

    double evaluate(double lambda) const noexcept;  // Horner
    double max_abs_coefficient() const noexcept;

private:
    std::vector<double> coeffs_;
};

/// Largest p accepted by char_poly_coefficients(). Coefficients grow
/// combinatorially; use characteristic() pointwise beyond this.
inline constexpr std::size_t kCharPolyMaxVertices = 60;

/// Propagates polynomial-valued state vectors. Throws std::domain_error for
/// p > kCharPolyMaxVertices.
CharPoly char_poly_coefficients(const PotentialTable& v, const BoundaryCondition& bc);

/// Closed-form Dirichlet solution for phi(j) = a + b j:
///   y(j) = sum_s (-1)^s C(j-1-s, s) prod_{l=s+1}^{j-1-s} (a + b l).
/// Equals propagate() with V(j) = b j, lambda = 2 - a, start (0, 1).
double bleich_melan_dirichlet(std::size_t j, double a, double b);

}  // namespace latdet
