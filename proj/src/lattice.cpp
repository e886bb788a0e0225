#include "latdet/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace latdet {

namespace {

void require_vertex(std::size_t j, std::size_t p) {
    if (j < 1 || j > p) {
        throw std::out_of_range("vertex " + std::to_string(j) + " outside interior 1.." +
                                std::to_string(p));
    }
}

double phi(const PotentialTable& v, std::size_t j, double lambda) {
    return v.values()[j - 1] + 2.0 - lambda;
}

// Dense polynomial in lambda, index = power.
using Poly = std::vector<double>;

// (a - lambda) * y - w
Poly step_poly(double a, const Poly& y, const Poly& w) {
    Poly out(std::max(y.size() + 1, w.size()), 0.0);
    for (std::size_t k = 0; k < y.size(); ++k) {
        out[k] += a * y[k];
        out[k + 1] -= y[k];
    }
    for (std::size_t k = 0; k < w.size(); ++k) out[k] -= w[k];
    return out;
}

}  // namespace

LatticeInterval::LatticeInterval(std::size_t interior) : p_(interior) {
    if (p_ < 1) throw std::invalid_argument("lattice needs at least one interior vertex");
}

PotentialTable::PotentialTable(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("potential table is empty");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw std::invalid_argument("potential V(" + std::to_string(i + 1) +
                                        ") is not finite");
        }
    }
}

PotentialTable PotentialTable::zeros(std::size_t p) {
    return PotentialTable(std::vector<double>(p, 0.0));
}

double PotentialTable::at(std::size_t j) const {
    require_vertex(j, size());
    return values_[j - 1];
}

PotentialTable PotentialTable::appended(double v) const {
    auto values = values_;
    values.push_back(v);
    return PotentialTable(std::move(values));
}

PotentialTable PotentialTable::shifted(double delta) const {
    auto values = values_;
    for (auto& x : values) x += delta;
    return PotentialTable(std::move(values));
}

BoundaryCondition BoundaryCondition::robin(double alpha, double beta) {
    if (!std::isfinite(alpha) || !std::isfinite(beta)) {
        throw std::invalid_argument("Robin parameters must be finite");
    }
    if (1.0 + alpha == 0.0 || 1.0 + beta == 0.0) {
        throw std::invalid_argument("degenerate Robin condition: 1+alpha and 1+beta must be nonzero");
    }
    return {Kind::robin, alpha, beta};
}

double TransferMatrix::symplectic_defect() const noexcept {
    // J C = [[a10, a11], [-a00, -a01]]
    const double m00 = a00 * a10 - a10 * a00;
    const double m01 = a00 * a11 - a10 * a01;
    const double m10 = a01 * a10 - a11 * a00;
    const double m11 = a01 * a11 - a11 * a01;
    return std::max({std::abs(m00), std::abs(m01 - 1.0), std::abs(m10 + 1.0), std::abs(m11)});
}

TransferMatrix driving_part(std::size_t j, const PotentialTable& v) {
    require_vertex(j, v.size());
    return TransferMatrix::step(v.values()[j - 1] + 2.0);
}

TransferMatrix spectral_part() noexcept { return {0.0, 0.0, 0.0, 1.0}; }

TransferMatrix transfer_matrix(std::size_t j, double lambda, const PotentialTable& v) {
    require_vertex(j, v.size());
    return TransferMatrix::step(phi(v, j, lambda));
}

TransferMatrix propagator(const PotentialTable& v, double lambda, std::size_t j_end) {
    if (j_end > v.size()) require_vertex(j_end, v.size());
    auto k = TransferMatrix::identity();
    for (std::size_t j = 1; j <= j_end; ++j) k = TransferMatrix::step(phi(v, j, lambda)) * k;
    return k;
}

StateVector propagate(const PotentialTable& v, double lambda, StateVector start,
                      std::size_t j_end) {
    if (j_end > v.size()) require_vertex(j_end, v.size());
    auto s = start;
    for (std::size_t j = 1; j <= j_end; ++j) {
        s = {s.y_next, phi(v, j, lambda) * s.y_next - s.y};
    }
    return s;
}

std::vector<double> solution_values(const PotentialTable& v, double lambda,
                                    StateVector start) {
    const auto p = v.size();
    std::vector<double> y(p + 2);
    y[0] = start.y;
    y[1] = start.y_next;
    for (std::size_t j = 1; j <= p; ++j) y[j + 1] = phi(v, j, lambda) * y[j] - y[j - 1];
    return y;
}

StateVector boundary_seed(const BoundaryCondition& bc) noexcept {
    if (bc.kind() == BoundaryCondition::Kind::dirichlet) return {0.0, 1.0};
    return {1.0, bc.left_factor()};
}

double characteristic(double lambda, const PotentialTable& v, const BoundaryCondition& bc) {
    const auto end = propagate(v, lambda, boundary_seed(bc), v.size());
    if (bc.kind() == BoundaryCondition::Kind::dirichlet) return end.y_next;
    return bc.right_factor() * end.y_next - end.y;
}

std::pair<double, double> characteristic_with_derivative(double lambda,
                                                         const PotentialTable& v,
                                                         const BoundaryCondition& bc) {
    auto s = boundary_seed(bc);
    StateVector ds{0.0, 0.0};
    for (std::size_t j = 1; j <= v.size(); ++j) {
        const double f = phi(v, j, lambda);
        ds = {ds.y_next, f * ds.y_next - s.y_next - ds.y};
        s = {s.y_next, f * s.y_next - s.y};
    }
    if (bc.kind() == BoundaryCondition::Kind::dirichlet) return {s.y_next, ds.y_next};
    return {bc.right_factor() * s.y_next - s.y, bc.right_factor() * ds.y_next - ds.y};
}

double casoratian(const StateVector& u, const StateVector& v) noexcept {
    return u.y * v.y_next - u.y_next * v.y;
}

CharPoly::CharPoly(std::vector<double> coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) throw std::invalid_argument("polynomial needs at least one coefficient");
}

double CharPoly::evaluate(double lambda) const noexcept {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * lambda + *it;
    return acc;
}

double CharPoly::max_abs_coefficient() const noexcept {
    double m = 0.0;
    for (double c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

CharPoly char_poly_coefficients(const PotentialTable& v, const BoundaryCondition& bc) {
    const auto p = v.size();
    if (p > kCharPolyMaxVertices) {
        throw std::domain_error("char_poly_coefficients: p = " + std::to_string(p) +
                                " exceeds the cap of " + std::to_string(kCharPolyMaxVertices) +
                                "; evaluate characteristic() pointwise instead");
    }
    const auto seed = boundary_seed(bc);
    Poly prev{seed.y};
    Poly cur{seed.y_next};
    for (std::size_t j = 1; j <= p; ++j) {
        auto next = step_poly(v.values()[j - 1] + 2.0, cur, prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    if (bc.kind() == BoundaryCondition::Kind::dirichlet) return CharPoly(std::move(cur));

    // (1+beta) y(p+1) - y(p)
    Poly out(cur.size(), 0.0);
    for (std::size_t k = 0; k < cur.size(); ++k) out[k] = bc.right_factor() * cur[k];
    for (std::size_t k = 0; k < prev.size(); ++k) out[k] -= prev[k];
    return CharPoly(std::move(out));
}

double bleich_melan_dirichlet(std::size_t j, double a, double b) {
    if (j == 0) return 0.0;
    double sum = 0.0;
    for (std::size_t s = 0; 2 * s <= j - 1; ++s) {
        // C(j-1-s, s)
        const std::size_t n = j - 1 - s;
        double binom = 1.0;
        for (std::size_t i = 1; i <= s; ++i) {
            binom *= static_cast<double>(n - s + i) / static_cast<double>(i);
        }
        double prod = 1.0;
        for (std::size_t l = s + 1; l <= j - 1 - s; ++l) prod *= a + b * static_cast<double>(l);
        sum += (s % 2 == 0 ? 1.0 : -1.0) * binom * prod;
    }
    return sum;
}

}  // namespace latdet
