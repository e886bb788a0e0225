#include "latdet/lommel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "latdet/specfun.hpp"

namespace latdet {

namespace {

constexpr double kIntegerOrderGuard = 1e-6;

void require_argument(double z) {
    if (z == 0.0 || !std::isfinite(z)) {
        throw std::domain_error("Lommel polynomial needs a finite nonzero argument z");
    }
}

bool near_integer(double nu) noexcept {
    return std::abs(nu - std::round(nu)) < kIntegerOrderGuard;
}

// Running product held as mantissa * 2^exponent.
class ScaledProduct {
public:
    void multiply(double f) noexcept {
        int e = 0;
        mantissa_ = std::frexp(mantissa_ * f, &e);
        exponent_ += e;
    }
    double value(double extra) const noexcept { return std::ldexp(mantissa_ * extra, exponent_); }

private:
    double mantissa_ = 1.0;
    int exponent_ = 0;
};

}  // namespace

LommelParams LommelParams::from_lattice(double lambda, double strength, int p) {
    if (strength == 0.0) throw std::domain_error("Lommel dictionary needs a nonzero strength B");
    return {(2.0 - lambda) / strength, p, 2.0 / strength};
}

bool IdentityResidual::holds(double rtol) const noexcept {
    return std::abs(value) <= rtol * scale;
}

double lommel_closed(const LommelParams& q) {
    if (q.p < 0) throw std::invalid_argument("lommel_closed: degree must be >= 0");
    require_argument(q.z);
    const double two_over_z = 2.0 / q.z;
    double sum = 0.0;
    for (int s = 0; 2 * s <= q.p; ++s) {
        // C(p-s, s)
        double binom = 1.0;
        for (int i = 1; i <= s; ++i) binom *= static_cast<double>(q.p - 2 * s + i) / i;
        ScaledProduct prod;
        for (int m = s + 1; m <= q.p - s; ++m) prod.multiply((q.nu + m) * two_over_z);
        sum += prod.value(s % 2 == 0 ? binom : -binom);
    }
    return sum;
}

namespace {

// Beyond this degree the closed sum cancels too badly to trust.
constexpr int kClosedFormMaxDegree = 30;

double nonnegative_degree(double nu, int p, double z) {
    if (p <= kClosedFormMaxDegree) return lommel_closed({nu, p, z});
    return lommel_recurrence(nu, p, z).back();
}

}  // namespace

double lommel(const LommelParams& q) {
    if (q.p >= 0) return nonnegative_degree(q.nu, q.p, q.z);
    require_argument(q.z);
    // p = -n-1
    const int n = -q.p - 1;
    if (n == 0) return 0.0;
    return -nonnegative_degree(q.nu - n, n - 1, q.z);
}

std::vector<double> lommel_recurrence(double nu, int p_max, double z) {
    if (p_max < 0) throw std::invalid_argument("lommel_recurrence: p_max must be >= 0");
    require_argument(z);
    std::vector<double> r(static_cast<std::size_t>(p_max) + 1);
    double before = -1.0;  // R^{nu,-2}
    double last = 0.0;     // R^{nu,-1}
    for (int m = -1; m < p_max; ++m) {
        const double next = 2.0 * (nu + m + 1) / z * last - before;
        before = last;
        last = next;
        r[static_cast<std::size_t>(m + 1)] = next;
    }
    return r;
}

IdentityResidual lommel_bessel_residual(double nu, int p, double z) {
    if (near_integer(nu)) {
        throw std::domain_error("lommel_bessel_residual: nu = " + std::to_string(nu) +
                                " is within 1e-6 of an integer");
    }
    if (p < 0) throw std::invalid_argument("lommel_bessel_residual: degree must be >= 0");
    using specfun::bessel_j;
    const double order = nu + p + 1;
    const double t1 = bessel_j(-nu, z) * bessel_j(order, z);
    const double t2 = (p % 2 == 0 ? 1.0 : -1.0) * bessel_j(nu, z) * bessel_j(-order, z);
    const double t3 = 2.0 * specfun::sin_pi(nu) / (std::numbers::pi * z) * lommel_closed({nu, p, z});
    return {t1 + t2 + t3, std::max({std::abs(t1), std::abs(t2), std::abs(t3)})};
}

CasoratianValue normalized_casoratian(double nu, int p, double z) {
    if (p < 0) throw std::invalid_argument("normalized_casoratian: degree must be >= 0");
    if (near_integer(nu)) return {lommel_closed({nu, p, z}), true};
    using specfun::bessel_j;
    const double jm = bessel_j(-nu, z);
    const double jp = bessel_j(nu, z);
    auto w = [&](int deg) {
        const double order = nu + deg + 1;
        return jm * bessel_j(order, z) + (deg % 2 == 0 ? 1.0 : -1.0) * jp * bessel_j(-order, z);
    };
    return {w(p) / w(0), false};
}

double transitional_argument(int p, double b) {
    if (p < 0) throw std::invalid_argument("transitional_argument: degree must be >= 0");
    const double bh = b / (p + 1);
    return 2.0 / (bh * bh * bh);
}

double lommel_transitional_asymptotic(int p, double b) {
    if (p < 0) throw std::invalid_argument("lommel_transitional_asymptotic: degree must be >= 0");
    return (p + 1) * specfun::continuum_linear_det_ratio(b);
}

}  // namespace latdet
