#include "latdet/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace latdet::specfun {

namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kSeriesCutoff = 1e-17;

bool is_nonpositive_integer(double x) noexcept { return x <= 0.0 && x == std::round(x); }

// Gamma for x >= 1/2.
double lanczos_gamma(double x) noexcept {
    x -= 1.0;
    double acc = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) acc += kLanczos[i] / (x + static_cast<double>(i));
    const double t = x + kLanczosG + 0.5;
    // t^(x+1/2) split in two halves keeps the intermediate finite up to x ~ 170.
    const double half = std::pow(t, 0.5 * (x + 0.5));
    return std::sqrt(2.0 * kPi) * half * (half * std::exp(-t)) * acc;
}

void require_airy_domain(double x) {
    if (!(std::abs(x) <= 8.0)) {
        throw std::domain_error("airy: |x| = " + std::to_string(std::abs(x)) +
                                " outside series domain |x| <= 8");
    }
}

// Terms of the even and odd Maclaurin solutions of w'' = x w:
//   f = 1 + x^3/3! + 1*4 x^6/6! + ...,   g = x + 2 x^4/4! + 2*5 x^7/7! + ...
struct AirySeries {
    double f = 0.0, fp = 0.0, g = 0.0, gp = 0.0;
};

AirySeries airy_series(double x) noexcept {
    const double x3 = x * x * x;
    AirySeries s;
    double tf = 1.0, tg = x;            // f, g terms for k = 0
    double tfp = 0.5 * x * x, tgp = 1.0;  // f' term for k = 1, g' term for k = 0
    s.f = tf;
    s.g = tg;
    s.fp = 0.0;
    s.gp = tgp;
    for (int k = 0; k < 200; ++k) {
        const double k3 = 3.0 * k;
        tf *= x3 / ((k3 + 2.0) * (k3 + 3.0));
        tg *= x3 / ((k3 + 3.0) * (k3 + 4.0));
        if (k > 0) tfp *= x3 / (k3 * (k3 + 2.0));
        tgp *= x3 / ((k3 + 1.0) * (k3 + 3.0));
        s.f += tf;
        s.g += tg;
        s.fp += tfp;
        s.gp += tgp;
        const double biggest = std::max({std::abs(tf), std::abs(tg), std::abs(tfp), std::abs(tgp)});
        const double scale = std::max({std::abs(s.f), std::abs(s.g), std::abs(s.fp), std::abs(s.gp)});
        if (biggest <= kSeriesCutoff * scale) break;
    }
    return s;
}

// g(x)/x = 1 + 2 x^3/4! + ..., finite at x = 0.
double airy_odd_series_over_x(double x) noexcept {
    const double x3 = x * x * x;
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < 200; ++k) {
        const double k3 = 3.0 * k;
        term *= x3 / ((k3 + 3.0) * (k3 + 4.0));
        sum += term;
        if (std::abs(term) <= kSeriesCutoff * std::abs(sum)) break;
    }
    return sum;
}

}  // namespace

double sin_pi(double x) noexcept {
    const double n = std::round(x);
    const double r = x - n;
    const double s = std::sin(kPi * r);
    return std::fmod(n, 2.0) == 0.0 ? s : -s;
}

double cos_pi(double x) noexcept {
    const double n = std::round(x);
    const double r = x - n;
    const double c = (std::abs(r) == 0.5) ? 0.0 : std::cos(kPi * r);
    return std::fmod(n, 2.0) == 0.0 ? c : -c;
}

double gamma(double x) {
    if (is_nonpositive_integer(x)) {
        throw std::domain_error("gamma: pole at x = " + std::to_string(x));
    }
    if (x < 0.5) return kPi / (sin_pi(x) * lanczos_gamma(1.0 - x));
    return lanczos_gamma(x);
}

double reciprocal_gamma(double x) noexcept {
    if (is_nonpositive_integer(x)) return 0.0;
    if (x < 0.5) return sin_pi(x) * lanczos_gamma(1.0 - x) / kPi;
    return 1.0 / lanczos_gamma(x);
}

double bessel_j(double nu, double z) {
    if (!(z > 0.0) || z > 40.0 || !(std::abs(nu) <= 40.0)) {
        throw std::domain_error("bessel_j: (nu, z) = (" + std::to_string(nu) + ", " +
                                std::to_string(z) + ") outside series domain 0 < z <= 40, |nu| <= 40");
    }
    if (nu < 0.0 && nu == std::round(nu)) {
        // J_{-n} = (-1)^n J_n; the ascending series starts at m = n there.
        const double jn = bessel_j(-nu, z);
        return std::fmod(nu, 2.0) == 0.0 ? jn : -jn;
    }
    const double half = 0.5 * z;
    const double q = -half * half;
    double term = std::pow(half, nu) * reciprocal_gamma(nu + 1.0);
    double sum = term;
    for (int m = 0; m < 500; ++m) {
        const double denom = (m + 1.0) * (m + nu + 1.0);
        term *= q / denom;
        sum += term;
        if (std::abs(q) < std::abs(denom) && std::abs(term) <= kSeriesCutoff * std::abs(sum)) break;
    }
    return sum;
}

double bessel_y(double nu, double z) {
    if (std::abs(nu - std::round(nu)) < 1e-6) {
        throw std::domain_error("bessel_y: integer order nu = " + std::to_string(nu) +
                                " is not supported");
    }
    return (cos_pi(nu) * bessel_j(nu, z) - bessel_j(-nu, z)) / sin_pi(nu);
}

AiryPair airy(double x) {
    require_airy_domain(x);
    // Ai(0) = 3^{-2/3}/Gamma(2/3), -Ai'(0) = 3^{-1/3}/Gamma(1/3)
    const double c1 = std::pow(3.0, -2.0 / 3.0) / gamma(2.0 / 3.0);
    const double c2 = std::pow(3.0, -1.0 / 3.0) / gamma(1.0 / 3.0);
    const double sqrt3 = std::numbers::sqrt3;
    const auto s = airy_series(x);
    return {c1 * s.f - c2 * s.g, sqrt3 * (c1 * s.f + c2 * s.g), c1 * s.fp - c2 * s.gp,
            sqrt3 * (c1 * s.fp + c2 * s.gp)};
}

double airy_dirichlet_solution(double x) {
    require_airy_domain(x);
    return x * airy_odd_series_over_x(x);
}

double hyp2f1(double a, double b, double c, double x) {
    if (!(std::abs(x) < 1.0)) {
        throw std::domain_error("hyp2f1: |x| = " + std::to_string(std::abs(x)) + " >= 1");
    }
    double term = 1.0, sum = 1.0;
    for (int n = 0; n < 100000; ++n) {
        const double num = (a + n) * (b + n);
        if (num == 0.0) return sum;
        const double den = (c + n) * (n + 1.0);
        if (c + n == 0.0) {
            throw std::domain_error("hyp2f1: c = " + std::to_string(c) +
                                    " is a nonpositive integer before the series terminates");
        }
        term *= num / den * x;
        sum += term;
        if (std::abs(num * x) < std::abs(den) && std::abs(term) <= 1e-17 * std::abs(sum)) {
            return sum;
        }
    }
    throw std::domain_error("hyp2f1: series did not converge");
}

double legendre_p(double l, double x) {
    if (!(std::abs(x) < 1.0)) {
        throw std::domain_error("legendre_p: |x| must be < 1, got " + std::to_string(x));
    }
    return hyp2f1(-l, l + 1.0, 1.0, 0.5 * (1.0 - x));
}

double continuum_linear_det_ratio(double b) {
    require_airy_domain(b);
    return airy_odd_series_over_x(b);
}

double rosen_morse_ratio_legendre(double l) {
    const double s = sin_pi(l);
    if (s == 0.0) {
        throw std::domain_error("rosen_morse_ratio_legendre: integer l; use the polynomial form");
    }
    const double pm = legendre_p(l, -kRosenMorseT);
    const double pp = legendre_p(l, kRosenMorseT);
    return -kPi / (2.0 * s) * (pm * pm - pp * pp);
}

double rosen_morse_ratio_integer(long l) {
    if (l < 0) l = -1 - l;
    const double t = kRosenMorseT;
    std::vector<double> p(static_cast<std::size_t>(l) + 1);
    p[0] = 1.0;
    if (l >= 1) p[1] = t;
    for (long m = 1; m < l; ++m) {
        p[m + 1] = ((2.0 * m + 1.0) * t * p[m] - m * p[m - 1]) / (m + 1.0);
    }
    double sum = 0.0;
    for (long m = 1; m <= l; ++m) sum += p[m - 1] * p[l - m] / static_cast<double>(m);
    const double pl = p[l];
    const double value = pl * (pl - 2.0 * sum);
    return l % 2 == 0 ? value : -value;
}

double continuum_rosen_morse_det_ratio(double l) {
    const double n = std::round(l);
    if (std::abs(l - n) < 1e-6) return rosen_morse_ratio_integer(static_cast<long>(n));
    return rosen_morse_ratio_legendre(l);
}

}  // namespace latdet::specfun
