#pragma once

// Real special functions for the continuum reference values. Everything is
// evaluated from power series or a fixed Lanczos approximation; domains are
// limited to the moderate arguments the lattice comparisons need and calls
// outside them throw std::domain_error.

namespace latdet::specfun {

/// tanh(1/2), the Legendre argument of the boxed Rosen-Morse problem.
inline constexpr double kRosenMorseT = 0.46211715726000975850;

/// sin(pi x) and cos(pi x) with argument reduction about the nearest integer,
/// so that integer x gives exact zeros.
double sin_pi(double x) noexcept;
double cos_pi(double x) noexcept;

/// Gamma function, Lanczos (g = 7, 9 terms) with reflection below 1/2.
/// Throws std::domain_error at the poles 0, -1, -2, ...
double gamma(double x);

/// 1/Gamma(x); zero at the poles instead of throwing.
double reciprocal_gamma(double x) noexcept;

/// Bessel function of the first kind by its ascending series, for
/// 0 < z <= 40 and |nu| <= 40. The series alternates, so the absolute error
/// is about machine epsilon times the largest term, roughly exp(z)/sqrt(z).
double bessel_j(double nu, double z);

/// Weber-Schlafli second solution (cos(nu pi) J_nu - J_{-nu}) / sin(nu pi).
/// Integer orders are not supported: |nu - round(nu)| < 1e-6 throws.
double bessel_y(double nu, double z);

struct AiryPair {
    double ai = 0.0;
    double bi = 0.0;
    double ai_prime = 0.0;
    double bi_prime = 0.0;
};

/// Ai, Bi and their derivatives from the two Maclaurin solutions of
/// w'' = x w, for |x| <= 8. Ai(x) for large positive x is the difference
/// of two growing series and keeps only absolute accuracy there.
AiryPair airy(double x);

/// The solution of w'' = x w with w(0) = 0, w'(0) = 1, i.e.
/// pi (Ai(0) Bi(x) - Bi(0) Ai(x)), summed as its own odd series.
double airy_dirichlet_solution(double x);

/// Gauss hypergeometric series 2F1(a, b; c; x) for |x| < 1. Terminates when
/// a or b is a nonpositive integer.
double hyp2f1(double a, double b, double c, double x);

/// Legendre function of the first kind P_l(x) = 2F1(-l, l+1; 1; (1-x)/2),
/// |x| < 1.
double legendre_p(double l, double x);

/// Gel'fand-Yaglom ratio det(-d^2 + b^3 x)/det(-d^2) on [0, 1] with
/// Dirichlet ends: (pi/b)(Ai(0) Bi(b) - Bi(0) Ai(b)), equal to 1 at b = 0.
/// |b| <= 8.
double continuum_linear_det_ratio(double b);

/// Continuum determinant ratio for -l(l+1)/cosh^2 x on [-1/2, 1/2].
/// Uses the integer-l polynomial form when l is within 1e-6 of an integer
/// and the Legendre-function form otherwise.
double continuum_rosen_morse_det_ratio(double l);

/// Legendre-function form -(pi / (2 sin(pi l))) (P_l(-t)^2 - P_l(t)^2),
/// singular (0/0) at integer l.
double rosen_morse_ratio_legendre(double l);

/// Integer-l form (-1)^l P_l (P_l - 2 sum_{m=1}^{l} P_{m-1} P_{l-m} / m),
/// all at t = tanh(1/2). Negative l are mapped by l -> -1-l.
double rosen_morse_ratio_integer(long l);

}  // namespace latdet::specfun
