#pragma once

// Lommel polynomials R^{nu,p}(z) (Nielsen's indexing, R^{nu,0} = 1,
// R^{nu,1} = 2(nu+1)/z). The Dirichlet solution of the confined linear
// lattice potential V(j) = B j is y(j) = R^{nu,j-1}(z) with nu = (2-lambda)/B
// and z = 2/B, so R^{nu,p}(z) is the characteristic polynomial of that
// problem at p interior vertices.

#include <vector>

namespace latdet {

struct LommelParams {
    double nu = 0.0;
    int p = 0;
    double z = 1.0;

    /// Order and argument for lattice strength B at eigenvalue parameter lambda.
    static LommelParams from_lattice(double lambda, double strength, int p);
};

/// Residual of an identity together with the magnitude of the terms that
/// produced it; holds(rtol) tests |value| <= rtol * scale.
struct IdentityResidual {
    double value = 0.0;
    double scale = 0.0;

    bool holds(double rtol) const noexcept;
};

/// Explicit sum over s < (p+1)/2 of
///   (-1)^s C(p-s, s) prod_{m=s+1}^{p-s} (nu+m)(2/z),
/// which is the classical (p-s)!/s! C(nu+p-s, p-2s) (2/z)^{p-2s} form with the
/// factorials folded in. Products carry a separate binary exponent so large
/// nu and z do not overflow. The terms alternate and C(p-s, s) grows like a
/// Fibonacci number, so near nu ~ z the sum loses about log10 F(p) digits;
/// past p ~ 30 there use lommel_recurrence(). Requires p >= 0, z != 0.
double lommel_closed(const LommelParams& q);

/// R^{nu,p}(z) for any integer p: the closed sum up to degree 30, the
/// recurrence above it, and for negative degree R^{nu,-1} = 0,
/// R^{nu,-2} = -1 and Graf's reflection R^{nu,-n-1} = -R^{nu-n,n-1}.
double lommel(const LommelParams& q);

/// R^{nu,0..p_max}(z) from the Graf seeds by
///   R^{nu,m+1} = (2(nu+m+1)/z) R^{nu,m} - R^{nu,m-1}.
std::vector<double> lommel_recurrence(double nu, int p_max, double z);

/// J_{-nu} J_{nu+p+1} + (-1)^p J_nu J_{-nu-p-1} + (2 sin(pi nu)/(pi z)) R^{nu,p}.
/// nu must be at least 1e-6 from an integer.
IdentityResidual lommel_bessel_residual(double nu, int p, double z);

struct CasoratianValue {
    double value = 0.0;
    bool fallback = false;  // true when the closed form stood in for the Bessel route
};

/// W(nu, p)/W(nu, 0) with W(nu, p) = J_{-nu} J_{nu+p+1} + (-1)^p J_nu J_{-nu-p-1}.
/// Within 1e-6 of integer nu the ratio is 0/0, so the closed form is returned
/// and flagged.
CasoratianValue normalized_casoratian(double nu, int p, double z);

/// Transitional (order ~ argument) approximation of R^{z,p}(z) where
/// z = 2/(b h)^3, h = 1/(p+1):
///   (1/h) (pi/b) (Ai(0) Bi(b) - Bi(0) Ai(b)),
/// which tends to p+1 as b -> 0.
double lommel_transitional_asymptotic(int p, double b);

/// Argument z = 2/(b h)^3 matched to continuum strength b at p vertices.
double transitional_argument(int p, double b);

}  // namespace latdet
