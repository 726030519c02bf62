#pragma once

#include <besselcx/complex_bessel.hpp>
#include <besselcx/types.hpp>

#include <functional>
#include <vector>

namespace besselcx {

/// Algebraic behaviour |x - endpoint|^exponent declared for each end of the
/// interval. Exponents must exceed -1.
struct EndpointExponents {
    double left = 0;
    double right = 0;
};

/// Tanh-sinh quadrature on (a, b) with level doubling.
QuadratureResult integrate_de(const std::function<cplx(double)>& f, double a, double b, EndpointExponents ex = {},
                              double tol = 1e-12);
/// Exp-sinh quadrature on (0, inf); only the left exponent is used.
QuadratureResult integrate_de(const std::function<cplx(double)>& f, EndpointExponents ex = {}, double tol = 1e-12);

/// Trapezoid rule over [0, 2 pi] with node doubling.
QuadratureResult integrate_periodic(const std::function<cplx(double)>& f, double tol = 1e-13, int max_nodes = 1 << 16);

/// int_0^{2pi} int_0^inf J_{mu,m}(x e^{i phi}) exp(-2 pi c x) dx dphi.
QuadratureResult radial_bessel_integral(OrderPair order, cplx c, const EvalConfig& cfg = {});

/// The raw epsilon sequence behind a regularized integral.
struct RegularizedIntegral {
    std::vector<double> epsilons;
    std::vector<cplx> values;
    cplx value;
    double regularization_error = 0;
    double quadrature_error = 0;
    long evaluations = 0;

    GFValue gf() const { return {value, regularization_error}; }
};

/// Polynomial extrapolation to eps = 0 through the last order + 1 points; the
/// error is the spread between the last two windows. A single point is
/// returned unchanged.
GFValue extrapolate_to_zero(const std::vector<double>& eps, const std::vector<cplx>& values, int order);

/// int_0^{2pi} int_0^inf J_{mu,m}(x e^{i phi}) e(-Tr(x e^{i phi} u)) e^{-eps x} dx dphi
/// for each eps of the list (eps = 0 allowed).
RegularizedIntegral plane_fourier_integral(const BoldJKernel& kernel, cplx u, const std::vector<double>& epsilons,
                                           int extrapolation_order = 2);

/// The left side of the main identity at u = y e^{i theta}, extrapolated to eps = 0.
RegularizedIntegral oscillatory_fourier_integral_detail(OrderPair order, double y, double theta,
                                                        const RegularizationSchedule& schedule = {},
                                                        const EvalConfig& cfg = {});
GFValue oscillatory_fourier_integral(OrderPair order, double y, double theta,
                                     const RegularizationSchedule& schedule = {}, const EvalConfig& cfg = {});

/// int_0^inf J_nu(x y) e^{-c x^2} x dx.
QuadratureResult j_exp_gauss_integral(cplx nu, double y, cplx c, const EvalConfig& cfg = {});
/// Closed form of the same integral through Kummer's function.
cplx j_exp_gauss_closed_form(cplx nu, double y, cplx c, const EvalConfig& cfg = {});

/// Gamma(b) / (Gamma(b - a) Gamma(a)) int_0^1 e^{zv} v^{a-1} (1-v)^{b-a-1} dv.
QuadratureResult kummer_via_integral(cplx a, cplx b, cplx z, const EvalConfig& cfg = {});

/// int_0^inf x^{-1/2} J_nu(4 pi sqrt x) e(sign x y) dx, regularized by e^{-eps x}.
RegularizedIntegral weber_integral(cplx nu, double y, int sign, const RegularizationSchedule& schedule = {},
                                   const EvalConfig& cfg = {});
/// (1/sqrt(2y)) e(-sign (1/(2y) - nu/8 - 1/8)) J_{nu/2}(pi/y).
cplx weber_closed_form(cplx nu, double y, int sign, const EvalConfig& cfg = {});

/// Both sides of the integrated identity against f(u) = exp(-pi |u/sigma|^2):
///   lhs = int int J_{mu,m}(x e^{i phi}) (fhat(x e^{i phi}) / 2) dx dphi,
///   rhs = (1/4) int int e(cos theta / y) J_{mu/2,m/2}(1/(16 y^2 e^{2i theta})) f(y e^{i theta}) dy dtheta.
QuadratureResult corollary_lhs(OrderPair order, double sigma, const EvalConfig& cfg = {});
QuadratureResult corollary_rhs(OrderPair order, double sigma, const EvalConfig& cfg = {});
/// fhat(z) / 2 for the Gaussian above, closed form sigma^2 exp(-4 pi sigma^2 |z|^2).
cplx gaussian_half_transform(double sigma, cplx z);

} // namespace besselcx
