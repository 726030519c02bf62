#pragma once

#include <besselcx/types.hpp>

#include <algorithm>

namespace besselcx {

cplx gamma(cplx z);
/// 1/Gamma(z); entire, zero at the poles of Gamma.
cplx rgamma(cplx z);

/// Radius below which the power series is used for order nu.
double switch_radius(cplx nu, const EvalConfig& cfg = {});

cplx bessel_j(cplx nu, PolarPoint z, const EvalConfig& cfg = {});
cplx bessel_j_series(cplx nu, PolarPoint z, const EvalConfig& cfg = {});
/// Optimally truncated Hankel expansion; any radius, accurate when large.
cplx bessel_j_large_argument(cplx nu, PolarPoint z, const EvalConfig& cfg = {});

cplx hankel_h1(cplx nu, PolarPoint z, const EvalConfig& cfg = {});
cplx hankel_h2(cplx nu, PolarPoint z, const EvalConfig& cfg = {});

cplx bessel_i(cplx nu, PolarPoint z, const EvalConfig& cfg = {});
cplx bessel_k(cplx nu, PolarPoint z, const EvalConfig& cfg = {});

/// n-th derivative in z, from the sum over I_{nu+n-2r}. n <= 32.
cplx bessel_i_derivative(cplx nu, int n, PolarPoint z, const EvalConfig& cfg = {});
cplx bessel_k_derivative(cplx nu, int n, PolarPoint z, const EvalConfig& cfg = {});

cplx kummer_m(cplx a, cplx b, cplx z, const EvalConfig& cfg = {});

/// Truncated large-argument forms. `leading` is the first term alone,
/// `value` adds the first correction and `error_estimate` is the relative
/// size of the next term.
struct AsymptoticValue {
    cplx leading;
    cplx value;
    double error_estimate;
};

AsymptoticValue hankel_h1_asymptotic(cplx nu, PolarPoint z);
AsymptoticValue hankel_h2_asymptotic(cplx nu, PolarPoint z);
AsymptoticValue bessel_j_asymptotic(cplx nu, PolarPoint z);
AsymptoticValue bessel_i_asymptotic(cplx nu, PolarPoint z);
AsymptoticValue bessel_k_asymptotic(cplx nu, PolarPoint z);

/// Average of f(nu + eps) and f(nu - eps), eps = 1e-5 max(1, |nu|).
/// Used wherever a sin or cos denominator vanishes.
template <class F>
cplx order_limit(cplx nu, F&& f)
{
    double eps = 1e-5 * std::max(1.0, std::abs(nu));
    cplx a = f(nu + eps);
    cplx b = f(nu - eps);
    cplx v = (a + b) / 2.0;
    if (!is_finite(v))
        throw LimitError("order limit: non-finite value");
    return v;
}

} // namespace besselcx
