#pragma once
// Extended-precision kernels shared by the special-function and complex-Bessel
// layers. Not part of the installed interface.

#include <besselcx/types.hpp>

#include <complex>

namespace besselcx::detail {

using ld = long double;
using lcplx = std::complex<long double>;

inline constexpr ld pi_l = 3.141592653589793238462643383279502884L;

inline lcplx to_l(cplx z) { return {static_cast<ld>(z.real()), static_cast<ld>(z.imag())}; }
inline cplx to_d(lcplx z) { return {static_cast<double>(z.real()), static_cast<double>(z.imag())}; }

/// True when nu is exactly an integer.
bool is_integer(cplx nu);
/// Distance from nu to the nearest integer.
double integer_distance(cplx nu);

/// sin(pi z) with exact zeros at the integers.
lcplx sin_pi(lcplx z);
lcplx cos_pi(lcplx z);

lcplx lgamma_l(lcplx z);
/// 1/Gamma(z), entire.
lcplx rgamma_l(lcplx z);

/// Power series of J_nu (sign = -1) or I_nu (sign = +1) at z = (r, angle).
/// rg must equal 1/Gamma(nu + 1). nu must not be a negative integer.
lcplx bessel_series(lcplx nu, lcplx rg, ld r, ld angle, int sign, const EvalConfig& cfg);

/// J_nu or I_nu by series, handling negative integer orders by reflection.
lcplx bessel_series_any(cplx nu, ld r, ld angle, int sign, const EvalConfig& cfg);

struct HankelPair {
    lcplx h1;
    lcplx h2;
};

/// Optimally truncated Hankel expansions at zeta = (rho, psi), |psi| <= pi/2.
HankelPair hankel_expansion(lcplx nu, ld rho, ld psi);

/// Hankel functions for rho in the asymptotic regime and any angle, reduced
/// to |psi| <= pi/2 by the continuation formulas.
HankelPair hankel_large(lcplx nu, ld rho, ld psi);

/// J_nu in the asymptotic regime, any angle.
lcplx bessel_j_large(lcplx nu, ld rho, ld psi);

/// Hankel functions from the connection formulas (nu not an integer).
HankelPair hankel_from_series(cplx nu, ld r, ld angle, const EvalConfig& cfg);

void check_angle(double angle);

} // namespace besselcx::detail
