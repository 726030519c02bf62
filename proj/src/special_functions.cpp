#include <besselcx/special_functions.hpp>

#include "bessel_core.hpp"

#include <cmath>

namespace besselcx {

using namespace detail;

namespace {

bool near_integer(cplx nu)
{
    return integer_distance(nu) < 1e-8 * std::max(1.0, std::abs(nu));
}

void check_point(PolarPoint z)
{
    if (!(z.radius > 0))
        throw DomainError("radius must be positive");
    check_angle(z.angle);
}

const lcplx iu_l(0, 1);

} // namespace

cplx gamma(cplx z)
{
    if (is_integer(z) && z.real() <= 0)
        throw PoleError("gamma: pole at nonpositive integer");
    lcplx zl = to_l(z);
    lcplx g;
    if (zl.real() >= 0.5L)
        g = std::exp(lgamma_l(zl));
    else
        g = pi_l / (sin_pi(zl) * std::exp(lgamma_l(ld(1) - zl)));
    return checked(to_d(g), "gamma");
}

cplx rgamma(cplx z) { return checked(to_d(rgamma_l(to_l(z))), "rgamma"); }

double switch_radius(cplx nu, const EvalConfig& cfg)
{
    double a = std::abs(nu);
    return std::max(12.0, cfg.switch_radius_factor * a * a);
}

cplx bessel_j_series(cplx nu, PolarPoint z, const EvalConfig& cfg)
{
    check_point(z);
    return checked(to_d(bessel_series_any(nu, z.radius, z.angle, -1, cfg)), "bessel_j");
}

cplx bessel_j_large_argument(cplx nu, PolarPoint z, const EvalConfig&)
{
    check_point(z);
    return checked(to_d(bessel_j_large(to_l(nu), z.radius, z.angle)), "bessel_j");
}

cplx bessel_j(cplx nu, PolarPoint z, const EvalConfig& cfg)
{
    check_point(z);
    if (z.radius <= switch_radius(nu, cfg))
        return bessel_j_series(nu, z, cfg);
    return bessel_j_large_argument(nu, z, cfg);
}

namespace {

HankelPair hankel_both(cplx nu, PolarPoint z, const EvalConfig& cfg)
{
    check_point(z);
    if (z.radius > switch_radius(nu, cfg))
        return hankel_large(to_l(nu), z.radius, z.angle);
    if (near_integer(nu)) {
        cplx h1 = order_limit(nu, [&](cplx n) { return to_d(hankel_from_series(n, z.radius, z.angle, cfg).h1); });
        cplx h2 = order_limit(nu, [&](cplx n) { return to_d(hankel_from_series(n, z.radius, z.angle, cfg).h2); });
        return {to_l(h1), to_l(h2)};
    }
    return hankel_from_series(nu, z.radius, z.angle, cfg);
}

} // namespace

cplx hankel_h1(cplx nu, PolarPoint z, const EvalConfig& cfg)
{
    return checked(to_d(hankel_both(nu, z, cfg).h1), "hankel_h1");
}

cplx hankel_h2(cplx nu, PolarPoint z, const EvalConfig& cfg)
{
    return checked(to_d(hankel_both(nu, z, cfg).h2), "hankel_h2");
}

cplx bessel_i(cplx nu, PolarPoint z, const EvalConfig& cfg)
{
    check_point(z);
    if (z.radius <= switch_radius(nu, cfg))
        return checked(to_d(bessel_series_any(nu, z.radius, z.angle, 1, cfg)), "bessel_i");
    lcplx nl = to_l(nu);
    lcplx j = bessel_j_large(nl, z.radius, static_cast<ld>(z.angle) + pi_l / 2);
    return checked(to_d(std::exp(-iu_l * pi_l * nl / ld(2)) * j), "bessel_i");
}

namespace {

lcplx bessel_k_series(cplx nu, PolarPoint z, const EvalConfig& cfg)
{
    lcplx ip = bessel_series_any(nu, z.radius, z.angle, 1, cfg);
    lcplx im = bessel_series_any(-nu, z.radius, z.angle, 1, cfg);
    return pi_l / ld(2) * (im - ip) / sin_pi(to_l(nu));
}

} // namespace

cplx bessel_k(cplx nu, PolarPoint z, const EvalConfig& cfg)
{
    check_point(z);
    if (z.radius <= switch_radius(nu, cfg)) {
        if (near_integer(nu))
            return order_limit(nu, [&](cplx n) { return to_d(bessel_k_series(n, z, cfg)); });
        return checked(to_d(bessel_k_series(nu, z, cfg)), "bessel_k");
    }
    lcplx nl = to_l(nu);
    HankelPair h = hankel_large(nl, z.radius, static_cast<ld>(z.angle) + pi_l / 2);
    lcplx k = iu_l * pi_l / ld(2) * std::exp(iu_l * pi_l * nl / ld(2)) * h.h1;
    return checked(to_d(k), "bessel_k");
}

namespace {

template <class F>
cplx derivative_sum(cplx nu, int n, double base, F&& f)
{
    if (n < 0 || n > 32)
        throw DomainError("derivative order must lie in [0, 32]");
    cplx sum = 0;
    double c = 1;
    for (int r = 0; r <= n; ++r) {
        sum += c * f(nu + double(n - 2 * r));
        c = c * (n - r) / (r + 1);
    }
    return sum / std::pow(base, n);
}

} // namespace

cplx bessel_i_derivative(cplx nu, int n, PolarPoint z, const EvalConfig& cfg)
{
    return derivative_sum(nu, n, 2.0, [&](cplx v) { return bessel_i(v, z, cfg); });
}

cplx bessel_k_derivative(cplx nu, int n, PolarPoint z, const EvalConfig& cfg)
{
    return derivative_sum(nu, n, -2.0, [&](cplx v) { return bessel_k(v, z, cfg); });
}

namespace {

lcplx kummer_series(lcplx a, lcplx b, lcplx z, const EvalConfig& cfg)
{
    lcplx term = 1, sum = 1;
    ld peak = 1;
    ld az = std::abs(z);
    for (int n = 0;; ++n) {
        if (n >= cfg.max_terms)
            throw ConvergenceError("kummer_m: max_terms exceeded");
        term *= (a + ld(n)) * z / ((b + ld(n)) * ld(n + 1));
        sum += term;
        ld t = std::abs(term);
        if (t > peak)
            peak = t;
        if (t == 0)
            break;
        if (ld(n + 1) > az && (t <= cfg.series_tol * std::abs(sum) || t <= cfg.series_tol * 1e-3L * peak))
            break;
    }
    return sum;
}

} // namespace

cplx kummer_m(cplx a, cplx b, cplx z, const EvalConfig& cfg)
{
    if (is_integer(b) && b.real() <= 0)
        throw DomainError("kummer_m: b must not be a nonpositive integer");
    lcplx al = to_l(a), bl = to_l(b), zl = to_l(z);
    lcplx v;
    if (zl.real() < 0)
        v = std::exp(zl) * kummer_series(bl - al, bl, -zl, cfg);
    else
        v = kummer_series(al, bl, zl, cfg);
    return checked(to_d(v), "kummer_m");
}

namespace {

void require_sector(double angle, double lo, double hi, const char* what)
{
    if (!(angle > lo && angle < hi))
        throw BranchError(std::string(what) + ": argument outside the validity sector");
}

cplx sqrt_of(PolarPoint z) { return std::polar(std::sqrt(z.radius), z.angle / 2); }

} // namespace

AsymptoticValue hankel_h1_asymptotic(cplx nu, PolarPoint z)
{
    require_sector(z.angle, -pi, 2 * pi, "hankel_h1_asymptotic");
    cplx zz = z.value();
    cplx a1 = (4.0 * nu * nu - 1.0) / 8.0;
    cplx a2 = (4.0 * nu * nu - 1.0) * (4.0 * nu * nu - 9.0) / 128.0;
    cplx omega = zz - nu * pi / 2.0 - pi / 4;
    cplx lead = std::sqrt(2 / pi) / sqrt_of(z) * std::exp(cplx(0, 1) * omega);
    return {lead, lead * (1.0 + cplx(0, 1) * a1 / zz), std::abs(a2) / (z.radius * z.radius)};
}

AsymptoticValue hankel_h2_asymptotic(cplx nu, PolarPoint z)
{
    require_sector(z.angle, -2 * pi, pi, "hankel_h2_asymptotic");
    cplx zz = z.value();
    cplx a1 = (4.0 * nu * nu - 1.0) / 8.0;
    cplx a2 = (4.0 * nu * nu - 1.0) * (4.0 * nu * nu - 9.0) / 128.0;
    cplx omega = zz - nu * pi / 2.0 - pi / 4;
    cplx lead = std::sqrt(2 / pi) / sqrt_of(z) * std::exp(cplx(0, -1) * omega);
    return {lead, lead * (1.0 - cplx(0, 1) * a1 / zz), std::abs(a2) / (z.radius * z.radius)};
}

AsymptoticValue bessel_j_asymptotic(cplx nu, PolarPoint z)
{
    require_sector(z.angle, -pi, pi, "bessel_j_asymptotic");
    cplx zz = z.value();
    cplx a1 = (4.0 * nu * nu - 1.0) / 8.0;
    cplx a2 = (4.0 * nu * nu - 1.0) * (4.0 * nu * nu - 9.0) / 128.0;
    cplx omega = zz - nu * pi / 2.0 - pi / 4;
    cplx pref = std::sqrt(2 / pi) / sqrt_of(z);
    cplx lead = pref * std::cos(omega);
    return {lead, pref * (std::cos(omega) - std::sin(omega) * a1 / zz), std::abs(a2) / (z.radius * z.radius)};
}

AsymptoticValue bessel_i_asymptotic(cplx nu, PolarPoint z)
{
    require_sector(z.angle, -pi / 2, pi / 2, "bessel_i_asymptotic");
    cplx zz = z.value();
    cplx a1 = (4.0 * nu * nu - 1.0) / 8.0;
    cplx a2 = (4.0 * nu * nu - 1.0) * (4.0 * nu * nu - 9.0) / 128.0;
    cplx lead = std::exp(zz) / (std::sqrt(2 * pi) * sqrt_of(z));
    return {lead, lead * (1.0 - a1 / zz), std::abs(a2) / (z.radius * z.radius)};
}

AsymptoticValue bessel_k_asymptotic(cplx nu, PolarPoint z)
{
    require_sector(z.angle, -1.5 * pi, 1.5 * pi, "bessel_k_asymptotic");
    cplx zz = z.value();
    cplx a1 = (4.0 * nu * nu - 1.0) / 8.0;
    cplx a2 = (4.0 * nu * nu - 1.0) * (4.0 * nu * nu - 9.0) / 128.0;
    cplx lead = std::sqrt(pi / 2) / sqrt_of(z) * std::exp(-zz);
    return {lead, lead * (1.0 + a1 / zz), std::abs(a2) / (z.radius * z.radius)};
}

} // namespace besselcx
