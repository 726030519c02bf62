#include "bessel_core.hpp"

#include <array>
#include <cmath>

namespace besselcx::detail {

bool is_integer(cplx nu)
{
    return nu.imag() == 0 && nu.real() == std::round(nu.real());
}

double integer_distance(cplx nu)
{
    return std::abs(nu - std::round(nu.real()));
}

lcplx sin_pi(lcplx z)
{
    ld k = std::round(z.real());
    lcplx w = z - k;
    lcplx s = std::sin(pi_l * w);
    return (static_cast<long long>(k) % 2 == 0) ? s : -s;
}

lcplx cos_pi(lcplx z)
{
    ld k = std::round(z.real());
    lcplx w = z - k;
    lcplx c = std::cos(pi_l * w);
    return (static_cast<long long>(k) % 2 == 0) ? c : -c;
}

namespace {

// B_{2k} / (2k (2k-1)) for k = 1..12
constexpr std::array<ld, 12> stirling_coeffs = {
    1.0L / 12,
    -1.0L / 360,
    1.0L / 1260,
    -1.0L / 1680,
    1.0L / 1188,
    -691.0L / 360360,
    1.0L / 156,
    -3617.0L / 122400,
    43867.0L / 244188,
    -174611.0L / 125400,
    77683.0L / 5796,
    -236364091.0L / 1506960,
};

constexpr ld half_log_2pi = 0.918938533204672741780329736405617639861L;

lcplx lgamma_right(lcplx z)
{
    // Shift so that Re w >= 20 and apply the Stirling series.
    int shift = 0;
    if (z.real() < 20)
        shift = static_cast<int>(std::ceil(20 - z.real()));
    lcplx w = z + static_cast<ld>(shift);
    lcplx inv = ld(1) / w;
    lcplx inv2 = inv * inv;
    lcplx sum = 0;
    lcplx p = inv;
    for (ld c : stirling_coeffs) {
        sum += c * p;
        p *= inv2;
    }
    lcplx lg = (w - ld(0.5)) * std::log(w) - w + half_log_2pi + sum;
    if (shift > 0) {
        lcplx prod = 1;
        for (int j = 0; j < shift; ++j)
            prod *= z + static_cast<ld>(j);
        lg -= std::log(prod);
    }
    return lg;
}

} // namespace

lcplx lgamma_l(lcplx z)
{
    if (z.real() >= 0.5L)
        return lgamma_right(z);
    // log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1 - z), up to 2 pi i.
    return std::log(pi_l / sin_pi(z)) - lgamma_right(ld(1) - z);
}

lcplx rgamma_l(lcplx z)
{
    if (z.real() >= 0.5L)
        return std::exp(-lgamma_right(z));
    return sin_pi(z) * std::exp(lgamma_right(ld(1) - z)) / pi_l;
}

lcplx bessel_series(lcplx nu, lcplx rg, ld r, ld angle, int sign, const EvalConfig& cfg)
{
    // (z/2)^nu / Gamma(nu+1) * sum_n (sign z^2/4)^n / (n! (nu+1)_n)
    ld lr = std::log(r / 2);
    lcplx lead = std::exp(nu * lcplx(lr, angle)) * rg;
    lcplx q = std::polar(r * r / 4, 2 * angle) * static_cast<ld>(sign);
    lcplx term = 1;
    lcplx sum = 1;
    ld peak = 1;
    const ld tol = cfg.series_tol;
    for (int n = 0;; ++n) {
        if (n >= cfg.max_terms)
            throw ConvergenceError("bessel series: max_terms exceeded");
        term *= q / (static_cast<ld>(n + 1) * (nu + static_cast<ld>(n + 1)));
        sum += term;
        ld a = std::abs(term);
        if (a > peak)
            peak = a;
        if (static_cast<ld>(n + 1) * (n + 1) > r * r / 4 && (a <= tol * std::abs(sum) || a <= tol * 1e-3L * peak))
            break;
    }
    return lead * sum;
}

lcplx bessel_series_any(cplx nu, ld r, ld angle, int sign, const EvalConfig& cfg)
{
    if (is_integer(nu) && nu.real() < 0) {
        long long n = static_cast<long long>(-nu.real());
        lcplx v = bessel_series(lcplx(static_cast<ld>(n), 0), rgamma_l(lcplx(static_cast<ld>(n + 1), 0)), r, angle,
                                sign, cfg);
        // J_{-n} = (-1)^n J_n, I_{-n} = I_n
        if (sign < 0 && n % 2 == 1)
            v = -v;
        return v;
    }
    lcplx nl = to_l(nu);
    return bessel_series(nl, rgamma_l(nl + ld(1)), r, angle, sign, cfg);
}

HankelPair hankel_expansion(lcplx nu, ld rho, ld psi)
{
    // sum_k a_k(nu) (+-i/zeta)^k, split into even and odd parts.
    lcplx zeta = std::polar(rho, psi);
    lcplx mu4 = ld(4) * nu * nu;
    lcplx c = 1;
    lcplx even = 1, odd = 0;
    lcplx ipow = 1;
    const lcplx iu(0, 1);
    ld prev = 1;
    for (int k = 0; k < 400; ++k) {
        ld odd_sq = static_cast<ld>((2 * k + 1) * (2 * k + 1));
        lcplx next = c * (mu4 - odd_sq) / (ld(8) * static_cast<ld>(k + 1) * zeta);
        ld a = std::abs(next);
        if (a >= prev && k > 0)
            break;
        ipow *= iu;
        if ((k + 1) % 2 == 0)
            even += next * ipow;
        else
            odd += next * ipow;
        c = next;
        prev = a;
        if (a < 1e-21L)
            break;
    }
    lcplx s1 = even + odd;
    lcplx s2 = even - odd;
    lcplx omega = zeta - nu * (pi_l / 2) - pi_l / 4;
    lcplx pref = std::polar(std::sqrt(2 / (pi_l * rho)), -psi / 2);
    lcplx e1 = std::exp(lcplx(0, 1) * omega);
    lcplx e2 = std::exp(lcplx(0, -1) * omega);
    return {pref * e1 * s1, pref * e2 * s2};
}

namespace {

struct Reduced {
    ld psi0;
    int k;
};

Reduced reduce_angle(ld psi)
{
    int k = static_cast<int>(std::lround(psi / pi_l));
    return {psi - k * pi_l, k};
}

// sin(k nu pi) / sin(nu pi) for integer k
lcplx sin_ratio(lcplx nu, int k)
{
    if (k == 0)
        return 0;
    int n = k < 0 ? -k : k;
    lcplx c2 = ld(2) * cos_pi(nu);
    lcplx a = 0, b = 1;
    for (int j = 1; j < n; ++j) {
        lcplx t = c2 * b - a;
        a = b;
        b = t;
    }
    return k < 0 ? -b : b;
}

} // namespace

HankelPair hankel_large(lcplx nu, ld rho, ld psi)
{
    Reduced red = reduce_angle(psi);
    HankelPair h0 = hankel_expansion(nu, rho, red.psi0);
    if (red.k == 0)
        return h0;
    int k = red.k;
    lcplx em = std::exp(lcplx(0, -pi_l) * nu);
    lcplx ep = std::exp(lcplx(0, pi_l) * nu);
    lcplx h1 = -sin_ratio(nu, k - 1) * h0.h1 - em * sin_ratio(nu, k) * h0.h2;
    lcplx h2 = sin_ratio(nu, k + 1) * h0.h2 + ep * sin_ratio(nu, k) * h0.h1;
    return {h1, h2};
}

lcplx bessel_j_large(lcplx nu, ld rho, ld psi)
{
    Reduced red = reduce_angle(psi);
    HankelPair h0 = hankel_expansion(nu, rho, red.psi0);
    lcplx j0 = (h0.h1 + h0.h2) / ld(2);
    if (red.k == 0)
        return j0;
    return std::exp(lcplx(0, pi_l * red.k) * nu) * j0;
}

HankelPair hankel_from_series(cplx nu, ld r, ld angle, const EvalConfig& cfg)
{
    lcplx nl = to_l(nu);
    lcplx jp = bessel_series_any(nu, r, angle, -1, cfg);
    lcplx jm = bessel_series_any(-nu, r, angle, -1, cfg);
    lcplx s = sin_pi(nl);
    const lcplx iu(0, 1);
    lcplx h1 = (jm - std::exp(-iu * pi_l * nl) * jp) / (iu * s);
    lcplx h2 = (jm - std::exp(iu * pi_l * nl) * jp) / (-iu * s);
    return {h1, h2};
}

void check_angle(double angle)
{
    if (!(std::abs(angle) <= 8 * pi))
        throw BranchError("argument angle exceeds 8 pi in magnitude");
}

} // namespace besselcx::detail
