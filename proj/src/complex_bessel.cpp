#include <besselcx/complex_bessel.hpp>
#include <besselcx/special_functions.hpp>

#include "bessel_core.hpp"
#include "quad_rules.hpp"

#include <cmath>

namespace besselcx {

using namespace detail;

double OrderPair::nongeneric_distance() const
{
    cplx t = (4.0 * mu - double(m)) / 2.0;
    return integer_distance(t);
}

OrderPair OrderPair::normalized() const
{
    bool flip = m < 0 || (m == 0 && (mu.real() < 0 || (mu.real() == 0 && mu.imag() < 0)));
    return flip ? negated() : *this;
}

NormalizedDirection NormalizedDirection::from(cplx w)
{
    if (w == 0.0)
        throw DomainError("NormalizedDirection: w must be nonzero");
    cplx s = w + 1.0 / w;
    double y = std::abs(s);
    if (!(y > 1e-300))
        throw DomainError("NormalizedDirection: w + 1/w vanishes");
    return {y, s / y};
}

namespace {

constexpr double nongeneric_threshold = 1e-8;
constexpr double angular_series_radius = 2;

double limit_step(cplx mu) { return 1e-5 * std::max(1.0, std::abs(mu)); }

// The J form of the kernel cancels like e^{2 r} against an O(1) result, so it
// hands off to the Hankel product as soon as the Hankel series is usable.
double kernel_switch_radius(lcplx nu) { return std::max(12.0, 0.25 * double(std::norm(nu))); }

} // namespace

struct BoldJKernel::Impl {
    lcplx a, b;
    bool odd;
    lcplx rg_a, rg_b, rg_ma, rg_mb;
    lcplx pre;
    lcplx c1, c2;
    lcplx sa, sb;
    lcplx ea, eb;
    ld R;
    EvalConfig cfg;

    Impl(OrderPair o, const EvalConfig& c) : cfg(c)
    {
        lcplx mu = to_l(o.mu);
        // b - a must be exactly m: the two products cancel to O(1)
        a = ld(-2) * mu - ld(o.m) / ld(2);
        b = ld(-2) * mu + ld(o.m) / ld(2);
        odd = (o.m % 2) != 0;
        rg_a = rgamma_l(a + ld(1));
        rg_b = rgamma_l(b + ld(1));
        rg_ma = rgamma_l(-a + ld(1));
        rg_mb = rgamma_l(-b + ld(1));
        const lcplx iu(0, 1);
        const ld pp = pi_l * pi_l;
        pre = odd ? ld(2) * pp * iu / cos_pi(ld(2) * mu) : ld(2) * pp / sin_pi(ld(2) * mu);
        lcplx e = std::exp(ld(2) * pi_l * iu * mu);
        c1 = pp * iu * e;
        c2 = pp * iu * (o.m % 2 == 0 ? ld(-1) : ld(1)) / e;
        sa = sin_pi(a);
        sb = sin_pi(b);
        ea = std::exp(iu * pi_l * a);
        eb = std::exp(iu * pi_l * b);
        R = std::max(kernel_switch_radius(a), kernel_switch_radius(b));
    }

    lcplx jser(lcplx nu, lcplx rg, ld r, ld t) const { return bessel_series(nu, rg, r, t, -1, cfg); }

    // H^(1), H^(2) of order -nu at (r, t); s = sin(pi nu), e = e^{i pi nu}
    HankelPair hankel(lcplx nu, lcplx rg, lcplx rgm, lcplx s, lcplx e, ld r, ld t) const
    {
        if (r > R)
            return hankel_large(-nu, r, t);
        const lcplx iu(0, 1);
        lcplx jp = jser(nu, rg, r, t);
        lcplx jm = jser(-nu, rgm, r, t);
        return {(jp - e * jm) / (-iu * s), (jp - jm / e) / (iu * s)};
    }

    lcplx eval(ld r1, ld t1, ld r2, ld t2) const
    {
        if (std::max(r1, r2) <= R) {
            lcplx p = jser(a, rg_a, r1, t1) * jser(b, rg_b, r2, t2);
            lcplx q = jser(-a, rg_ma, r1, t1) * jser(-b, rg_mb, r2, t2);
            return pre * (odd ? p + q : p - q);
        }
        HankelPair h1 = hankel(a, rg_a, rg_ma, sa, ea, r1, t1);
        HankelPair h2 = hankel(b, rg_b, rg_mb, sb, eb, r2, t2);
        return c1 * h1.h1 * h2.h1 + c2 * h1.h2 * h2.h2;
    }

    // Angular integral of J_u(zeta) J_v(conj zeta) over arg zeta in [0, pi),
    // times 2: only the terms with j - k = (u - v)/2 survive.
    lcplx pair_average(lcplx u, lcplx rgu, lcplx v, lcplx rgv, int shift, ld rho) const
    {
        ld X = rho * rho / 4;
        // c_j(u) = (-1)^j / (j! Gamma(u + j + 1)), advanced to j = shift
        lcplx cu = rgu, cv = rgv;
        for (int j = 0; j < shift; ++j)
            cu *= ld(-1) / (ld(j + 1) * (u + ld(j + 1)));
        for (int j = 0; j < -shift; ++j)
            cv *= ld(-1) / (ld(j + 1) * (v + ld(j + 1)));
        int ju = std::max(shift, 0), jv = std::max(-shift, 0);
        lcplx sum = 0;
        ld xp = std::pow(X, ld(ju + jv));
        ld peak = 0;
        for (int n = 0; n < cfg.max_terms; ++n) {
            lcplx t = cu * cv * xp;
            sum += t;
            peak = std::max(peak, std::abs(t));
            if (n > 2 && std::abs(t) <= ld(1e-21) * peak)
                return ld(2) * pi_l * std::exp((u + v) * std::log(rho / 2)) * sum;
            cu *= ld(-1) / (ld(ju + n + 1) * (u + ld(ju + n + 1)));
            cv *= ld(-1) / (ld(jv + n + 1) * (v + ld(jv + n + 1)));
            xp *= X * X;
        }
        throw ConvergenceError("angular series: max_terms exceeded");
    }

    lcplx angular_series(ld rho, int m) const
    {
        lcplx p = pair_average(a, rg_a, b, rg_b, m / 2, rho);
        lcplx q = pair_average(-a, rg_ma, -b, rg_mb, -m / 2, rho);
        return pre * (p - q);
    }
};

BoldJKernel::BoldJKernel(OrderPair order, const EvalConfig& cfg) : order_(order)
{
    cfg.validate();
    if (!is_finite(order.mu))
        throw DomainError("BoldJKernel: mu must be finite");
    if (order.nongeneric_distance() < nongeneric_threshold) {
        double eps = limit_step(order.mu);
        plus_ = std::make_unique<Impl>(OrderPair{order.mu + eps, order.m}, cfg);
        minus_ = std::make_unique<Impl>(OrderPair{order.mu - eps, order.m}, cfg);
    } else {
        generic_ = std::make_unique<Impl>(order, cfg);
    }
}

BoldJKernel::~BoldJKernel() = default;
BoldJKernel::BoldJKernel(BoldJKernel&&) noexcept = default;
BoldJKernel& BoldJKernel::operator=(BoldJKernel&&) noexcept = default;

cplx BoldJKernel::operator()(PolarPoint z1, PolarPoint z2) const
{
    check_angle(z1.angle);
    check_angle(z2.angle);
    ld r1 = z1.radius, t1 = z1.angle, r2 = z2.radius, t2 = z2.angle;
    if (generic_)
        return checked(to_d(generic_->eval(r1, t1, r2, t2)), "bold_j");
    cplx v = to_d((plus_->eval(r1, t1, r2, t2) + minus_->eval(r1, t1, r2, t2)) / ld(2));
    if (!is_finite(v))
        throw LimitError("bold_j: nongeneric limit failed");
    return v;
}

cplx BoldJKernel::at(PolarPoint z) const
{
    if (order_.m % 2 != 0)
        throw DomainError("bold_j: m must be even (use bold_j_sq for odd m)");
    PolarPoint p = z.principal();
    PolarPoint zeta(4 * pi * std::sqrt(p.radius), p.angle / 2);
    return (*this)(zeta, zeta.conj());
}

QuadratureResult BoldJKernel::angular_integral(double x, double tol) const
{
    if (order_.m % 2 != 0)
        throw DomainError("angular_integral: m must be even");
    if (!(x > 0))
        throw DomainError("angular_integral: x must be positive");
    double rho = 4 * pi * std::sqrt(x);
    if (rho > angular_series_radius) {
        auto f = [&](double phi) { return at(PolarPoint(x, phi)); };
        return trapezoid_periodic(f, tol, 1 << 14);
    }
    QuadratureResult r;
    if (generic_) {
        r.value = to_d(generic_->angular_series(rho, order_.m));
    } else {
        r.value = to_d((plus_->angular_series(rho, order_.m) + minus_->angular_series(rho, order_.m)) / ld(2));
    }
    r.value = checked(r.value, "angular_integral");
    r.evaluations = 1;
    return r;
}

cplx BoldJKernel::at_square(PolarPoint w) const
{
    PolarPoint zeta(4 * pi * w.radius, w.angle);
    return (*this)(zeta, zeta.conj());
}

cplx j_pair(OrderPair order, PolarPoint z, const EvalConfig& cfg)
{
    cplx v = bessel_j(order.order_a(), z, cfg) * bessel_j(order.order_b(), z.conj(), cfg);
    return checked(v, "j_pair");
}

cplx bold_j(OrderPair order, PolarPoint z, const EvalConfig& cfg)
{
    return bold_j_raw(order.normalized(), z, cfg);
}

cplx bold_j_raw(OrderPair order, PolarPoint z, const EvalConfig& cfg)
{
    if (order.m % 2 != 0)
        throw DomainError("bold_j: m must be even (use bold_j_sq for odd m)");
    return BoldJKernel(order, cfg).at(z);
}

cplx bold_j_sq(OrderPair order, PolarPoint w, const EvalConfig& cfg)
{
    OrderPair o = order.normalized();
    PolarPoint p = w.principal();
    double sign = 1;
    // J(w^2) = (-1)^m J((-w)^2) with the angle of -w taken as angle -+ pi
    if (std::abs(p.angle) > pi / 2) {
        p = p.rotated(p.angle > 0 ? -pi : pi);
        if (o.m % 2 != 0)
            sign = -1;
    }
    return sign * BoldJKernel(o, cfg).at_square(p);
}

cplx h_pair(int kind, OrderPair order, PolarPoint z, const EvalConfig& cfg)
{
    if (kind != 1 && kind != 2)
        throw DomainError("h_pair: kind must be 1 or 2");
    cplx n1 = -order.order_a();
    cplx n2 = -order.order_b();
    cplx v = kind == 1 ? hankel_h1(n1, z, cfg) * hankel_h1(n2, z.conj(), cfg)
                       : hankel_h2(n1, z, cfg) * hankel_h2(n2, z.conj(), cfg);
    return checked(v, "h_pair");
}

BoldAsymptotic bold_j_asymptotic(OrderPair order, PolarPoint z)
{
    if (!(z.radius >= 10))
        throw DomainError("bold_j_asymptotic: |z| must be at least 10");
    PolarPoint p = z.principal();
    cplx sz = std::polar(std::sqrt(p.radius), p.angle / 2);
    cplx szb = std::conj(sz);
    cplx n1 = -order.order_a(), n2 = -order.order_b();
    cplx k1 = (1.0 - 4.0 * n1 * n1) / (cplx(0, 8) * 4.0 * pi * sz);
    cplx k2 = (1.0 - 4.0 * n2 * n2) / (cplx(0, 8) * 4.0 * pi * szb);
    double amp = 1 / (2 * std::sqrt(p.radius));
    cplx phase = e2pi(2.0 * (sz + szb));
    double sgn = order.m % 2 == 0 ? 1 : -1;
    cplx v = amp * (phase * (1.0 + k1 + k2) + sgn / phase * (1.0 - k1 - k2));
    auto a1 = [](cplx n) { return std::abs((4.0 * n * n - 1.0) / 8.0); };
    auto a2 = [](cplx n) { return std::abs((4.0 * n * n - 1.0) * (4.0 * n * n - 9.0) / 128.0); };
    double next = (a2(n1) + a2(n2) + a1(n1) * a1(n2)) / (16 * pi * pi * p.radius);
    return {v, 2 * amp * next};
}

cplx bold_j_integral_rep(OrderPair order, double x, double phi, const EvalConfig& cfg)
{
    if (!(std::abs(order.mu.real()) < 0.125))
        throw DomainError("bold_j_integral_rep: requires |Re mu| < 1/8");
    if (order.m % 2 != 0)
        throw DomainError("bold_j_integral_rep: m must be even");
    if (!(x > 0) || !std::isfinite(phi))
        throw DomainError("bold_j_integral_rep: x must be positive");
    const int m = order.m;
    const cplx mu = order.mu;
    const double c = 4 * pi * std::sqrt(x);
    const double alpha = phi / 2;
    const cplx ea = std::polar(1.0, alpha);
    const double cos2 = 4 * std::cos(alpha) * std::cos(alpha);
    // both halves y = t and y = 1/t, without the Bessel factor
    auto weight = [&](cplx t, cplx Y) {
        cplx lt = std::log(t);
        cplx s1 = t * ea + 1.0 / (t * ea);
        cplx s2 = ea / t + t / ea;
        cplx v = std::exp((4.0 * mu - 1.0) * lt) * std::pow(s1, -m) + std::exp((-4.0 * mu - 1.0) * lt) * std::pow(s2, -m);
        return v * std::pow(Y, m);
    };
    auto y_of = [&](cplx t) { return t * std::sqrt(1.0 + (cos2 - 2.0 + 1.0 / (t * t)) / (t * t)); };

    const double R = switch_radius(double(m), cfg);
    const double t0 = std::max(2.0, R / c + 1);
    auto head = [&](double t, double, double) {
        double d = t - 1 / t;
        double Y = std::sqrt(d * d + cos2);
        if (!(Y > 0))
            return cplx(0);
        return weight(t, Y) * bessel_j(double(m), PolarPoint(c * Y, 0), cfg);
    };
    const double tol = 1e-13;
    QuadratureResult h = tanh_sinh(head, 1.0, t0, tol);
    auto tail = [&](int kind) {
        auto f = [&](double tau) {
            cplx t(t0, kind == 1 ? tau : -tau);
            cplx Y = y_of(t);
            PolarPoint arg = PolarPoint::from_complex(c * Y);
            cplx H = kind == 1 ? hankel_h1(double(m), arg, cfg) : hankel_h2(double(m), arg, cfg);
            return weight(t, Y) * H / 2.0 * cplx(0, kind == 1 ? 1 : -1);
        };
        return exp_sinh(f, tol).value;
    };
    cplx total = h.value + tail(1) + tail(2);
    cplx im = std::pow(cplx(0, 1), m);
    return checked(4 * pi * im * total, "bold_j_integral_rep");
}

OdeResidual ode_residual(OrderPair order, PolarPoint w, double h, const EvalConfig& cfg)
{
    if (!(h >= 1e-4 && h <= 1e-2))
        throw DomainError("ode_residual: step must lie in [1e-4, 1e-2]");
    OrderPair o = order.normalized();
    BoldJKernel kernel(o, cfg);
    const cplx z = w.value();
    auto f = [&](int i, int j) {
        cplx p = z + cplx(i * h, j * h);
        PolarPoint q = PolarPoint::from_complex(p / (4 * pi));
        // same reduction as bold_j_sq
        double sign = 1;
        if (std::abs(q.angle) > pi / 2) {
            q = q.rotated(q.angle > 0 ? -pi : pi);
            if (o.m % 2 != 0)
                sign = -1;
        }
        return sign * kernel.at_square(q);
    };
    cplx f00 = f(0, 0);
    cplx fp0 = f(1, 0), fm0 = f(-1, 0), f0p = f(0, 1), f0m = f(0, -1);
    cplx fpp = f(1, 1), fpm = f(1, -1), fmp = f(-1, 1), fmm = f(-1, -1);
    cplx fx = (fp0 - fm0) / (2 * h);
    cplx fy = (f0p - f0m) / (2 * h);
    cplx fxx = (fp0 - 2.0 * f00 + fm0) / (h * h);
    cplx fyy = (f0p - 2.0 * f00 + f0m) / (h * h);
    cplx fxy = (fpp - fpm - fmp + fmm) / (4 * h * h);
    const cplx iu(0, 1);
    cplx fz = (fx - iu * fy) / 2.0;
    cplx fzz = (fxx - 2.0 * iu * fxy - fyy) / 4.0;
    cplx fb = (fx + iu * fy) / 2.0;
    cplx fbb = (fxx + 2.0 * iu * fxy - fyy) / 4.0;
    cplx n1 = -o.order_a(), n2 = -o.order_b();
    cplx zb = std::conj(z);
    OdeResidual r;
    r.f = f00;
    r.nabla = z * z * fzz + z * fz + (z * z - n1 * n1) * f00;
    r.nabla_bar = zb * zb * fbb + zb * fb + (zb * zb - n2 * n2) * f00;
    r.nabla_scale = std::abs(z * z * fzz) + std::abs(z * fz) + std::abs(z * z * f00) + std::abs(n1 * n1 * f00);
    r.nabla_bar_scale = std::abs(zb * zb * fbb) + std::abs(zb * fb) + std::abs(zb * zb * f00) + std::abs(n2 * n2 * f00);
    return r;
}

} // namespace besselcx
