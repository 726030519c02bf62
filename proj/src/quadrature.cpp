#include <besselcx/parallel.hpp>
#include <besselcx/quadrature.hpp>
#include <besselcx/special_functions.hpp>

#include "quad_rules.hpp"

#include <algorithm>
#include <cmath>

namespace besselcx {

using namespace detail;

namespace {

void check_exponents(const EndpointExponents& ex)
{
    if (!(ex.left > -1) || !(ex.right > -1))
        throw DomainError("integrate_de: endpoint exponents must exceed -1");
}

// Flags an integrand that is far more singular than declared: |f| d^{-alpha}
// should stay bounded as d -> 0.
void probe_endpoint(const std::function<cplx(double)>& f, double end, double dir, double scale, double alpha)
{
    double d1 = 1e-6 * scale, d2 = 1e-12 * scale;
    double g1 = std::abs(f(end + dir * d1)) * std::pow(d1, -alpha);
    double g2 = std::abs(f(end + dir * d2)) * std::pow(d2, -alpha);
    if (g1 > 0 && std::isfinite(g1) && (!std::isfinite(g2) || g2 > 1e6 * g1))
        throw DomainError("integrate_de: integrand more singular than the declared endpoint exponent");
}

} // namespace

QuadratureResult integrate_de(const std::function<cplx(double)>& f, double a, double b, EndpointExponents ex,
                              double tol)
{
    check_exponents(ex);
    if (!(b > a) || !std::isfinite(a) || !std::isfinite(b))
        throw DomainError("integrate_de: need a finite interval a < b");
    probe_endpoint(f, a, 1, b - a, ex.left);
    probe_endpoint(f, b, -1, b - a, ex.right);
    return tanh_sinh([&](double x, double, double) { return f(x); }, a, b, tol, ex.left, ex.right);
}

QuadratureResult integrate_de(const std::function<cplx(double)>& f, EndpointExponents ex, double tol)
{
    check_exponents(ex);
    probe_endpoint(f, 0, 1, 1, ex.left);
    return exp_sinh(f, tol, ex.left);
}

QuadratureResult integrate_periodic(const std::function<cplx(double)>& f, double tol, int max_nodes)
{
    if (!(tol > 0) || max_nodes < 16)
        throw DomainError("integrate_periodic: bad tolerance or node cap");
    return trapezoid_periodic(f, tol, max_nodes);
}

namespace {

// Kernel values carry relative noise near 1e-11, which bounds the inner rules.
constexpr double kernel_tol = 1e-10;

void require_theorem_range(OrderPair order, const char* what)
{
    if (!(std::abs(order.mu.real()) < 0.5))
        throw DomainError(std::string(what) + ": requires |Re mu| < 1/2");
    if (order.m % 2 != 0)
        throw DomainError(std::string(what) + ": m must be even");
}

// x at which exp(-rate x) drops below 1e-18
double decay_cutoff(double rate) { return 41.45 / rate; }

} // namespace

QuadratureResult radial_bessel_integral(OrderPair order, cplx c, const EvalConfig& cfg)
{
    require_theorem_range(order, "radial_bessel_integral");
    if (!(c.real() > 0))
        throw DomainError("radial_bessel_integral: requires |arg c| < pi/2");
    BoldJKernel kernel(order.normalized(), cfg);
    long evals = 0;
    double inner_err = 0;
    auto inner = [&](double x) {
        QuadratureResult r = kernel.angular_integral(x, kernel_tol);
        evals += r.evaluations;
        inner_err = std::max(inner_err, r.abs_error_estimate);
        return r.value * std::exp(-2 * pi * c * x);
    };
    double xmax = decay_cutoff(2 * pi * c.real());
    double alpha = -2 * std::abs(order.mu.real());
    QuadratureResult r = tanh_sinh([&](double x, double, double) { return inner(x); }, 0.0, xmax, 1e-11, alpha, 0);
    r.evaluations = evals;
    r.abs_error_estimate += inner_err * xmax;
    return r;
}

GFValue extrapolate_to_zero(const std::vector<double>& eps, const std::vector<cplx>& values, int order)
{
    if (eps.size() != values.size() || eps.empty())
        throw DomainError("extrapolate_to_zero: size mismatch");
    if (eps.size() == 1)
        return {values[0], 0.0};
    if (order < 1)
        throw DomainError("extrapolate_to_zero: order must be at least 1");
    // Neville's scheme at x = 0 over points [first, first + count)
    auto neville = [&](std::size_t first, std::size_t count) {
        std::vector<cplx> p(values.begin() + first, values.begin() + first + count);
        for (std::size_t k = 1; k < count; ++k)
            for (std::size_t i = 0; i + k < count; ++i) {
                double xi = eps[first + i], xk = eps[first + i + k];
                p[i] = (xk * p[i] - xi * p[i + 1]) / (xk - xi);
            }
        return p[0];
    };
    std::size_t n = eps.size();
    std::size_t w = std::min<std::size_t>(order + 1, n);
    cplx last = neville(n - w, w);
    cplx prev = n > w ? neville(n - w - 1, w) : neville(n - w + 1, w - 1);
    if (!is_finite(last))
        throw ConvergenceError("extrapolate_to_zero: non-finite extrapolant");
    return {last, std::abs(last - prev)};
}

namespace {

// Node of a 1-D rule: primary weight and the weight of the embedded
// lower-order rule used for the error estimate.
struct LineNode {
    double x;
    double w;
    double w_alt;
};

void append_tanh_sinh(std::vector<LineNode>& out, double a, double b, double left_exp, double tol)
{
    const double h = 1.0 / 8;
    const double L = b - a;
    double ul = de_cutoff(L, left_exp, tol);
    double ur = de_cutoff(L, 0, tol);
    long j0 = -static_cast<long>(std::floor(ul / h));
    long j1 = static_cast<long>(std::floor(ur / h));
    for (long j = j0; j <= j1; ++j) {
        double u = j * h;
        double v = pi * std::sinh(u);
        double da = L / (1 + std::exp(-v));
        double db = L / (1 + std::exp(v));
        if (!(da > 0) || !(db > 0))
            continue;
        double w = pi * std::cosh(u) * (da / L) * db;
        out.push_back({da <= db ? a + da : b - db, h * w, j % 2 == 0 ? 2 * h * w : 0.0});
    }
}

// Rule on [0, T]: tanh-sinh on [0, split] and [split, d] (split optional), then
// Kronrod panels sized to the local oscillation rate omega(x).
template <class Omega>
std::vector<LineNode> line_rule(double T, double d, double split, double left_exp, Omega&& omega)
{
    std::vector<LineNode> nodes;
    const double tol = 1e-14;
    d = std::min(d, T);
    if (split > 0 && split < d) {
        append_tanh_sinh(nodes, 0, split, left_exp, tol);
        append_tanh_sinh(nodes, split, d, 0, tol);
    } else {
        append_tanh_sinh(nodes, 0, d, left_exp, tol);
    }
    double x = d;
    while (x < T) {
        double len = std::min(2.0, 24.0 / omega(x));
        double b = x + len;
        if (b > T - 0.25 * len)
            b = T;
        KronrodPanel p = kronrod_panel(x, b);
        for (std::size_t i = 0; i < p.x.size(); ++i)
            nodes.push_back({p.x[i], p.kronrod_w[i], p.gauss_w[i]});
        x = b;
    }
    return nodes;
}

// Half-width of a line where exp(growth x - decay x^2) < e^{-42}.
double line_cutoff(double growth, double decay)
{
    return (growth + std::sqrt(growth * growth + 4 * decay * 42)) / (2 * decay);
}

} // namespace

// With z = w^2 and w = e^{-i arg(u)/2} (p + i q) the integral becomes
//   2 int int K(4 pi w, 4 pi conj w) e^{-4 pi i |u| (p^2 - q^2)} e^{-eps (p^2 + q^2)} dp dq
// over R^2. Both lines are rotated, p = e^{-i gp} s and q = e^{i gq} t, which
// turns the chirp into a Gaussian; the rotation angles are capped so that the
// exponential growth of the Hankel factors stays below e^6.
RegularizedIntegral plane_fourier_integral(const BoldJKernel& kernel, cplx u, const std::vector<double>& epsilons,
                                           int extrapolation_order)
{
    if (kernel.order().m % 2 != 0)
        throw DomainError("plane_fourier_integral: m must be even");
    if (!(std::abs(u) > 0) || !is_finite(u))
        throw DomainError("plane_fourier_integral: u must be nonzero");
    if (epsilons.empty())
        throw DomainError("plane_fourier_integral: empty epsilon list");
    for (double e : epsilons)
        if (!(e >= 0))
            throw DomainError("plane_fourier_integral: epsilons must be nonnegative");
    const double nu = std::abs(u);
    const double th = std::arg(u);
    const double cp = std::abs(std::cos(th / 2)), cq = std::abs(std::sin(th / 2));
    const double P = 6, gmax = 0.7;
    auto angle = [&](double c) { return c * c < 1e-300 ? gmax : std::min(gmax, std::atan(P * nu / (2 * pi * c * c))); };
    const double gp = angle(cp), gq = angle(cq);
    const double Tp = line_cutoff(8 * pi * cp * std::sin(gp), 4 * pi * nu * std::sin(2 * gp));
    const double Tq = line_cutoff(8 * pi * cq * std::sin(gq), 4 * pi * nu * std::sin(2 * gq));
    const cplx rp = std::polar(1.0, -gp), rq = std::polar(1.0, gq);
    const cplx half = std::polar(1.0, -th / 2);
    const double mu_re = std::abs(kernel.order().mu.real());
    const std::size_t ne = epsilons.size();
    const double d0 = 0.5;

    auto omega_p = [&](double x) { return 8 * pi * cp + 8 * pi * nu * x + 2; };
    auto omega_q = [&](double x) { return 8 * pi * cq + 8 * pi * nu * x + 2; };
    std::vector<LineNode> outer = line_rule(Tp, d0, 0, 1 - 4 * mu_re, omega_p);

    struct Inner {
        std::vector<cplx> v;
        std::vector<cplx> v_alt;
        double l1 = 0;
        long evals = 0;
    };
    std::vector<Inner> rows(outer.size());
    parallel_for(outer.size(), [&](std::size_t i) {
        const double s = outer[i].x;
        const cplx p = rp * s;
        std::vector<LineNode> inner = line_rule(Tq, d0, s, 0, omega_q);
        Inner row;
        row.v.assign(ne, 0);
        row.v_alt.assign(ne, 0);
        std::vector<std::vector<cplx>> terms(ne), alts(ne);
        for (auto& t : terms)
            t.reserve(2 * inner.size());
        for (auto& t : alts)
            t.reserve(2 * inner.size());
        std::vector<double> mags;
        mags.reserve(2 * inner.size());
        for (const LineNode& n : inner) {
            for (double sign : {1.0, -1.0}) {
                const cplx q = rq * (sign * n.x);
                const cplx w1 = half * (p + cplx(0, 1) * q);
                const cplx w2 = std::conj(half) * (p - cplx(0, 1) * q);
                const cplx r2 = p * p + q * q;
                const double a1 = std::arg(w1);
                PolarPoint z1(4 * pi * std::abs(w1), a1);
                PolarPoint z2(4 * pi * std::abs(w2), std::arg(r2) - a1);
                const cplx k = kernel(z1, z2) * std::exp(cplx(0, -4 * pi * nu) * (p * p - q * q));
                ++row.evals;
                mags.push_back(std::abs(k) * n.w);
                for (std::size_t e = 0; e < ne; ++e) {
                    const cplx ke = epsilons[e] == 0 ? k : k * std::exp(-epsilons[e] * r2);
                    terms[e].push_back(ke * n.w);
                    alts[e].push_back(ke * n.w_alt);
                }
            }
        }
        for (std::size_t e = 0; e < ne; ++e) {
            row.v[e] = pairwise_sum(terms[e]);
            row.v_alt[e] = pairwise_sum(alts[e]);
        }
        row.l1 = pairwise_sum(mags);
        rows[i] = std::move(row);
    });

    // Both rules converge exponentially, so the error of the primary rule is
    // about the square of the relative gap to the embedded one.
    const cplx jac = 4.0 * rp * rq;
    RegularizedIntegral out;
    out.epsilons = epsilons;
    out.values.resize(ne);
    std::vector<double> scale(outer.size());
    for (std::size_t i = 0; i < outer.size(); ++i)
        scale[i] = rows[i].l1 * std::abs(outer[i].w);
    const double l1 = 4 * pairwise_sum(scale);
    double qerr = 0;
    for (std::size_t e = 0; e < ne; ++e) {
        std::vector<cplx> a(outer.size()), b(outer.size());
        for (std::size_t i = 0; i < outer.size(); ++i) {
            a[i] = rows[i].v[e] * outer[i].w;
            b[i] = rows[i].v_alt[e] * outer[i].w_alt;
        }
        cplx val = pairwise_sum(a);
        double gap = 4 * std::abs(pairwise_sum(b) - val);
        out.values[e] = jac * val;
        qerr = std::max(qerr, std::max(gap * std::min(1.0, gap / l1), 1e-15 * l1));
    }
    for (const Inner& r : rows)
        out.evaluations += r.evals;
    out.quadrature_error = qerr;
    std::vector<double> pos_eps;
    std::vector<cplx> pos_vals;
    for (std::size_t e = 0; e < ne; ++e)
        if (epsilons[e] > 0) {
            pos_eps.push_back(epsilons[e]);
            pos_vals.push_back(out.values[e]);
        }
    if (pos_eps.empty()) {
        out.value = out.values.back();
    } else {
        GFValue g = extrapolate_to_zero(pos_eps, pos_vals, extrapolation_order);
        out.value = g.value;
        out.regularization_error = g.regularization_error;
    }
    return out;
}

RegularizedIntegral oscillatory_fourier_integral_detail(OrderPair order, double y, double theta,
                                                        const RegularizationSchedule& schedule, const EvalConfig& cfg)
{
    require_theorem_range(order, "oscillatory_fourier_integral");
    if (!(y > 0) || !std::isfinite(theta))
        throw DomainError("oscillatory_fourier_integral: y must be positive");
    schedule.validate();
    BoldJKernel kernel(order.normalized(), cfg);
    return plane_fourier_integral(kernel, std::polar(y, theta), schedule.epsilons, schedule.extrapolation_order);
}

GFValue oscillatory_fourier_integral(OrderPair order, double y, double theta, const RegularizationSchedule& schedule,
                                     const EvalConfig& cfg)
{
    return oscillatory_fourier_integral_detail(order, y, theta, schedule, cfg).gf();
}

GFValue g_function(OrderPair order, double y, double theta, const RegularizationSchedule& schedule,
                   const EvalConfig& cfg)
{
    require_theorem_range(order, "g_function");
    if (!(y >= 0.01 && y <= 100))
        throw DomainError("g_function: y must lie in [0.01, 100]");
    schedule.validate();
    RegularizationSchedule s = schedule.scaled(std::min(1.0, 1 / (y * y)));
    BoldJKernel kernel(order.normalized(), cfg);
    RegularizedIntegral r = plane_fourier_integral(kernel, std::polar(1 / y, -theta), s.epsilons, s.extrapolation_order);
    return {2.0 * r.value, 2 * r.regularization_error};
}

GFValue f_function(OrderPair order, double y, double theta, const RegularizationSchedule& schedule,
                   const EvalConfig& cfg)
{
    GFValue g = g_function(order, y, theta, schedule, cfg);
    cplx f = 2 / y * e2pi(-y * std::cos(theta));
    return {f * g.value, std::abs(f) * g.regularization_error};
}

QuadratureResult j_exp_gauss_integral(cplx nu, double y, cplx c, const EvalConfig& cfg)
{
    if (!(nu.real() > -2))
        throw DomainError("j_exp_gauss_integral: requires Re nu > -2");
    if (!(c.real() > 0))
        throw DomainError("j_exp_gauss_integral: requires |arg c| < pi/2");
    if (!(y > 0))
        throw DomainError("j_exp_gauss_integral: y must be positive");
    double xmax = std::sqrt(decay_cutoff(c.real()));
    auto f = [&](double x, double, double) { return bessel_j(nu, PolarPoint(x * y, 0), cfg) * std::exp(-c * x * x) * x; };
    return tanh_sinh(f, 0.0, xmax, 1e-13, nu.real() + 1, 0);
}

cplx j_exp_gauss_closed_form(cplx nu, double y, cplx c, const EvalConfig& cfg)
{
    if (!(c.real() > 0))
        throw DomainError("j_exp_gauss_closed_form: requires |arg c| < pi/2");
    cplx pre = rgamma(nu + 1.0) * gamma(nu / 2.0 + 1.0) * std::pow(y, nu) /
               (std::pow(2.0, nu + 1.0) * std::pow(c, nu / 2.0 + 1.0));
    return pre * kummer_m(nu / 2.0 + 1.0, nu + 1.0, -y * y / (4.0 * c), cfg);
}

QuadratureResult kummer_via_integral(cplx a, cplx b, cplx z, const EvalConfig&)
{
    if (!(b.real() > a.real() && a.real() > 0))
        throw DomainError("kummer_via_integral: requires Re b > Re a > 0");
    auto f = [&](double v, double da, double db) {
        return std::exp(z * v) * std::exp((a - 1.0) * std::log(da) + (b - a - 1.0) * std::log(db));
    };
    QuadratureResult r = tanh_sinh(f, 0.0, 1.0, 1e-14, a.real() - 1, (b - a).real() - 1);
    cplx norm = gamma(b) * rgamma(b - a) * rgamma(a);
    r.value *= norm;
    r.abs_error_estimate *= std::abs(norm);
    return r;
}

// x = t^2 gives 2 int_0^inf J_nu(4 pi t) e(sign y t^2) e^{-eps t^2} dt; the line
// t = e^{i sign b} tau turns the chirp into a Gaussian.
RegularizedIntegral weber_integral(cplx nu, double y, int sign, const RegularizationSchedule& schedule,
                                   const EvalConfig& cfg)
{
    if (!(nu.real() > -1))
        throw DomainError("weber_integral: requires Re nu > -1");
    if (!(y > 0))
        throw DomainError("weber_integral: y must be positive");
    if (sign != 1 && sign != -1)
        throw DomainError("weber_integral: sign must be +1 or -1");
    schedule.validate();
    const double P = 6;
    const double beta = std::min(pi / 4, std::atan(P * y / pi));
    const double T = line_cutoff(4 * pi * std::sin(beta), 2 * pi * y * std::sin(2 * beta));
    const cplx rot = std::polar(1.0, sign * beta);
    const cplx rot2 = rot * rot;
    RegularizedIntegral out;
    out.epsilons = schedule.epsilons;
    for (double eps : schedule.epsilons) {
        auto f = [&](double tau, double, double) {
            cplx j = bessel_j(nu, PolarPoint(4 * pi * tau, sign * beta), cfg);
            cplx t2 = rot2 * tau * tau;
            return j * std::exp(cplx(0, 2 * pi * sign * y) * t2) * std::exp(-eps * t2);
        };
        QuadratureResult r = tanh_sinh(f, 0.0, T, 1e-13, nu.real(), 0);
        out.values.push_back(2.0 * rot * r.value);
        out.quadrature_error = std::max(out.quadrature_error, 2 * r.abs_error_estimate);
        out.evaluations += r.evaluations;
    }
    GFValue g = extrapolate_to_zero(out.epsilons, out.values, schedule.extrapolation_order);
    out.value = g.value;
    out.regularization_error = g.regularization_error;
    return out;
}

cplx weber_closed_form(cplx nu, double y, int sign, const EvalConfig& cfg)
{
    if (!(y > 0))
        throw DomainError("weber_closed_form: y must be positive");
    cplx phase = e2pi(-double(sign) * (1 / (2 * y) - nu / 8.0 - 0.125));
    return phase / std::sqrt(2 * y) * bessel_j(nu / 2.0, PolarPoint(pi / y, 0), cfg);
}

cplx gaussian_half_transform(double sigma, cplx z)
{
    return sigma * sigma * std::exp(-4 * pi * sigma * sigma * std::norm(z));
}

QuadratureResult corollary_lhs(OrderPair order, double sigma, const EvalConfig& cfg)
{
    require_theorem_range(order, "corollary_lhs");
    if (!(sigma > 0))
        throw DomainError("corollary_lhs: width must be positive");
    BoldJKernel kernel(order.normalized(), cfg);
    long evals = 0;
    auto inner = [&](double x) {
        QuadratureResult r = kernel.angular_integral(x, kernel_tol);
        evals += r.evaluations;
        return r.value * gaussian_half_transform(sigma, x);
    };
    double xmax = std::sqrt(decay_cutoff(4 * pi * sigma * sigma));
    QuadratureResult r = tanh_sinh([&](double x, double, double) { return inner(x); }, 0.0, xmax, 1e-11,
                                   -2 * std::abs(order.mu.real()), 0);
    r.evaluations = evals;
    return r;
}

// Below y0 the integrand is replaced by its leading large-argument form
// 2y ((-1)^{m/2} + e(2 cos theta / y)) f; the theta average of the
// oscillating part there is below 1e-6 and is dropped.
QuadratureResult corollary_rhs(OrderPair order, double sigma, const EvalConfig& cfg)
{
    if (order.m % 2 != 0)
        throw DomainError("corollary_rhs: m must be even");
    if (!(sigma > 0))
        throw DomainError("corollary_rhs: width must be positive");
    OrderPair half{order.mu / 2.0, order.m / 2};
    OrderPair hn = half.normalized();
    BoldJKernel kernel(hn, cfg);
    const double y0 = 0.05;
    const double ymax = sigma * std::sqrt(decay_cutoff(pi));
    auto f = [&](double y) { return std::exp(-pi * y * y / (sigma * sigma)); };
    auto theta_integral = [&](double y, long& evals) {
        auto g = [&](double th) {
            // bold_j_sq at w = e^{-i th} / (4 y)
            PolarPoint w = PolarPoint(1 / (4 * y), -th).principal();
            double sgn = 1;
            if (std::abs(w.angle) > pi / 2) {
                w = w.rotated(w.angle > 0 ? -pi : pi);
                if (hn.m % 2 != 0)
                    sgn = -1;
            }
            return e2pi(std::cos(th) / y) * sgn * kernel.at_square(w);
        };
        QuadratureResult r = trapezoid_periodic(g, kernel_tol, 1 << 16);
        evals += r.evaluations;
        return r.value;
    };
    // t = 1/y on [1/ymax, 1/y0]; the theta average oscillates with period 1/2 in t,
    // one Kronrod panel per period
    const double t0 = 1 / ymax, t1 = 1 / y0;
    std::vector<std::pair<double, double>> panels;
    for (double a = t0; a < t1;) {
        double b = std::min(t1, a + 0.5);
        panels.emplace_back(a, b);
        a = b;
    }
    std::vector<cplx> parts(panels.size()), alts(panels.size());
    std::vector<long> counts(panels.size(), 0);
    parallel_for(panels.size(), [&](std::size_t i) {
        KronrodPanel p = kronrod_panel(panels[i].first, panels[i].second);
        std::vector<cplx> a(p.x.size()), b(p.x.size());
        for (std::size_t k = 0; k < p.x.size(); ++k) {
            double t = p.x[k], y = 1 / t;
            cplx v = theta_integral(y, counts[i]) * f(y) / (t * t);
            a[k] = v * p.kronrod_w[k];
            b[k] = v * p.gauss_w[k];
        }
        parts[i] = pairwise_sum(a);
        alts[i] = pairwise_sum(b);
    });
    cplx body = pairwise_sum(parts);
    double err = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
        err += std::abs(parts[i] - alts[i]);
    double sign = (hn.m % 2 == 0) ? 1 : -1;
    // (1/4) int_0^{y0} 2y (-1)^{m/2} 2 pi f(y) dy
    double tail = sign * pi * (sigma * sigma / (2 * pi)) * (1 - std::exp(-pi * y0 * y0 / (sigma * sigma)));
    long evals = 0;
    for (long c : counts)
        evals += c;
    return {body / 4.0 + tail, err / 4 + std::abs(tail) * y0, evals};
}

} // namespace besselcx
