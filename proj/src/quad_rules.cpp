#include "quad_rules.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace besselcx::detail {

namespace {

template <class T>
T pairwise(const T* v, std::size_t n)
{
    if (n <= 8) {
        T s = T(0);
        for (std::size_t i = 0; i < n; ++i)
            s += v[i];
        return s;
    }
    std::size_t half = n / 2;
    return pairwise(v, half) + pairwise(v + half, n - half);
}

} // namespace

cplx pairwise_sum(const cplx* v, std::size_t n) { return pairwise(v, n); }
double pairwise_sum(const double* v, std::size_t n) { return pairwise(v, n); }

double de_cutoff(double length, double exponent, double tol)
{
    // distance d to the endpoint with d^(1 + exponent) ~ tol * 1e-3
    double log_d = std::log(tol * 1e-3) / (1 + exponent);
    log_d = std::clamp(log_d, -690.0, -40.0);
    double v = std::log(length) - log_d;
    return std::asinh(std::max(v, 1.0) / pi);
}

std::vector<DeNode> tanh_sinh_nodes(double a, double b, double h, double u_left, double u_right, bool odd_only)
{
    const double L = b - a;
    std::vector<DeNode> nodes;
    long j0 = -static_cast<long>(std::floor(u_left / h));
    long j1 = static_cast<long>(std::floor(u_right / h));
    for (long j = j0; j <= j1; ++j) {
        if (odd_only && j % 2 == 0)
            continue;
        double u = j * h;
        double v = pi * std::sinh(u);
        double da = L / (1 + std::exp(-v));
        double db = L / (1 + std::exp(v));
        if (!(da > 0) || !(db > 0))
            continue;
        double w = pi * std::cosh(u) * (da / L) * db;
        double x = da <= db ? a + da : b - db;
        nodes.push_back({x, da, db, w});
    }
    return nodes;
}

KronrodPanel kronrod_panel(double a, double b)
{
    using gk = boost::math::quadrature::gauss_kronrod<double, 31>;
    using g = boost::math::quadrature::gauss<double, 15>;
    const auto& ax = gk::abscissa();
    const auto& kw = gk::weights();
    const auto& gw = g::weights();
    const double c = (a + b) / 2, r = (b - a) / 2;
    KronrodPanel p;
    // abscissa()[0] is the centre, odd indices carry the Gauss nodes
    for (std::size_t i = ax.size(); i-- > 1;) {
        p.x.push_back(c - r * ax[i]);
        p.kronrod_w.push_back(r * kw[i]);
        p.gauss_w.push_back(i % 2 == 0 ? r * gw[i / 2] : 0.0);
    }
    p.x.push_back(c);
    p.kronrod_w.push_back(r * kw[0]);
    p.gauss_w.push_back(r * gw[0]);
    for (std::size_t i = 1; i < ax.size(); ++i) {
        p.x.push_back(c + r * ax[i]);
        p.kronrod_w.push_back(r * kw[i]);
        p.gauss_w.push_back(i % 2 == 0 ? r * gw[i / 2] : 0.0);
    }
    return p;
}

} // namespace besselcx::detail
