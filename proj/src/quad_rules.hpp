#pragma once
// Fixed-order node generators and adaptive 1-D rules shared by the
// quadrature evaluators. All sums run over node arrays in a fixed order with
// pairwise summation, so results do not depend on the thread count.

#include <besselcx/types.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

namespace besselcx::detail {

cplx pairwise_sum(const cplx* v, std::size_t n);
double pairwise_sum(const double* v, std::size_t n);

inline cplx pairwise_sum(const std::vector<cplx>& v) { return pairwise_sum(v.data(), v.size()); }
inline double pairwise_sum(const std::vector<double>& v) { return pairwise_sum(v.data(), v.size()); }

struct Node {
    double x;
    double w;
};

struct DeNode {
    double x;
    double da; // x - a, accurate near a
    double db; // b - x, accurate near b
    double w;
};

/// Largest u on either side for the tanh-sinh map on an interval of length L:
/// beyond it the distance to the endpoint drops below what an algebraic
/// singularity of the given exponent can still contribute.
double de_cutoff(double length, double exponent, double tol);

/// Tanh-sinh nodes u = j h for j with |j h| within the cutoffs; odd_only keeps
/// the nodes that are new at this step size.
std::vector<DeNode> tanh_sinh_nodes(double a, double b, double h, double u_left, double u_right, bool odd_only);

/// The 31-point Kronrod rule on [a, b]; gauss_w holds the weights of the
/// embedded 15-point Gauss rule (zero on Kronrod-only nodes).
struct KronrodPanel {
    std::vector<double> x;
    std::vector<double> kronrod_w;
    std::vector<double> gauss_w;
};
KronrodPanel kronrod_panel(double a, double b);

/// Adaptive tanh-sinh on (a, b); f(x, x - a, b - x).
template <class F>
QuadratureResult tanh_sinh(F&& f, double a, double b, double tol, double left_exp = 0, double right_exp = 0,
                           int max_level = 9)
{
    if (!(b > a))
        throw DomainError("tanh_sinh: empty interval");
    if (!(left_exp > -1) || !(right_exp > -1))
        throw DomainError("tanh_sinh: endpoint exponents must exceed -1");
    const double L = b - a;
    const double ul = de_cutoff(L, left_exp, tol);
    const double ur = de_cutoff(L, right_exp, tol);
    double h = 0.5;
    long evals = 0;
    auto level_sum = [&](const std::vector<DeNode>& nodes, double& l1) {
        std::vector<cplx> terms(nodes.size());
        std::vector<double> mags(nodes.size());
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            const DeNode& n = nodes[i];
            cplx v = f(n.x, n.da, n.db);
            if (!is_finite(v))
                throw DomainError("tanh_sinh: non-finite integrand");
            terms[i] = v * n.w;
            mags[i] = std::abs(terms[i]);
        }
        evals += static_cast<long>(nodes.size());
        l1 = pairwise_sum(mags);
        return pairwise_sum(terms);
    };
    double l1 = 0;
    cplx sum = level_sum(tanh_sinh_nodes(a, b, h, ul, ur, false), l1);
    cplx value = h * sum;
    double scale = h * l1;
    double err = std::abs(value);
    for (int level = 1; level <= max_level; ++level) {
        h /= 2;
        double l1_new = 0;
        cplx s_new = level_sum(tanh_sinh_nodes(a, b, h, ul, ur, true), l1_new);
        sum += s_new;
        l1 += l1_new;
        cplx next = h * sum;
        scale = h * l1;
        err = std::abs(next - value);
        value = next;
        if (level >= 3 && err <= tol * scale)
            return {value, err, evals};
    }
    if (err <= 1e3 * tol * scale)
        return {value, err, evals};
    throw ConvergenceError("tanh_sinh: tolerance not reached");
}

/// Adaptive exp-sinh on (0, inf); f(x). The right cutoff is found from the
/// decay of the coarsest level.
template <class F>
QuadratureResult exp_sinh(F&& f, double tol, double left_exp = 0, int max_level = 9)
{
    if (!(left_exp > -1))
        throw DomainError("exp_sinh: endpoint exponent must exceed -1");
    const double h0 = 0.5;
    // left cutoff: x = exp(-pi/2 sinh u) small enough for the declared exponent
    double target = std::log(tol * 1e-3) / (1 + left_exp);
    target = std::clamp(target, -690.0, -40.0);
    const double ul = std::asinh(-target / (pi / 2));
    long evals = 0;
    auto term = [&](double u) {
        double x = std::exp(pi / 2 * std::sinh(u));
        if (!(x > 0) || !std::isfinite(x))
            return cplx(0);
        double w = x * pi / 2 * std::cosh(u);
        cplx v = f(x);
        ++evals;
        if (!is_finite(v))
            throw DomainError("exp_sinh: non-finite integrand");
        return v * w;
    };
    // coarse pass fixes the right cutoff
    std::vector<cplx> terms;
    int jl = -static_cast<int>(std::ceil(ul / h0));
    for (int j = jl; j <= 0; ++j)
        terms.push_back(term(j * h0));
    double running = 0;
    for (const cplx& t : terms)
        running += std::abs(t);
    int jr = 0;
    int small = 0;
    for (int j = 1; j < 64; ++j) {
        cplx t = term(j * h0);
        terms.push_back(t);
        running += std::abs(t);
        jr = j;
        if (std::abs(t) <= 1e-20 * running) {
            if (++small >= 2)
                break;
        } else {
            small = 0;
        }
    }
    const double ur = jr * h0;
    cplx sum = pairwise_sum(terms);
    double l1 = running;
    double h = h0;
    cplx value = h * sum;
    double err = std::abs(value);
    for (int level = 1; level <= max_level; ++level) {
        h /= 2;
        std::vector<cplx> fresh;
        double l1_new = 0;
        for (long j = static_cast<long>(std::floor(-ul / h)); j * h <= ur; ++j) {
            if (j % 2 == 0)
                continue;
            cplx t = term(j * h);
            fresh.push_back(t);
            l1_new += std::abs(t);
        }
        sum += pairwise_sum(fresh);
        l1 += l1_new;
        cplx next = h * sum;
        err = std::abs(next - value);
        value = next;
        if (level >= 3 && err <= tol * h * l1)
            return {value, err, evals};
    }
    if (err <= 1e3 * tol * h * l1)
        return {value, err, evals};
    throw ConvergenceError("exp_sinh: tolerance not reached");
}

/// Trapezoid rule on [0, 2 pi) with node doubling.
template <class F>
QuadratureResult trapezoid_periodic(F&& f, double tol, int max_nodes, int min_nodes = 16)
{
    int n = 8;
    std::vector<cplx> vals(n);
    for (int j = 0; j < n; ++j)
        vals[j] = f(2 * pi * j / n);
    long evals = n;
    auto total = [&] { return 2 * pi / vals.size() * pairwise_sum(vals); };
    cplx value = total();
    double err = std::abs(value);
    while (2 * n <= max_nodes) {
        std::vector<cplx> next(2 * n);
        for (int j = 0; j < n; ++j) {
            next[2 * j] = vals[j];
            next[2 * j + 1] = f(2 * pi * (2 * j + 1) / (2 * n));
        }
        evals += n;
        n *= 2;
        vals.swap(next);
        cplx v = total();
        double l1 = 0;
        for (const cplx& t : vals)
            l1 += std::abs(t);
        l1 *= 2 * pi / n;
        err = std::abs(v - value);
        value = v;
        for (const cplx& t : vals)
            if (!is_finite(t))
                throw DomainError("trapezoid: non-finite integrand");
        if (n >= min_nodes && err <= tol * std::max(l1, 1e-300))
            return {value, err, evals};
    }
    throw ConvergenceError("trapezoid: tolerance not reached");
}

} // namespace besselcx::detail
