#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace besselcx {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;

// Errors raised by the library. Every failure mode has its own type so that
// callers (the verification suites in particular) can record it per case.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class PoleError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    using Error::Error;
};

class BranchError : public Error {
public:
    using Error::Error;
};

class LimitError : public Error {
public:
    using Error::Error;
};

inline bool is_finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

inline cplx checked(cplx z, const char* what)
{
    if (!is_finite(z))
        throw DomainError(std::string(what) + ": non-finite result");
    return z;
}

// e(x) = exp(2 pi i x)
inline cplx e2pi(cplx x) { return std::exp(cplx(0, 2 * pi) * x); }

/// A point of the complex plane stored as (radius, angle) with the angle kept
/// unreduced. The angle selects the branch of every power z^nu.
struct PolarPoint {
    double radius = 1;
    double angle = 0;

    PolarPoint() = default;
    PolarPoint(double r, double a) : radius(r), angle(a)
    {
        if (!(r > 0) || !std::isfinite(r) || !std::isfinite(a))
            throw DomainError("PolarPoint: radius must be positive and finite");
    }

    /// Principal representation, angle in (-pi, pi].
    static PolarPoint from_complex(cplx z)
    {
        return PolarPoint(std::abs(z), std::arg(z));
    }

    cplx value() const { return std::polar(radius, angle); }

    /// Square root with the stored angle halved.
    PolarPoint sqrt() const { return {std::sqrt(radius), angle / 2}; }
    PolarPoint conj() const { return {radius, -angle}; }
    PolarPoint scaled(double s) const { return {radius * s, angle}; }
    PolarPoint rotated(double dphi) const { return {radius, angle + dphi}; }

    /// Same point with the angle reduced into (-pi, pi].
    PolarPoint principal() const
    {
        double a = std::remainder(angle, 2 * pi);
        if (a <= -pi)
            a += 2 * pi;
        return {radius, a};
    }
};

struct EvalConfig {
    double series_tol = 1e-19;
    int max_terms = 2000;
    double switch_radius_factor = 1.5;
    int oracle_precision_digits = 50;

    void validate() const
    {
        if (!(series_tol > 0))
            throw DomainError("EvalConfig: series_tol must be positive");
        if (max_terms < 16)
            throw DomainError("EvalConfig: max_terms must be at least 16");
        if (!(switch_radius_factor > 0))
            throw DomainError("EvalConfig: switch_radius_factor must be positive");
        if (oracle_precision_digits < 30)
            throw DomainError("EvalConfig: oracle_precision_digits must be at least 30");
    }
};

/// Abel factors e^{-eps x} used for conditionally convergent integrals, and
/// the order of the polynomial extrapolation to eps = 0. A single epsilon
/// means no extrapolation.
struct RegularizationSchedule {
    std::vector<double> epsilons{0.2, 0.1, 0.05, 0.025};
    int extrapolation_order = 2;

    void validate() const
    {
        if (extrapolation_order < 1)
            throw DomainError("RegularizationSchedule: extrapolation_order must be at least 1");
        if (epsilons.size() != 1 && epsilons.size() < static_cast<std::size_t>(extrapolation_order) + 1)
            throw DomainError("RegularizationSchedule: need at least extrapolation_order + 1 epsilons");
        for (std::size_t i = 0; i < epsilons.size(); ++i) {
            if (!(epsilons[i] > 0))
                throw DomainError("RegularizationSchedule: epsilons must be positive");
            if (i > 0 && !(epsilons[i] < epsilons[i - 1]))
                throw DomainError("RegularizationSchedule: epsilons must be strictly decreasing");
        }
    }

    RegularizationSchedule scaled(double s) const
    {
        RegularizationSchedule r = *this;
        for (double& e : r.epsilons)
            e *= s;
        return r;
    }
};

struct QuadratureResult {
    cplx value;
    double abs_error_estimate = 0;
    long evaluations = 0;
};

} // namespace besselcx
