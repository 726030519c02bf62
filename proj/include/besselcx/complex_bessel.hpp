#pragma once

#include <besselcx/types.hpp>

#include <memory>
#include <utility>

namespace besselcx {

/// The parameter (mu, m) of the kernel.
struct OrderPair {
    cplx mu = 0;
    int m = 0;

    /// Distance of (4 mu - m)/2 from the integers; zero in the nongeneric case.
    double nongeneric_distance() const;
    bool is_generic() const { return nongeneric_distance() != 0; }
    OrderPair negated() const { return {-mu, -m}; }
    /// Representative of {order, negated order}: m > 0, or m = 0 and mu in
    /// the right half plane (upper half of the imaginary axis).
    OrderPair normalized() const;
    /// Orders of the two Bessel factors, -2mu - m/2 and -2mu + m/2.
    cplx order_a() const { return -2.0 * mu - m / 2.0; }
    cplx order_b() const { return -2.0 * mu + m / 2.0; }
};

struct NormalizedDirection {
    double Y = 0;
    cplx E = 1;

    /// Y = |w + 1/w|, E = (w + 1/w)/Y.
    static NormalizedDirection from(cplx w);
};

struct GFValue {
    cplx value;
    double regularization_error = 0;
};

/// The kernel as a function of two independent Bessel arguments,
///   even m: 2 pi^2 / sin(2 pi mu) (J_a(z1) J_b(z2) - J_{-a}(z1) J_{-b}(z2)),
///   odd m:  2 pi^2 i / cos(2 pi mu) (J_a(z1) J_b(z2) + J_{-a}(z1) J_{-b}(z2)),
/// with a = -2mu - m/2, b = -2mu + m/2. With z2 the conjugate of z1 = 4 pi sqrt(z)
/// this is the kernel at z. Large arguments use the Hankel product form, and
/// nongeneric orders are replaced by the average over mu +- eps.
class BoldJKernel {
public:
    explicit BoldJKernel(OrderPair order, const EvalConfig& cfg = {});
    ~BoldJKernel();
    BoldJKernel(BoldJKernel&&) noexcept;
    BoldJKernel& operator=(BoldJKernel&&) noexcept;

    cplx operator()(PolarPoint z1, PolarPoint z2) const;
    /// Kernel at z (m even); the angle of z is reduced into (-pi, pi].
    cplx at(PolarPoint z) const;
    /// Kernel at w^2 with 4 pi sqrt(w^2) taken as 4 pi w; any m.
    cplx at_square(PolarPoint w) const;
    /// int_0^{2pi} of the kernel at x e^{i phi} (m even). Below 4 pi sqrt(x) = 2
    /// this sums the power series of the average, where the pointwise values
    /// lose all digits to cancellation; above it, the trapezoid rule.
    QuadratureResult angular_integral(double x, double tol = 1e-10) const;

    const OrderPair& order() const { return order_; }

private:
    struct Impl;
    OrderPair order_;
    std::unique_ptr<Impl> generic_;
    std::unique_ptr<Impl> plus_;
    std::unique_ptr<Impl> minus_;
};

cplx j_pair(OrderPair order, PolarPoint z, const EvalConfig& cfg = {});
cplx bold_j(OrderPair order, PolarPoint z, const EvalConfig& cfg = {});
/// bold_j without the order normalization; used to test the symmetry.
cplx bold_j_raw(OrderPair order, PolarPoint z, const EvalConfig& cfg = {});
cplx bold_j_sq(OrderPair order, PolarPoint w, const EvalConfig& cfg = {});
/// H^{(kind)}_{2mu+m/2}(z) H^{(kind)}_{2mu-m/2}(conj z).
cplx h_pair(int kind, OrderPair order, PolarPoint z, const EvalConfig& cfg = {});

struct BoldAsymptotic {
    cplx value;
    double error_estimate;
};

/// Two-branch large-z form with the first 1/sqrt(z) corrections.
BoldAsymptotic bold_j_asymptotic(OrderPair order, PolarPoint z);

/// The kernel at x e^{i phi} from the polar integral over y.
cplx bold_j_integral_rep(OrderPair order, double x, double phi, const EvalConfig& cfg = {});

struct OdeResidual {
    cplx nabla;
    cplx nabla_bar;
    cplx f;
    double nabla_scale;
    double nabla_bar_scale;
};

/// Residuals of the two Bessel operators of orders 2mu + m/2 (in z) and
/// 2mu - m/2 (in conj z) applied to f(z) = J_{mu,m}(z^2 / 16 pi^2) at z = w,
/// from central differences of step h. The scales are sums of the magnitudes
/// of the individual terms.
OdeResidual ode_residual(OrderPair order, PolarPoint w, double h, const EvalConfig& cfg = {});

/// 2 times the regularized plane integral of the kernel against
/// e(-2 x cos(phi - theta) / y). The schedule is rescaled by min(1, 1/y^2)
/// since the stationary point of the integrand sits at x ~ y^2.
GFValue g_function(OrderPair order, double y, double theta, const RegularizationSchedule& schedule = {},
                   const EvalConfig& cfg = {});
/// (2/y) e(-y cos theta) G(y e^{i theta}).
GFValue f_function(OrderPair order, double y, double theta, const RegularizationSchedule& schedule = {},
                   const EvalConfig& cfg = {});

} // namespace besselcx
