#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace oracle {

namespace mp = boost::multiprecision;

namespace {
int g_digits = 50;
}

void set_digits(int digits)
{
    g_digits = digits;
    real::default_precision(digits + 80);
}

real pi() { return mp::mpfr_float(boost::math::constants::pi<real>()); }

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
Complex operator*(const Complex& a, const Complex& b)
{
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Complex operator/(const Complex& a, const Complex& b)
{
    real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
real abs(const Complex& a) { return mp::sqrt(a.re * a.re + a.im * a.im); }
Complex polar(const real& r, const real& angle) { return {r * mp::cos(angle), r * mp::sin(angle)}; }
Complex exp(const Complex& a) { return polar(mp::exp(a.re), a.im); }
Complex log(const Complex& a) { return {mp::log(abs(a)), mp::atan2(a.im, a.re)}; }
Complex sin(const Complex& a) { return {mp::sin(a.re) * mp::cosh(a.im), mp::cos(a.re) * mp::sinh(a.im)}; }
Complex cos(const Complex& a) { return {mp::cos(a.re) * mp::cosh(a.im), -mp::sin(a.re) * mp::sinh(a.im)}; }

namespace {

// Raises the working precision for the lifetime of the guard. Products of
// Bessel functions at large complex arguments cancel like e^{2 |z|}.
class PrecisionBump {
public:
    explicit PrecisionBump(double radius) : old_(real::default_precision())
    {
        real::default_precision(old_ + static_cast<int>(std::ceil(2 * radius / std::log(10.0))) + 5);
    }
    ~PrecisionBump() { real::default_precision(old_); }

private:
    unsigned old_;
};

real tiny_tol() { return mp::pow(real(10), -(g_digits + 75)); }

bool is_nonpositive_integer(const Complex& z)
{
    return z.im == 0 && z.re <= 0 && mp::floor(z.re) == z.re;
}

Complex spouge_gamma(const Complex& z)
{
    // Gamma(z) for Re z >= 1/2 via Gamma(x+1) with x = z - 1.
    int digits = static_cast<int>(real::default_precision());
    int a = static_cast<int>(std::ceil((digits + 5) * std::log(10.0) / std::log(2 * M_PI)));
    Complex x = z - Complex(1);
    real tp = 2 * pi();
    Complex sum(mp::sqrt(tp));
    real fact = 1;
    for (int k = 1; k < a; ++k) {
        if (k > 1)
            fact *= (k - 1);
        real ck = mp::pow(real(a - k), real(k) - real(0.5)) * mp::exp(real(a - k)) / fact;
        if (k % 2 == 0)
            ck = -ck;
        sum = sum + Complex(ck) / (x + Complex(k));
    }
    Complex xa = x + Complex(a);
    Complex lead = exp((x + Complex(real(0.5))) * log(xa) - xa);
    return lead * sum;
}

} // namespace

Complex gamma(const Complex& z)
{
    if (is_nonpositive_integer(z))
        throw std::domain_error("oracle gamma: pole");
    if (z.re >= real(0.5))
        return spouge_gamma(z);
    Complex pz = Complex(pi()) * z;
    return Complex(pi()) / (sin(pz) * spouge_gamma(Complex(1) - z));
}

namespace {

Complex rgamma(const Complex& z)
{
    if (is_nonpositive_integer(z))
        return Complex(0);
    return Complex(1) / gamma(z);
}

} // namespace

Complex bessel_series(const Complex& nu, const real& r, const real& angle, int sign)
{
    if (nu.im == 0 && nu.re < 0 && mp::floor(nu.re) == nu.re) {
        Complex v = bessel_series(Complex(-nu.re), r, angle, sign);
        long n = static_cast<long>(-nu.re);
        return (sign < 0 && n % 2 == 1) ? -v : v;
    }
    Complex lead = exp(nu * Complex(mp::log(r / 2), angle)) * rgamma(nu + Complex(1));
    Complex q = polar(r * r / 4, 2 * angle);
    if (sign < 0)
        q = -q;
    Complex term(1), sum(1);
    real peak = 1;
    real tol = tiny_tol();
    for (int n = 0; n < 100000; ++n) {
        term = term * q / (Complex(n + 1) * (nu + Complex(n + 1)));
        sum = sum + term;
        real t = abs(term);
        if (t > peak)
            peak = t;
        if (real(n + 1) * (n + 1) > r * r / 4 && t < tol * peak)
            return lead * sum;
    }
    throw std::runtime_error("oracle series did not converge");
}

namespace {

bool is_integer_d(std::complex<double> nu) { return nu.imag() == 0 && nu.real() == std::round(nu.real()); }

real limit_eps() { return mp::pow(real(10), -static_cast<long>((g_digits + 80) / 3)); }

Complex k_exact(const Complex& nu, const real& r, const real& angle)
{
    Complex ip = bessel_series(nu, r, angle, 1);
    Complex im = bessel_series(-nu, r, angle, 1);
    return Complex(pi() / 2) * (im - ip) / sin(Complex(pi()) * nu);
}

Complex hankel_exact(const Complex& nu, const real& r, const real& angle, int kind)
{
    Complex jp = bessel_series(nu, r, angle, -1);
    Complex jm = bessel_series(-nu, r, angle, -1);
    Complex ipn = Complex(real(0), pi()) * nu;
    Complex s = sin(Complex(pi()) * nu);
    Complex iu(real(0), real(1));
    if (kind == 1)
        return (jm - exp(-ipn) * jp) / (iu * s);
    return (jm - exp(ipn) * jp) / (-iu * s);
}

template <class F>
Complex symmetric_limit(const Complex& nu, F&& f)
{
    real e = limit_eps();
    return (f(nu + Complex(e)) + f(nu - Complex(e))) / Complex(2);
}

} // namespace

std::complex<double> j(std::complex<double> nu, double r, double angle)
{
    PrecisionBump bump(r);
    return bessel_series(Complex(nu), real(r), real(angle), -1).to_double();
}

std::complex<double> i(std::complex<double> nu, double r, double angle)
{
    PrecisionBump bump(r);
    return bessel_series(Complex(nu), real(r), real(angle), 1).to_double();
}

std::complex<double> k(std::complex<double> nu, double r, double angle)
{
    PrecisionBump bump(r);
    real rr(r), aa(angle);
    if (is_integer_d(nu))
        return symmetric_limit(Complex(nu), [&](const Complex& n) { return k_exact(n, rr, aa); }).to_double();
    return k_exact(Complex(nu), rr, aa).to_double();
}

std::complex<double> h1(std::complex<double> nu, double r, double angle)
{
    PrecisionBump bump(r);
    real rr(r), aa(angle);
    if (is_integer_d(nu))
        return symmetric_limit(Complex(nu), [&](const Complex& n) { return hankel_exact(n, rr, aa, 1); }).to_double();
    return hankel_exact(Complex(nu), rr, aa, 1).to_double();
}

std::complex<double> h2(std::complex<double> nu, double r, double angle)
{
    PrecisionBump bump(r);
    real rr(r), aa(angle);
    if (is_integer_d(nu))
        return symmetric_limit(Complex(nu), [&](const Complex& n) { return hankel_exact(n, rr, aa, 2); }).to_double();
    return hankel_exact(Complex(nu), rr, aa, 2).to_double();
}

std::complex<double> kummer(std::complex<double> a, std::complex<double> b, std::complex<double> z)
{
    Complex A(a), B(b), Z(z);
    Complex term(1), sum(1);
    real tol = tiny_tol();
    real peak = 1;
    real az = abs(Z);
    for (int n = 0; n < 100000; ++n) {
        term = term * (A + Complex(n)) * Z / ((B + Complex(n)) * Complex(n + 1));
        sum = sum + term;
        real t = abs(term);
        if (t > peak)
            peak = t;
        if (t == 0 || (real(n) > az && t < tol * peak))
            return sum.to_double();
    }
    throw std::runtime_error("oracle kummer did not converge");
}

std::complex<double> gamma_d(std::complex<double> z) { return gamma(Complex(z)).to_double(); }

namespace {

Complex pair_exact(const Complex& mu, int m, const real& r1, const real& a1, const real& r2, const real& a2)
{
    Complex half_m(real(m) / 2);
    Complex a = -(Complex(2) * mu) - half_m;
    Complex b = -(Complex(2) * mu) + half_m;
    return bessel_series(a, r1, a1, -1) * bessel_series(b, r2, a2, -1);
}

Complex bold_exact(const Complex& mu, int m, const real& r, const real& angle)
{
    Complex p = pair_exact(mu, m, r, angle, r, -angle);
    Complex q = pair_exact(-mu, -m, r, angle, r, -angle);
    Complex two_pi_mu = Complex(2 * pi()) * mu;
    real c = 2 * pi() * pi();
    if (m % 2 == 0)
        return Complex(c) * (p - q) / sin(two_pi_mu);
    return Complex(real(0), c) * (p + q) / cos(two_pi_mu);
}

} // namespace

std::complex<double> j_pair(std::complex<double> mu, int m, double r1, double a1, double r2, double a2)
{
    PrecisionBump bump(std::max(r1, r2));
    return pair_exact(Complex(mu), m, real(r1), real(a1), real(r2), real(a2)).to_double();
}

std::complex<double> bold_j_sq(std::complex<double> mu, int m, double wr, double wangle)
{
    PrecisionBump bump(4 * M_PI * wr);
    real r = 4 * pi() * real(wr);
    real ang(wangle);
    // nongeneric when 4 mu - m is an even integer
    std::complex<double> t = 4.0 * mu - double(m);
    bool nongeneric = t.imag() == 0 && std::fmod(t.real(), 2.0) == 0;
    if (nongeneric)
        return symmetric_limit(Complex(mu), [&](const Complex& u) { return bold_exact(u, m, r, ang); }).to_double();
    return bold_exact(Complex(mu), m, r, ang).to_double();
}

} // namespace oracle
