#pragma once
// Extended-precision reference values for the tests. Everything here is a
// plain power series (or a closed form) evaluated with MPFR at a runtime
// precision, and shares no code with the library.

#include <boost/multiprecision/mpfr.hpp>

#include <complex>

namespace oracle {

using real = boost::multiprecision::mpfr_float;

struct Complex {
    real re;
    real im;

    Complex() : re(0), im(0) {}
    Complex(real r) : re(std::move(r)), im(0) {}
    Complex(real r, real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(double r) : re(r), im(0) {}
    Complex(int r) : re(r), im(0) {}
    Complex(std::complex<double> z) : re(z.real()), im(z.imag()) {}

    std::complex<double> to_double() const
    {
        return {static_cast<double>(re), static_cast<double>(im)};
    }
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator-(const Complex& a);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
real abs(const Complex& a);
Complex exp(const Complex& a);
Complex log(const Complex& a);
Complex sin(const Complex& a);
Complex cos(const Complex& a);
Complex polar(const real& r, const real& angle);

/// Sets the working precision in decimal digits for subsequent calls.
void set_digits(int digits);
real pi();

/// Gamma by the Spouge formula with reflection.
Complex gamma(const Complex& z);

/// J_nu (sign = -1) or I_nu (sign = +1) at r e^{i angle} by the power series.
Complex bessel_series(const Complex& nu, const real& r, const real& angle, int sign);

std::complex<double> j(std::complex<double> nu, double r, double angle);
std::complex<double> i(std::complex<double> nu, double r, double angle);
/// K by the reflection formula; integer orders by a symmetric limit.
std::complex<double> k(std::complex<double> nu, double r, double angle);
std::complex<double> h1(std::complex<double> nu, double r, double angle);
std::complex<double> h2(std::complex<double> nu, double r, double angle);
std::complex<double> kummer(std::complex<double> a, std::complex<double> b, std::complex<double> z);
std::complex<double> gamma_d(std::complex<double> z);

/// J_{-2mu-m/2}(zeta1) J_{-2mu+m/2}(zeta2) with explicit polar angles.
std::complex<double> j_pair(std::complex<double> mu, int m, double r1, double a1, double r2, double a2);

/// The kernel at zeta = 4 pi w (principal data of w), any parity of m,
/// nongeneric orders by a symmetric limit in mu.
std::complex<double> bold_j_sq(std::complex<double> mu, int m, double wr, double wangle);

} // namespace oracle
