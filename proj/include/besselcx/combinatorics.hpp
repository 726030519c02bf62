#pragma once

#include <besselcx/types.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace besselcx {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Dense polynomial in one variable with exact rational coefficients; index i
/// holds the coefficient of v^i. Trailing zeros are always trimmed.
class RationalPolynomial {
public:
    static constexpr int zero_degree = std::numeric_limits<int>::min();

    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<BigRational> coeffs);

    static RationalPolynomial constant(const BigRational& c);
    /// c v^degree
    static RationalPolynomial monomial(const BigRational& c, int degree);

    /// zero_degree for the zero polynomial.
    int degree() const;
    bool is_zero() const { return c_.empty(); }
    BigRational coeff(int i) const;
    const std::vector<BigRational>& coefficients() const { return c_; }

    RationalPolynomial derivative(int order = 1) const;
    double operator()(double v) const;
    std::string str() const;

    RationalPolynomial& operator+=(const RationalPolynomial& o);
    RationalPolynomial& operator-=(const RationalPolynomial& o);
    RationalPolynomial& operator*=(const BigRational& s);

    friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
    friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
    friend RationalPolynomial operator*(RationalPolynomial a, const BigRational& s) { return a *= s; }
    friend RationalPolynomial operator*(const BigRational& s, RationalPolynomial a) { return a *= s; }
    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) { return a.c_ == b.c_; }

private:
    void trim();
    std::vector<BigRational> c_;
};

/// C_n^r, zero when r < 0 or n < r. Negative n also gives zero; the
/// generalized value lives in generalized_binomial.
BigRational binomial(long n, long r);
/// n (n-1) ... (n-r+1) / r! for any integer n and r >= 0, zero for r < 0.
BigRational generalized_binomial(long n, long r);

/// D_n^r = (-1)^r (C_{n-r}^r + C_{n-r-1}^{r-1}) for 0 <= 2r <= n, else zero.
BigRational d_coeff(long n, long r);
/// B_{l,n}^r = C_{l+r}^r C_{n-r}^{n-l-r} - C_{l+r-1}^{r-1} C_{n-r-1}^{n-l-r-1}
/// for 0 <= r <= n - l, else zero.
BigRational b_coeff(long l, long n, long r);
/// A_{k,l}^r = C_{l+r-1}^{r-1} C_{2k-l-1}^{k-l-r-1} + C_{l+r}^r C_{2k-l-1}^{k-l-r}
/// for all indices, with the binomial conventions above.
BigRational a_coeff(long k, long l, long r);

/// f_n = sum_r C_n^r g_{n-2r}
std::vector<BigRational> inversion_forward(const std::vector<BigRational>& g);
/// g_n = sum_r D_n^r f_{n-2r}
std::vector<BigRational> inversion_backward(const std::vector<BigRational>& f);

struct Certificate {
    std::string lemma;
    std::string ranges;
    std::string status = "pass";
    std::vector<std::string> counterexamples;
    long checks = 0;
    double elapsed_ms = 0;

    bool passed() const { return status == "pass"; }
    /// Records a failed check; only the first few are kept verbatim.
    void fail(const std::string& what);
};

Certificate check_inversion(int n_max, int sequences = 1000, int max_length = 64, std::uint64_t seed = 20240611);
Certificate check_b_identity(int n_max);
Certificate check_a_alternating(int k_max);
Certificate check_a_recurrences(int k_max);

/// P_k = v^k (1-v)^{k-1}, k >= 1.
RationalPolynomial p_poly(int k);
/// Q = v (1-v)
RationalPolynomial q_poly();
/// R = 1 - 3v
RationalPolynomial r_poly();
RationalPolynomial poly_derivative(const RationalPolynomial& p, int l);
Certificate check_pqr(int k_max, int l_max);

/// A value known to be a sum of terms, with the sum of their magnitudes.
struct TermSum {
    cplx value;
    double scale = 0;
};

/// S_{k,l}(z) = sum_r (-1)^r A_{k,l}^r I_{l+2r}(z), zero unless 0 <= l <= k.
TermSum s_kl_terms(int k, int l, cplx z, const EvalConfig& cfg = {});
cplx s_kl(int k, int l, cplx z, const EvalConfig& cfg = {});
/// sum_n (-1)^n C_{2k}^{k-n} sum_r (2/a)^{n-2r} D_n^r d^{n-2r}/dv^{n-2r} (I_n(a v) P_k(v))
TermSum s_k_direct_terms(int k, double v, cplx a, const EvalConfig& cfg = {});
cplx s_k_direct(int k, double v, cplx a, const EvalConfig& cfg = {});
/// sum_l (-2/a)^l P_k^{(l)}(v) S_{k,l}(a v)
TermSum s_k_simplified_terms(int k, double v, cplx a, const EvalConfig& cfg = {});
cplx s_k_simplified(int k, double v, cplx a, const EvalConfig& cfg = {});

/// Derivative recurrences for I and K (l = 0) and the general-l identity for I,
/// at random (nu, z); tolerance 1e-9 relative to the term magnitudes.
Certificate check_i_recurrence_lemmas(int n_max, int samples, std::uint64_t seed = 20240611,
                                      const EvalConfig& cfg = {});

/// Residual of
///   a^2 S_{k+1} + 4 (Q (S_k'' - a^2 S_k) + R S_k' + (k^2 - 1) S_k - (k-1) k S_{k-1})
/// with v-derivatives by central differences of step 1e-3. Every S vanishes,
/// so this only checks that the magnitudes stay consistent.
Certificate check_recursion_prop(int k_max, int samples, std::uint64_t seed = 20240611, const EvalConfig& cfg = {});

} // namespace besselcx
