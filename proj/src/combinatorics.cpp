#include <besselcx/combinatorics.hpp>
#include <besselcx/special_functions.hpp>

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

namespace besselcx {

RationalPolynomial::RationalPolynomial(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { trim(); }

void RationalPolynomial::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

RationalPolynomial RationalPolynomial::constant(const BigRational& c) { return RationalPolynomial({c}); }

RationalPolynomial RationalPolynomial::monomial(const BigRational& c, int degree)
{
    if (degree < 0)
        throw DomainError("monomial: negative degree");
    std::vector<BigRational> v(degree + 1);
    v[degree] = c;
    return RationalPolynomial(std::move(v));
}

int RationalPolynomial::degree() const { return c_.empty() ? zero_degree : static_cast<int>(c_.size()) - 1; }

BigRational RationalPolynomial::coeff(int i) const
{
    if (i < 0 || i >= static_cast<int>(c_.size()))
        return 0;
    return c_[i];
}

RationalPolynomial RationalPolynomial::derivative(int order) const
{
    if (order < 0)
        throw DomainError("derivative: negative order");
    std::vector<BigRational> d = c_;
    for (int k = 0; k < order && !d.empty(); ++k) {
        for (std::size_t i = 1; i < d.size(); ++i)
            d[i - 1] = d[i] * static_cast<long>(i);
        d.pop_back();
    }
    return RationalPolynomial(std::move(d));
}

double RationalPolynomial::operator()(double v) const
{
    double s = 0;
    for (std::size_t i = c_.size(); i-- > 0;)
        s = s * v + static_cast<double>(c_[i]);
    return s;
}

std::string RationalPolynomial::str() const
{
    if (c_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            continue;
        if (!first)
            os << " + ";
        os << "(" << c_[i] << ")";
        if (i > 0)
            os << "*v^" << i;
        first = false;
    }
    return os.str();
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const BigRational& s)
{
    for (auto& c : c_)
        c *= s;
    trim();
    return *this;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<BigRational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] += a.c_[i] * b.c_[j];
    return RationalPolynomial(std::move(c));
}

namespace {

constexpr long pascal_rows = 256;

const std::vector<std::vector<BigInt>>& pascal()
{
    static const std::vector<std::vector<BigInt>> rows = [] {
        std::vector<std::vector<BigInt>> t(pascal_rows);
        for (long n = 0; n < pascal_rows; ++n) {
            t[n].resize(n + 1);
            t[n][0] = t[n][n] = 1;
            for (long r = 1; r < n; ++r)
                t[n][r] = t[n - 1][r - 1] + t[n - 1][r];
        }
        return t;
    }();
    return rows;
}

BigInt binomial_int(long n, long r)
{
    if (r < 0 || n < 0 || n < r)
        return 0;
    if (n < pascal_rows)
        return pascal()[n][r];
    r = std::min(r, n - r);
    BigInt c = 1;
    for (long i = 1; i <= r; ++i)
        c = c * (n - r + i) / i;
    return c;
}

BigInt c_(long n, long r) { return binomial_int(n, r); }

} // namespace

BigRational binomial(long n, long r) { return BigRational(binomial_int(n, r)); }

BigRational generalized_binomial(long n, long r)
{
    if (r < 0)
        return 0;
    if (n >= 0)
        return binomial(n, r);
    BigRational c = 1;
    for (long i = 0; i < r; ++i)
        c = c * (n - i) / (i + 1);
    return c;
}

BigRational d_coeff(long n, long r)
{
    if (r < 0 || n < 2 * r)
        return 0;
    BigInt v = c_(n - r, r) + c_(n - r - 1, r - 1);
    return BigRational(r % 2 == 0 ? v : BigInt(-v));
}

BigRational b_coeff(long l, long n, long r)
{
    if (r < 0 || r > n - l || l < 0)
        return 0;
    return BigRational(c_(l + r, r) * c_(n - r, n - l - r) - c_(l + r - 1, r - 1) * c_(n - r - 1, n - l - r - 1));
}

BigRational a_coeff(long k, long l, long r)
{
    return BigRational(c_(l + r - 1, r - 1) * c_(2 * k - l - 1, k - l - r - 1) +
                       c_(l + r, r) * c_(2 * k - l - 1, k - l - r));
}

std::vector<BigRational> inversion_forward(const std::vector<BigRational>& g)
{
    std::vector<BigRational> f(g.size());
    for (long n = 0; n < static_cast<long>(g.size()); ++n)
        for (long r = 0; 2 * r <= n; ++r)
            f[n] += binomial(n, r) * g[n - 2 * r];
    return f;
}

std::vector<BigRational> inversion_backward(const std::vector<BigRational>& f)
{
    std::vector<BigRational> g(f.size());
    for (long n = 0; n < static_cast<long>(f.size()); ++n)
        for (long r = 0; 2 * r <= n; ++r)
            g[n] += d_coeff(n, r) * f[n - 2 * r];
    return g;
}

void Certificate::fail(const std::string& what)
{
    status = "fail";
    if (counterexamples.size() < 20)
        counterexamples.push_back(what);
}

namespace {

class Stopwatch {
public:
    Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
    double ms() const
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_).count();
    }

private:
    std::chrono::steady_clock::time_point t0_;
};

template <class... T>
std::string describe(const char* name, T... idx)
{
    std::ostringstream os;
    os << name << "(";
    const char* sep = "";
    ((os << sep << idx, sep = ","), ...);
    os << ")";
    return os.str();
}

void expect(Certificate& c, bool ok, const std::string& what)
{
    ++c.checks;
    if (!ok)
        c.fail(what);
}

BigRational random_rational(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000000);
    return BigRational(num(rng), den(rng));
}

} // namespace

Certificate check_inversion(int n_max, int sequences, int max_length, std::uint64_t seed)
{
    if (n_max < 0 || n_max > 200)
        throw DomainError("check_inversion: n_max must lie in [0, 200]");
    Stopwatch sw;
    Certificate c;
    c.lemma = "inversion formula";
    c.ranges = "n<=" + std::to_string(n_max) + ", 2s<=n; " + std::to_string(sequences) +
               " random sequences of length <= " + std::to_string(max_length);
    for (long n = 0; n <= n_max; ++n) {
        for (long s = 0; 2 * s <= n; ++s) {
            BigRational sum = 0;
            for (long r = 0; r <= s; ++r)
                sum += binomial(n, r) * d_coeff(n - 2 * r, s - r);
            expect(c, sum == (s == 0 ? 1 : 0), describe("sum C D", n, s));
            // the auxiliary sums; at s = 0 the first needs C_{-1}^0 = 1
            if (s >= 1) {
                BigRational s1 = 0, s2 = 0;
                for (long r = 0; r <= s; ++r) {
                    BigRational t = binomial(n, r) * binomial(n - s - r, s - r);
                    s1 += (s - r) % 2 == 0 ? t : BigRational(-t);
                }
                for (long r = 0; r <= s - 1; ++r) {
                    BigRational t = binomial(n, r) * binomial(n - s - r - 1, s - r - 1);
                    s2 += (s - r) % 2 == 0 ? t : BigRational(-t);
                }
                expect(c, s1 == binomial(2 * s - 1, s), describe("sum C C first", n, s));
                expect(c, s2 == -binomial(2 * s - 1, s - 1), describe("sum C C second", n, s));
            }
        }
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> len(1, max_length);
    for (int i = 0; i < sequences; ++i) {
        std::vector<BigRational> f(len(rng));
        for (auto& x : f)
            x = random_rational(rng);
        expect(c, inversion_forward(inversion_backward(f)) == f, describe("roundtrip f->g->f", i));
        expect(c, inversion_backward(inversion_forward(f)) == f, describe("roundtrip g->f->g", i));
    }
    c.elapsed_ms = sw.ms();
    return c;
}

Certificate check_b_identity(int n_max)
{
    if (n_max < 0 || n_max > 100)
        throw DomainError("check_b_identity: n_max must lie in [0, 100]");
    Stopwatch sw;
    Certificate c;
    c.lemma = "B identity";
    c.ranges = "l<=n<=" + std::to_string(n_max) + ", 0<=s<=n-l";
    for (long n = 0; n <= n_max; ++n) {
        for (long l = 0; l <= n; ++l) {
            for (long s = 0; s <= n - l; ++s) {
                BigRational sum = 0;
                for (long r = 0; r <= s; ++r)
                    sum += binomial(n, r) * b_coeff(l, n - 2 * r, s - r);
                expect(c, sum == binomial(n, l) * binomial(n - l, s), describe("sum C B", l, n, s));
            }
            for (long r = 0; r <= n - l; ++r) {
                BigRational b = b_coeff(l, n, r);
                expect(c, b == b_coeff(l, n, n - l - r), describe("B symmetry", l, n, r));
                if (!(l == 0 && (r == 0 || r == n)))
                    expect(c,
                           b == binomial(l + r, l) * binomial(n - r, l) - binomial(l + r - 1, l) * binomial(n - r - 1, l),
                           describe("B second form", l, n, r));
            }
        }
    }
    c.elapsed_ms = sw.ms();
    return c;
}

Certificate check_a_alternating(int k_max)
{
    if (k_max < 0 || k_max > 100)
        throw DomainError("check_a_alternating: k_max must lie in [0, 100]");
    Stopwatch sw;
    Certificate c;
    c.lemma = "A alternating sum";
    c.ranges = "1<=k<=" + std::to_string(k_max) + ", 0<=l<=k, 0<=r<=k-l; vanishing for -3<=l,r<=k+3";
    for (long k = 1; k <= k_max; ++k) {
        for (long l = 0; l <= k; ++l) {
            for (long r = 0; r <= k - l; ++r) {
                BigRational sum = 0;
                for (long n = l + r; n <= k; ++n) {
                    BigRational t = binomial(2 * k, k - n) * b_coeff(l, n, r);
                    sum += n % 2 == 0 ? t : BigRational(-t);
                }
                BigRational a = a_coeff(k, l, r);
                expect(c, sum == ((l + r) % 2 == 0 ? a : BigRational(-a)), describe("sum C B = A", k, l, r));
                if (l != 0 || r != 0)
                    expect(c,
                           a == binomial(l + r - 1, l) * binomial(2 * k - l - 1, k - l - r - 1) +
                                    binomial(l + r, l) * binomial(2 * k - l - 1, k - l - r),
                           describe("A second form", k, l, r));
            }
        }
        for (long l = -3; l <= k + 3; ++l)
            for (long r = -3; r <= k + 3; ++r)
                if (r < 0 || r > k - l)
                    expect(c, a_coeff(k, l, r) == 0, describe("A vanishing", k, l, r));
    }
    c.elapsed_ms = sw.ms();
    return c;
}

Certificate check_a_recurrences(int k_max)
{
    if (k_max < 1 || k_max > 100)
        throw DomainError("check_a_recurrences: k_max must lie in [1, 100]");
    Stopwatch sw;
    Certificate c;
    c.lemma = "A recurrences";
    c.ranges = "1<=k<=" + std::to_string(k_max) + ", 0<=r<=k+3; 2<=l<=k+1, -1<=r<=k-l+1";
    // The proofs read C_{-1}^0 as 1; of all A this only changes A_{0,0}^0, which
    // the l = 2 identities reach at k = 1.
    auto A = [](long k, long l, long r) {
        return binomial(l + r - 1, r - 1) * generalized_binomial(2 * k - l - 1, k - l - r - 1) +
               binomial(l + r, r) * generalized_binomial(2 * k - l - 1, k - l - r);
    };
    for (long k = 1; k <= k_max; ++k) {
        // closed forms at l = 0
        expect(c, 2 * A(k, 0, 0) == binomial(2 * k, k), describe("A_k0^0 closed form", k));
        for (long r = 1; r <= k; ++r)
            expect(c, A(k, 0, r) == binomial(2 * k, k - r), describe("A_k0^r closed form", k, r));

        expect(c, A(k + 1, 0, 0) == 2 * A(k, 0, 0) + A(k, 0, 1), describe("Ak0 r=0", k));
        expect(c, A(k + 1, 0, 1) == 2 * A(k, 0, 0) + 2 * A(k, 0, 1) + A(k, 0, 2), describe("Ak0 r=1", k));
        for (long r = 2; r <= k + 3; ++r)
            expect(c, A(k + 1, 0, r) == A(k, 0, r - 1) + 2 * A(k, 0, r) + A(k, 0, r + 1), describe("Ak0", k, r));

        expect(c, A(k + 1, 1, 0) == (k + 1) * (2 * A(k, 0, 0) - A(k, 0, 1)), describe("Ak1 r=0", k));
        for (long r = 1; r <= k + 3; ++r)
            expect(c, A(k + 1, 1, r) == (k + 1) * (A(k, 0, r) - A(k, 0, r + 1)), describe("Ak1", k, r));

        expect(c, A(k + 1, 1, 0) == 2 * A(k, 0, 0) - A(k, 0, 1) + A(k, 1, 0) + A(k, 1, 1), describe("Ak1 second r=0", k));
        for (long r = 1; r <= k + 3; ++r)
            expect(c,
                   A(k + 1, 1, r) == A(k, 0, r) - A(k, 0, r + 1) + A(k, 1, r - 1) + 2 * A(k, 1, r) + A(k, 1, r + 1),
                   describe("Ak1 second", k, r));

        for (long l = 2; l <= k + 1; ++l) {
            for (long r = -1; r <= k - l + 1; ++r) {
                BigRational lhs0 = BigRational((k - 1) * (l - 1) * l) * A(k + 1, l, r) -
                                   BigRational((k - 1) * (k + 1) * (k - l + 2)) * A(k, l - 2, r + 1);
                BigRational rhs0 = -BigRational((k + 1) * (2 * k - l) * (2 * k - l + 1)) * A(k - 1, l - 2, r + 1);
                expect(c, lhs0 == rhs0, describe("Akl first", k, l, r));

                BigRational lhs1 = BigRational(l) * A(k + 1, l, r) -
                                   BigRational(k - l + 2) * (A(k, l - 2, r + 1) + A(k, l - 1, r) - A(k, l - 1, r + 1));
                expect(c, lhs1 == -BigRational(2 * k - l) * A(k - 1, l - 2, r + 1), describe("Akl second", k, l, r));

                BigRational lhs2 = A(k + 1, l, r) - (A(k, l - 1, r) - A(k, l - 1, r + 1) + A(k, l, r - 1) +
                                                     2 * A(k, l, r) + A(k, l, r + 1));
                expect(c, lhs2 == A(k - 1, l - 2, r + 1), describe("Akl third", k, l, r));
            }
        }
    }
    c.elapsed_ms = sw.ms();
    return c;
}

RationalPolynomial p_poly(int k)
{
    if (k < 1)
        throw DomainError("p_poly: k must be at least 1");
    // v^k (1-v)^{k-1}
    std::vector<BigRational> c(2 * k);
    for (int j = 0; j <= k - 1; ++j) {
        BigRational b = binomial(k - 1, j);
        c[k + j] = j % 2 == 0 ? b : BigRational(-b);
    }
    return RationalPolynomial(std::move(c));
}

RationalPolynomial q_poly() { return RationalPolynomial({0, 1, -1}); }

RationalPolynomial r_poly() { return RationalPolynomial({1, -3}); }

RationalPolynomial poly_derivative(const RationalPolynomial& p, int l) { return p.derivative(l); }

Certificate check_pqr(int k_max, int l_max)
{
    if (k_max < 1 || k_max > 60 || l_max < 0)
        throw DomainError("check_pqr: need 1 <= k_max <= 60 and l_max >= 0");
    Stopwatch sw;
    Certificate c;
    c.lemma = "P Q R identities";
    c.ranges = "1<=k<=" + std::to_string(k_max) + ", 0<=l<=" + std::to_string(l_max);
    const RationalPolynomial Q = q_poly(), R = r_poly();
    std::vector<RationalPolynomial> P(k_max + 2);
    for (int k = 1; k <= k_max + 1; ++k)
        P[k] = p_poly(k);
    auto d = [&](int k, int l) { return l < 0 ? RationalPolynomial() : P[k].derivative(l); };
    for (int k = 1; k <= k_max; ++k) {
        expect(c, P[k + 1] == P[k] * Q, describe("P_{k+1} = P_k Q", k));
        for (int l = 0; l <= l_max; ++l) {
            // terms with negative derivative order carry a vanishing factor
            RationalPolynomial lhs = d(k + 1, l) * BigRational(k - l + 2);
            RationalPolynomial rhs = d(k, l) * Q * BigRational(k + 2);
            if (l >= 1)
                rhs += d(k, l - 1) * R * BigRational(l);
            if (l >= 2)
                rhs += d(k, l - 2) * BigRational((k - 1) * (l - 1) * l);
            expect(c, lhs == rhs, describe("PQR first", k, l));

            RationalPolynomial lhs2;
            if (k >= 2)
                lhs2 = d(k - 1, l) * BigRational((k - 1) * k * (k - l));
            RationalPolynomial rhs2 = d(k, l + 2) * Q * BigRational(k - 2) + d(k, l + 1) * R * BigRational(2 * k - l - 2) +
                                      d(k, l) * BigRational((k + 1) * (2 * k - l - 2) * (2 * k - l - 1));
            expect(c, lhs2 == rhs2, describe("PQR second", k, l));
        }
    }
    c.elapsed_ms = sw.ms();
    return c;
}

namespace {

void require_s_args(int k, double v, cplx a)
{
    if (k < 1 || k > 12)
        throw DomainError("S_k: k must lie in [1, 12]");
    if (!(v > 0 && v <= 1))
        throw DomainError("S_k: v must lie in (0, 1]");
    if (!(std::abs(a) > 0) || !is_finite(a))
        throw DomainError("S_k: a must be nonzero");
}

double to_d(const BigRational& x) { return static_cast<double>(x); }

} // namespace

TermSum s_kl_terms(int k, int l, cplx z, const EvalConfig& cfg)
{
    if (l < 0 || k < l)
        return {0, 0};
    PolarPoint p = PolarPoint::from_complex(z);
    TermSum s;
    for (int r = 0; r <= k - l; ++r) {
        cplx t = to_d(a_coeff(k, l, r)) * bessel_i(double(l + 2 * r), p, cfg);
        if (r % 2 != 0)
            t = -t;
        s.value += t;
        s.scale += std::abs(t);
    }
    return s;
}

cplx s_kl(int k, int l, cplx z, const EvalConfig& cfg) { return s_kl_terms(k, l, z, cfg).value; }

TermSum s_k_direct_terms(int k, double v, cplx a, const EvalConfig& cfg)
{
    require_s_args(k, v, a);
    const RationalPolynomial P = p_poly(k);
    std::vector<double> pd(k + 1);
    for (int j = 0; j <= k; ++j)
        pd[j] = P.derivative(j)(v);
    const PolarPoint z = PolarPoint::from_complex(a * v);
    TermSum s;
    for (int n = 0; n <= k; ++n) {
        // I_n^{(i)}(a v) for i <= n
        std::vector<cplx> id(n + 1);
        for (int i = 0; i <= n; ++i)
            id[i] = bessel_i_derivative(double(n), i, z, cfg);
        double outer = to_d(binomial(2 * k, k - n)) * (n % 2 == 0 ? 1 : -1);
        for (int r = 0; 2 * r <= n; ++r) {
            int j = n - 2 * r;
            cplx pre = outer * to_d(d_coeff(n, r)) * std::pow(2.0 / a, j);
            // Leibniz rule for d^j (I_n(a v) P_k(v))
            for (int i = 0; i <= j; ++i) {
                cplx t = pre * to_d(binomial(j, i)) * std::pow(a, i) * id[i] * pd[j - i];
                s.value += t;
                s.scale += std::abs(t);
            }
        }
    }
    return s;
}

cplx s_k_direct(int k, double v, cplx a, const EvalConfig& cfg) { return s_k_direct_terms(k, v, a, cfg).value; }

TermSum s_k_simplified_terms(int k, double v, cplx a, const EvalConfig& cfg)
{
    require_s_args(k, v, a);
    const RationalPolynomial P = p_poly(k);
    TermSum s;
    for (int l = 0; l <= k; ++l) {
        cplx f = std::pow(-2.0 / a, l) * P.derivative(l)(v);
        TermSum t = s_kl_terms(k, l, a * v, cfg);
        s.value += f * t.value;
        s.scale += std::abs(f) * t.scale;
    }
    return s;
}

cplx s_k_simplified(int k, double v, cplx a, const EvalConfig& cfg)
{
    return s_k_simplified_terms(k, v, a, cfg).value;
}

Certificate check_i_recurrence_lemmas(int n_max, int samples, std::uint64_t seed, const EvalConfig& cfg)
{
    if (n_max < 0 || n_max > 12)
        throw DomainError("check_i_recurrence_lemmas: n_max must lie in [0, 12]");
    Stopwatch sw;
    Certificate c;
    c.lemma = "I and K derivative recurrences";
    c.ranges = "n<=" + std::to_string(n_max) + ", l<=n, " + std::to_string(samples) + " random (nu, z)";
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(0, 1);
    const double tol = 1e-9;
    for (int i = 0; i < samples; ++i) {
        double nu = -2.5 + 5 * U(rng);
        PolarPoint z(0.2 + 9.8 * U(rng), -1.2 + 2.4 * U(rng));
        for (int n = 0; n <= n_max; ++n) {
            cplx si = 0, sk = 0;
            double mi = 0, mk = 0;
            for (int r = 0; 2 * r <= n; ++r) {
                double d = to_d(d_coeff(n, r));
                int j = n - 2 * r;
                cplx ti = d * std::pow(2.0, j) * bessel_i_derivative(nu, j, z, cfg);
                cplx tk = d * std::pow(-2.0, j) * bessel_k_derivative(nu, j, z, cfg);
                si += ti;
                sk += tk;
                mi += std::abs(ti);
                mk += std::abs(tk);
            }
            cplx ri = n == 0 ? bessel_i(nu, z, cfg) : bessel_i(nu - n, z, cfg) + bessel_i(nu + n, z, cfg);
            cplx rk = n == 0 ? bessel_k(nu, z, cfg) : bessel_k(nu - n, z, cfg) + bessel_k(nu + n, z, cfg);
            expect(c, std::abs(si - ri) <= tol * std::max(mi, std::abs(ri)), describe("I recurrence", i, n));
            expect(c, std::abs(sk - rk) <= tol * std::max(mk, std::abs(rk)), describe("K recurrence", i, n));

            for (int l = 0; l <= n; ++l) {
                cplx lhs = 0, rhs = 0;
                double m = 0;
                for (int r = 0; 2 * r <= n - l; ++r) {
                    cplx t = to_d(d_coeff(n, r)) * std::pow(2.0, n - 2 * r) * to_d(binomial(n - 2 * r, l)) *
                             bessel_i_derivative(nu, n - l - 2 * r, z, cfg);
                    lhs += t;
                    m += std::abs(t);
                }
                for (int s = 0; s <= n - l; ++s) {
                    cplx t = std::pow(2.0, l) * to_d(b_coeff(l, n, s)) * bessel_i(nu - n + l + 2 * s, z, cfg);
                    rhs += t;
                    m += std::abs(t);
                }
                expect(c, std::abs(lhs - rhs) <= tol * m, describe("I general l", i, n, l));
            }
        }
    }
    c.elapsed_ms = sw.ms();
    return c;
}

Certificate check_recursion_prop(int k_max, int samples, std::uint64_t seed, const EvalConfig& cfg)
{
    if (k_max < 1 || k_max > 8)
        throw DomainError("check_recursion_prop: k_max must lie in [1, 8]");
    Stopwatch sw;
    Certificate c;
    c.lemma = "S_k recursion";
    c.ranges = "1<=k<=" + std::to_string(k_max) + ", " + std::to_string(samples) + " random (v, a), h=1e-3";
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(0, 1);
    const double h = 1e-3;
    const double tol = 1e-6;
    for (int i = 0; i < samples; ++i) {
        double v = 0.1 + 0.8 * U(rng);
        cplx a = std::polar(0.5 + 7.5 * U(rng), pi * (2 * U(rng) - 1));
        double Q = v * (1 - v), R = 1 - 3 * v;
        for (int k = 1; k <= k_max; ++k) {
            TermSum sm = s_k_simplified_terms(k, v - h, a, cfg);
            TermSum s0 = s_k_simplified_terms(k, v, a, cfg);
            TermSum sp = s_k_simplified_terms(k, v + h, a, cfg);
            TermSum snext = s_k_simplified_terms(k + 1, v, a, cfg);
            TermSum sprev = k >= 2 ? s_k_simplified_terms(k - 1, v, a, cfg) : TermSum{};
            cplx d1 = (sp.value - sm.value) / (2 * h);
            cplx d2 = (sp.value - 2.0 * s0.value + sm.value) / (h * h);
            double m1 = (sp.scale + sm.scale) / (2 * h);
            double m2 = (sp.scale + 2 * s0.scale + sm.scale) / (h * h);
            double a2 = std::norm(a);
            cplx res = a * a * snext.value +
                       4.0 * (Q * (d2 - a * a * s0.value) + R * d1 + double(k * k - 1) * s0.value -
                              double((k - 1) * k) * sprev.value);
            double scale = a2 * snext.scale +
                           4 * (std::abs(Q) * (m2 + a2 * s0.scale) + std::abs(R) * m1 + std::abs(k * k - 1) * s0.scale +
                                (k - 1) * k * sprev.scale);
            expect(c, std::abs(res) <= tol * scale, describe("recursion", i, k));
        }
    }
    c.elapsed_ms = sw.ms();
    return c;
}

} // namespace besselcx
