#include <besselcx/special_functions.hpp>

#include "oracle/oracle.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <random>

using namespace besselcx;

TEST_SUITE("special_functions")
{
    TEST_CASE("gamma")
    {
        oracle::set_digits(40);
        CHECK(rel_err(besselcx::gamma(5.0), 24.0) < 1e-14);
        CHECK(rel_err(besselcx::gamma(0.5), std::sqrt(pi)) < 1e-14);
        cplx z(0.3, 0.7);
        CHECK(rel_err(besselcx::gamma(z), oracle::gamma_d(z)) < 1e-12);
        CHECK(rel_err(besselcx::gamma(cplx(-2.5, 0.1)), oracle::gamma_d(cplx(-2.5, 0.1))) < 1e-12);
        CHECK_THROWS_AS(besselcx::gamma(-3.0), PoleError);
        CHECK(std::abs(rgamma(-3.0)) == 0.0);
    }

    TEST_CASE("bessel_j values")
    {
        oracle::set_digits(40);
        CHECK(rel_err(bessel_j(0.0, PolarPoint(1, 0)), 0.7651976865579666) < 1e-14);
        CHECK(rel_err(bessel_j(0.0, PolarPoint(1e-12, 0)), 1.0) < 1e-15);
        CHECK(std::abs(bessel_j(0.5, PolarPoint(pi, 0))) < 1e-15);
        CHECK(rel_err(bessel_j(0.0, PolarPoint(1, 2 * pi)), bessel_j(0.0, PolarPoint(1, 0))) < 1e-14);
        CHECK_THROWS_AS(bessel_j(0.3, PolarPoint(1, 9 * pi)), BranchError);
    }

    TEST_CASE("bessel_j against the series oracle")
    {
        oracle::set_digits(40);
        std::mt19937_64 rng(11);
        std::uniform_real_distribution<double> U(0, 1);
        double worst = 0;
        for (int i = 0; i < 60; ++i) {
            cplx nu(6 * U(rng) - 3, U(rng) - 0.5);
            double r = 0.05 + 30 * U(rng) * U(rng);
            double a = (2 * U(rng) - 1) * 3;
            cplx v = bessel_j(nu, PolarPoint(r, a));
            cplx o = oracle::j(nu, r, a);
            // relative to the size of the two exponential branches
            double scale = std::max(std::abs(o), std::exp(std::abs(r * std::sin(a))) / std::sqrt(r) * 1e-3);
            worst = std::max(worst, std::abs(v - o) / scale);
        }
        CHECK(worst < 1e-9);
    }

    TEST_CASE("hankel functions")
    {
        oracle::set_digits(40);
        cplx sum = hankel_h1(0.0, PolarPoint(1, 0)) + hankel_h2(0.0, PolarPoint(1, 0));
        // integer order goes through the order limit
        CHECK(rel_err(sum, 1.5303953731159332) < 1e-9);
        for (double x : {0.5, 2.0, 7.0}) {
            cplx closed = std::sqrt(2 / (pi * x)) * std::exp(cplx(0, x - pi / 2));
            CHECK(rel_err(hankel_h1(0.5, PolarPoint(x, 0)), closed) < 1e-12);
        }
        PolarPoint z(100, 0);
        CHECK(rel_err(hankel_h1_asymptotic(0.0, z).value, hankel_h1(0.0, z)) < 1e-3);
        CHECK(rel_err(hankel_h1(0.3, PolarPoint(2, 0.4)), oracle::h1(0.3, 2, 0.4)) < 1e-12);
        CHECK(rel_err(hankel_h2(1.0, PolarPoint(3, -0.2)), oracle::h2(1.0, 3, -0.2)) < 1e-9);
    }

    TEST_CASE("connection formula")
    {
        std::mt19937_64 rng(3);
        std::uniform_real_distribution<double> U(0, 1);
        double worst = 0;
        for (int i = 0; i < 100; ++i) {
            double nu = 6 * U(rng) - 3;
            if (std::abs(nu - std::round(nu)) < 1e-3)
                continue;
            PolarPoint z(0.5 + 19.5 * U(rng), (pi - 0.2) * (2 * U(rng) - 1));
            cplx h1 = hankel_h1(nu, z), h2 = hankel_h2(nu, z);
            worst = std::max(worst, std::abs(h1 + h2 - 2.0 * bessel_j(nu, z)) / (std::abs(h1) + std::abs(h2)));
        }
        CHECK(worst < 1e-9);
    }

    TEST_CASE("series and large argument forms overlap")
    {
        double worst = 0;
        for (double nu : {-2.0, -1.3, 0.0, 0.5, 1.7, 2.0})
            for (double r : {10.0, 14.0, 20.0})
                for (double a : {0.0, 0.5, -1.0}) {
                    PolarPoint z(r, a);
                    worst = std::max(worst, rel_err(bessel_j_large_argument(nu, z), bessel_j_series(nu, z)));
                }
        CHECK(worst < 1e-6);
    }

    TEST_CASE("small argument bound")
    {
        for (double nu : {0.3, 1.0, 2.5})
            for (double r : {1e-3, 0.1, 0.5, 1.0})
                for (double a : {0.0, 1.0, 2.5}) {
                    cplx v = bessel_j(nu, PolarPoint(r, a));
                    CHECK(std::abs(v) <= 2 * std::pow(r / 2, nu) / std::abs(besselcx::gamma(nu + 1)));
                }
    }

    TEST_CASE("negative integer order")
    {
        for (int n = 1; n <= 5; ++n) {
            PolarPoint z(1.7, 0.4);
            cplx jn = bessel_j(double(n), z);
            CHECK(rel_err(bessel_j(double(-n), z), (n % 2 ? -1.0 : 1.0) * jn) < 1e-13);
        }
    }

    TEST_CASE("modified functions")
    {
        oracle::set_digits(40);
        CHECK(rel_err(bessel_i(0.0, PolarPoint(1e-12, 0)), 1.0) < 1e-15);
        CHECK(rel_err(bessel_k(0.5, PolarPoint(1, 0)), std::sqrt(pi / 2) * std::exp(-1.0)) < 1e-13);
        CHECK(rel_err(bessel_k(0.0, PolarPoint(2, 0)), oracle::k(0.0, 2, 0)) < 1e-10);
        CHECK(rel_err(bessel_i(1.4, PolarPoint(3, 0.8)), oracle::i(1.4, 3, 0.8)) < 1e-12);
        for (double nu : {0.3, 1.0, 2.7}) {
            PolarPoint z(2.2, 0.6);
            CHECK(rel_err(bessel_k(-nu, z), bessel_k(nu, z)) < 1e-10);
        }
    }

    TEST_CASE("K asymptotic error halves per doubling")
    {
        double prev = 0;
        for (double x : {10.0, 20.0, 40.0}) {
            PolarPoint z(x, 0);
            double e = rel_err(bessel_k_asymptotic(1.3, z).leading, bessel_k(1.3, z));
            if (prev > 0) {
                CHECK(prev / e > 1.7);
                CHECK(prev / e < 2.3);
            }
            prev = e;
        }
    }

    TEST_CASE("derivatives")
    {
        oracle::set_digits(40);
        PolarPoint z(1, 0);
        CHECK(rel_err(bessel_i_derivative(0.7, 0, z), bessel_i(0.7, z)) < 1e-15);
        cplx d = bessel_i_derivative(1.0, 1, z);
        CHECK(rel_err(d, (bessel_i(0.0, z) + bessel_i(2.0, z)) / 2.0) < 1e-14);
        double h = 1e-4;
        cplx fd = (bessel_i(1.0, PolarPoint(1 + h, 0)) - bessel_i(1.0, PolarPoint(1 - h, 0))) / (2 * h);
        CHECK(rel_err(d, fd) < 1e-7);

        PolarPoint w(1.5, 0);
        cplx di = bessel_i_derivative(2.0, 1, w);
        CHECK(rel_err(1.5 * di + 2.0 * bessel_i(2.0, w), 1.5 * oracle::i(1.0, 1.5, 0)) < 1e-12);
        CHECK(rel_err(1.5 * di - 2.0 * bessel_i(2.0, w), 1.5 * oracle::i(3.0, 1.5, 0)) < 1e-12);

        cplx kd = bessel_k_derivative(0.4, 1, w);
        cplx kfd = (bessel_k(0.4, PolarPoint(1.5 + h, 0)) - bessel_k(0.4, PolarPoint(1.5 - h, 0))) / (2 * h);
        CHECK(rel_err(kd, kfd) < 1e-7);
        CHECK_THROWS_AS(bessel_i_derivative(1.0, 33, z), DomainError);
    }

    TEST_CASE("kummer")
    {
        oracle::set_digits(40);
        CHECK(rel_err(kummer_m(2.0, 2.0, 1.0), std::exp(1.0)) < 1e-14);
        CHECK(rel_err(kummer_m(1.0, 2.0, 1.0), std::exp(1.0) - 1) < 1e-14);
        CHECK(rel_err(kummer_m(cplx(0.3, 1), cplx(1.2, -0.4), 0.0), 1.0) < 1e-15);
        cplx a(1.3, 0.2), b(2.9, -0.5), zz(-4.0, 2.0);
        CHECK(rel_err(kummer_m(a, b, zz), oracle::kummer(a, b, zz)) < 1e-11);
        CHECK_THROWS_AS(kummer_m(1.0, -2.0, 1.0), DomainError);
    }
}
