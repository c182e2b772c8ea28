#include <cmath>
#include <complex>

#include "doctest.h"
#include "spectral_portrait/airy.hpp"
#include "spectral_portrait/errors.hpp"

using namespace spectral_portrait;

namespace {

using lcplx = std::complex<long double>;

// Maclaurin oracle: Ai(z) = c1 f(z) - c2 g(z) in long double, for |z| <= 5.
lcplx ai_series(lcplx z) {
    const long double c1 = 0.355028053887817239260063186004183L;
    const long double c2 = 0.258819403792806798405183560189204L;
    const lcplx z3 = z * z * z;
    lcplx f = 1.0L, g = z, tf = 1.0L, tg = z;
    for (int k = 0; k < 200; ++k) {
        tf *= z3 / static_cast<long double>((3 * k + 2) * (3 * k + 3));
        tg *= z3 / static_cast<long double>((3 * k + 3) * (3 * k + 4));
        f += tf;
        g += tg;
        if (std::abs(tf) < 1e-30L * std::abs(f) && std::abs(tg) < 1e-30L * (std::abs(g) + 1e-300L)) break;
    }
    return c1 * f - c2 * g;
}

cplx oracle(cplx z) {
    const lcplx v = ai_series(lcplx(z.real(), z.imag()));
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

// Bisection on the oracle for the k-th zero of Ai(-r), bracketed around the seed.
double oracle_zero(int k) {
    const double seed = std::pow(1.5 * pi * (k - 0.25), 2.0 / 3.0);
    double lo = seed - 0.3, hi = seed + 0.3;
    double flo = oracle(-lo).real();
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi), fm = oracle(-mid).real();
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

cplx leading_term(cplx xi) { return std::exp(-2.0 / 3.0 * std::pow(xi, 1.5)) / (2.0 * std::sqrt(pi) * std::pow(xi, 0.25)); }

}  // namespace

TEST_CASE("value at the origin") {
    CHECK(std::abs(airy_v(0.0) - 0.3550280539) < 1e-10);
    CHECK(std::abs(airy_v(0.0) - oracle(0.0)) < 1e-15);
}

TEST_CASE("agreement with the series oracle inside |xi| <= 5") {
    for (int i = 0; i <= 20; ++i)
        for (int j = 0; j <= 20; ++j) {
            const cplx z(-3.5 + 7.0 * i / 20.0, -3.5 + 7.0 * j / 20.0);
            if (std::abs(z) > 5.0) continue;
            const cplx ref = oracle(z);
            CHECK(std::abs(airy_v(z) - ref) <= 1e-10 * std::max(std::abs(ref), 1e-3));
        }
}

TEST_CASE("leading asymptotic term at xi = 10") {
    const cplx v = airy_v(10.0);
    // Corrections -5/(72 zeta) + 385/(10368 zeta^2), zeta = (2/3) 10^{3/2}: about 3.3e-3 and 8.4e-5.
    const double rel = std::abs(v / leading_term(10.0) - 1.0);
    CHECK(rel < 4e-3);
    const double zeta = 2.0 / 3.0 * std::pow(10.0, 1.5);
    const double series = 1.0 - 5.0 / (72.0 * zeta) + 385.0 / (10368.0 * zeta * zeta);
    CHECK(std::abs(v / leading_term(10.0) - series) < 1e-5);
}

TEST_CASE("method switches at the crossover radius") {
    CHECK(airy_sample(cplx(1.0, 1.0)).method == AiryMethod::Series);
    CHECK(airy_sample(cplx(airy_crossover + 1.0, 0.0)).method == AiryMethod::Asymptotic);
    for (double r : {0.5, 3.0, 8.9, 9.1, 15.0}) {
        const AirySample s = airy_sample(std::polar(r, 0.7));
        if (s.method == AiryMethod::Asymptotic) CHECK(r >= airy_crossover);
    }
}

TEST_CASE("connection identity") {
    CHECK(airy_connection_residual(1.0) <= 1e-10);
    CHECK(airy_connection_residual(0.0) <= 1e-12);
    CHECK(airy_connection_residual(cplx(-3.0, 2.0)) <= 1e-9);
    // Both sides through the oracle.
    const cplx z(-3.0, 2.0), w = std::exp(cplx(0.0, 2.0 * pi / 3.0));
    const cplx rhs = std::exp(cplx(0.0, -pi / 3.0)) * oracle(w * z) + std::exp(cplx(0.0, pi / 3.0)) * oracle(std::conj(w) * z);
    CHECK(std::abs(oracle(z) - rhs) < 1e-12);
}

TEST_CASE("connection residual on the grid") {
    double worst = 0.0;
    for (int i = 0; i <= 20; ++i)
        for (int j = 0; j <= 20; ++j) worst = std::max(worst, airy_connection_residual(cplx(-5.0 + 0.5 * i, -5.0 + 0.5 * j)));
    CHECK(worst <= 1e-9);
}

TEST_CASE("zeros") {
    CHECK(airy_zero_seed(1) == doctest::Approx(2.3202).epsilon(1e-4));
    const AiryZeros z = airy_zeros(3);
    REQUIRE(z.size() == 3);
    for (int k = 1; k <= 3; ++k) CHECK(std::abs(z(k) - oracle_zero(k)) <= 1e-9);
    CHECK(std::abs(airy_v(-z(1))) <= 1e-10);
    CHECK(z(1) == doctest::Approx(2.338107).epsilon(1e-6));
    CHECK(z(2) == doctest::Approx(4.087949).epsilon(1e-6));
    CHECK(z(3) == doctest::Approx(5.520560).epsilon(1e-6));
}

TEST_CASE("zero seeds are within k^{-4/3} and zeros increase") {
    const AiryZeros z = airy_zeros(50);
    for (int k = 1; k <= 50; ++k) {
        CHECK(std::abs(z(k) - airy_zero_seed(k)) <= std::pow(k, -4.0 / 3.0));
        CHECK(std::abs(airy_v(-z(k))) <= 1e-10 * std::pow(z(k), 0.25));
        if (k > 1) CHECK(z(k) > z(k - 1));
    }
    CHECK_THROWS_AS(airy_zeros(0), DomainError);
}

TEST_CASE("real and positive on the positive axis") {
    for (double x : {0.1, 1.0, 4.0, 8.5, 9.5, 20.0}) {
        const cplx v = airy_v(x);
        CHECK(v.real() > 0.0);
        CHECK(std::abs(v.imag()) <= 1e-12 * std::abs(v));
    }
}

TEST_CASE("remainder bound near the negative axis") {
    double c_fit = 0.0;
    for (int i = 0; i <= 36; ++i) {
        const double r = 2.0 + 0.5 * i;
        const double arg = pi - 0.75 * std::pow(r, -1.5) * std::log(r);
        const cplx xi = std::polar(r, arg);
        c_fit = std::max(c_fit, std::abs(airy_v(xi) / leading_term(xi) - 1.0) * std::pow(r, 1.5));
    }
    CHECK(c_fit <= 5.0);
}

TEST_CASE("log-scaled evaluation") {
    for (cplx z : {cplx(1.0, 0.5), cplx(-2.0, 1.0), cplx(12.0, -3.0)}) {
        const cplx l = airy_v_log(z), v = airy_v(z);
        CHECK(std::abs(std::exp(l) - v) <= 1e-10 * std::abs(v));
    }
    const double x = 200.0;
    const double zeta = 2.0 / 3.0 * std::pow(x, 1.5);
    const double expected = -zeta - std::log(2.0 * std::sqrt(pi)) - 0.25 * std::log(x) + std::log1p(-5.0 / (72.0 * zeta));
    CHECK(airy_v_log(x).real() == doctest::Approx(expected).epsilon(1e-10));
    CHECK_THROWS_AS(airy_v(-cplx(0.0, 1.0) * 200.0 - 200.0), Overflow);
}
