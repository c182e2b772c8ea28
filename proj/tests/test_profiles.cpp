#include <cmath>

#include "doctest.h"
#include "spectral_portrait/errors.hpp"
#include "spectral_portrait/profiles.hpp"

using namespace spectral_portrait;

namespace {

std::vector<Profile> all_profiles() {
    return {Profile::linear(), Profile::quadratic(0.25), Profile::shifted_square(), Profile::half_sine()};
}

}  // namespace

TEST_CASE("eval examples") {
    CHECK(std::abs(Profile::linear().eval(0.3) - 0.3) < 1e-15);
    const Profile fig7 = Profile::quadratic_from(49.0 / 64.0, -14.0 / 64.0, 1.0 / 64.0);
    CHECK(fig7.beta() == doctest::Approx(1.0 / 7.0).epsilon(1e-15));
    CHECK(std::abs(fig7.eval(1.0) - 0.5625) < 1e-15);
    CHECK(std::abs(Profile::shifted_square().eval(-1.0)) == 0.0);
}

TEST_CASE("range examples") {
    auto [a0, b0] = range(Profile::linear());
    CHECK(a0 == -1.0);
    CHECK(b0 == 1.0);
    auto [a1, b1] = range(Profile::quadratic(0.25));
    CHECK(a1 == doctest::Approx(1.5625));
    CHECK(b1 == doctest::Approx(0.5625));
    auto [a2, b2] = range(Profile::shifted_square());
    CHECK(a2 == 0.0);
    CHECK(b2 == 1.0);
    // The quadratic's semistrip floor is the vertex value.
    CHECK(semistrip(Profile::quadratic(0.25)).first == 0.0);
}

TEST_CASE("quadratic shift must lie inside the interval") {
    CHECK_THROWS_AS(Profile::quadratic(1.0), DomainError);
    CHECK_THROWS_AS(Profile::quadratic(-1.5), DomainError);
    CHECK_THROWS_AS(Profile::quadratic_from(-1.0, 0.0, 0.0), DomainError);
}

TEST_CASE("profiles are real on the interval and monotone where required") {
    for (const Profile& p : all_profiles()) {
        double prev = -1e300;
        for (int j = 0; j <= 400; ++j) {
            const double x = -1.0 + 2.0 * j / 400.0;
            const cplx q = p.eval(x);
            CHECK(q.imag() == 0.0);
            if (p.monotone()) {
                CHECK(q.real() > prev);
                prev = q.real();
            }
        }
    }
}

TEST_CASE("turning point examples") {
    auto lin = turning_points(Profile::linear(), cplx(-0.2, -0.3));
    REQUIRE(lin.size() == 1);
    CHECK(std::abs(lin[0] - cplx(-0.2, -0.3)) < 1e-15);

    auto sq = turning_points(Profile::shifted_square(), 0.25);
    REQUIRE(sq.size() == 1);
    CHECK(std::abs(sq[0]) < 1e-12);

    auto quad = turning_points(Profile::quadratic(0.0), cplx(0.0, -1.0));
    REQUIRE(quad.size() == 2);
    const cplx r = std::exp(cplx(0.0, -pi / 4));
    CHECK(std::abs(quad[0] - r) < 1e-12);
    CHECK(std::abs(quad[1] + r) < 1e-12);
}

TEST_CASE("turning points solve q = lambda") {
    for (const Profile& p : all_profiles()) {
        const auto [lo, hi] = semistrip(p);
        for (int i = 1; i < 10; ++i)
            for (double t : {0.0, 0.1, 0.5, 1.0, 3.0}) {
                const cplx lambda(lo + (hi - lo) * i / 10.0, -t);
                for (cplx xi : turning_points(p, lambda))
                    CHECK(std::abs(p.eval(xi) - lambda) <= 1e-12 * (1.0 + std::abs(lambda)));
            }
    }
}

TEST_CASE("real values in the range have a real turning point inside the interval") {
    for (const Profile& p : all_profiles()) {
        const auto [lo, hi] = semistrip(p);
        for (int i = 1; i < 20; ++i) {
            const double c = lo + (hi - lo) * i / 20.0;
            bool found = false;
            for (cplx xi : turning_points(p, c))
                if (std::abs(xi.imag()) < 1e-12 && std::abs(xi.real()) < 1.0) found = true;
            CHECK(found);
        }
    }
}

TEST_CASE("first derivative agrees with central differences") {
    const double h = 1e-5;
    for (const Profile& p : all_profiles())
        for (int i = 0; i < 10; ++i)
            for (int j = 0; j < 10; ++j) {
                const cplx z(-1.0 + 2.0 * i / 9.0, -1.0 * j / 9.0);
                const cplx fd = (p.eval(z + h) - p.eval(z - h)) / (2.0 * h);
                const cplx d1 = p.eval_d1(z);
                CHECK(std::abs(fd - d1) <= 1e-7 * std::max(1.0, std::abs(d1)));
                const cplx fd2 = (p.eval_d1(z + h) - p.eval_d1(z - h)) / (2.0 * h);
                CHECK(std::abs(fd2 - p.eval_d2(z)) <= 1e-7 * std::max(1.0, std::abs(fd2)));
            }
}

TEST_CASE("range endpoints are the endpoint values for monotone kinds") {
    for (const Profile& p : all_profiles()) {
        if (!p.monotone()) continue;
        const auto [a, b] = range(p);
        CHECK(a == doctest::Approx(p.eval(-1.0).real()));
        CHECK(b == doctest::Approx(p.eval(1.0).real()));
    }
}

TEST_CASE("reduction maps between normalized and original coordinates") {
    const Profile p = Profile::quadratic_from(2.0, -1.0, 3.0);
    const cplx lam(0.4, -0.7);
    CHECK(std::abs(p.to_normalized(p.to_original(lam)) - lam) < 1e-15);
    CHECK(std::abs(p.eval(0.3) - p.to_original(p.normalized().eval(0.3))) < 1e-14);
}
