#include <cmath>

#include "doctest.h"
#include "spectral_portrait/errors.hpp"
#include "spectral_portrait/graph.hpp"
#include "spectral_portrait/phase.hpp"

using namespace spectral_portrait;

namespace {

const cplx knot_couette(0.0, -1.0 / std::sqrt(3.0));

double distance_to_segment(cplx z, cplx a, cplx b) {
    const cplx d = b - a;
    const double s = std::clamp(((z - a) * std::conj(d)).real() / std::norm(d), 0.0, 1.0);
    return std::abs(z - (a + s * d));
}

// Oracle for Q+- by Simpson along x0 -> Re xi -> xi, independent of the library quadrature.
cplx leg_integral(const Profile& p, double x0, cplx xi, cplx lambda) {
    auto w = [&](cplx z) { return std::exp(cplx(0.0, pi / 4)) * std::sqrt(p.eval(z) - lambda); };
    auto simpson = [&](cplx a, cplx b, cplx w_start) {
        const int n = 4000;
        cplx s = 0.0, prev = w_start, sum = 0.0;
        const cplx h = (b - a) / static_cast<double>(n);
        // continuation by nearest sign
        std::vector<cplx> vals(n + 1);
        vals[0] = w_start;
        for (int i = 1; i <= n; ++i) {
            cplx v = w(a + h * static_cast<double>(i));
            if (std::abs(v - prev) > std::abs(v + prev)) v = -v;
            vals[i] = v;
            prev = v;
        }
        for (int i = 0; i <= n; ++i) sum += (i == 0 || i == n ? 1.0 : (i % 2 ? 4.0 : 2.0)) * vals[i];
        s = sum * h / 3.0;
        return std::make_pair(s, vals[n]);
    };
    auto [first, w_mid] = simpson(cplx(x0, 0.0), cplx(xi.real(), 0.0), w(x0));
    auto [second, w_end] = simpson(cplx(xi.real(), 0.0), xi, w_mid);
    (void)w_end;
    return first + second;
}

}  // namespace

TEST_CASE("tag names round trip") {
    for (CurveTag t : {CurveTag::GammaPlus, CurveTag::GammaMinus, CurveTag::GammaInfty, CurveTag::Gamma0, CurveTag::GammaA,
                       CurveTag::GammaB})
        CHECK(curve_tag_from_string(to_string(t)) == t);
    CHECK_THROWS_AS(curve_tag_from_string("gamma_x"), ConfigError);
}

TEST_CASE("Couette closed-form graph") {
    const LimitGraph g = build_limit_graph(Profile::linear(), 6.0, 400);
    CHECK(g.family == GraphFamily::Couette);
    REQUIRE(g.knots.size() == 1);
    CHECK(std::abs(g.knots[0].point - knot_couette) < 1e-12);
    for (const auto& c : g.curves) {
        for (cplx z : c.samples) {
            double d = 0.0;
            if (c.tag == CurveTag::GammaPlus) d = distance_to_segment(z, 1.0, knot_couette);
            else if (c.tag == CurveTag::GammaMinus) d = distance_to_segment(z, -1.0, knot_couette);
            else d = std::abs(z.real()) + std::max(0.0, z.imag() - knot_couette.imag());
            CHECK(d <= 1e-12);
        }
    }
}

TEST_CASE("traced gamma_plus of the linear profile is the segment") {
    const SpectralCurve c = trace_curve(Profile::linear(), CurveTag::GammaPlus, 6.0, 200);
    double worst = 0.0;
    for (cplx z : c.samples)
        if (z.real() >= 0.0) worst = std::max(worst, distance_to_segment(z, 1.0, knot_couette));
    CHECK(worst <= 1e-6);
}

TEST_CASE("shifted square gamma_minus ends at a = 0") {
    const SpectralCurve c = trace_curve(Profile::shifted_square(), CurveTag::GammaMinus, 6.0, 200);
    const cplx end = std::abs(c.samples.front().imag()) < std::abs(c.samples.back().imag()) ? c.samples.front() : c.samples.back();
    CHECK(std::abs(end) <= 1e-8);
}

TEST_CASE("traced curves are graphs with vanishing defining part and monotone phase") {
    for (const Profile& p : {Profile::shifted_square(), Profile::half_sine()}) {
        for (CurveTag tag : {CurveTag::GammaPlus, CurveTag::GammaMinus, CurveTag::GammaInfty}) {
            const SpectralCurve c = trace_curve(p, tag, 3.0, 400);
            REQUIRE(c.samples.size() >= 100);
            const bool over_t = tag == CurveTag::GammaInfty;
            for (std::size_t i = 1; i < c.samples.size(); ++i) {
                const double dc = over_t ? c.samples[i].imag() - c.samples[i - 1].imag()
                                         : c.samples[i].real() - c.samples[i - 1].real();
                CHECK(std::abs(dc) > 1e-9);
                CHECK((c.phase[i] - c.phase[i - 1]) * (c.phase[1] - c.phase[0]) > 0.0);
            }
            const auto [lo, hi] = semistrip(p);
            for (cplx z : c.samples) {
                if (std::abs(z.imag()) < 1e-9) continue;  // the endpoint on the axis
                CHECK(std::abs(defining_functional(p, tag, z).real()) <= 1e-8);
                CHECK(z.imag() <= 1e-12);
                CHECK(z.real() >= lo - 1e-12);
                CHECK(z.real() <= hi + 1e-12);
            }
        }
    }
}

TEST_CASE("single knot of the shifted square") {
    const Profile p = Profile::shifted_square();
    const auto knots = knot_points(p);
    REQUIRE(knots.size() == 1);
    CHECK(knots[0].name == "lambda_0");
    const cplx k = knots[0].point;
    const QValues q = q_functionals(p, k);
    CHECK(std::abs(q.Qp.real()) <= 1e-8);
    CHECK(std::abs(q.Qm.real()) <= 1e-8);
    CHECK(std::abs(q.Q.real()) <= 2e-8);
    // Independent quadrature of the two legs.
    const cplx xi = turning_points(p, k).front();
    CHECK(std::abs(leg_integral(p, -1.0, xi, k).real()) <= 1e-6);
    CHECK(std::abs(leg_integral(p, 1.0, xi, k).real()) <= 1e-6);
}

TEST_CASE("shifted square graph topology") {
    const LimitGraph g = build_limit_graph(Profile::shifted_square(), 6.0, 400);
    CHECK(g.family == GraphFamily::Monotone);
    int retained = 0;
    for (const auto& c : g.curves) retained += c.excluded ? 0 : 1;
    CHECK(retained == 3);
    const cplx k = g.knot("lambda_0");
    for (CurveTag t : {CurveTag::GammaPlus, CurveTag::GammaMinus, CurveTag::GammaInfty}) {
        const auto cs = g.retained(t);
        REQUIRE(cs.size() == 1);
        const auto& s = cs[0]->samples;
        const double to_knot = std::min(std::abs(s.front() - k), std::abs(s.back() - k));
        CHECK(to_knot <= 1e-6);
    }
    const auto& plus = g.retained(CurveTag::GammaPlus)[0]->samples;
    const auto& minus = g.retained(CurveTag::GammaMinus)[0]->samples;
    CHECK(std::min(std::abs(plus.front() - 1.0), std::abs(plus.back() - 1.0)) <= 1e-12);
    CHECK(std::min(std::abs(minus.front()), std::abs(minus.back())) <= 1e-12);
}

TEST_CASE("quadratic gamma_0 is the ray arg = -pi/4") {
    const Profile p = Profile::quadratic(0.25);
    const SpectralCurve c = trace_curve(p, CurveTag::Gamma0, 3.0, 200);
    for (cplx z : c.samples)
        if (std::abs(z) > 1e-12) CHECK(std::abs(std::arg(z) + pi / 4) <= 1e-10);
}

TEST_CASE("quadratic knots") {
    const Profile p = Profile::quadratic(0.0);
    const auto knots = knot_points(p);
    REQUIRE(knots.size() == 2);
    const cplx l1 = knots[0].point;
    CHECK(std::abs(std::arg(l1) + pi / 4) <= 1e-6);
    // Symmetric profile: the two knots coincide.
    CHECK(std::abs(knots[0].point - knots[1].point) <= 1e-6);

    const Profile fig7 = Profile::quadratic_from(49.0 / 64.0, -14.0 / 64.0, 1.0 / 64.0);
    const LimitGraph g = build_limit_graph(fig7, 6.0, 400);
    CHECK(g.family == GraphFamily::Quadratic);
    const cplx k1 = g.knot("lambda_1"), k2 = g.knot("lambda_2");
    CHECK(std::abs(std::arg(k1 - fig7.shift()) + pi / 4) <= 1e-6);
    int retained = 0;
    for (const auto& c : g.curves) retained += c.excluded ? 0 : 1;
    CHECK(retained == 5);
    // gamma_0, gamma_b, gamma_minus meet at lambda_1; gamma_minus, gamma_a, gamma_infty at lambda_2.
    auto touches = [&](CurveTag t, cplx k) {
        for (const auto* c : g.retained(t))
            if (std::min(std::abs(c->samples.front() - k), std::abs(c->samples.back() - k)) <= 1e-6) return true;
        return false;
    };
    CHECK(touches(CurveTag::Gamma0, k1));
    CHECK(touches(CurveTag::GammaB, k1));
    CHECK(touches(CurveTag::GammaMinus, k1));
    CHECK(touches(CurveTag::GammaMinus, k2));
    CHECK(touches(CurveTag::GammaA, k2));
    CHECK(touches(CurveTag::GammaInfty, k2));
}

TEST_CASE("Orr-Sommerfeld Couette frame") {
    const OsFrame f = os_frame(1.0 / 4000.0, 1.0);
    CHECK(f.c(0.0) == doctest::Approx(2.0 * std::sqrt(pi)).epsilon(1e-12));
    CHECK(f.c(0.0) == doctest::Approx(3.544908).epsilon(1e-6));
    CHECK(std::abs(f.phi(0.0)) <= 1e-15);
    CHECK(f.t_lo == doctest::Approx(0.5225).epsilon(1e-3));
    CHECK(f.t_hi == doctest::Approx(1.0842).epsilon(1e-3));
    for (int i = 0; i <= 20; ++i) {
        const double t = f.t_lo + (f.t_hi - f.t_lo) * i / 20.0;
        CHECK(f.gamma(t, +1) * f.gamma(t, -1) < 0.0);
    }
    const auto curves = couette_os_curves(1.0 / 4000.0, 1.0, 1.5);
    CHECK(curves.size() == 5);
    CHECK_THROWS_AS(couette_os_curves(0.2, 1.0, 1.5), DomainError);
}
