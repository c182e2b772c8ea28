#include <cmath>

#include "doctest.h"
#include "spectral_portrait/airy.hpp"
#include "spectral_portrait/errors.hpp"
#include "spectral_portrait/phase.hpp"
#include "spectral_portrait/quantize.hpp"

using namespace spectral_portrait;

namespace {

const double eps3 = 1e-3;

const Prediction* find(const std::vector<Prediction>& ps, CurveTag tag, int k, bool mirror = false) {
    for (const auto& p : ps)
        if (p.tag == tag && p.k == k && p.mirror == mirror) return &p;
    return nullptr;
}

}  // namespace

TEST_CASE("segment predictions at eps = 1e-3") {
    const auto cp = predict_model_couette(eps3);
    const Prediction* m = find(cp.predictions, CurveTag::GammaMinus, 1);
    const Prediction* p = find(cp.predictions, CurveTag::GammaPlus, 1);
    REQUIRE(m);
    REQUIRE(p);
    CHECK(std::abs(m->mu - cplx(-0.797513, -0.116905)) < 2e-6);
    CHECK(std::abs(p->mu - cplx(0.797513, -0.116905)) < 2e-6);
    // Oracle: mu_k^- = -1 + e^{-i pi/6} eps^{1/3} r_k.
    const AiryZeros r = airy_zeros(12);
    for (int k = 1; k <= cp.constants.k1 + 1; ++k) {
        const Prediction* q = find(cp.predictions, CurveTag::GammaMinus, k);
        REQUIRE(q);
        CHECK(std::abs(q->mu - (-1.0 + std::exp(cplx(0.0, -pi / 6)) * 0.1 * r(k))) < 1e-12);
        CHECK(q->radius > 0.0);
    }
}

TEST_CASE("Couette constants") {
    const auto c = predict_model_couette(eps3).constants;
    const double le = std::abs(std::log(eps3));
    CHECK(c.delta_sigma == doctest::Approx(0.5 * std::sqrt(eps3) * le));
    CHECK(std::abs(c.d_sigma - cplx(0.0, -(1.0 / std::sqrt(3.0) + c.delta_sigma))) < 1e-15);
    // k1 and k0 from their defining inequalities.
    const AiryZeros r = airy_zeros(20);
    int k1 = 0;
    for (int k = 1; k <= 20; ++k)
        if (0.1 * r(k) < 2.0 / std::sqrt(3.0) - c.delta_sigma) k1 = k;
    CHECK(c.k1 == k1);
    int k0 = 1;
    while (!(f_couette(c.d_sigma).real() < pi * k0 * std::sqrt(eps3))) ++k0;
    CHECK(c.k0 == k0);
    CHECK(c.u0_expected == doctest::Approx(std::sqrt(2.0) * std::pow(3.0, 0.75) * 0.5 / pi * le));
    CHECK_THROWS_AS(predict_model_couette(eps3, 0.4), DomainError);
    CHECK_THROWS_AS(predict_model_couette(0.5), DomainError);
}

TEST_CASE("phi closed forms") {
    CHECK(std::abs(couette_phi(2.0 / std::sqrt(3.0))) <= 1e-14);
    CHECK(couette_phi(0.0) == doctest::Approx(8.0 / 3.0).epsilon(1e-14));
    double prev = couette_phi(0.0);
    for (int i = 1; i <= 20; ++i) {
        const double v = couette_phi(i / 20.0 * 2.0 / std::sqrt(3.0));
        CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("rho inverts f on the imaginary axis") {
    CHECK(couette_rho(f_couette(cplx(0.0, -4.0)).real()) == doctest::Approx(4.0).epsilon(1e-12));
    const auto cp = predict_model_couette(eps3);
    std::vector<double> rho;
    for (const auto& p : cp.predictions)
        if (p.tag == CurveTag::GammaInfty) rho.push_back(-p.mu.imag());
    REQUIRE(rho.size() > 10);
    for (std::size_t i = 1; i < rho.size(); ++i) {
        CHECK(rho[i] > rho[i - 1]);
        // f' ~ 1/sqrt(rho) on the axis, so the gap is about pi sqrt(eps) sqrt(rho).
        const double mid = 0.5 * (rho[i] + rho[i - 1]);
        if (mid > 2.0) CHECK((rho[i] - rho[i - 1]) == doctest::Approx(pi * std::sqrt(eps3) * std::sqrt(mid)).epsilon(0.02));
    }
}

TEST_CASE("determinant roots") {
    const auto cp = predict_model_couette(eps3);
    const Prediction* m1 = find(cp.predictions, CurveTag::GammaMinus, 1);
    const cplx root = refine_couette_root(m1->mu, eps3);
    const double local = std::abs(couette_determinant(root + 1e-3, eps3));
    CHECK(std::abs(couette_determinant(root, eps3)) <= 1e-8 * local);
    // Mirror symmetry of the roots.
    const cplx mirrored = refine_couette_root(-std::conj(m1->mu), eps3);
    CHECK(std::abs(mirrored + std::conj(root)) <= 1e-10);
    // Roots on the imaginary branch are pure imaginary.
    const int k0 = cp.constants.k0;
    for (int k = k0 + 1; k <= k0 + 5; ++k) {
        const Prediction* q = find(cp.predictions, CurveTag::GammaInfty, k);
        REQUIRE(q);
        const cplx z = refine_couette_root(q->mu, eps3);
        CHECK(std::abs(z.real()) <= 1e-10);
        CHECK(std::abs(z - q->mu) <= q->radius);
    }
}

TEST_CASE("quadratic gamma_0 closed form") {
    const Profile p = Profile::quadratic(0.25);
    const LimitGraph g = build_limit_graph(p, 6.0, 400);
    const auto preds = predict_wkb(p, 0.02, g, 0.01);
    const Prediction* z0 = find(preds, CurveTag::Gamma0, 0);
    REQUIRE(z0);
    CHECK(std::abs(z0->mu - 0.02 * std::exp(cplx(0.0, -pi / 4))) <= 1e-15);
    CHECK(std::abs(z0->mu - cplx(0.014142, -0.014142)) <= 1e-6);
    for (const auto& q : preds)
        if (q.tag == CurveTag::Gamma0) CHECK(std::abs(q.mu - (2 * q.k + 1) * 0.02 * std::exp(cplx(0.0, -pi / 4))) <= 1e-14);
}

TEST_CASE("shifted square predictions") {
    const Profile p = Profile::shifted_square();
    const LimitGraph g = build_limit_graph(p, 6.0, 400);
    const double eps = 0.05;
    const auto preds = predict_wkb(p, eps, g, 0.1);
    REQUIRE(!preds.empty());
    std::vector<const Prediction*> inf;
    for (const auto& q : preds) {
        CHECK(std::abs(defining_functional(p, q.tag, q.mu).real()) <= 1e-8);
        CHECK(q.radius == doctest::Approx(default_trust_constant * eps * eps));
        if (q.tag == CurveTag::GammaInfty) inf.push_back(&q);
    }
    REQUIRE(inf.size() >= 2);
    for (std::size_t i = 1; i < inf.size(); ++i)
        if (inf[i]->k == inf[i - 1]->k + 1)
            CHECK(std::abs(std::abs(inf[i]->phase_value - inf[i - 1]->phase_value) - eps * pi) <= 1e-10);
    // Counting differences reproduce index differences.
    for (const auto& a : preds)
        for (const auto& b : preds)
            if (a.tag == b.tag && &a != &b)
                CHECK(std::abs(std::abs(counting_function(p, a.tag, a.mu, eps) - counting_function(p, b.tag, b.mu, eps)) -
                               std::abs(a.k - b.k)) <= 1e-6);
}

TEST_CASE("counting function main terms") {
    const Profile lin = Profile::linear();
    CHECK(counting_function(lin, CurveTag::GammaInfty, cplx(0.0, -4.0), eps3) == doctest::Approx(40.35).epsilon(2e-3));
    CHECK(counting_function(lin, CurveTag::GammaInfty, cplx(0.0, -1.0 / std::sqrt(3.0)), eps3) ==
          doctest::Approx(16.65).epsilon(1e-3));
    const Profile q = Profile::quadratic(0.25);
    const cplx l = 0.3 * std::exp(cplx(0.0, -pi / 4));
    CHECK(counting_function(q, CurveTag::Gamma0, l, 0.02) == doctest::Approx(0.3 / (2 * 0.02)).epsilon(1e-10));
}

TEST_CASE("Orr-Sommerfeld Couette predictions") {
    const double R = 4000.0, eps = 1.0 / R;
    const auto preds = predict_os_couette(1.0, R);
    const OsFrame f = os_frame(eps, 1.0);
    int branch = 0;
    for (const auto& p : preds) {
        if (p.tag != CurveTag::GammaPlus && p.tag != CurveTag::GammaMinus) continue;
        ++branch;
        // Every branch prediction has its mirror.
        bool mirrored = false;
        for (const auto& q : preds)
            if (q.tag == p.tag && q.k == p.k && q.mirror != p.mirror && std::abs(q.mu + std::conj(p.mu)) < 1e-14) mirrored = true;
        CHECK(mirrored);
        if (p.mirror) continue;
        const int sign = p.tag == CurveTag::GammaPlus ? 1 : -1;
        const double t = p.phase_value;
        CHECK(f.gamma(t, sign) * sign > 0.0);
        CHECK(std::abs(p.mu - f.to_lambda(t, f.gamma(t, sign))) < 1e-14);
        CHECK(t >= f.t_lo);
        CHECK(t <= f.t_hi);
        // t_k from its definition; phi(0) = 0 gives the model seed for alpha = 1.
        const double tk = std::cbrt(eps) * std::pow(3 * pi * (p.k - 0.25 - sign * f.phi(std::pow(3 * pi * std::sqrt(eps) * p.k, 2.0 / 3.0))), 2.0 / 3.0);
        CHECK(t == doctest::Approx(tk).epsilon(1e-12));
        CHECK(p.radius == doctest::Approx(default_trust_constant * std::pow(eps, 0.75) * std::pow(t, -1.25)));
    }
    CHECK(branch > 0);
}
