#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "spectral_portrait/discretize.hpp"
#include "spectral_portrait/errors.hpp"
#include "spectral_portrait/verify.hpp"

using namespace spectral_portrait;

namespace {

std::vector<double> apply_matrix(const RMatrix& m, const std::vector<double>& v) {
    std::vector<double> out(m.rows, 0.0);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) out[i] += m(i, j) * v[j];
    return out;
}

// Pencil matrix with the profile diagonal removed: i c D2 on the interior.
CMatrix without_profile(const OperatorPencil& pen, const Profile& p, int n) {
    CMatrix a = pen.a;
    const auto g = collocation_grid(n);
    for (std::size_t i = 0; i < a.rows; ++i) a(i, i) -= p.eval(g->nodes[i + 1]);
    return a;
}

std::vector<cplx> sorted_by_modulus(std::vector<cplx> v) {
    std::sort(v.begin(), v.end(), [](cplx a, cplx b) { return std::abs(a) < std::abs(b); });
    return v;
}

}  // namespace

TEST_CASE("grid examples") {
    const auto g2 = collocation_grid(2);
    REQUIRE(g2->nodes.size() == 3);
    CHECK(g2->nodes[0] == doctest::Approx(1.0));
    CHECK(std::abs(g2->nodes[1]) < 1e-16);
    CHECK(g2->nodes[2] == doctest::Approx(-1.0));

    const auto g16 = collocation_grid(16);
    std::vector<double> x2;
    for (double x : g16->nodes) x2.push_back(x * x);
    for (double v : apply_matrix(g16->d2, x2)) CHECK(std::abs(v - 2.0) <= 1e-9);

    // Fourth-derivative entries grow like n^8: compare at a modest degree.
    const auto g20 = collocation_grid(20);
    std::vector<double> x4;
    for (double x : g20->nodes) x4.push_back(x * x * x * x);
    for (double v : apply_matrix(g20->d4, x4)) CHECK(std::abs(v - 24.0) <= 1e-6);
    CHECK_THROWS_AS(collocation_grid(1), DomainError);
    CHECK_THROWS_AS(collocation_grid(4096), DomainError);
}

TEST_CASE("first and second derivative consistency") {
    for (int n : {8, 32, 128}) {
        const auto g = collocation_grid(n);
        const std::vector<double> ones(n + 1, 1.0);
        for (double v : apply_matrix(g->d1, ones)) CHECK(std::abs(v) <= 1e-10);
        for (double v : apply_matrix(g->d1, g->nodes)) CHECK(std::abs(v - 1.0) <= 1e-9);
        double norm = 0.0, diff = 0.0;
        for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i)
            for (std::size_t j = 0; j <= static_cast<std::size_t>(n); ++j) {
                double s = 0.0;
                for (std::size_t k = 0; k <= static_cast<std::size_t>(n); ++k) s += g->d1(i, k) * g->d1(k, j);
                diff = std::max(diff, std::abs(s - g->d2(i, j)));
                norm = std::max(norm, std::abs(g->d2(i, j)));
            }
        CHECK(diff <= 1e-8 * norm);
    }
}

TEST_CASE("pure second-derivative operator has the separable spectrum") {
    const Profile p = Profile::linear();
    const double eps = 0.1;
    const int n = 64;
    for (auto bc : {BoundaryCondition::Dirichlet, BoundaryCondition::MixedLeftNeumann}) {
        const OperatorPencil pen = assemble_model(p, eps, bc, n);
        const auto ev = sorted_by_modulus(eigenvalues(without_profile(pen, p, n)).eigenvalues);
        const double shift = bc == BoundaryCondition::Dirichlet ? 0.0 : 0.5;
        for (int k = 1; k <= 8; ++k) {
            const double w = (k - shift) * pi / 2.0;
            CHECK(std::abs(ev[k - 1] - cplx(0.0, -eps * w * w)) <= 1e-9 * (1.0 + eps * w * w));
        }
        if (bc == BoundaryCondition::Dirichlet) CHECK(std::abs(ev[0] - cplx(0.0, -0.246740)) < 1e-6);
    }
}

TEST_CASE("coefficient of the second derivative") {
    CHECK(model_coefficient(Profile::linear(), 0.1) == 0.1);
    CHECK(model_coefficient(Profile::shifted_square(), 0.1) == doctest::Approx(0.01));
    CHECK(model_coefficient(Profile::quadratic(0.0), 0.1) == doctest::Approx(0.01));
}

TEST_CASE("linear spectrum is symmetric under lambda -> -conj(lambda)") {
    const Spectrum s = model_spectrum(Profile::linear(), 1e-2, BoundaryCondition::Dirichlet, 96);
    CHECK(symmetry_defect(s.kept()) <= 1e-6);
}

TEST_CASE("the other sign convention conjugates the spectrum") {
    const Profile p = Profile::half_sine();
    const Spectrum a = model_spectrum(p, 0.1, BoundaryCondition::Dirichlet, 48);
    const Spectrum b = model_spectrum(p, 0.1, BoundaryCondition::Dirichlet, 48, SignConvention::MinusI);
    REQUIRE(a.eigenvalues.size() == b.eigenvalues.size());
    for (cplx z : a.eigenvalues) {
        double best = 1e9;
        for (cplx w : b.eigenvalues) best = std::min(best, std::abs(std::conj(z) - w));
        CHECK(best <= 1e-9 * (1.0 + std::abs(z)));
    }
    CHECK(b.meta.sign == SignConvention::MinusI);
}

TEST_CASE("semistrip confinement for the shifted square") {
    const Profile p = Profile::shifted_square();
    const double eps = std::sqrt(2e-3);
    const Spectrum fine = model_spectrum(p, eps, BoundaryCondition::Dirichlet, 400);
    const Spectrum coarse = model_spectrum(p, eps, BoundaryCondition::Dirichlet, 320);
    const auto kept = filter_spurious(coarse, fine).kept();
    REQUIRE(kept.size() > 50);
    CHECK(semistrip_excursion(kept, p) <= 1e-6);
}

TEST_CASE("grid refinement stability") {
    const Profile p = Profile::linear();
    const double eps = 1e-2;
    const Spectrum a = model_spectrum(p, eps, BoundaryCondition::Dirichlet, 128);
    const Spectrum b = model_spectrum(p, eps, BoundaryCondition::Dirichlet, 160);
    const Spectrum c = model_spectrum(p, eps, BoundaryCondition::Dirichlet, 96);
    const auto kept = filter_spurious(c, a).kept();
    int checked = 0;
    for (cplx z : kept) {
        if (std::abs(z) > 4.0) continue;
        double best = 1e9;
        for (cplx w : b.eigenvalues) best = std::min(best, std::abs(z - w));
        CHECK(best <= 1e-6 * (1.0 + std::abs(z)));
        ++checked;
    }
    CHECK(checked > 10);
}

TEST_CASE("Orr-Sommerfeld pencil") {
    const OperatorPencil pen = assemble_os(Profile::linear(), 1.0, 100.0, 64);
    CHECK(pen.bc == BoundaryCondition::Clamped);
    CHECK(!pen.standard);
    CHECK(pen.a.rows == pen.b.rows);
    // A is affine in R: A(R) = A(0) + R K.
    const OperatorPencil pen2 = assemble_os(Profile::linear(), 1.0, 200.0, 64);
    const OperatorPencil pen0 = assemble_os(Profile::linear(), 1.0, 1e-300, 64);
    double worst = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < pen.a.data.size(); ++i) {
        const cplx lin = pen.a.data[i] - pen0.a.data[i];
        const cplx lin2 = pen2.a.data[i] - pen0.a.data[i];
        worst = std::max(worst, std::abs(lin2 - 2.0 * lin));
        scale = std::max(scale, std::abs(lin));
    }
    CHECK(worst <= 1e-10 * scale);

    const Spectrum s = generalized_eigenvalues(pen.a, pen.b);
    for (std::size_t i = 0; i < 5; ++i) CHECK(pencil_residual(pen.a, pen.b, s.eigenvalues[i]) <= 1e-8);
    CHECK_THROWS_AS(assemble_os(Profile::linear(), -1.0, 100.0, 64), DomainError);
}

TEST_CASE("Couette Orr-Sommerfeld eigenvalues lie below the real axis") {
    const Spectrum fine = os_spectrum(Profile::linear(), 1.0, 4000.0, 120);
    const Spectrum coarse = os_spectrum(Profile::linear(), 1.0, 4000.0, 96);
    const auto kept = filter_spurious(coarse, fine).kept();
    REQUIRE(kept.size() > 20);
    for (cplx z : fine.eigenvalues) CHECK(z.imag() < 0.0);
    CHECK(symmetry_defect(kept) <= 1e-6);
}
