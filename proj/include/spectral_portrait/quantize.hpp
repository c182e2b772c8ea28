#pragma once

#include <vector>

#include "spectral_portrait/graph.hpp"

namespace spectral_portrait {

inline constexpr double default_trust_constant = 10.0;

struct Prediction {
    CurveTag tag = CurveTag::GammaPlus;
    int k = 0;
    cplx mu;
    double radius = 0.0;       // trust radius, constant C included
    double phase_value = 0.0;  // quantization left-hand side
    bool mirror = false;       // reflection across the imaginary axis
};

struct CouetteConstants {
    double eps = 0.0;
    double sigma = 0.5;
    double delta_sigma = 0.0;  // sigma sqrt(eps) |ln eps|, radius of U_0
    cplx d_sigma;              // -i (1/sqrt 3 + delta_sigma)
    int k0 = 0;
    int k1 = 0;
    double trust_constant = default_trust_constant;
    double u0_expected = 0.0;  // (2^{1/2} 3^{3/4} sigma / pi) |ln eps|
};

struct CouettePredictions {
    std::vector<Prediction> predictions;
    CouetteConstants constants;
};

// (4/3) Re (2 e^{i pi/6} - t)^{3/2} for t in [0, 2/sqrt 3].
double couette_phi(double t);

// rho > 0 with f(-i rho) = value.
double couette_rho(double value);

// Segment predictions mu_k^-+ for k = 1..k1+1 and imaginary predictions -i rho_k
// for k >= k0 - 1 with rho_k <= depth.
CouettePredictions predict_model_couette(double eps, double sigma = 0.5, double depth = 6.0,
                                         double trust_constant = default_trust_constant);

// Airy characteristic determinant of the Couette model problem, times a
// positive scale that keeps it representable.
cplx couette_determinant(cplx lambda, double eps);

// Secant polish of a determinant root to 1e-12 in lambda.
cplx refine_couette_root(cplx lambda0, double eps);

// Quantization roots -i F = h pi (k + theta), h = sqrt(model_coefficient), on
// every retained curve of the graph, outside the delta-neighbourhoods of a, b,
// the knots and the quadratic's vertex value. Radius C * h^2.
std::vector<Prediction> predict_wkb(const Profile& p, double eps, const LimitGraph& graph, double delta,
                                    double trust_constant = default_trust_constant);

// Leading-order predictions of the Couette Orr-Sommerfeld problem: t_k^+- on
// gamma_+- with mirrors (radius C eps^{3/4} t^{-5/4}) and the imaginary ones.
std::vector<Prediction> predict_os_couette(double alpha, double reynolds, double sigma = 0.5, double depth = 6.0,
                                           double trust_constant = default_trust_constant);

// Main term of the counting function at lambda on the named curve:
// Im F(lambda) / (pi h). For the Couette ray this is f(-i rho) / (pi sqrt eps).
double counting_function(const Profile& p, CurveTag tag, cplx lambda, double eps);

}  // namespace spectral_portrait
