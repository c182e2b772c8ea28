#pragma once

#include <string>
#include <vector>

#include "spectral_portrait/profiles.hpp"

namespace spectral_portrait {

enum class CurveTag { GammaPlus, GammaMinus, GammaInfty, Gamma0, GammaA, GammaB };
enum class CurveEnd { RealAxis, Knot, Depth, Window, Origin };
enum class GraphFamily { Couette, Monotone, Quadratic, OrrSommerfeldCouette };

const char* to_string(CurveTag t);
const char* to_string(CurveEnd e);
const char* to_string(GraphFamily f);
CurveTag curve_tag_from_string(const std::string& s);

struct SpectralCurve {
    CurveTag tag = CurveTag::GammaPlus;
    std::vector<cplx> samples;
    std::vector<double> phase;  // quantization phase, monotone along samples
    CurveEnd start = CurveEnd::RealAxis;
    CurveEnd end = CurveEnd::Knot;
    bool excluded = false;  // arc of the full curve beyond a knot
    bool mirror = false;    // reflection across the imaginary axis
};

struct NamedPoint {
    std::string name;
    cplx point;
};

struct LimitGraph {
    Profile profile = Profile::linear();
    GraphFamily family = GraphFamily::Couette;
    std::vector<SpectralCurve> curves;
    std::vector<NamedPoint> knots;
    double a = 0.0, b = 0.0;  // range endpoints
    double depth = 6.0;

    cplx knot(const std::string& name) const;
    // Retained (not excluded) curves with the given tag.
    std::vector<const SpectralCurve*> retained(CurveTag tag) const;
};

// Function whose real part defines the curve and whose imaginary part is the
// quantization phase: Q+, Q-, Q for monotone kinds; B, K, A, P, Q for the quadratic
// (gamma_b, gamma_minus, gamma_a, gamma_0, gamma_infty).
cplx defining_functional(const Profile& p, CurveTag tag, cplx lambda);

// Right-hand side offset theta in  -i F = h pi (k + theta).
double quantization_offset(const Profile& p, CurveTag tag);

// Coordinate interval over which the full curve is a graph: Re lambda for
// gamma_infty's companions, Im lambda for gamma_infty. Empty optional bounds
// select the natural interval of the profile.
struct TraceWindow {
    double lo = 0.0, hi = 0.0;
    bool from_hi = true;  // order samples starting at hi
};

// Full curve tilde-gamma traced by bracketed root finding; samples with
// |Im lambda| > depth are dropped.
SpectralCurve trace_curve(const Profile& p, CurveTag tag, double depth, int n_samples);
SpectralCurve trace_curve(const Profile& p, CurveTag tag, double depth, int n_samples, const TraceWindow& window);

// Intersection of two curves that are graphs over Re lambda.
cplx knot_point(const Profile& p, CurveTag first, CurveTag second, double lo, double hi, double depth);

// Named knots of a traced graph's curves: lambda_0, or lambda_1 and lambda_2.
std::vector<NamedPoint> knot_points(const Profile& p, double depth = 6.0);

LimitGraph build_limit_graph(const Profile& p, double depth = 6.0, int n_samples = 400);

// Leading-order curves of the Couette Orr-Sommerfeld problem: gamma_+- in the
// frame with origin -1 and t along [-1, -i/sqrt 3], their mirror images and
// the imaginary ray.
struct OsFrame {
    double eps, alpha;
    double t_lo, t_hi;
    double c(double t) const;
    double phi(double t) const;
    double gamma(double t, int sign) const;
    cplx to_lambda(double t, double g) const;
};
OsFrame os_frame(double eps, double alpha);
std::vector<SpectralCurve> couette_os_curves(double eps, double alpha, double depth, int n_samples = 400);

}  // namespace spectral_portrait
