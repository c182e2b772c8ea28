#pragma once

#include <vector>

#include "spectral_portrait/profiles.hpp"

namespace spectral_portrait {

// Polyline in the z-plane; branch_seed is the value of sqrt(i(q - lambda)) at
// nodes.front() that fixes the sheet. The last node may be a turning point.
struct BranchedPath {
    std::vector<cplx> nodes;
    cplx branch_seed;
};

// e^{i pi/4} sqrt(q(x) - lambda) with the principal root: the branch of
// sqrt(i(q - lambda)) on the real axis, continuous for Im lambda <= 0.
cplx real_axis_integrand(const Profile& p, double x, cplx lambda);

// Integral of sqrt(i(q - lambda)) along the path, branch carried by continuity.
cplx phase_integral(const Profile& p, const BranchedPath& path, cplx lambda, double tol = 1e-12);

// Integral from the real point x0 to z along x0 -> Re z -> z, seeded on the real axis.
cplx integral_from_real(const Profile& p, double x0, cplx z, cplx lambda);

struct QValues {
    cplx Q;   // over [-1, 1]
    cplx Qp;  // from the turning point to +1
    cplx Qm;  // from -1 to the turning point
};

// Monotone kinds only. Q(a) = e^{i pi/4} alpha with alpha > 0 and Q+ + Q- = Q.
QValues q_functionals(const Profile& p, cplx lambda);

// Defining integrals of the quadratic family, xi_+ = beta + s, xi_- = beta - s.
struct QuadraticIntegrals {
    cplx A;    // -1 -> xi_-
    cplx B;    // xi_+ -> 1
    cplx K;    // xi_- -> 1
    cplx P;    // xi_- -> xi_+, equals K - B
    cplx Inf;  // -1 -> 1
};
QuadraticIntegrals quadratic_integrals(const Profile& p, cplx lambda);

// Closed form of P: e^{3 i pi/4} pi (lambda - shift) / (2 sqrt(scale)).
cplx quadratic_critical_integral(const Profile& p, cplx lambda);

// (2/3) e^{-i pi/4} [(1 - lambda)^{3/2} - (-1 - lambda)^{3/2}], real positive at -i/sqrt(3).
cplx f_couette(cplx lambda);

enum class StokesTag { Left, Right, Lower };
enum class Truncation { HitBoundary, HitTurningPoint, MaxLength };

struct StokesLine {
    StokesTag tag;
    std::vector<cplx> points;
    Truncation truncation;
    double max_drift = 0.0;  // max |Re S| / (1 + |z - xi|) along the line
};

struct StokesComplex {
    cplx turning_point;
    std::vector<StokesLine> lines;  // three lines
    double initial_angles[3];
};

// Three Stokes lines per turning point (one complex per turning point).
std::vector<StokesComplex> trace_stokes(const Profile& p, cplx lambda, double max_len);

const char* to_string(StokesTag t);
const char* to_string(Truncation t);

}  // namespace spectral_portrait
