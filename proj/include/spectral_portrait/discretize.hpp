#pragma once

#include <memory>
#include <vector>

#include "spectral_portrait/linalg.hpp"
#include "spectral_portrait/profiles.hpp"

namespace spectral_portrait {

struct CollocationGrid {
    int n = 0;
    std::vector<double> nodes;  // x_j = cos(pi j / n), j = 0..n
    RMatrix d1, d2, d3, d4;
};

// Chebyshev-Gauss-Lobatto grid, 2 <= n <= 2048; cached per n.
std::shared_ptr<const CollocationGrid> collocation_grid(int n);

enum class BoundaryCondition { Dirichlet, MixedLeftNeumann, Clamped };
const char* to_string(BoundaryCondition bc);

struct OperatorPencil {
    CMatrix a, b;
    BoundaryCondition bc = BoundaryCondition::Dirichlet;
    PencilMeta meta;
    bool standard = true;  // b is the identity
};

// Coefficient of y'': eps for the linear profile, eps^2 for the others.
double model_coefficient(const Profile& p, double eps);

// i c y'' + q y = lambda y on the interior nodes (c from model_coefficient).
// Dirichlet: y(+-1) = 0. MixedLeftNeumann: y'(-1) = 0, y(1) = 0 by eliminating y(-1).
OperatorPencil assemble_model(const Profile& p, double eps, BoundaryCondition bc, int n,
                              SignConvention sign = SignConvention::PlusI);

// (D^2 - a^2)^2 y - i a R [q (D^2 - a^2) - q''] y = -i a R lambda (D^2 - a^2) y,
// y(+-1) = y'(+-1) = 0 through y = (1 - x^2) p.
OperatorPencil assemble_os(const Profile& p, double alpha, double reynolds, int n,
                           SignConvention sign = SignConvention::PlusI);

// Assemble and solve in the requested precision.
Spectrum model_spectrum(const Profile& p, double eps, BoundaryCondition bc, int n,
                        SignConvention sign = SignConvention::PlusI, Precision precision = Precision::Double);
Spectrum os_spectrum(const Profile& p, double alpha, double reynolds, int n,
                     SignConvention sign = SignConvention::PlusI, Precision precision = Precision::Quad);

}  // namespace spectral_portrait
