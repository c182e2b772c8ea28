#pragma once

#include <vector>

#include "spectral_portrait/types.hpp"

namespace spectral_portrait {

enum class AiryMethod { Series, Asymptotic };

struct AirySample {
    cplx xi;
    cplx value;
    AiryMethod method;
};

// Radius where evaluation switches from the quad-precision Maclaurin series to
// the asymptotic expansion (plus the connection identity near arg = +-pi).
inline constexpr double airy_crossover = 9.0;

// v(xi): the decaying Airy solution, v ~ exp(-2/3 xi^{3/2}) / (2 sqrt(pi) xi^{1/4}).
cplx airy_v(cplx xi);
cplx airy_v_deriv(cplx xi);
AirySample airy_sample(cplx xi);

// Complex logarithm of v and v' (real part log-modulus, imaginary part a phase).
// Usable where v itself over- or underflows.
cplx airy_v_log(cplx xi);
cplx airy_v_deriv_log(cplx xi);

// |v(xi) - e^{-i pi/3} v(e^{2 pi i/3} xi) - e^{i pi/3} v(e^{-2 pi i/3} xi)| / (1 + |v(xi)|)
double airy_connection_residual(cplx xi);

// Positive zeros r_k of v(-r), 1-indexed.
struct AiryZeros {
    std::vector<double> r;
    double operator()(int k) const { return r.at(static_cast<std::size_t>(k - 1)); }
    int size() const { return static_cast<int>(r.size()); }
};

double airy_zero_seed(int k);
AiryZeros airy_zeros(int k_max);

}  // namespace spectral_portrait
