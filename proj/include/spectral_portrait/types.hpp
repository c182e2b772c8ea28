#pragma once

#include <complex>
#include <numbers>

namespace spectral_portrait {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline const cplx I{0.0, 1.0};

inline cplx expi(double theta) { return {std::cos(theta), std::sin(theta)}; }

// Which sign multiplies the second-derivative term of the model operator.
enum class SignConvention { PlusI, MinusI };

}  // namespace spectral_portrait
