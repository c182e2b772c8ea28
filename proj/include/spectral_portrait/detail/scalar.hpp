#pragma once

// Minimal complex arithmetic over double or __float128 for the dense solvers.

#include <quadmath.h>

#include <cmath>
#include <complex>

namespace spectral_portrait::detail {

using quad = __float128;

inline double r_abs(double x) { return std::fabs(x); }
inline double r_sqrt(double x) { return std::sqrt(x); }
inline double r_hypot(double x, double y) { return std::hypot(x, y); }
inline double r_cos(double x) { return std::cos(x); }
inline double r_sin(double x) { return std::sin(x); }
inline quad r_abs(quad x) { return fabsq(x); }
inline quad r_sqrt(quad x) { return sqrtq(x); }
inline quad r_hypot(quad x, quad y) { return hypotq(x, y); }
inline quad r_cos(quad x) { return cosq(x); }
inline quad r_sin(quad x) { return sinq(x); }

template <class R>
struct RealTraits;
template <>
struct RealTraits<double> {
    static double ulp() { return 0x1p-53; }
    static double safe_min() { return 0x1p-1022; }
    static double pi() { return 3.14159265358979323846; }
};
template <>
struct RealTraits<quad> {
    static quad ulp() { return 0x1p-113Q; }
    static quad safe_min() { return 0x1p-16382Q; }
    static quad pi() { return M_PIq; }
};

template <class R>
struct Cx {
    R re{0}, im{0};
    Cx() = default;
    Cx(R r) : re(r), im(0) {}
    Cx(R r, R i) : re(r), im(i) {}
    explicit Cx(std::complex<double> z) : re(R(z.real())), im(R(z.imag())) {}
    std::complex<double> to_std() const { return {double(re), double(im)}; }

    Cx& operator+=(Cx o) { re += o.re; im += o.im; return *this; }
    Cx& operator-=(Cx o) { re -= o.re; im -= o.im; return *this; }
    Cx& operator*=(Cx o) { *this = *this * o; return *this; }
    Cx& operator/=(Cx o) { *this = *this / o; return *this; }
    friend Cx operator+(Cx a, Cx b) { return {a.re + b.re, a.im + b.im}; }
    friend Cx operator-(Cx a, Cx b) { return {a.re - b.re, a.im - b.im}; }
    friend Cx operator-(Cx a) { return {-a.re, -a.im}; }
    friend Cx operator*(Cx a, Cx b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
    friend Cx operator*(Cx a, R s) { return {a.re * s, a.im * s}; }
    friend Cx operator*(R s, Cx a) { return {a.re * s, a.im * s}; }
    friend Cx operator/(Cx a, Cx b) {
        // Smith's algorithm
        if (r_abs(b.re) >= r_abs(b.im)) {
            const R t = b.im / b.re, d = b.re + b.im * t;
            return {(a.re + a.im * t) / d, (a.im - a.re * t) / d};
        }
        const R t = b.re / b.im, d = b.im + b.re * t;
        return {(a.re * t + a.im) / d, (a.im * t - a.re) / d};
    }
    friend bool operator==(Cx a, Cx b) { return a.re == b.re && a.im == b.im; }
};

template <class R>
inline R abs(Cx<R> z) { return r_hypot(z.re, z.im); }
template <class R>
inline R abs1(Cx<R> z) { return r_abs(z.re) + r_abs(z.im); }
template <class R>
inline R norm(Cx<R> z) { return z.re * z.re + z.im * z.im; }
template <class R>
inline Cx<R> conj(Cx<R> z) { return {z.re, -z.im}; }
template <class R>
inline Cx<R> csqrt(Cx<R> z) {
    const R m = abs(z);
    if (m == R(0)) return {};
    R t = r_sqrt((m + r_abs(z.re)) / 2);
    if (z.re >= R(0)) return {t, z.im / (2 * t)};
    return {r_abs(z.im) / (2 * t), z.im >= R(0) ? t : -t};
}

}  // namespace spectral_portrait::detail
