#include "spectral_portrait/airy.hpp"

#include <quadmath.h>

#include <cmath>
#include <limits>

#include "spectral_portrait/errors.hpp"

namespace spectral_portrait {

namespace {

using quad = __float128;

struct qc {
    quad re = 0, im = 0;
};
inline qc operator+(qc a, qc b) { return {a.re + b.re, a.im + b.im}; }
inline qc operator-(qc a, qc b) { return {a.re - b.re, a.im - b.im}; }
inline qc operator*(qc a, qc b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
inline qc operator*(qc a, quad s) { return {a.re * s, a.im * s}; }
inline quad norm1(qc a) { return fabsq(a.re) + fabsq(a.im); }

const quad ai0 = 0.355028053887817239260063186004183176397979174199177573Q;
const quad mdai0 = 0.258819403792806798405183560189203963479091138354934582Q;

// Maclaurin series of Ai and Ai' in quad precision.
void series(cplx xi, cplx* value, cplx* deriv) {
    const qc z{xi.real(), xi.imag()};
    const qc z3 = z * z * z;
    const quad eps = 1e-36Q;
    if (value) {
        qc f{1, 0}, g = z, tf{1, 0}, tg = z;
        for (int k = 1; k < 400; ++k) {
            tf = tf * z3 * (1 / quad((3 * k - 1) * (3 * k)));
            tg = tg * z3 * (1 / quad((3 * k) * (3 * k + 1)));
            f = f + tf;
            g = g + tg;
            if (norm1(tf) <= eps * norm1(f) && norm1(tg) <= eps * (norm1(g) + 1e-300Q)) break;
        }
        const qc r = f * ai0 - g * mdai0;
        *value = cplx(double(r.re), double(r.im));
    }
    if (deriv) {
        // f' = sum u_k with u_1 = z^2/2, g' = sum w_k with w_0 = 1
        qc u = z * z * quad(0.5Q), w{1, 0}, fp = u, gp = w;
        for (int k = 2; k < 400; ++k) {
            u = u * z3 * (1 / quad((3 * k - 1) * (3 * k - 3)));
            w = w * z3 * (1 / quad((3 * k - 3) * (3 * k - 5)));
            fp = fp + u;
            gp = gp + w;
            if (norm1(u) <= eps * (norm1(fp) + 1e-300Q) && norm1(w) <= eps * norm1(gp)) break;
        }
        const qc r = fp * ai0 - gp * mdai0;
        *deriv = cplx(double(r.re), double(r.im));
    }
}

// Asymptotic sums for |arg xi| <= 2 pi/3; returns log v or log v'.
cplx asymptotic_log(cplx xi, bool derivative) {
    const cplx lx = std::log(xi);
    const cplx zeta = (2.0 / 3.0) * std::exp(1.5 * lx);
    const cplx iz = 1.0 / zeta;
    cplx sum = 1.0, pw = 1.0;
    double u = 1.0, prev = std::numeric_limits<double>::infinity();
    for (int k = 1; k < 60; ++k) {
        u *= double((6 * k - 5) * (6 * k - 3) * (6 * k - 1)) / (double(2 * k - 1) * 216.0 * k);
        pw *= -iz;
        const double coef = derivative ? -double(6 * k + 1) / double(6 * k - 1) * u : u;
        const cplx term = coef * pw;
        const double mag = std::abs(term);
        if (mag > prev) break;
        sum += term;
        prev = mag;
        if (mag < 1e-18 * std::abs(sum)) break;
    }
    const double lnorm = std::log(2.0 * std::sqrt(pi));
    if (derivative) return -zeta - lnorm + 0.25 * lx + std::log(-sum);
    return -zeta - lnorm - 0.25 * lx + std::log(sum);
}

const cplx omega = expi(2.0 * pi / 3.0);
const cplx omega_bar = expi(-2.0 * pi / 3.0);

cplx log_sum_exp(cplx a, cplx b) {
    const double m = std::max(a.real(), b.real());
    if (!std::isfinite(m)) return a.real() >= b.real() ? a : b;
    return m + std::log(std::exp(a - m) + std::exp(b - m));
}

bool in_asymptotic_sector(cplx xi) { return std::abs(std::arg(xi)) <= 2.0 * pi / 3.0; }

cplx large_log(cplx xi, bool derivative) {
    if (in_asymptotic_sector(xi)) return asymptotic_log(xi, derivative);
    // v(xi) = e^{-i pi/3} v(omega xi) + e^{i pi/3} v(omega_bar xi)
    const cplx a = asymptotic_log(omega * xi, derivative);
    const cplx b = asymptotic_log(omega_bar * xi, derivative);
    const double ra = derivative ? pi / 3.0 : -pi / 3.0;
    return log_sum_exp(a + cplx(0.0, ra), b + cplx(0.0, -ra));
}

}  // namespace

AirySample airy_sample(cplx xi) {
    if (std::abs(xi) < airy_crossover) {
        cplx v;
        series(xi, &v, nullptr);
        return {xi, v, AiryMethod::Series};
    }
    const cplx l = large_log(xi, false);
    if (l.real() > 700.0) throw Overflow("airy_v exponent " + std::to_string(l.real()) + "; use airy_v_log");
    return {xi, std::exp(l), AiryMethod::Asymptotic};
}

cplx airy_v(cplx xi) { return airy_sample(xi).value; }

cplx airy_v_deriv(cplx xi) {
    if (std::abs(xi) < airy_crossover) {
        cplx d;
        series(xi, nullptr, &d);
        return d;
    }
    const cplx l = large_log(xi, true);
    if (l.real() > 700.0) throw Overflow("airy_v_deriv exponent " + std::to_string(l.real()));
    return std::exp(l);
}

cplx airy_v_log(cplx xi) {
    if (std::abs(xi) < airy_crossover) {
        cplx v;
        series(xi, &v, nullptr);
        return std::log(v);
    }
    return large_log(xi, false);
}

cplx airy_v_deriv_log(cplx xi) {
    if (std::abs(xi) < airy_crossover) {
        cplx d;
        series(xi, nullptr, &d);
        return std::log(d);
    }
    return large_log(xi, true);
}

double airy_connection_residual(cplx xi) {
    const cplx v = airy_v(xi);
    const cplx rhs = expi(-pi / 3.0) * airy_v(omega * xi) + expi(pi / 3.0) * airy_v(omega_bar * xi);
    return std::abs(v - rhs) / (1.0 + std::abs(v));
}

double airy_zero_seed(int k) { return std::pow(1.5 * pi * (k - 0.25), 2.0 / 3.0); }

AiryZeros airy_zeros(int k_max) {
    if (k_max < 1) throw DomainError("airy_zeros needs k_max >= 1");
    AiryZeros z;
    z.r.reserve(static_cast<std::size_t>(k_max));
    for (int k = 1; k <= k_max; ++k) {
        double r = airy_zero_seed(k);
        bool done = false;
        for (int it = 0; it < 50 && !done; ++it) {
            const double v = airy_v(-r).real();
            const double d = -airy_v_deriv(-r).real();
            const double step = v / d;
            r -= step;
            done = std::abs(step) < 1e-15 * (1.0 + r);
        }
        if (!done) throw ConvergenceFailure("Airy zero k=" + std::to_string(k));
        z.r.push_back(r);
    }
    return z;
}

}  // namespace spectral_portrait
