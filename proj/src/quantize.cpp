#include "spectral_portrait/quantize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/tools/toms748_solve.hpp>

#include "spectral_portrait/airy.hpp"
#include "spectral_portrait/discretize.hpp"
#include "spectral_portrait/errors.hpp"
#include "spectral_portrait/phase.hpp"

namespace spectral_portrait {

namespace {

constexpr double knot_t = 0.57735026918962576451;
constexpr double radius_floor = 1e-14;

double distance_to_polyline(cplx z, const std::vector<cplx>& pts) {
    if (pts.size() == 1) return std::abs(z - pts.front());
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const cplx a = pts[i - 1], d = pts[i] - a;
        const double len2 = std::norm(d);
        const double s = len2 > 0.0 ? std::clamp(((z - a) * std::conj(d)).real() / len2, 0.0, 1.0) : 0.0;
        best = std::min(best, std::abs(z - (a + s * d)));
    }
    return best;
}

// Root of F(lambda) = i target near the curve, by complex secant from two
// points bracketing the target phase.
cplx solve_on_curve(const Profile& p, CurveTag tag, double target, cplx l0, cplx l1) {
    auto g = [&](cplx l) { return defining_functional(p, tag, l) - I * target; };
    cplx g0 = g(l0), g1 = g(l1);
    for (int it = 0; it < 40; ++it) {
        if (g1 == g0) break;
        const cplx step = g1 * (l1 - l0) / (g1 - g0);
        l0 = l1;
        g0 = g1;
        l1 -= step;
        if (std::abs(step) <= 1e-13 * (1.0 + std::abs(l1))) return l1;
        g1 = g(l1);
    }
    if (std::abs(g1) <= 1e-11) return l1;
    throw ConvergenceFailure(std::string("quantization root on ") + to_string(tag) + " did not converge");
}

const cplx omega = expi(-2.0 * pi / 3.0);

// Logarithms of v and w(.) = v(omega .) at both ends of the interval.
struct EndLogs {
    cplx v1, w1, v2, w2;
};

EndLogs end_logs(cplx lambda, double eps) {
    const cplx s = expi(pi / 6.0) / std::cbrt(eps);
    const cplx xi1 = s * (-1.0 - lambda), xi2 = s * (1.0 - lambda);
    return {airy_v_log(xi1), airy_v_log(omega * xi1), airy_v_log(xi2), airy_v_log(omega * xi2)};
}

}  // namespace

double couette_phi(double t) {
    const cplx w = 2.0 * expi(pi / 6.0) - t;
    return 4.0 / 3.0 * (w * std::sqrt(w)).real();
}

double couette_rho(double value) {
    auto f = [&](double rho) { return f_couette(cplx(0.0, -rho)).real() - value; };
    double lo = 1e-12, hi = 1.0;
    while (f(hi) < 0.0) hi *= 2.0;
    const double flo = f(lo), fhi = f(hi);
    if (flo >= 0.0) return lo;
    boost::uintmax_t iters = 200;
    const auto r = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, boost::math::tools::eps_tolerance<double>(52), iters);
    return 0.5 * (r.first + r.second);
}

CouettePredictions predict_model_couette(double eps, double sigma, double depth, double trust_constant) {
    if (!(eps > 0.0 && eps < 0.1)) throw DomainError("predict_model_couette needs 0 < eps < 0.1");
    if (!(sigma >= 0.5)) throw DomainError("sigma must be at least 0.5");
    CouetteConstants k;
    k.eps = eps;
    k.sigma = sigma;
    k.trust_constant = trust_constant;
    const double le = std::abs(std::log(eps)), se = std::sqrt(eps), ce = std::cbrt(eps);
    k.delta_sigma = sigma * se * le;
    k.d_sigma = cplx(0.0, -(knot_t + k.delta_sigma));
    k.u0_expected = std::sqrt(2.0) * std::pow(3.0, 0.75) * sigma / pi * le;

    // k1: largest k with eps^{1/3} r_k < 2/sqrt 3 - delta_sigma.
    const double limit = 2.0 * knot_t - k.delta_sigma;
    int kmax = 1;
    while (ce * airy_zero_seed(kmax) < limit + 1.0) ++kmax;
    const AiryZeros r = airy_zeros(kmax + 2);
    k.k1 = 0;
    for (int j = 1; j <= r.size(); ++j)
        if (ce * r(j) < limit) k.k1 = j;
    if (k.k1 < 1) throw DomainError("no Airy zero fits the segment: eps too large");

    // k0: smallest k with f(d_sigma) < pi k sqrt(eps).
    const double fd = f_couette(k.d_sigma).real();
    k.k0 = static_cast<int>(std::floor(fd / (pi * se))) + 1;

    CouettePredictions out;
    for (int j = 1; j <= k.k1 + 1; ++j) {
        const double s = ce * r(j);
        const double radius = std::max(trust_constant * std::exp(-couette_phi(se * r(j)) / se), radius_floor);
        const double phase = 2.0 / 3.0 * s * std::sqrt(s);
        out.predictions.push_back({CurveTag::GammaMinus, j, -1.0 + expi(-pi / 6.0) * s, radius, phase, false});
        out.predictions.push_back({CurveTag::GammaPlus, j, 1.0 - expi(pi / 6.0) * s, radius, phase, false});
    }
    for (int j = std::max(1, k.k0 - 1);; ++j) {
        const double value = pi * j * se;
        const double rho = couette_rho(value);
        if (rho > depth) break;
        out.predictions.push_back({CurveTag::GammaInfty, j, cplx(0.0, -rho), trust_constant * eps / rho, value, false});
    }
    out.constants = k;
    return out;
}

cplx couette_determinant(cplx lambda, double eps) {
    if (!(eps > 0.0)) throw DomainError("eps must be positive");
    // v(xi1) w(xi2) - w(xi1) v(xi2) over max(|w1 w2|, |v1 v2|). The scale
    // avoids the factors that vanish at a root.
    const EndLogs e = end_logs(lambda, eps);
    const double m = std::max((e.w1 + e.w2).real(), (e.v1 + e.v2).real());
    return std::exp(e.v1 + e.w2 - m) - std::exp(e.w1 + e.v2 - m);
}

cplx refine_couette_root(cplx lambda0, double eps) {
    // Delta / (w(xi1) w(xi2)) = v(xi1)/w(xi1) - v(xi2)/w(xi2), or its
    // reciprocal form when both quotients are large; the form is fixed once so
    // the secant sees one analytic function.
    const cplx s = expi(pi / 6.0) / std::cbrt(eps);
    auto log_quotients = [&](cplx l) {
        const cplx xi1 = s * (-1.0 - l), xi2 = s * (1.0 - l);
        return std::pair{airy_v_log(xi1) - airy_v_log(omega * xi1), airy_v_log(xi2) - airy_v_log(omega * xi2)};
    };
    const auto [q1, q2] = log_quotients(lambda0);
    const bool direct = q1.real() + q2.real() <= 0.0;
    auto g = [&](cplx l) {
        const auto [a, b] = log_quotients(l);
        return direct ? std::exp(a) - std::exp(b) : std::exp(-b) - std::exp(-a);
    };
    cplx x0 = lambda0, x1 = lambda0 + cplx(1e-7, -1e-7) * (1.0 + std::abs(lambda0));
    cplx g0 = g(x0), g1 = g(x1);
    for (int it = 0; it < 60; ++it) {
        if (g1 == g0) break;
        const cplx step = g1 * (x1 - x0) / (g1 - g0);
        x0 = x1;
        g0 = g1;
        x1 -= step;
        if (std::abs(step) <= 1e-13 * (1.0 + std::abs(x1))) return x1;
        g1 = g(x1);
    }
    if (std::abs(g1) <= 1e-10) return x1;
    throw ConvergenceFailure("determinant root refinement did not converge");
}

std::vector<Prediction> predict_wkb(const Profile& p, double eps, const LimitGraph& graph, double delta,
                                    double trust_constant) {
    if (!(eps > 0.0) || !(delta > 0.0)) throw DomainError("eps and delta must be positive");
    const double c = model_coefficient(p, eps);
    const double h = std::sqrt(c);
    std::vector<cplx> avoid = {graph.a, graph.b};
    for (const auto& k : graph.knots) avoid.push_back(k.point);
    if (p.kind() == ProfileKind::Quadratic) avoid.push_back(p.shift());
    auto excluded = [&](cplx z) {
        return std::any_of(avoid.begin(), avoid.end(), [&](cplx a) { return std::abs(z - a) < delta; });
    };
    std::vector<Prediction> out;
    for (const auto& curve : graph.curves) {
        if (curve.excluded || curve.samples.size() < 2) continue;
        const double theta = quantization_offset(p, curve.tag);
        if (curve.tag == CurveTag::Gamma0) {
            const double reach = std::abs(curve.samples.back() - p.shift());
            for (int k = 0;; ++k) {
                const double r = (2 * k + 1) * h * std::sqrt(p.scale());
                if (r > reach) break;
                const cplx mu = p.shift() + r * expi(-pi / 4.0);
                if (!excluded(mu)) out.push_back({curve.tag, k, mu, trust_constant * c, h * pi * (k + theta), curve.mirror});
            }
            continue;
        }
        const auto& ph = curve.phase;
        const double lo = std::min(ph.front(), ph.back()), hi = std::max(ph.front(), ph.back());
        const int k_first = static_cast<int>(std::ceil(lo / (h * pi) - theta));
        const int k_last = static_cast<int>(std::floor(hi / (h * pi) - theta));
        for (int k = k_first; k <= k_last; ++k) {
            const double target = h * pi * (k + theta);
            std::size_t j = 1;
            while (j + 1 < ph.size() && !((ph[j - 1] - target) * (ph[j] - target) <= 0.0)) ++j;
            const double w = ph[j] == ph[j - 1] ? 0.0 : (target - ph[j - 1]) / (ph[j] - ph[j - 1]);
            const cplx guess = curve.samples[j - 1] + w * (curve.samples[j] - curve.samples[j - 1]);
            if (excluded(guess)) continue;
            cplx mu = guess;
            try {
                const cplx other = std::abs(w) < 0.5 ? curve.samples[j] : curve.samples[j - 1];
                mu = solve_on_curve(p, curve.tag, target, other, guess);
                const double spacing = std::abs(curve.samples[j] - curve.samples[j - 1]);
                if (distance_to_polyline(mu, curve.samples) > 2.0 * spacing + 1e-9) mu = guess;
            } catch (const Error&) {
                mu = guess;
            }
            if (excluded(mu)) continue;
            out.push_back({curve.tag, k, mu, trust_constant * c, target, curve.mirror});
        }
    }
    if (out.empty()) throw EmptyWindow("no quantization root on the retained arcs");
    return out;
}

std::vector<Prediction> predict_os_couette(double alpha, double reynolds, double sigma, double depth,
                                           double trust_constant) {
    if (!(alpha > 0.0) || !(reynolds > 0.0)) throw DomainError("alpha and R must be positive");
    const double eps = 1.0 / (alpha * reynolds);
    const OsFrame f = os_frame(eps, alpha);
    std::vector<Prediction> out;
    const double ce = std::cbrt(eps), se = std::sqrt(eps);
    for (int sign : {1, -1}) {
        for (int k = 1;; ++k) {
            const double arg = k - 0.25 - sign * f.phi(std::pow(3.0 * pi * se * k, 2.0 / 3.0));
            const double t = ce * std::pow(3.0 * pi * arg, 2.0 / 3.0);
            if (t > f.t_hi) break;
            if (t < f.t_lo) continue;
            const cplx mu = f.to_lambda(t, f.gamma(t, sign));
            const double radius = trust_constant * std::pow(eps, 0.75) * std::pow(t, -1.25);
            const CurveTag tag = sign > 0 ? CurveTag::GammaPlus : CurveTag::GammaMinus;
            out.push_back({tag, k, mu, radius, t, false});
            out.push_back({tag, k, -std::conj(mu), radius, t, true});
        }
    }
    if (out.empty()) throw DomainError("empty index window: eps too large");
    const auto model = predict_model_couette(eps, sigma, depth, trust_constant);
    for (const auto& pr : model.predictions)
        if (pr.tag == CurveTag::GammaInfty) out.push_back(pr);
    return out;
}

double counting_function(const Profile& p, CurveTag tag, cplx lambda, double eps) {
    const double h = std::sqrt(model_coefficient(p, eps));
    if (p.kind() == ProfileKind::Linear && tag == CurveTag::GammaInfty) return f_couette(lambda).real() / (pi * h);
    return defining_functional(p, tag, lambda).imag() / (pi * h);
}

}  // namespace spectral_portrait
