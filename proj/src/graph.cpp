#include "spectral_portrait/graph.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>

#include <boost/math/tools/toms748_solve.hpp>

#include "spectral_portrait/errors.hpp"
#include "spectral_portrait/parallel.hpp"
#include "spectral_portrait/phase.hpp"

namespace spectral_portrait {

namespace {

constexpr double knot_t = 0.57735026918962576451;  // 1/sqrt(3)
// Smallest depth probed: on the real axis itself turning points sit on the path.
constexpr double t_floor = 1e-14;

// Root of f on [lo, hi] with f(lo), f(hi) of opposite signs.
double solve_bracketed(const std::function<double(double)>& f, double lo, double hi, double flo, double fhi) {
    boost::uintmax_t iters = 200;
    const auto r = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, boost::math::tools::eps_tolerance<double>(50), iters);
    return 0.5 * (r.first + r.second);
}

// Root of f in [lo_bound, hi_bound], searched outward from guess; nullopt if
// no sign change is found.
std::optional<double> root_near(const std::function<double(double)>& f, double guess, double width, double lo_bound,
                                double hi_bound) {
    guess = std::clamp(guess, lo_bound, hi_bound);
    width = std::max(width, 1e-9 * (1.0 + std::abs(guess)));
    for (;;) {
        const double lo = std::max(lo_bound, guess - width), hi = std::min(hi_bound, guess + width);
        const double flo = f(lo), fhi = f(hi);
        if (flo == 0.0) return lo;
        if (fhi == 0.0) return hi;
        if ((flo < 0.0) != (fhi < 0.0)) return solve_bracketed(f, lo, hi, flo, fhi);
        if (lo == lo_bound && std::abs(flo) < 1e-10) return lo;
        if (lo == lo_bound && hi == hi_bound) return std::nullopt;
        width *= 2.0;
    }
}

bool is_quadratic(const Profile& p) { return p.kind() == ProfileKind::Quadratic; }

double strip_lo(const Profile& p) { return semistrip(p).first; }
double strip_hi(const Profile& p) { return semistrip(p).second; }

// Mirror image x -> -x of a quadratic profile; the spectrum is unchanged.
Profile reflected(const Profile& p) {
    const double s = p.scale(), b = p.beta();
    return Profile::quadratic_from(s, 2.0 * s * b, p.shift() + s * b * b);
}

double ray_t(const Profile& p, double c) { return c - p.shift(); }

// Depth coordinate of the curve over Re lambda = c, continued from guess.
std::optional<double> curve_t(const Profile& p, CurveTag tag, double c, double guess, double width, double depth) {
    if (tag == CurveTag::Gamma0) return ray_t(p, c);
    auto f = [&](double t) { return defining_functional(p, tag, cplx(c, -t)).real(); };
    return root_near(f, guess, width, t_floor, depth);
}

std::optional<double> curve_c(const Profile& p, double t, double guess, double width) {
    auto f = [&](double c) { return defining_functional(p, CurveTag::GammaInfty, cplx(c, -t)).real(); };
    return root_near(f, guess, width, strip_lo(p), strip_hi(p));
}

TraceWindow natural_window(const Profile& p, CurveTag tag, double depth) {
    const auto [a, b] = range(p);
    if (tag == CurveTag::GammaInfty) return {0.0, depth, false};
    if (!is_quadratic(p)) {
        if (tag == CurveTag::GammaPlus) return {a, b, true};
        if (tag == CurveTag::GammaMinus) return {a, b, false};
        throw DomainError(std::string("curve ") + to_string(tag) + " belongs to the quadratic family");
    }
    const double s = p.shift();
    switch (tag) {
        case CurveTag::GammaB: return {s, b, true};
        case CurveTag::GammaA: return {s, a, true};
        case CurveTag::GammaMinus: return {s, a, false};
        case CurveTag::Gamma0: return {s, s + depth, false};
        default: break;
    }
    throw DomainError(std::string("curve ") + to_string(tag) + " belongs to the monotone family");
}

// Range endpoint where the curve leaves the real axis with zero phase.
std::optional<double> real_axis_end(const Profile& p, CurveTag tag) {
    const auto [a, b] = range(p);
    if (tag == CurveTag::GammaPlus || tag == CurveTag::GammaB) return b;
    if (tag == CurveTag::GammaA || (tag == CurveTag::GammaMinus && !is_quadratic(p))) return a;
    return std::nullopt;
}

std::vector<double> linspace(double from, double to, int n) {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[i] = n == 1 ? from : from + (to - from) * i / (n - 1);
    return v;
}

SpectralCurve closed_segment(CurveTag tag, int n, const std::function<cplx(double)>& point,
                             const std::function<double(double)>& phase, double s0, double s1) {
    SpectralCurve c;
    c.tag = tag;
    for (double s : linspace(s0, s1, n)) {
        c.samples.push_back(point(s));
        c.phase.push_back(phase(s));
    }
    return c;
}

LimitGraph couette_graph(const Profile& p, double depth, int n) {
    LimitGraph g;
    g.profile = p;
    g.family = GraphFamily::Couette;
    g.a = -1.0;
    g.b = 1.0;
    g.depth = depth;
    const double len = 2.0 * knot_t;
    auto seg_phase = [](double s) { return 2.0 / 3.0 * s * std::sqrt(s); };
    auto plus = closed_segment(CurveTag::GammaPlus, n, [](double s) { return 1.0 - s * expi(pi / 6.0); }, seg_phase, 0.0, len);
    plus.start = CurveEnd::RealAxis;
    plus.end = CurveEnd::Knot;
    auto minus = closed_segment(CurveTag::GammaMinus, n, [](double s) { return -1.0 + s * expi(-pi / 6.0); }, seg_phase, 0.0, len);
    minus.start = CurveEnd::RealAxis;
    minus.end = CurveEnd::Knot;
    auto ray = closed_segment(
        CurveTag::GammaInfty, n, [](double r) { return cplx(0.0, -r); }, [](double r) { return f_couette(cplx(0.0, -r)).real(); },
        knot_t, std::max(depth, knot_t));
    ray.start = CurveEnd::Knot;
    ray.end = CurveEnd::Depth;
    g.curves = {plus, minus, ray};
    g.knots = {{"lambda_0", cplx(0.0, -knot_t)}};
    return g;
}

}  // namespace

const char* to_string(CurveTag t) {
    switch (t) {
        case CurveTag::GammaPlus: return "gamma_plus";
        case CurveTag::GammaMinus: return "gamma_minus";
        case CurveTag::GammaInfty: return "gamma_infty";
        case CurveTag::Gamma0: return "gamma_0";
        case CurveTag::GammaA: return "gamma_a";
        case CurveTag::GammaB: return "gamma_b";
    }
    return "?";
}

CurveTag curve_tag_from_string(const std::string& s) {
    for (CurveTag t : {CurveTag::GammaPlus, CurveTag::GammaMinus, CurveTag::GammaInfty, CurveTag::Gamma0, CurveTag::GammaA,
                       CurveTag::GammaB})
        if (s == to_string(t)) return t;
    throw ConfigError("unknown curve tag: " + s);
}

const char* to_string(CurveEnd e) {
    switch (e) {
        case CurveEnd::RealAxis: return "real_axis";
        case CurveEnd::Knot: return "knot";
        case CurveEnd::Depth: return "depth";
        case CurveEnd::Window: return "window";
        case CurveEnd::Origin: return "origin";
    }
    return "?";
}

const char* to_string(GraphFamily f) {
    switch (f) {
        case GraphFamily::Couette: return "couette";
        case GraphFamily::Monotone: return "monotone";
        case GraphFamily::Quadratic: return "quadratic";
        case GraphFamily::OrrSommerfeldCouette: return "orr_sommerfeld_couette";
    }
    return "?";
}

cplx LimitGraph::knot(const std::string& name) const {
    for (const auto& k : knots)
        if (k.name == name) return k.point;
    throw DomainError("graph has no knot " + name);
}

std::vector<const SpectralCurve*> LimitGraph::retained(CurveTag tag) const {
    std::vector<const SpectralCurve*> out;
    for (const auto& c : curves)
        if (c.tag == tag && !c.excluded) out.push_back(&c);
    return out;
}

cplx defining_functional(const Profile& p, CurveTag tag, cplx lambda) {
    if (tag == CurveTag::GammaInfty)
        return phase_integral(p, BranchedPath{{-1.0, 1.0}, real_axis_integrand(p, -1.0, lambda)}, lambda);
    const auto tp = turning_points(p, lambda);
    if (!is_quadratic(p)) {
        if (tag == CurveTag::GammaPlus) return -integral_from_real(p, 1.0, tp.front(), lambda);
        if (tag == CurveTag::GammaMinus) return integral_from_real(p, -1.0, tp.front(), lambda);
        throw DomainError(std::string("curve ") + to_string(tag) + " belongs to the quadratic family");
    }
    switch (tag) {
        case CurveTag::GammaA: return integral_from_real(p, -1.0, tp[1], lambda);
        case CurveTag::GammaB: return -integral_from_real(p, 1.0, tp[0], lambda);
        case CurveTag::GammaMinus: return -integral_from_real(p, 1.0, tp[1], lambda);
        case CurveTag::Gamma0: return quadratic_critical_integral(p, lambda);
        default: break;
    }
    throw DomainError(std::string("curve ") + to_string(tag) + " belongs to the monotone family");
}

double quantization_offset(const Profile& p, CurveTag tag) {
    if (tag == CurveTag::GammaInfty) return 0.0;
    if (tag == CurveTag::Gamma0) {
        if (!is_quadratic(p)) throw DomainError("gamma_0 belongs to the quadratic family");
        return 0.5;
    }
    return -0.25;
}

SpectralCurve trace_curve(const Profile& p, CurveTag tag, double depth, int n_samples) {
    if (is_quadratic(p) && p.beta() < 0.0) return trace_curve(reflected(p), tag, depth, n_samples);
    return trace_curve(p, tag, depth, n_samples, natural_window(p, tag, depth));
}

SpectralCurve trace_curve(const Profile& p, CurveTag tag, double depth, int n_samples, const TraceWindow& window) {
    if (!(depth > 0.0)) throw DomainError("depth must be positive");
    if (n_samples < 2) throw DomainError("a curve needs at least two samples");
    SpectralCurve curve;
    curve.tag = tag;
    const double from = window.from_hi ? window.hi : window.lo;
    const double to = window.from_hi ? window.lo : window.hi;
    const auto grid = linspace(from, to, n_samples);
    const double step = std::abs(to - from) / std::max(1, n_samples - 1);
    std::optional<double> prev, prev2;
    bool beyond = false;
    const auto end_point = real_axis_end(p, tag);
    for (double s : grid) {
        if (end_point && s == *end_point) {
            curve.samples.push_back(s);
            curve.phase.push_back(0.0);
            prev2 = prev;
            prev = 0.0;
            continue;
        }
        std::optional<double> r;
        if (tag == CurveTag::GammaInfty) {
            s = std::max(s, t_floor);
            const double guess = prev ? (prev2 ? 2.0 * *prev - *prev2 : *prev) : 0.5 * (strip_lo(p) + strip_hi(p));
            const double width = prev ? std::max(4.0 * std::abs(prev2 ? *prev - *prev2 : step), 1e-6) : strip_hi(p) - strip_lo(p);
            r = curve_c(p, s, guess, width);
            if (r) {
                const cplx lam(*r, -s);
                curve.samples.push_back(lam);
                curve.phase.push_back(defining_functional(p, tag, lam).imag());
            }
        } else {
            const double guess = prev ? (prev2 ? 2.0 * *prev - *prev2 : *prev) : 0.0;
            const double width = prev ? std::max(4.0 * std::abs(prev2 ? *prev - *prev2 : step), 1e-6) : depth;
            r = curve_t(p, tag, s, guess, width, depth);
            if (r && *r > depth) r.reset();
            if (r) {
                const cplx lam(s, -*r);
                curve.samples.push_back(lam);
                curve.phase.push_back(defining_functional(p, tag, lam).imag());
            } else if (prev) {
                beyond = true;
            }
        }
        prev2 = r ? prev : std::nullopt;
        prev = r;
    }
    if (curve.samples.size() < 2)
        throw BisectionBracketFailure(std::string("no sign change of the defining function along ") + to_string(tag));
    curve.start = std::abs(curve.samples.front().imag()) < 1e-9 ? CurveEnd::RealAxis : CurveEnd::Window;
    curve.end = beyond || std::abs(curve.samples.back().imag()) >= depth * (1.0 - 1e-12) ? CurveEnd::Depth : CurveEnd::Window;
    return curve;
}

cplx knot_point(const Profile& p, CurveTag first, CurveTag second, double lo, double hi, double depth) {
    constexpr int coarse = 40;
    const double inset = 1e-6 * (hi - lo);
    const auto grid = linspace(lo + inset, hi - inset, coarse);
    std::vector<double> cs, t1, t2;
    std::optional<double> g1, g2;
    for (double c : grid) {
        auto r1 = curve_t(p, first, c, g1 ? *g1 : 0.0, g1 ? 0.05 : depth, depth);
        auto r2 = curve_t(p, second, c, g2 ? *g2 : 0.0, g2 ? 0.05 : depth, depth);
        g1 = r1;
        g2 = r2;
        if (!r1 || !r2) continue;
        cs.push_back(c);
        t1.push_back(*r1);
        t2.push_back(*r2);
    }
    // Sign changes among samples whose difference is clearly nonzero.
    std::vector<std::size_t> significant;
    for (std::size_t i = 0; i < cs.size(); ++i)
        if (std::abs(t1[i] - t2[i]) > 1e-10) significant.push_back(i);
    std::vector<std::pair<std::size_t, std::size_t>> changes;
    for (std::size_t j = 1; j < significant.size(); ++j) {
        const std::size_t i0 = significant[j - 1], i1 = significant[j];
        if ((t1[i0] - t2[i0] < 0.0) != (t1[i1] - t2[i1] < 0.0)) changes.emplace_back(i0, i1);
    }
    const std::string names = std::string(to_string(first)) + "/" + to_string(second);
    if (changes.empty()) throw NoIntersection("curves " + names + " do not intersect");
    if (changes.size() > 1) throw MultipleIntersections("curves " + names + " intersect " + std::to_string(changes.size()) + " times");
    const auto [i0, i1] = changes.front();
    auto interp = [&](const std::vector<double>& t, double c) {
        const double w = (c - cs[i0]) / (cs[i1] - cs[i0]);
        return t[i0] + w * (t[i1] - t[i0]);
    };
    auto d = [&](double c) {
        const auto r1 = curve_t(p, first, c, interp(t1, c), 0.02, depth);
        const auto r2 = curve_t(p, second, c, interp(t2, c), 0.02, depth);
        if (!r1 || !r2) throw BisectionBracketFailure("lost curve " + names + " while refining the knot");
        return *r1 - *r2;
    };
    const double c = solve_bracketed(d, cs[i0], cs[i1], t1[i0] - t2[i0], t1[i1] - t2[i1]);
    const auto t = curve_t(p, first, c, interp(t1, c), 0.02, depth);
    return {c, -*t};
}

std::vector<NamedPoint> knot_points(const Profile& p, double depth) {
    if (p.kind() == ProfileKind::Linear) return {{"lambda_0", cplx(0.0, -knot_t)}};
    if (!is_quadratic(p)) {
        const auto [a, b] = range(p);
        return {{"lambda_0", knot_point(p, CurveTag::GammaPlus, CurveTag::GammaMinus, a, b, depth)}};
    }
    if (p.beta() < 0.0) return knot_points(reflected(p), depth);
    const auto [a, b] = range(p);
    const cplx l1 = knot_point(p, CurveTag::GammaB, CurveTag::Gamma0, p.shift(), b, depth);
    if (p.beta() < 1e-12) return {{"lambda_1", l1}, {"lambda_2", l1}};
    const cplx l2 = knot_point(p, CurveTag::GammaA, CurveTag::GammaMinus, l1.real(), a, depth);
    return {{"lambda_1", l1}, {"lambda_2", l2}};
}

LimitGraph build_limit_graph(const Profile& p, double depth, int n_samples) {
    if (!(depth > 0.0)) throw DomainError("depth must be positive");
    if (p.kind() == ProfileKind::Linear) return couette_graph(p, depth, n_samples);
    if (is_quadratic(p) && p.beta() < 0.0) {
        LimitGraph g = build_limit_graph(reflected(p), depth, n_samples);
        g.profile = p;
        std::swap(g.a, g.b);
        return g;
    }
    LimitGraph g;
    g.profile = p;
    g.depth = depth;
    std::tie(g.a, g.b) = range(p);
    g.knots = knot_points(p, depth);

    struct Task {
        CurveTag tag;
        TraceWindow window;
        bool excluded;
        CurveEnd start, end;
        int n;
    };
    std::vector<Task> tasks;
    const int ne = std::max(20, n_samples / 4);
    if (!is_quadratic(p)) {
        g.family = GraphFamily::Monotone;
        const cplx l0 = g.knot("lambda_0");
        tasks = {
            {CurveTag::GammaPlus, {l0.real(), g.b, true}, false, CurveEnd::RealAxis, CurveEnd::Knot, n_samples},
            {CurveTag::GammaMinus, {g.a, l0.real(), false}, false, CurveEnd::RealAxis, CurveEnd::Knot, n_samples},
            {CurveTag::GammaInfty, {-l0.imag(), depth, false}, false, CurveEnd::Knot, CurveEnd::Depth, n_samples},
            {CurveTag::GammaPlus, {g.a, l0.real(), true}, true, CurveEnd::Knot, CurveEnd::Depth, ne},
            {CurveTag::GammaMinus, {l0.real(), g.b, false}, true, CurveEnd::Knot, CurveEnd::Depth, ne},
            {CurveTag::GammaInfty, {0.0, -l0.imag(), true}, true, CurveEnd::Knot, CurveEnd::RealAxis, ne},
        };
    } else {
        g.family = GraphFamily::Quadratic;
        const cplx l1 = g.knot("lambda_1"), l2 = g.knot("lambda_2");
        const double s = p.shift();
        tasks = {
            {CurveTag::Gamma0, {s, l1.real(), false}, false, CurveEnd::Origin, CurveEnd::Knot, n_samples},
            {CurveTag::GammaB, {l1.real(), g.b, true}, false, CurveEnd::RealAxis, CurveEnd::Knot, n_samples},
            {CurveTag::GammaA, {l2.real(), g.a, true}, false, CurveEnd::RealAxis, CurveEnd::Knot, n_samples},
            {CurveTag::GammaInfty, {-l2.imag(), depth, false}, false, CurveEnd::Knot, CurveEnd::Depth, n_samples},
            {CurveTag::Gamma0, {l1.real(), s + depth, false}, true, CurveEnd::Knot, CurveEnd::Depth, ne},
            {CurveTag::GammaB, {s, l1.real(), true}, true, CurveEnd::Knot, CurveEnd::Depth, ne},
            {CurveTag::GammaA, {s, l2.real(), true}, true, CurveEnd::Knot, CurveEnd::Depth, ne},
            {CurveTag::GammaInfty, {0.0, -l2.imag(), true}, true, CurveEnd::Knot, CurveEnd::RealAxis, ne},
        };
        if (l2.real() - l1.real() > 1e-9) {
            tasks.push_back({CurveTag::GammaMinus, {l1.real(), l2.real(), false}, false, CurveEnd::Knot, CurveEnd::Knot, n_samples});
            tasks.push_back({CurveTag::GammaMinus, {s, l1.real(), true}, true, CurveEnd::Knot, CurveEnd::RealAxis, ne});
            tasks.push_back({CurveTag::GammaMinus, {l2.real(), g.a, false}, true, CurveEnd::Knot, CurveEnd::Depth, ne});
        }
    }
    std::vector<std::optional<SpectralCurve>> traced(tasks.size());
    parallel_for(tasks.size(), [&](std::size_t i) {
        const Task& t = tasks[i];
        try {
            SpectralCurve c = trace_curve(p, t.tag, depth, t.n, t.window);
            c.excluded = t.excluded;
            c.start = t.start;
            if (c.end != CurveEnd::Depth) c.end = t.end;
            traced[i] = std::move(c);
        } catch (const BisectionBracketFailure&) {
            if (!t.excluded) throw;
        }
    });
    for (auto& c : traced)
        if (c) g.curves.push_back(std::move(*c));
    if (is_quadratic(p) && g.knot("lambda_2") == g.knot("lambda_1")) {
        // Degenerate gamma_minus of the symmetric profile: the single knot point.
        SpectralCurve c;
        c.tag = CurveTag::GammaMinus;
        c.samples = {g.knot("lambda_1")};
        c.phase = {defining_functional(p, CurveTag::GammaMinus, c.samples.front()).imag()};
        c.start = c.end = CurveEnd::Knot;
        g.curves.push_back(std::move(c));
    }
    return g;
}

double OsFrame::c(double t) const {
    const cplx s = std::sinh(alpha * (2.0 - expi(-pi / 4.0) * t));
    return 2.0 * std::sqrt(pi) * std::abs(s) / std::sinh(2.0 * alpha);
}

double OsFrame::phi(double t) const {
    return std::arg(std::sinh(alpha * (2.0 - expi(-pi / 4.0) * t))) / (2.0 * pi);
}

double OsFrame::gamma(double t, int sign) const {
    return sign * std::sqrt(eps / t) * std::log(c(t) * std::pow(t, 0.75) / std::pow(eps, 0.25));
}

cplx OsFrame::to_lambda(double t, double g) const { return -1.0 + cplx(t, g) * expi(-pi / 6.0); }

OsFrame os_frame(double eps, double alpha) {
    if (!(eps > 0.0) || !(alpha > 0.0)) throw DomainError("eps and alpha must be positive");
    const double le = std::abs(std::log(eps));
    OsFrame f{eps, alpha, std::cbrt(eps) * le, 2.0 * knot_t - 2.0 / 3.0 * std::pow(0.75, 0.75) * std::sqrt(eps) * le};
    if (!(f.t_lo < f.t_hi)) throw DomainError("empty index window: eps too large");
    return f;
}

std::vector<SpectralCurve> couette_os_curves(double eps, double alpha, double depth, int n_samples) {
    const OsFrame f = os_frame(eps, alpha);
    std::vector<SpectralCurve> out;
    for (int sign : {1, -1}) {
        SpectralCurve c;
        c.tag = sign > 0 ? CurveTag::GammaPlus : CurveTag::GammaMinus;
        c.start = c.end = CurveEnd::Window;
        for (double t : linspace(f.t_lo, f.t_hi, n_samples)) {
            c.samples.push_back(f.to_lambda(t, f.gamma(t, sign)));
            c.phase.push_back(t);
        }
        SpectralCurve m = c;
        m.mirror = true;
        for (auto& z : m.samples) z = -std::conj(z);
        out.push_back(std::move(c));
        out.push_back(std::move(m));
    }
    auto ray = closed_segment(
        CurveTag::GammaInfty, n_samples, [](double r) { return cplx(0.0, -r); },
        [](double r) { return f_couette(cplx(0.0, -r)).real(); }, knot_t, std::max(depth, knot_t));
    ray.start = CurveEnd::Knot;
    ray.end = CurveEnd::Depth;
    out.push_back(std::move(ray));
    return out;
}

}  // namespace spectral_portrait
