#include "spectral_portrait/phase.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>

#include "spectral_portrait/errors.hpp"

namespace spectral_portrait {

namespace {

using Gauss = boost::math::quadrature::gauss<double, 20>;

const cplx e_i_pi_4 = expi(pi / 4.0);

cplx principal_w(const Profile& p, cplx z, cplx lambda) { return std::sqrt(I * (p.eval(z) - lambda)); }

// Pick the sign of w that continues ref.
cplx continue_from(cplx w, cplx ref) { return std::abs(w - ref) <= std::abs(w + ref) ? w : -w; }

struct Node {
    double u, weight;
};

const std::vector<Node>& gauss_nodes() {
    static const std::vector<Node> nodes = [] {
        std::vector<Node> out;
        const auto& x = Gauss::abscissa();
        const auto& w = Gauss::weights();
        for (std::size_t i = 0; i < x.size(); ++i) {
            out.push_back({-x[i], w[i]});
            if (x[i] != 0.0) out.push_back({x[i], w[i]});
        }
        std::sort(out.begin(), out.end(), [](const Node& a, const Node& b) { return a.u < b.u; });
        return out;
    }();
    return nodes;
}

// One straight segment z0 -> z1 under the smoothstep substitution
// s = 3u^2 - 2u^3, which removes square-root endpoint singularities.
struct Segment {
    const Profile& p;
    cplx lambda, z0, dz;
    double tol;
    double wmax = 0.0;  // running max of |w|, scale for "near a zero"

    cplx z_at(double u) const { return z0 + dz * (u * u * (3.0 - 2.0 * u)); }
    double jac(double u) const { return 6.0 * u * (1.0 - u); }

    // Gauss rule on [ua, ub] continuing the branch from w_a; returns false if a
    // continuation step is ambiguous.
    bool panel(double ua, double ub, cplx w_a, cplx& sum, cplx& w_b) {
        const double h = 0.5 * (ub - ua), m = 0.5 * (ub + ua);
        cplx ref = w_a, acc = 0.0;
        for (const Node& n : gauss_nodes()) {
            const double u = m + h * n.u;
            cplx w = continue_from(principal_w(p, z_at(u), lambda), ref);
            wmax = std::max(wmax, std::abs(w));
            if (!ambiguous_ok(ref, w)) return false;
            acc += n.weight * w * jac(u);
            ref = w;
        }
        w_b = continue_from(principal_w(p, z_at(ub), lambda), ref);
        if (!ambiguous_ok(ref, w_b)) return false;
        sum = acc * h * dz;
        return true;
    }

    // The chosen sign must be clearly closer than the other one (phase step
    // below about 53 degrees), except next to a zero of the integrand. A
    // turning point known to residual 1e-12 (1 + |lambda|) leaves |w| noise of
    // about 1e-6 there, which matters where q' is small.
    bool ambiguous_ok(cplx prev, cplx next) const {
        const double small = std::min(std::abs(prev), std::abs(next));
        if (small <= std::max(1e-6 * wmax, 4e-6 * std::sqrt(1.0 + std::abs(lambda)))) return true;
        return std::abs(next - prev) <= 0.5 * std::abs(next + prev);
    }

    cplx adaptive(double ua, double ub, cplx w_a, cplx& w_b, int depth) {
        cplx whole, w_whole;
        const bool ok_whole = panel(ua, ub, w_a, whole, w_whole);
        const double um = 0.5 * (ua + ub);
        cplx left, right, w_m, w_end;
        const bool ok_left = panel(ua, um, w_a, left, w_m);
        const bool ok_right = ok_left && panel(um, ub, w_m, right, w_end);
        if (ok_whole && ok_left && ok_right) {
            const double err = std::abs(whole - (left + right));
            if (err <= tol * (ub - ua) || depth >= 40) {
                w_b = w_end;
                return left + right;
            }
        } else if (depth >= 40) {
            throw BranchJump("branch continuation ambiguous near z = " + std::to_string(z_at(ua).real()) + " " +
                             std::to_string(z_at(ua).imag()));
        }
        cplx w_mid;
        const cplx l = adaptive(ua, um, w_a, w_mid, depth + 1);
        const cplx r = adaptive(um, ub, w_mid, w_b, depth + 1);
        return l + r;
    }
};

}  // namespace

cplx real_axis_integrand(const Profile& p, double x, cplx lambda) {
    return e_i_pi_4 * std::sqrt(p.eval(x) - lambda);
}

cplx phase_integral(const Profile& p, const BranchedPath& path, cplx lambda, double tol) {
    if (path.nodes.size() < 2) return 0.0;
    cplx total = 0.0;
    cplx w = path.branch_seed;
    double length = 0.0;
    for (std::size_t i = 1; i < path.nodes.size(); ++i) length += std::abs(path.nodes[i] - path.nodes[i - 1]);
    for (std::size_t i = 1; i < path.nodes.size(); ++i) {
        const cplx z0 = path.nodes[i - 1], z1 = path.nodes[i];
        if (z0 == z1) continue;
        Segment seg{p, lambda, z0, z1 - z0, tol * (1.0 + length), std::abs(w)};
        cplx w_end;
        total += seg.adaptive(0.0, 1.0, w, w_end, 0);
        w = w_end;
    }
    return total;
}

cplx integral_from_real(const Profile& p, double x0, cplx z, cplx lambda) {
    BranchedPath path{{cplx(x0, 0.0), cplx(z.real(), 0.0), z}, real_axis_integrand(p, x0, lambda)};
    return phase_integral(p, path, lambda);
}

QValues q_functionals(const Profile& p, cplx lambda) {
    if (!p.monotone()) throw DomainError("q_functionals is defined for monotone profiles");
    const cplx xi = turning_points(p, lambda).front();
    QValues out;
    out.Q = phase_integral(p, BranchedPath{{-1.0, 1.0}, real_axis_integrand(p, -1.0, lambda)}, lambda);
    out.Qm = integral_from_real(p, -1.0, xi, lambda);
    out.Qp = -integral_from_real(p, 1.0, xi, lambda);
    return out;
}

QuadraticIntegrals quadratic_integrals(const Profile& p, cplx lambda) {
    if (p.kind() != ProfileKind::Quadratic) throw DomainError("quadratic_integrals needs a quadratic profile");
    const auto tp = turning_points(p, lambda);
    const cplx xp = tp[0], xm = tp[1];
    QuadraticIntegrals out;
    out.Inf = phase_integral(p, BranchedPath{{-1.0, 1.0}, real_axis_integrand(p, -1.0, lambda)}, lambda);
    out.A = integral_from_real(p, -1.0, xm, lambda);
    out.B = -integral_from_real(p, 1.0, xp, lambda);
    out.K = -integral_from_real(p, 1.0, xm, lambda);
    out.P = out.K - out.B;
    return out;
}

cplx quadratic_critical_integral(const Profile& p, cplx lambda) {
    return expi(0.75 * pi) * pi * (lambda - p.shift()) / (2.0 * std::sqrt(p.scale()));
}

cplx f_couette(cplx lambda) {
    auto pow32 = [](cplx w) { return w * std::sqrt(w); };
    return (2.0 / 3.0) * expi(-pi / 4.0) * (pow32(1.0 - lambda) - pow32(-1.0 - lambda));
}

const char* to_string(StokesTag t) {
    switch (t) {
        case StokesTag::Left: return "left";
        case StokesTag::Right: return "right";
        case StokesTag::Lower: return "lower";
    }
    return "?";
}

const char* to_string(Truncation t) {
    switch (t) {
        case Truncation::HitBoundary: return "boundary";
        case Truncation::HitTurningPoint: return "turning_point";
        case Truncation::MaxLength: return "max_length";
    }
    return "?";
}

namespace {

struct Tracer {
    const Profile& p;
    cplx lambda;
    cplx xi;
    std::vector<cplx> others;

    // Direction keeping Re S fixed, oriented along prev.
    cplx direction(cplx z, cplx& w_ref, cplx prev) const {
        const cplx w = continue_from(principal_w(p, z, lambda), w_ref);
        w_ref = w;
        cplx d = I * std::conj(w) / std::abs(w);
        if ((d * std::conj(prev)).real() < 0.0) d = -d;
        return d;
    }

    StokesLine trace(double theta, double max_len) const {
        StokesLine line;
        line.points.push_back(xi);
        const double h0 = 1e-3;
        cplx z = xi + h0 * expi(theta);
        cplx w = principal_w(p, z, lambda);
        // S at the first point, integrated back from the turning point.
        cplx S = -phase_integral(p, BranchedPath{{z, xi}, w}, lambda);
        const double drift0 = std::abs(S.real());
        line.max_drift = drift0 / (1.0 + h0);
        line.points.push_back(z);
        cplx dir = expi(theta);
        double arclen = h0, h = 1e-3;
        line.truncation = Truncation::MaxLength;
        while (arclen < max_len) {
            h = std::min(h, 1e-3 * (1.0 + std::abs(z - xi)) * 4.0);
            cplx wr = w;
            const cplx k1 = direction(z, wr, dir);
            cplx wr2 = wr;
            const cplx k2 = direction(z + 0.5 * h * k1, wr2, k1);
            cplx wr3 = wr2;
            const cplx k3 = direction(z + 0.5 * h * k2, wr3, k2);
            cplx wr4 = wr3;
            const cplx k4 = direction(z + h * k3, wr4, k3);
            const cplx step = h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            const double turn = std::abs(std::arg(k4 * std::conj(k1)));
            if (turn > 0.2) {
                h *= 0.5;
                if (h < 1e-9) throw StallError("Stokes line step collapsed near z = " + std::to_string(z.real()));
                continue;
            }
            cplx zn = z + step;
            // increment of S by Simpson on the straight step, branch continued
            cplx wm = continue_from(principal_w(p, 0.5 * (z + zn), lambda), w);
            cplx we = continue_from(principal_w(p, zn, lambda), wm);
            S += (zn - z) / 6.0 * (w + 4.0 * wm + we);
            // project the drift of Re S out
            if (std::abs(we) > 1e-14) {
                const cplx corr = -S.real() * std::conj(we) / std::norm(we);
                zn += corr;
                S += we * corr;
                we = continue_from(principal_w(p, zn, lambda), we);
            }
            line.max_drift = std::max(line.max_drift, std::abs(S.real()) / (1.0 + std::abs(zn - xi)));
            dir = (zn - z) / std::abs(zn - z);
            arclen += std::abs(zn - z);
            z = zn;
            w = we;
            line.points.push_back(z);
            h = std::min(h * 1.5, 2e-2);
            if (std::abs(z.imag()) > 2.0 || std::abs(z.real()) > 3.0) {
                line.truncation = Truncation::HitBoundary;
                break;
            }
            bool hit = false;
            for (cplx o : others)
                if (std::abs(z - o) < 1e-4 || (std::abs(z - o) < h && std::abs(zn - o) < 2 * h)) hit = true;
            if (hit) {
                line.truncation = Truncation::HitTurningPoint;
                break;
            }
        }
        return line;
    }
};

}  // namespace

std::vector<StokesComplex> trace_stokes(const Profile& p, cplx lambda, double max_len) {
    const auto tps = turning_points(p, lambda);
    std::vector<StokesComplex> out;
    for (std::size_t i = 0; i < tps.size(); ++i) {
        Tracer tr{p, lambda, tps[i], {}};
        for (std::size_t j = 0; j < tps.size(); ++j)
            if (j != i) tr.others.push_back(tps[j]);
        const cplx c = std::sqrt(I * p.eval_d1(tps[i]));
        StokesComplex sc;
        sc.turning_point = tps[i];
        for (int m = 0; m < 3; ++m) {
            double th = (2.0 / 3.0) * (0.5 * pi + m * pi - std::arg(c));
            th = std::remainder(th, 2.0 * pi);
            sc.initial_angles[m] = th;
        }
        // lowest direction is the lower line, of the other two the larger cosine is right
        int lower = 0;
        for (int m = 1; m < 3; ++m)
            if (std::sin(sc.initial_angles[m]) < std::sin(sc.initial_angles[lower])) lower = m;
        for (int m = 0; m < 3; ++m) {
            StokesLine line = tr.trace(sc.initial_angles[m], max_len);
            if (m == lower) {
                line.tag = StokesTag::Lower;
            } else {
                const int other = 3 - lower - m;
                line.tag = std::cos(sc.initial_angles[m]) >= std::cos(sc.initial_angles[other]) ? StokesTag::Right
                                                                                                 : StokesTag::Left;
            }
            sc.lines.push_back(std::move(line));
        }
        out.push_back(std::move(sc));
    }
    return out;
}

}  // namespace spectral_portrait
