#include "spectral_portrait/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "spectral_portrait/errors.hpp"

namespace spectral_portrait {

Profile Profile::linear() { return Profile(ProfileKind::Linear, 0.0); }

Profile Profile::quadratic(double beta) {
    if (!(beta > -1.0 && beta < 1.0)) throw DomainError("quadratic profile needs beta in (-1, 1)");
    return Profile(ProfileKind::Quadratic, beta);
}

Profile Profile::quadratic_from(double a2, double a1, double a0) {
    if (!(a2 > 0.0)) throw DomainError("quadratic reduction needs a positive leading coefficient");
    Profile p = quadratic(-a1 / (2.0 * a2));
    p.reduction_ = Reduction{a2, a0 - a1 * a1 / (4.0 * a2)};
    return p;
}

Profile Profile::shifted_square() { return Profile(ProfileKind::ShiftedSquare, 0.0); }
Profile Profile::half_sine() { return Profile(ProfileKind::HalfSine, 0.0); }

std::string Profile::label() const {
    std::ostringstream os;
    switch (kind_) {
        case ProfileKind::Linear: return "linear";
        case ProfileKind::ShiftedSquare: return "shifted_square";
        case ProfileKind::HalfSine: return "half_sine";
        case ProfileKind::Quadratic:
            os.precision(17);
            os << "quadratic(beta=" << beta_;
            if (reduction_) os << ", scale=" << reduction_->scale << ", shift=" << reduction_->shift;
            os << ")";
            return os.str();
    }
    return "unknown";
}

Profile Profile::normalized() const {
    Profile p = *this;
    p.reduction_.reset();
    return p;
}

cplx Profile::eval(cplx z) const {
    switch (kind_) {
        case ProfileKind::Linear: return z;
        case ProfileKind::Quadratic: return scale() * (z - beta_) * (z - beta_) + shift();
        case ProfileKind::ShiftedSquare: return 0.25 * (z + 1.0) * (z + 1.0);
        case ProfileKind::HalfSine: return std::sin(0.5 * pi * z);
    }
    return 0.0;
}

cplx Profile::eval_d1(cplx z) const {
    switch (kind_) {
        case ProfileKind::Linear: return 1.0;
        case ProfileKind::Quadratic: return 2.0 * scale() * (z - beta_);
        case ProfileKind::ShiftedSquare: return 0.5 * (z + 1.0);
        case ProfileKind::HalfSine: return 0.5 * pi * std::cos(0.5 * pi * z);
    }
    return 0.0;
}

cplx Profile::eval_d2(cplx z) const {
    switch (kind_) {
        case ProfileKind::Linear: return 0.0;
        case ProfileKind::Quadratic: return 2.0 * scale();
        case ProfileKind::ShiftedSquare: return 0.5;
        case ProfileKind::HalfSine: return -0.25 * pi * pi * std::sin(0.5 * pi * z);
    }
    return 0.0;
}

std::pair<double, double> range(const Profile& p) {
    if (p.kind() == ProfileKind::Quadratic) {
        const double b = p.beta();
        return {p.scale() * (-1.0 - b) * (-1.0 - b) + p.shift(), p.scale() * (1.0 - b) * (1.0 - b) + p.shift()};
    }
    return {p.eval(-1.0).real(), p.eval(1.0).real()};
}

std::pair<double, double> semistrip(const Profile& p) {
    if (p.kind() == ProfileKind::Quadratic) {
        auto [a, b] = range(p);
        return {p.shift(), std::max(a, b)};
    }
    return range(p);
}

namespace {

// Newton polish of q(xi) = lambda from a seed; returns false on failure.
bool polish(const Profile& p, cplx lambda, cplx& xi) {
    const double tol = 1e-13 * (1.0 + std::abs(lambda));
    for (int it = 0; it < 50; ++it) {
        const cplx r = p.eval(xi) - lambda;
        if (std::abs(r) <= tol) return true;
        const cplx d = p.eval_d1(xi);
        if (std::abs(d) == 0.0) return false;
        xi -= r / d;
        if (!std::isfinite(xi.real()) || !std::isfinite(xi.imag())) return false;
    }
    return std::abs(p.eval(xi) - lambda) <= 1e-12 * (1.0 + std::abs(lambda));
}

// Continuation of the real inverse from Re lambda down to lambda.
cplx continue_inverse(const Profile& p, cplx lambda) {
    auto [a, b] = range(p);
    const double c = std::clamp(lambda.real(), a, b);
    double lo = -1.0, hi = 1.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (p.eval(mid).real() < c ? lo : hi) = mid;
    }
    cplx xi = 0.5 * (lo + hi);
    const cplx start = p.eval(xi);
    const int steps = 32;
    for (int s = 1; s <= steps; ++s) {
        const cplx target = start + (lambda - start) * (double(s) / steps);
        if (!polish(p, target, xi)) throw NoRootInDomain("Newton continuation of the inverse profile failed");
    }
    return xi;
}

}  // namespace

std::vector<cplx> turning_points(const Profile& p, cplx lambda) {
    switch (p.kind()) {
        case ProfileKind::Linear: return {lambda};
        case ProfileKind::ShiftedSquare: {
            cplx xi = -1.0 + 2.0 * std::sqrt(lambda);
            if (!polish(p, lambda, xi)) throw NoRootInDomain("shifted square root");
            return {xi};
        }
        case ProfileKind::HalfSine: {
            cplx xi = (2.0 / pi) * std::asin(lambda);
            if (!polish(p, lambda, xi)) xi = continue_inverse(p, lambda);
            return {xi};
        }
        case ProfileKind::Quadratic: {
            const cplx s = std::sqrt(p.to_normalized(lambda));
            return {p.beta() + s, p.beta() - s};
        }
    }
    return {};
}

}  // namespace spectral_portrait
