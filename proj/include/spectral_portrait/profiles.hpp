#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spectral_portrait/types.hpp"

namespace spectral_portrait {

enum class ProfileKind { Linear, Quadratic, ShiftedSquare, HalfSine };

// Affine map between a normalized quadratic (x-beta)^2 and the original
// coefficient: q_orig = scale * (x-beta)^2 + shift.
struct Reduction {
    double scale = 1.0;
    double shift = 0.0;
};

class Profile {
public:
    static Profile linear();
    static Profile quadratic(double beta);
    // a2 x^2 + a1 x + a0 with a2 > 0, reduced to (x-beta)^2.
    static Profile quadratic_from(double a2, double a1, double a0);
    static Profile shifted_square();
    static Profile half_sine();

    ProfileKind kind() const { return kind_; }
    double beta() const { return beta_; }
    const std::optional<Reduction>& reduction() const { return reduction_; }
    bool monotone() const { return kind_ != ProfileKind::Quadratic; }
    std::string label() const;

    // Original coefficient and its derivatives (reduction applied).
    cplx eval(cplx z) const;
    cplx eval_d1(cplx z) const;
    cplx eval_d2(cplx z) const;

    // The same profile with the reduction dropped: q = (x-beta)^2 for quadratics.
    Profile normalized() const;
    double scale() const { return reduction_ ? reduction_->scale : 1.0; }
    double shift() const { return reduction_ ? reduction_->shift : 0.0; }
    cplx to_original(cplx lambda_normalized) const { return scale() * lambda_normalized + shift(); }
    cplx to_normalized(cplx lambda) const { return (lambda - shift()) / scale(); }

private:
    Profile(ProfileKind kind, double beta) : kind_(kind), beta_(beta) {}
    ProfileKind kind_;
    double beta_ = 0.0;
    std::optional<Reduction> reduction_;
};

// (a, b) = (q(-1), q(1)). For quadratics these are the two endpoint values,
// with the interior minimum q(beta) as the floor of the semistrip.
std::pair<double, double> range(const Profile& p);

// Lower and upper real bounds of the semistrip that confines the spectrum.
std::pair<double, double> semistrip(const Profile& p);

// Roots of q(xi) = lambda relevant to [-1, 1]. Monotone kinds: one root
// continued from the real inverse. Quadratic: beta + s, beta - s with
// s the principal root of (lambda - shift) / scale.
std::vector<cplx> turning_points(const Profile& p, cplx lambda);

}  // namespace spectral_portrait
