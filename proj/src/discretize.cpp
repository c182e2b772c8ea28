#include "spectral_portrait/discretize.hpp"

#include <map>
#include <mutex>

#include "spectral_portrait/detail/dense.hpp"
#include "spectral_portrait/errors.hpp"

namespace spectral_portrait {

namespace {

using detail::Cx;
using detail::Mat;
using detail::quad;

template <class R>
using RealMat = DenseMatrix<R>;

template <class R>
struct Grid {
    int n;
    std::vector<R> x;
    RealMat<R> d[5];  // d[1]..d[4]
};

// Differentiation matrices by the Weideman-Reddy recursion with the
// negative-sum diagonal.
template <class R>
Grid<R> make_grid(int n) {
    Grid<R> g;
    g.n = n;
    const R pi = detail::RealTraits<R>::pi();
    const std::size_t m = static_cast<std::size_t>(n) + 1;
    g.x.resize(m);
    for (int j = 0; j <= n; ++j) g.x[j] = detail::r_sin(pi * R(n - 2 * j) / R(2 * n));
    std::vector<R> c(m);
    for (int j = 0; j <= n; ++j) c[j] = R((j % 2) ? -1 : 1) * R((j == 0 || j == n) ? 2 : 1);
    RealMat<R> z(m, m);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            if (i != j)
                z(i, j) = R(1) / (R(2) * detail::r_sin(pi * R(i + j) / R(2 * n)) * detail::r_sin(pi * R(j - i) / R(2 * n)));
    RealMat<R> prev = RealMat<R>(m, m);
    for (std::size_t i = 0; i < m; ++i) prev(i, i) = R(1);
    for (int l = 1; l <= 4; ++l) {
        RealMat<R> d(m, m);
        for (std::size_t i = 0; i < m; ++i) {
            R sum = 0;
            for (std::size_t j = 0; j < m; ++j) {
                if (i == j) continue;
                d(i, j) = R(l) * z(i, j) * (c[i] / c[j] * prev(i, i) - prev(i, j));
                sum += d(i, j);
            }
            d(i, i) = -sum;
        }
        g.d[l] = d;
        prev = std::move(d);
    }
    return g;
}

template <class R>
R q_real(const Profile& p, R x) {
    switch (p.kind()) {
        case ProfileKind::Linear: return x;
        case ProfileKind::Quadratic: return R(p.scale()) * (x - R(p.beta())) * (x - R(p.beta())) + R(p.shift());
        case ProfileKind::ShiftedSquare: return (x + 1) * (x + 1) / 4;
        case ProfileKind::HalfSine: return detail::r_sin(detail::RealTraits<R>::pi() * x / 2);
    }
    return 0;
}

template <class R>
R q2_real(const Profile& p, R x) {
    switch (p.kind()) {
        case ProfileKind::Linear: return 0;
        case ProfileKind::Quadratic: return R(2) * R(p.scale());
        case ProfileKind::ShiftedSquare: return R(0.5);
        case ProfileKind::HalfSine: {
            const R pi = detail::RealTraits<R>::pi();
            return -pi * pi / 4 * detail::r_sin(pi * x / 2);
        }
    }
    return 0;
}

std::mutex cache_mutex;
std::map<int, std::shared_ptr<const Grid<double>>> cache_d;
std::map<int, std::shared_ptr<const Grid<quad>>> cache_q;

template <class R>
std::shared_ptr<const Grid<R>> cached_grid(int n) {
    if (n < 2 || n > 2048) throw DomainError("collocation grid needs 2 <= n <= 2048");
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto& cache = [&]() -> auto& {
        if constexpr (std::is_same_v<R, double>) return cache_d;
        else return cache_q;
    }();
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    auto g = std::make_shared<const Grid<R>>(make_grid<R>(n));
    cache.emplace(n, g);
    return g;
}

template <class R>
struct Assembled {
    Mat<R> a, b;
    bool standard;
};

template <class R>
Assembled<R> build_model(const Profile& p, double eps, BoundaryCondition bc, int n, SignConvention sign) {
    const auto g = cached_grid<R>(n);
    const Cx<R> coef(R(0), R(sign == SignConvention::PlusI ? 1 : -1) * R(model_coefficient(p, eps)));
    const std::size_t m = static_cast<std::size_t>(n) - 1;
    Mat<R> a(m, m);
    const auto& d1 = g->d[1];
    const auto& d2 = g->d[2];
    const std::size_t last = static_cast<std::size_t>(n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            R v = d2(i + 1, j + 1);
            if (bc == BoundaryCondition::MixedLeftNeumann) v -= d2(i + 1, last) * d1(last, j + 1) / d1(last, last);
            a(i, j) = coef * v;
        }
    for (std::size_t i = 0; i < m; ++i) a(i, i) += Cx<R>(q_real<R>(p, g->x[i + 1]));
    return {std::move(a), Mat<R>::identity(m), true};
}

template <class R>
Assembled<R> build_os(const Profile& p, double alpha, double reynolds, int n, SignConvention sign) {
    const auto g = cached_grid<R>(n);
    const std::size_t m = static_cast<std::size_t>(n) - 1;
    const R al = R(alpha), ar = R(alpha) * R(reynolds);
    const auto& x = g->x;
    Mat<R> a(m, m), b(m, m);
    for (std::size_t ii = 0; ii < m; ++ii) {
        const std::size_t i = ii + 1;
        const R xi = x[i], qi = q_real<R>(p, xi);
        for (std::size_t jj = 0; jj < m; ++jj) {
            const std::size_t j = jj + 1;
            const R s = R(1) / (R(1) - x[j] * x[j]);
            // fourth derivative of y = (1 - x^2) p acting on the values of y
            const R d4 = ((R(1) - xi * xi) * g->d[4](i, j) - R(8) * xi * g->d[3](i, j) - R(12) * g->d[2](i, j)) * s;
            const R d2 = g->d[2](i, j);
            const R id = i == j ? R(1) : R(0);
            const R lap = d2 - al * al * id;
            const R bih = d4 - R(2) * al * al * d2 + al * al * al * al * id;
            // A = L^2 - i a R [q L - q''], B = -i a R L
            const R q2 = i == j ? q2_real<R>(p, xi) : R(0);
            a(ii, jj) = Cx<R>(bih, -ar * (qi * lap - q2));
            b(ii, jj) = Cx<R>(R(0), -ar * lap);
        }
    }
    if (sign == SignConvention::MinusI) {
        for (auto& z : a.data) z = detail::conj(z);
        for (auto& z : b.data) z = detail::conj(z);
    }
    return {std::move(a), std::move(b), false};
}

template <class R>
CMatrix to_double(const Mat<R>& m) {
    CMatrix out(m.rows, m.cols);
    for (std::size_t i = 0; i < m.data.size(); ++i) out.data[i] = m.data[i].to_std();
    return out;
}

PencilMeta model_meta(const Profile& p, double eps, BoundaryCondition bc, int n, SignConvention sign) {
    PencilMeta meta;
    meta.problem = "model";
    meta.profile = p.label();
    meta.bc = to_string(bc);
    meta.eps = eps;
    meta.n = n;
    meta.sign = sign;
    return meta;
}

PencilMeta os_meta(const Profile& p, double alpha, double reynolds, int n, SignConvention sign) {
    PencilMeta meta;
    meta.problem = "orr_sommerfeld";
    meta.profile = p.label();
    meta.bc = to_string(BoundaryCondition::Clamped);
    meta.eps = 1.0 / (alpha * reynolds);
    meta.alpha = alpha;
    meta.reynolds = reynolds;
    meta.n = n;
    meta.sign = sign;
    return meta;
}

template <class R>
Spectrum solve_assembled(const Assembled<R>& as) {
    Spectrum s = as.standard ? detail::eigen_solve(as.a) : detail::pencil_solve(as.a, as.b);
    sort_spectrum(s);
    return s;
}

}  // namespace

const char* to_string(BoundaryCondition bc) {
    switch (bc) {
        case BoundaryCondition::Dirichlet: return "dirichlet";
        case BoundaryCondition::MixedLeftNeumann: return "mixed_left_neumann";
        case BoundaryCondition::Clamped: return "clamped";
    }
    return "?";
}

std::shared_ptr<const CollocationGrid> collocation_grid(int n) {
    const auto g = cached_grid<double>(n);
    auto out = std::make_shared<CollocationGrid>();
    out->n = n;
    out->nodes = g->x;
    out->d1 = g->d[1];
    out->d2 = g->d[2];
    out->d3 = g->d[3];
    out->d4 = g->d[4];
    return out;
}

double model_coefficient(const Profile& p, double eps) {
    return p.kind() == ProfileKind::Linear ? eps : eps * eps;
}

OperatorPencil assemble_model(const Profile& p, double eps, BoundaryCondition bc, int n, SignConvention sign) {
    if (!(eps > 0.0)) throw DomainError("eps must be positive");
    if (bc == BoundaryCondition::Clamped) throw DomainError("clamped conditions belong to the fourth-order problem");
    const auto as = build_model<double>(p, eps, bc, n, sign);
    OperatorPencil out;
    out.a = to_double(as.a);
    out.b = to_double(as.b);
    out.bc = bc;
    out.meta = model_meta(p, eps, bc, n, sign);
    return out;
}

OperatorPencil assemble_os(const Profile& p, double alpha, double reynolds, int n, SignConvention sign) {
    if (!(alpha > 0.0) || !(reynolds > 0.0)) throw DomainError("alpha and R must be positive");
    const auto as = build_os<double>(p, alpha, reynolds, n, sign);
    OperatorPencil out;
    out.a = to_double(as.a);
    out.b = to_double(as.b);
    out.bc = BoundaryCondition::Clamped;
    out.meta = os_meta(p, alpha, reynolds, n, sign);
    out.standard = false;
    return out;
}

Spectrum model_spectrum(const Profile& p, double eps, BoundaryCondition bc, int n, SignConvention sign,
                        Precision precision) {
    if (!(eps > 0.0)) throw DomainError("eps must be positive");
    if (bc == BoundaryCondition::Clamped) throw DomainError("clamped conditions belong to the fourth-order problem");
    Spectrum s = precision == Precision::Quad ? solve_assembled(build_model<quad>(p, eps, bc, n, sign))
                                              : solve_assembled(build_model<double>(p, eps, bc, n, sign));
    s.meta = model_meta(p, eps, bc, n, sign);
    s.meta.precision = precision;
    return s;
}

Spectrum os_spectrum(const Profile& p, double alpha, double reynolds, int n, SignConvention sign,
                     Precision precision) {
    if (!(alpha > 0.0) || !(reynolds > 0.0)) throw DomainError("alpha and R must be positive");
    Spectrum s = precision == Precision::Quad ? solve_assembled(build_os<quad>(p, alpha, reynolds, n, sign))
                                              : solve_assembled(build_os<double>(p, alpha, reynolds, n, sign));
    s.meta = os_meta(p, alpha, reynolds, n, sign);
    s.meta.precision = precision;
    return s;
}

}  // namespace spectral_portrait
