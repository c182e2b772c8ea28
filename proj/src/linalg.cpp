#include "spectral_portrait/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "spectral_portrait/detail/dense.hpp"

namespace spectral_portrait {

std::vector<cplx> Spectrum::kept() const {
    std::vector<cplx> out;
    for (std::size_t i = 0; i < eigenvalues.size(); ++i)
        if (!flags[i].spurious && !flags[i].sentinel) out.push_back(eigenvalues[i]);
    return out;
}

void sort_spectrum(Spectrum& s) {
    std::vector<std::size_t> idx(s.eigenvalues.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        const cplx x = s.eigenvalues[a], y = s.eigenvalues[b];
        if (x.imag() != y.imag()) return x.imag() > y.imag();
        return x.real() < y.real();
    });
    std::vector<cplx> ev;
    std::vector<EigenFlags> fl;
    for (std::size_t i : idx) ev.push_back(s.eigenvalues[i]), fl.push_back(s.flags[i]);
    s.eigenvalues = std::move(ev);
    s.flags = std::move(fl);
}

Spectrum eigenvalues(const CMatrix& m, Precision precision) {
    if (m.rows != m.cols) throw DomainError("eigenvalues needs a square matrix");
    Spectrum s = precision == Precision::Quad ? detail::eigen_solve(detail::to_precision<detail::quad>(m))
                                              : detail::eigen_solve(detail::to_precision<double>(m));
    s.meta.n = static_cast<int>(m.rows);
    s.meta.precision = precision;
    sort_spectrum(s);
    return s;
}

Spectrum generalized_eigenvalues(const CMatrix& a, const CMatrix& b, Precision precision) {
    Spectrum s = precision == Precision::Quad
                     ? detail::pencil_solve(detail::to_precision<detail::quad>(a), detail::to_precision<detail::quad>(b))
                     : detail::pencil_solve(detail::to_precision<double>(a), detail::to_precision<double>(b));
    s.meta.n = static_cast<int>(a.rows);
    s.meta.precision = precision;
    sort_spectrum(s);
    return s;
}

Spectrum filter_spurious(const Spectrum& coarse, const Spectrum& fine, double tol) {
    Spectrum out = fine;
    const auto ref = coarse.kept();
    for (std::size_t i = 0; i < out.eigenvalues.size(); ++i) {
        if (out.flags[i].sentinel) continue;
        const cplx z = out.eigenvalues[i];
        double best = std::numeric_limits<double>::infinity();
        for (cplx c : ref) best = std::min(best, std::abs(c - z));
        out.flags[i].spurious = !(best <= tol * (1.0 + std::abs(z)));
    }
    return out;
}

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
    const auto c = detail::multiply(detail::to_precision<double>(a), detail::to_precision<double>(b));
    CMatrix out(c.rows, c.cols);
    for (std::size_t i = 0; i < c.data.size(); ++i) out.data[i] = c.data[i].to_std();
    return out;
}

namespace {

double frobenius(const CMatrix& m) {
    double s = 0;
    for (cplx z : m.data) s += std::norm(z);
    return std::sqrt(s);
}

// Inverse iteration on (A - lambda B) and the residual of the resulting vector.
double inverse_iteration_residual(const CMatrix& a, const CMatrix* b, cplx lambda, double denom) {
    using detail::Cx;
    const std::size_t n = a.rows;
    detail::Mat<double> c(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const cplx bij = b ? (*b)(i, j) : (i == j ? cplx(1.0) : cplx(0.0));
            c(i, j) = Cx<double>(a(i, j) - lambda * bij);
        }
    std::vector<std::size_t> piv;
    detail::Mat<double> lu = c;
    if (!detail::lu_factor(lu, piv)) return 0.0;
    std::mt19937_64 rng(12345);
    std::normal_distribution<double> nd;
    detail::Mat<double> v(n, 1);
    for (std::size_t i = 0; i < n; ++i) v(i, 0) = Cx<double>(nd(rng), nd(rng));
    for (int it = 0; it < 3; ++it) {
        if (b) v = detail::multiply(detail::to_precision<double>(*b), v);
        detail::lu_solve(lu, piv, v);
        double nv = 0;
        for (auto& z : v.data) nv += detail::norm(z);
        nv = std::sqrt(nv);
        for (auto& z : v.data) z = z * (1.0 / nv);
    }
    const auto r = detail::multiply(c, v);
    double nr = 0;
    for (auto& z : r.data) nr += detail::norm(z);
    return std::sqrt(nr) / denom;
}

}  // namespace

double eigen_residual(const CMatrix& m, cplx lambda) {
    return inverse_iteration_residual(m, nullptr, lambda, frobenius(m));
}

double pencil_residual(const CMatrix& a, const CMatrix& b, cplx lambda) {
    return inverse_iteration_residual(a, &b, lambda, frobenius(a) + std::abs(lambda) * frobenius(b));
}

}  // namespace spectral_portrait
