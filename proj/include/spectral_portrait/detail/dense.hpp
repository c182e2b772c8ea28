#pragma once

// Dense complex kernels templated on the real type (double or __float128).

#include <algorithm>
#include <cstddef>
#include <vector>

#include "spectral_portrait/detail/scalar.hpp"
#include "spectral_portrait/errors.hpp"
#include "spectral_portrait/linalg.hpp"

namespace spectral_portrait::detail {

template <class R>
using Mat = DenseMatrix<Cx<R>>;

template <class R>
Mat<R> to_precision(const CMatrix& m) {
    Mat<R> out(m.rows, m.cols);
    for (std::size_t i = 0; i < m.data.size(); ++i) out.data[i] = Cx<R>(m.data[i]);
    return out;
}

template <class R>
R norm_one(const Mat<R>& m) {
    R best = 0;
    for (std::size_t j = 0; j < m.cols; ++j) {
        R s = 0;
        for (std::size_t i = 0; i < m.rows; ++i) s += abs(m(i, j));
        best = std::max(best, s);
    }
    return best;
}

template <class R>
Mat<R> multiply(const Mat<R>& a, const Mat<R>& b) {
    Mat<R> c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const Cx<R> aik = a(i, k);
            if (aik.re == R(0) && aik.im == R(0)) continue;
            Cx<R>* crow = &c.data[i * c.cols];
            const Cx<R>* brow = &b.data[k * b.cols];
            for (std::size_t j = 0; j < b.cols; ++j) crow[j] += aik * brow[j];
        }
    return c;
}

// In-place LU with partial pivoting; returns false if exactly singular.
template <class R>
bool lu_factor(Mat<R>& a, std::vector<std::size_t>& piv) {
    const std::size_t n = a.rows;
    piv.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        R best = abs1(a(k, k));
        for (std::size_t i = k + 1; i < n; ++i)
            if (abs1(a(i, k)) > best) best = abs1(a(i, k)), p = i;
        piv[k] = p;
        if (best == R(0)) return false;
        if (p != k)
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
        const Cx<R> inv = Cx<R>(R(1)) / a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const Cx<R> f = a(i, k) * inv;
            a(i, k) = f;
            if (f.re == R(0) && f.im == R(0)) continue;
            Cx<R>* ri = &a.data[i * n];
            const Cx<R>* rk = &a.data[k * n];
            for (std::size_t j = k + 1; j < n; ++j) ri[j] -= f * rk[j];
        }
    }
    return true;
}

// Solves in place for all columns of b.
template <class R>
void lu_solve(const Mat<R>& lu, const std::vector<std::size_t>& piv, Mat<R>& b) {
    const std::size_t n = lu.rows, m = b.cols;
    for (std::size_t k = 0; k < n; ++k)
        if (piv[k] != k)
            for (std::size_t j = 0; j < m; ++j) std::swap(b(k, j), b(piv[k], j));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < i; ++k) {
            const Cx<R> f = lu(i, k);
            if (f.re == R(0) && f.im == R(0)) continue;
            Cx<R>* bi = &b.data[i * m];
            const Cx<R>* bk = &b.data[k * m];
            for (std::size_t j = 0; j < m; ++j) bi[j] -= f * bk[j];
        }
    for (std::size_t ii = n; ii-- > 0;) {
        for (std::size_t k = ii + 1; k < n; ++k) {
            const Cx<R> f = lu(ii, k);
            Cx<R>* bi = &b.data[ii * m];
            const Cx<R>* bk = &b.data[k * m];
            for (std::size_t j = 0; j < m; ++j) bi[j] -= f * bk[j];
        }
        const Cx<R> inv = Cx<R>(R(1)) / lu(ii, ii);
        for (std::size_t j = 0; j < m; ++j) b(ii, j) = b(ii, j) * inv;
    }
}

// Diagonal similarity by powers of two so row and column norms are comparable.
template <class R>
void balance(Mat<R>& a) {
    const std::size_t n = a.rows;
    bool changed = true;
    for (int sweep = 0; changed && sweep < 100; ++sweep) {
        changed = false;
        for (std::size_t i = 0; i < n; ++i) {
            R c = 0, r = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                c += abs1(a(j, i));
                r += abs1(a(i, j));
            }
            if (c == R(0) || r == R(0)) continue;
            // power of two nearest sqrt(r / c) minimizes c f + r / f
            R f = 1;
            while (c * f * f * 4 < r) f *= 2;
            while (c * f * f > r * 4) f /= 2;
            if (f != R(1) && c * f + r / f < R(0.95) * (c + r)) {
                changed = true;
                for (std::size_t j = 0; j < n; ++j) a(i, j) = a(i, j) * (R(1) / f);
                for (std::size_t j = 0; j < n; ++j) a(j, i) = a(j, i) * f;
            }
        }
    }
}

// Householder reduction to upper Hessenberg form.
template <class R>
void hessenberg(Mat<R>& a) {
    const std::size_t n = a.rows;
    std::vector<Cx<R>> v(n);
    for (std::size_t k = 0; k + 2 < n; ++k) {
        R xnorm = 0;
        for (std::size_t i = k + 2; i < n; ++i) xnorm = r_hypot(xnorm, abs(a(i, k)));
        if (xnorm == R(0)) continue;
        const Cx<R> alpha = a(k + 1, k);
        const R anorm = r_hypot(abs(alpha), xnorm);
        // beta = -e^{i arg alpha} |x|, v = x - beta e1
        const R aa = abs(alpha);
        const Cx<R> phase = aa == R(0) ? Cx<R>(R(1)) : alpha * (R(1) / aa);
        const Cx<R> beta = phase * (-anorm);
        v[k + 1] = alpha - beta;
        for (std::size_t i = k + 2; i < n; ++i) v[i] = a(i, k);
        R vn = 0;
        for (std::size_t i = k + 1; i < n; ++i) vn += norm(v[i]);
        const R tau = R(2) / vn;
        // left: rows k+1..n-1, H = I - tau v v^H
        for (std::size_t j = k; j < n; ++j) {
            Cx<R> s;
            for (std::size_t i = k + 1; i < n; ++i) s += conj(v[i]) * a(i, j);
            s = s * tau;
            for (std::size_t i = k + 1; i < n; ++i) a(i, j) -= v[i] * s;
        }
        // right: columns k+1..n-1
        for (std::size_t i = 0; i < n; ++i) {
            Cx<R> s;
            Cx<R>* row = &a.data[i * n];
            for (std::size_t j = k + 1; j < n; ++j) s += row[j] * v[j];
            s = s * tau;
            for (std::size_t j = k + 1; j < n; ++j) row[j] -= s * conj(v[j]);
        }
        a(k + 1, k) = beta;
        for (std::size_t i = k + 2; i < n; ++i) a(i, k) = Cx<R>();
    }
}

// Eigenvalues of an upper Hessenberg matrix by single-shift QR with Wilkinson
// shifts, exceptional shifts and the Ahues-Tisseur deflation test.
template <class R>
void hessenberg_qr(Mat<R>& h, std::vector<Cx<R>>& w, std::vector<bool>& converged) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(h.rows);
    w.assign(static_cast<std::size_t>(n), Cx<R>());
    converged.assign(static_cast<std::size_t>(n), true);
    if (n == 0) return;
    const R ulp = RealTraits<R>::ulp();
    const R smlnum = RealTraits<R>::safe_min() * (R(n) / ulp);
    const int itmax = 40 * static_cast<int>(std::max<std::ptrdiff_t>(10, n));
    auto H = [&](std::ptrdiff_t i, std::ptrdiff_t j) -> Cx<R>& {
        return h(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    };
    for (std::ptrdiff_t j = 0; j + 2 < n; ++j) {
        H(j + 2, j) = Cx<R>();
        if (j + 3 < n) H(j + 3, j) = Cx<R>();
    }
    std::ptrdiff_t i = n - 1;
    int total_its = 0;
    while (i >= 0) {
        std::ptrdiff_t l = 0;
        bool found = false;
        for (int its = 0; its <= itmax; ++its) {
            // look for a negligible subdiagonal
            std::ptrdiff_t k;
            for (k = i; k > l; --k) {
                if (abs1(H(k, k - 1)) <= smlnum) break;
                R tst = abs1(H(k - 1, k - 1)) + abs1(H(k, k));
                if (tst == R(0)) {
                    if (k - 2 >= l) tst += r_abs(H(k - 1, k - 2).re);
                    if (k + 1 <= i) tst += r_abs(H(k + 1, k).re);
                }
                if (r_abs(H(k, k - 1).re) <= ulp * tst) {
                    const R ab = std::max(abs1(H(k, k - 1)), abs1(H(k - 1, k)));
                    const R ba = std::min(abs1(H(k, k - 1)), abs1(H(k - 1, k)));
                    const R aa = std::max(abs1(H(k, k)), abs1(H(k - 1, k - 1) - H(k, k)));
                    const R bb = std::min(abs1(H(k, k)), abs1(H(k - 1, k - 1) - H(k, k)));
                    const R s = aa + ab;
                    if (ba * (ab / s) <= std::max(smlnum, ulp * (bb * (aa / s)))) break;
                }
            }
            l = k;
            if (l > 0) H(l, l - 1) = Cx<R>();
            if (l >= i) {
                found = true;
                break;
            }
            Cx<R> t;
            if (its == 10) {
                t = Cx<R>(R(0.75) * r_abs(H(l + 1, l).re)) + H(l, l);
            } else if (its == 20) {
                t = Cx<R>(R(0.75) * r_abs(H(i, i - 1).re)) + H(i, i);
            } else {
                t = H(i, i);
                Cx<R> u = csqrt(H(i - 1, i)) * csqrt(H(i, i - 1));
                R s = abs1(u);
                if (s != R(0)) {
                    const Cx<R> x = (H(i - 1, i - 1) - t) * R(0.5);
                    const R sx = abs1(x);
                    s = std::max(s, sx);
                    const Cx<R> xs = x * (R(1) / s), us = u * (R(1) / s);
                    Cx<R> y = csqrt(xs * xs + us * us) * s;
                    if (sx > R(0)) {
                        const Cx<R> xn = x * (R(1) / sx);
                        if (xn.re * y.re + xn.im * y.im < R(0)) y = -y;
                    }
                    t = t - u * (u / (x + y));
                }
            }
            // implicit single-shift sweep with Givens rotations on rows/cols l..i
            Cx<R> a0 = H(l, l) - t, b0 = H(l + 1, l);
            for (std::ptrdiff_t m = l; m < i; ++m) {
                Cx<R> f = m == l ? a0 : H(m, m - 1);
                Cx<R> g = m == l ? b0 : H(m + 1, m - 1);
                const R fa = abs(f), ga = abs(g);
                if (ga == R(0)) continue;
                R c;
                Cx<R> s;
                if (fa == R(0)) {
                    c = 0;
                    s = conj(g) * (R(1) / ga);
                    if (m > l) H(m, m - 1) = Cx<R>(ga), H(m + 1, m - 1) = Cx<R>();
                } else {
                    const R r = r_hypot(fa, ga);
                    c = fa / r;
                    const Cx<R> fph = f * (R(1) / fa);
                    s = fph * conj(g) * (R(1) / r);
                    if (m > l) H(m, m - 1) = fph * r, H(m + 1, m - 1) = Cx<R>();
                }
                // rows m, m+1: [c s; -conj(s) c]
                for (std::ptrdiff_t j = m; j <= i; ++j) {
                    const Cx<R> x = H(m, j), y = H(m + 1, j);
                    H(m, j) = x * c + s * y;
                    H(m + 1, j) = y * c - conj(s) * x;
                }
                // columns m, m+1 with the conjugate transpose
                const std::ptrdiff_t rmax = std::min(m + 2, i);
                for (std::ptrdiff_t r = l; r <= rmax; ++r) {
                    const Cx<R> x = H(r, m), y = H(r, m + 1);
                    H(r, m) = x * c + y * conj(s);
                    H(r, m + 1) = y * c - x * s;
                }
            }
            ++total_its;
        }
        if (!found) {
            for (std::ptrdiff_t k = l; k <= i; ++k) {
                w[static_cast<std::size_t>(k)] = H(k, k);
                converged[static_cast<std::size_t>(k)] = false;
            }
            i = l - 1;
            continue;
        }
        w[static_cast<std::size_t>(i)] = H(i, i);
        --i;
    }
    (void)total_its;
}

template <class R>
Spectrum eigen_solve(Mat<R> a) {
    balance(a);
    hessenberg(a);
    std::vector<Cx<R>> w;
    std::vector<bool> conv;
    hessenberg_qr(a, w, conv);
    Spectrum s;
    for (std::size_t k = 0; k < w.size(); ++k) {
        const cplx z = w[k].to_std();
        s.eigenvalues.push_back(z);
        EigenFlags f;
        f.converged = conv[k];
        f.sentinel = std::abs(z) >= sentinel_magnitude || !std::isfinite(z.real()) || !std::isfinite(z.imag());
        s.flags.push_back(f);
    }
    return s;
}

template <class R>
Spectrum pencil_solve(const Mat<R>& a, const Mat<R>& b) {
    const std::size_t n = a.rows;
    if (b.rows != n || a.cols != n || b.cols != n) throw DomainError("pencil matrices must be square and equal size");
    Mat<R> lu = b;
    std::vector<std::size_t> piv;
    R cond = R(0);
    bool ok = lu_factor(lu, piv);
    if (ok) {
        Mat<R> inv = Mat<R>::identity(n);
        lu_solve(lu, piv, inv);
        cond = norm_one(b) * norm_one(inv);
        if (cond <= R(1e10)) {
            Mat<R> m = multiply(inv, a);
            Spectrum s = eigen_solve(std::move(m));
            s.condition_b = double(cond);
            return s;
        }
    }
    // shift-invert: eigenvalues mu of (A - sigma B)^{-1} B, lambda = sigma + 1/mu
    const R scale = norm_one(a) / std::max(norm_one(b), RealTraits<R>::safe_min());
    const Cx<R> shifts[] = {Cx<R>(R(0.1234567), R(-0.5678901)), Cx<R>(R(-0.3141592), R(-0.2718281)),
                            Cx<R>(R(0.7071067), R(0.1414213))};
    for (const Cx<R>& s0 : shifts) {
        const Cx<R> sigma = s0 * (scale > R(0) ? std::min(scale, R(1)) : R(1));
        Mat<R> c = a;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) c(i, j) -= sigma * b(i, j);
        if (!lu_factor(c, piv)) continue;
        Mat<R> m = b;
        lu_solve(c, piv, m);
        const R mnorm = norm_one(m);
        Spectrum s = eigen_solve(std::move(m));
        for (std::size_t k = 0; k < s.eigenvalues.size(); ++k) {
            const Cx<R> mu(s.eigenvalues[k]);
            if (abs(mu) <= R(1e-13) * mnorm) {
                s.eigenvalues[k] = cplx(std::numeric_limits<double>::infinity(), 0.0);
                s.flags[k].sentinel = true;
            } else {
                const cplx lam = (sigma + Cx<R>(R(1)) / mu).to_std();
                s.eigenvalues[k] = lam;
                s.flags[k].sentinel = std::abs(lam) >= sentinel_magnitude;
            }
        }
        s.condition_b = ok ? double(cond) : std::numeric_limits<double>::infinity();
        s.shift_invert = true;
        return s;
    }
    throw SingularPencil("both B^{-1}A and shift-invert factorizations failed");
}

}  // namespace spectral_portrait::detail
