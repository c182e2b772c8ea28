#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "spectral_portrait/types.hpp"

namespace spectral_portrait {

// Row-major dense matrix.
template <class T>
struct DenseMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<T> data;

    DenseMatrix() = default;
    DenseMatrix(std::size_t r, std::size_t c, T fill = T{}) : rows(r), cols(c), data(r * c, fill) {}
    T& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
};

using CMatrix = DenseMatrix<cplx>;
using RMatrix = DenseMatrix<double>;

enum class Precision { Double, Quad };

struct PencilMeta {
    std::string problem;  // "model" or "orr_sommerfeld"
    std::string profile;
    std::string bc;
    double eps = 0.0;
    double alpha = 0.0;
    double reynolds = 0.0;
    int n = 0;
    SignConvention sign = SignConvention::PlusI;
    Precision precision = Precision::Double;
};

struct EigenFlags {
    bool converged = true;
    bool spurious = false;
    bool sentinel = false;
};

struct Spectrum {
    std::vector<cplx> eigenvalues;
    std::vector<EigenFlags> flags;
    PencilMeta meta;
    double condition_b = 1.0;  // 1-norm condition of B for pencils
    bool shift_invert = false;

    // Eigenvalues that are neither spurious nor sentinel.
    std::vector<cplx> kept() const;
};

inline constexpr double sentinel_magnitude = 1e7;

// All eigenvalues: balancing, Hessenberg reduction, single-shift QR with deflation.
Spectrum eigenvalues(const CMatrix& m, Precision precision = Precision::Double);

// Pencil A v = lambda B v. B^{-1}A when cond(B) <= 1e10, otherwise shift-invert
// (A - sigma B)^{-1} B with infinite eigenvalues flagged as sentinels.
Spectrum generalized_eigenvalues(const CMatrix& a, const CMatrix& b, Precision precision = Precision::Double);

// Keeps eigenvalues of fine having a partner in coarse within tol (1 + |lambda|).
Spectrum filter_spurious(const Spectrum& coarse, const Spectrum& fine, double tol = 1e-6);

// Sorted by Im descending, then Re ascending; flags permuted alongside.
void sort_spectrum(Spectrum& s);

// min over unit v of |Mv - lambda v| / |M| estimated by inverse iteration.
double eigen_residual(const CMatrix& m, cplx lambda);
double pencil_residual(const CMatrix& a, const CMatrix& b, cplx lambda);

CMatrix matmul(const CMatrix& a, const CMatrix& b);

}  // namespace spectral_portrait
