#pragma once
//
// symmod/matcore.hpp
//
// Dense complex linear-algebra kernel: Hermitian eigendecomposition, SVD,
// polar decomposition, PSD square root, scalar functions of Hermitian
// matrices, and structural predicates. Everything downstream builds on the
// functions in this header.
//

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <string>
#include <vector>

namespace symmod {

using cmat = Eigen::MatrixXcd;
using cvec = Eigen::VectorXcd;
using rvec = Eigen::VectorXd;
using complexd = std::complex<double>;

// Relative tolerance plus an absolute floor used when values may be
// legitimately zero (log-majorisation, near-singular spectra).
struct Tolerance {
    double rel = 1e-8;
    double abs_floor = 1e-12;
};

// Nonincreasing real spectrum (eigenvalues or singular values) with the
// convention lambda(k) = 0 for k > dim.
struct SpectrumDesc {
    rvec values;  // sorted nonincreasing

    int dim() const { return static_cast<int>(values.size()); }

    // 1-based access, zero beyond the dimension.
    double lambda(int k) const {
        if (k < 1) throw std::invalid_argument("SpectrumDesc: index must be >= 1");
        return k <= dim() ? values[k - 1] : 0.0;
    }

    double max_abs() const {
        return dim() == 0 ? 0.0 : values.cwiseAbs().maxCoeff();
    }
};

struct EigResult {
    SpectrumDesc spectrum;  // nonincreasing
    cmat vectors;           // columns match spectrum order, orthonormal
};

struct SvdResult {
    cmat u;
    SpectrumDesc sigma;  // nonincreasing, >= 0
    cmat w;              // input = u * diag(sigma) * w^*
};

// Polar decomposition input = unitary * modulus. `unique` is false when the
// input is singular and the unitary factor was completed canonically.
struct PolarParts {
    cmat unitary;
    cmat modulus;
    bool unique = true;
};

struct PsdCheck {
    bool ok = false;
    double margin = 0.0;  // scaled lambda_min of the symmetrised matrix
};

namespace detail {

inline void require_square(const cmat& m, const char* who) {
    if (m.rows() != m.cols())
        throw std::invalid_argument(std::string(who) + ": matrix must be square");
    if (m.rows() == 0)
        throw std::invalid_argument(std::string(who) + ": matrix must be nonempty");
}

inline void require_finite(const cmat& m, const char* who) {
    if (!m.allFinite())
        throw std::invalid_argument(std::string(who) + ": matrix has non-finite entries");
}

inline void require_same_dim(const std::vector<cmat>& xs, const char* who) {
    if (xs.empty()) throw std::invalid_argument(std::string(who) + ": empty input list");
    for (const auto& x : xs) {
        require_square(x, who);
        require_finite(x, who);
        if (x.rows() != xs.front().rows())
            throw std::invalid_argument(std::string(who) + ": dimension mismatch");
    }
}

inline rvec reversed(const rvec& v) { return v.reverse(); }

}  // namespace detail

inline cmat hermitian_part(const cmat& m) { return (m + m.adjoint()) / 2.0; }

// Largest singular value. For the small dense matrices handled here this is
// cheap enough to use as the universal scale.
inline double op_norm(const cmat& m) {
    if (m.size() == 0) return 0.0;
    return m.jacobiSvd().singularValues()[0];
}

inline double frob_norm(const cmat& m) { return m.norm(); }

// Eigendecomposition of (H + H^*)/2, eigenvalues nonincreasing.
inline EigResult eig_hermitian(const cmat& h) {
    detail::require_square(h, "eig_hermitian");
    detail::require_finite(h, "eig_hermitian");
    Eigen::SelfAdjointEigenSolver<cmat> solver(hermitian_part(h));
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eig_hermitian: eigensolver did not converge");
    EigResult out;
    out.spectrum.values = detail::reversed(solver.eigenvalues());
    out.vectors = solver.eigenvectors().rowwise().reverse();
    return out;
}

inline SpectrumDesc eigvalsh(const cmat& h) {
    detail::require_square(h, "eigvalsh");
    detail::require_finite(h, "eigvalsh");
    Eigen::SelfAdjointEigenSolver<cmat> solver(hermitian_part(h), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigvalsh: eigensolver did not converge");
    return SpectrumDesc{detail::reversed(solver.eigenvalues())};
}

// Full SVD, input = u * diag(sigma) * w^*.
inline SvdResult svd(const cmat& z) {
    detail::require_square(z, "svd");
    detail::require_finite(z, "svd");
    Eigen::JacobiSVD<cmat> solver(z, Eigen::ComputeFullU | Eigen::ComputeFullV);
    SvdResult out;
    out.u = solver.matrixU();
    out.sigma.values = solver.singularValues();
    out.w = solver.matrixV();
    return out;
}

inline SpectrumDesc singular_values(const cmat& z) {
    detail::require_square(z, "singular_values");
    detail::require_finite(z, "singular_values");
    return SpectrumDesc{z.jacobiSvd().singularValues()};
}

// Polar decomposition via SVD: unitary = u w^*, modulus = w diag(sigma) w^*.
// The unitary factor is a canonical completion when the input is singular.
inline PolarParts polar_decompose(const cmat& s, const Tolerance& tol = {}) {
    const SvdResult f = svd(s);
    PolarParts out;
    out.unitary = f.u * f.w.adjoint();
    out.modulus = f.w * f.sigma.values.asDiagonal() * f.w.adjoint();
    const double smax = f.sigma.lambda(1);
    const double smin = f.sigma.lambda(f.sigma.dim());
    out.unique = smin > tol.rel * smax;
    return out;
}

// Spectral calculus: apply f to the eigenvalues of the Hermitian part.
template <typename F>
cmat fun_hermitian(const cmat& h, F&& f) {
    const EigResult e = eig_hermitian(h);
    rvec mapped(e.spectrum.values.size());
    for (int i = 0; i < mapped.size(); ++i) mapped[i] = f(e.spectrum.values[i]);
    return e.vectors * mapped.asDiagonal() * e.vectors.adjoint();
}

// PSD square root with clamping: eigenvalues in [-rel*||P||, 0) are treated
// as roundoff and clamped to zero; anything below that is an error.
inline cmat psd_sqrt(const cmat& p, const Tolerance& tol = {}) {
    const EigResult e = eig_hermitian(p);
    const double scale = e.spectrum.max_abs();
    rvec mapped(e.spectrum.values.size());
    for (int i = 0; i < mapped.size(); ++i) {
        double lam = e.spectrum.values[i];
        if (lam < -tol.rel * scale)
            throw std::invalid_argument("psd_sqrt: input is not positive semidefinite");
        mapped[i] = std::sqrt(std::max(lam, 0.0));
    }
    return e.vectors * mapped.asDiagonal() * e.vectors.adjoint();
}

// PSD test on the symmetrised matrix. margin = lambda_min / max(1, ||M||),
// where ||M|| is the spectral radius of the Hermitian part; inequalities are
// homogeneous, so the comparison is scale-relative with floor 1.
inline PsdCheck is_psd(const cmat& m, const Tolerance& tol = {}) {
    detail::require_square(m, "is_psd");
    detail::require_finite(m, "is_psd");
    const SpectrumDesc spec = eigvalsh(m);
    const double scale = std::max(1.0, spec.max_abs());
    PsdCheck out;
    out.margin = spec.lambda(spec.dim()) / scale;
    out.ok = out.margin >= -tol.rel;
    return out;
}

inline bool is_unitary(const cmat& m, const Tolerance& tol = {}) {
    detail::require_square(m, "is_unitary");
    detail::require_finite(m, "is_unitary");
    const double scale = std::max(1.0, m.squaredNorm());
    const cmat id = cmat::Identity(m.rows(), m.cols());
    return (m.adjoint() * m - id).norm() <= tol.rel * scale;
}

inline bool is_hermitian(const cmat& m, const Tolerance& tol = {}) {
    detail::require_square(m, "is_hermitian");
    detail::require_finite(m, "is_hermitian");
    const double scale = std::max(1.0, m.norm());
    return (m - m.adjoint()).norm() <= tol.rel * scale;
}

inline bool is_normal(const cmat& m, const Tolerance& tol = {}) {
    detail::require_square(m, "is_normal");
    detail::require_finite(m, "is_normal");
    const double scale = std::max(1.0, m.squaredNorm());
    return (m.adjoint() * m - m * m.adjoint()).norm() <= tol.rel * scale;
}

inline bool is_involution(const cmat& m, const Tolerance& tol = {}) {
    detail::require_square(m, "is_involution");
    detail::require_finite(m, "is_involution");
    const double scale = std::max(1.0, m.squaredNorm());
    const cmat id = cmat::Identity(m.rows(), m.cols());
    return (m * m - id).norm() <= tol.rel * scale;
}

// FNV-1a over the raw entry bytes; used to fingerprint verifier inputs.
inline std::uint64_t matrix_digest(const cmat& m, std::uint64_t seed = 14695981039346656037ULL) {
    std::uint64_t h = seed;
    auto mix = [&h](double x) {
        std::uint64_t bits;
        static_assert(sizeof(bits) == sizeof(x));
        std::memcpy(&bits, &x, sizeof(bits));
        for (int b = 0; b < 8; ++b) {
            h ^= (bits >> (8 * b)) & 0xffULL;
            h *= 1099511628211ULL;
        }
    };
    mix(static_cast<double>(m.rows()));
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            mix(m(i, j).real());
            mix(m(i, j).imag());
        }
    return h;
}

}  // namespace symmod
