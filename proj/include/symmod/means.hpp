#pragma once
//
// symmod/means.hpp
//
// Matrix geometric mean A # B of PSD matrices and its maximal-property
// checker. Singular inputs go through a regularised limit A+eI # B+eI along
// a decreasing epsilon sequence.
//

#include "symmod/matcore.hpp"
#include "symmod/spectral_order.hpp"

namespace symmod {

struct GeoMeanConfig {
    std::vector<double> eps_seq{1e-4, 1e-6, 1e-8};
    double convergence_tol = 1e-5;  // relative change between successive iterates
    // The direct formula is backward stable down to condition numbers near
    // 1e9; only spectra below this floor take the regularised route.
    double invertibility_floor = 1e-9;
};

namespace detail {

// A^{1/2} (A^{-1/2} B A^{-1/2})^{1/2} A^{1/2} for strictly positive A.
inline cmat geomean_invertible(const cmat& a, const cmat& b, const Tolerance& tol) {
    const EigResult ea = eig_hermitian(a);
    rvec sqrt_l(ea.spectrum.dim()), inv_sqrt_l(ea.spectrum.dim());
    for (int i = 0; i < ea.spectrum.dim(); ++i) {
        const double lam = std::max(ea.spectrum.values[i], 0.0);
        if (lam <= 0.0)
            throw std::invalid_argument("geometric_mean: first argument is singular");
        sqrt_l[i] = std::sqrt(lam);
        inv_sqrt_l[i] = 1.0 / sqrt_l[i];
    }
    const cmat a_half = ea.vectors * sqrt_l.asDiagonal() * ea.vectors.adjoint();
    const cmat a_half_inv = ea.vectors * inv_sqrt_l.asDiagonal() * ea.vectors.adjoint();
    const cmat inner = psd_sqrt(a_half_inv * b * a_half_inv, tol);
    return a_half * inner * a_half;
}

}  // namespace detail

inline cmat geometric_mean(const cmat& a, const cmat& b, const GeoMeanConfig& cfg = {},
                           const Tolerance& tol = {}) {
    if (a.rows() != b.rows())
        throw std::invalid_argument("geometric_mean: dimension mismatch");
    const SpectrumDesc la = eigvalsh(a);
    const SpectrumDesc lb = eigvalsh(b);
    const double scale = std::max({1.0, la.max_abs(), lb.max_abs()});
    if (la.lambda(la.dim()) < -tol.rel * scale || lb.lambda(lb.dim()) < -tol.rel * scale)
        throw std::invalid_argument("geometric_mean: inputs must be PSD");

    const bool invertible = la.lambda(la.dim()) > cfg.invertibility_floor * scale &&
                            lb.lambda(lb.dim()) > cfg.invertibility_floor * scale;
    if (invertible) return detail::geomean_invertible(hermitian_part(a), hermitian_part(b), tol);

    const cmat id = cmat::Identity(a.rows(), a.cols());
    cmat prev;
    for (double eps : cfg.eps_seq) {
        const double shift = eps * scale;
        cmat cur = detail::geomean_invertible(hermitian_part(a) + shift * id,
                                              hermitian_part(b) + shift * id, tol);
        if (prev.size() != 0 && (cur - prev).norm() <= cfg.convergence_tol * scale) return cur;
        prev = std::move(cur);
    }
    throw std::runtime_error("geometric_mean: regularised sequence did not converge");
}

// Maximal property of #: whenever [[A, X], [X, B]] is PSD, X <= A # B.
// Vacuously true when the block matrix is not PSD.
inline bool max_property_holds(const cmat& a, const cmat& b, const cmat& x,
                               const GeoMeanConfig& cfg = {}, const Tolerance& tol = {}) {
    const auto n = a.rows();
    cmat block(2 * n, 2 * n);
    block.topLeftCorner(n, n) = a;
    block.topRightCorner(n, n) = x;
    block.bottomLeftCorner(n, n) = x;
    block.bottomRightCorner(n, n) = b;
    if (!is_psd(block, tol).ok) return true;
    return loewner_leq(hermitian_part(x), geometric_mean(a, b, cfg, tol), tol).ok;
}

}  // namespace symmod
