#pragma once
//
// symmod/moduli.hpp
//
// Operator moduli and Cartesian parts of a square complex matrix:
//   right modulus   |Z|      = (Z^* Z)^{1/2}
//   left modulus    |Z^*|    = (Z Z^*)^{1/2}
//   symmetric       |Z|_sym  = (|Z| + |Z^*|)/2
//   quadratic sym.  |Z|_qsym = ((|Z|^2 + |Z^*|^2)/2)^{1/2}
//

#include "symmod/matcore.hpp"

namespace symmod {

enum class ModulusKind { right, left, sym, qsym };

// |Z| assembled from the SVD so the result is PSD by construction.
inline cmat abs_right(const cmat& z) {
    const SvdResult f = svd(z);
    return f.w * f.sigma.values.asDiagonal() * f.w.adjoint();
}

inline cmat abs_left(const cmat& z) {
    const SvdResult f = svd(z);
    return f.u * f.sigma.values.asDiagonal() * f.u.adjoint();
}

inline cmat sym_modulus(const cmat& z) {
    const SvdResult f = svd(z);
    const cmat right = f.w * f.sigma.values.asDiagonal() * f.w.adjoint();
    const cmat left = f.u * f.sigma.values.asDiagonal() * f.u.adjoint();
    return (right + left) / 2.0;
}

// Computed from Z^*Z and ZZ^* directly rather than by squaring computed
// moduli, which halves the roundoff reaching downstream PSD margins.
inline cmat qsym_modulus(const cmat& z, const Tolerance& tol = {}) {
    detail::require_square(z, "qsym_modulus");
    detail::require_finite(z, "qsym_modulus");
    return psd_sqrt((z.adjoint() * z + z * z.adjoint()) / 2.0, tol);
}

inline cmat re_part(const cmat& z) {
    detail::require_square(z, "re_part");
    return (z + z.adjoint()) / 2.0;
}

inline cmat im_part(const cmat& z) {
    detail::require_square(z, "im_part");
    return (z - z.adjoint()) / complexd(0.0, 2.0);
}

inline cmat modulus_of(const cmat& z, ModulusKind kind, const Tolerance& tol = {}) {
    switch (kind) {
        case ModulusKind::right: return abs_right(z);
        case ModulusKind::left: return abs_left(z);
        case ModulusKind::sym: return sym_modulus(z);
        case ModulusKind::qsym: return qsym_modulus(z, tol);
    }
    throw std::invalid_argument("modulus_of: unknown kind");
}

}  // namespace symmod
