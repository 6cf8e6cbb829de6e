#pragma once
//
// symmod/witness.hpp
//
// Constructive witnesses for the triangle inequalities: the polar-factor
// unitary certifying the main orbit bound, the block-matrix chain behind its
// proof, Thompson-type two-orbit witnesses (via Fan-Hoffman plus orbit
// dominance), the contraction-to-unitary lift, the quadratic-modulus chain,
// and polar-Hermitian detection with the resulting single-witness bounds.
//

#include "symmod/matcore.hpp"
#include "symmod/moduli.hpp"
#include "symmod/means.hpp"
#include "symmod/spectral_order.hpp"

#include <string>
#include <vector>

namespace symmod {

struct OrbitTerm {
    double coeff = 1.0;
    cmat witness;  // unitary
    cmat core;     // PSD
};

// lhs <= sum_i coeff_i * W_i core_i W_i^*, with the certified PSD margin.
struct OrbitBound {
    cmat lhs;
    std::vector<OrbitTerm> terms;
    double margin = 0.0;

    cmat rhs() const {
        cmat acc = cmat::Zero(lhs.rows(), lhs.cols());
        for (const auto& t : terms) acc += t.coeff * (t.witness * t.core * t.witness.adjoint());
        return acc;
    }

    void compute_margin(const Tolerance& tol = {}) { margin = loewner_leq(lhs, rhs(), tol).margin; }
};

// ---------------------------------------------------------------------------
// Main orbit bound: one unitary V (the polar factor of the sum) serving every
// beta > 0 in
//   |sum X_k|_sym <= beta * sum |X_k|_sym
//                    + (V (sum |X_k|) V^* + V^* (sum |X_k^*|) V) / (8 beta).
// ---------------------------------------------------------------------------

struct MainTheoremWitness {
    cmat v;          // polar unitary of the sum, shared across all beta
    cmat lhs;        // |sum X_k|_sym
    cmat sym_sum;    // sum |X_k|_sym
    cmat right_sum;  // sum |X_k|
    cmat left_sum;   // sum |X_k^*|

    cmat rhs(double beta) const {
        if (beta <= 0.0) throw std::invalid_argument("MainTheoremWitness: beta must be > 0");
        return beta * sym_sum +
               (v * right_sum * v.adjoint() + v.adjoint() * left_sum * v) / (8.0 * beta);
    }

    double margin(double beta, const Tolerance& tol = {}) const {
        return loewner_leq(lhs, rhs(beta), tol).margin;
    }
};

inline MainTheoremWitness main_theorem_witness(const std::vector<cmat>& xs) {
    detail::require_same_dim(xs, "main_theorem_witness");
    const int n = static_cast<int>(xs.front().rows());
    MainTheoremWitness out;
    out.sym_sum = cmat::Zero(n, n);
    out.right_sum = cmat::Zero(n, n);
    out.left_sum = cmat::Zero(n, n);
    cmat total = cmat::Zero(n, n);
    for (const auto& x : xs) {
        const SvdResult f = svd(x);
        const cmat right = f.w * f.sigma.values.asDiagonal() * f.w.adjoint();
        const cmat left = f.u * f.sigma.values.asDiagonal() * f.u.adjoint();
        out.right_sum += right;
        out.left_sum += left;
        out.sym_sum += (right + left) / 2.0;
        total += x;
    }
    out.v = polar_decompose(total).unitary;
    out.lhs = sym_modulus(total);
    return out;
}

// ---------------------------------------------------------------------------
// The block-matrix chain behind the main bound, re-executed numerically: four
// polar blocks, their two sums, the conjugated forms, the averaged block, the
// corner-halved block, and the final beta compression. Every step must be PSD.
// ---------------------------------------------------------------------------

struct BlockStep {
    std::string label;
    cmat block;
    double margin = 0.0;
};

inline std::vector<BlockStep> proof_block_chain(const cmat& x, const cmat& y,
                                                double beta = 0.5, const Tolerance& tol = {}) {
    detail::require_same_dim({x, y}, "proof_block_chain");
    const int n = static_cast<int>(x.rows());
    const cmat id = cmat::Identity(n, n);

    auto block2 = [n](const cmat& a, const cmat& b, const cmat& c, const cmat& d) {
        cmat m(2 * n, 2 * n);
        m.topLeftCorner(n, n) = a;
        m.topRightCorner(n, n) = b;
        m.bottomLeftCorner(n, n) = c;
        m.bottomRightCorner(n, n) = d;
        return m;
    };

    const cmat ax_r = abs_right(x), ax_l = abs_left(x);
    const cmat ay_r = abs_right(y), ay_l = abs_left(y);

    std::vector<BlockStep> steps;
    auto push = [&steps, &tol](std::string label, cmat block) {
        const double margin = is_psd(block, tol).margin;
        steps.push_back({std::move(label), std::move(block), margin});
    };

    push("polar-block-x-right", block2(ax_r, x.adjoint(), x, ax_l));
    push("polar-block-x-left", block2(ax_l, x, x.adjoint(), ax_r));
    push("polar-block-y-right", block2(ay_r, y.adjoint(), y, ay_l));
    push("polar-block-y-left", block2(ay_l, y, y.adjoint(), ay_r));

    const cmat summed_right = steps[0].block + steps[2].block;
    const cmat summed_left = steps[1].block + steps[3].block;
    push("summed-right", summed_right);
    push("summed-left", summed_left);

    const cmat v = polar_decompose(x + y).unitary;
    const cmat conj_right_op = block2(id, cmat::Zero(n, n), cmat::Zero(n, n), v);
    const cmat conj_left_op = block2(id, cmat::Zero(n, n), cmat::Zero(n, n), v.adjoint());
    push("conjugated-right", conj_right_op.adjoint() * summed_right * conj_right_op);
    push("conjugated-left", conj_left_op.adjoint() * summed_left * conj_left_op);

    const cmat averaged = (steps[6].block + steps[7].block) / 2.0;
    push("averaged", averaged);

    const cmat halver = block2(id, cmat::Zero(n, n), cmat::Zero(n, n), id / 2.0);
    const cmat corner = halver * averaged * halver;
    push("corner-halved", corner);

    if (beta <= 0.0) throw std::invalid_argument("proof_block_chain: beta must be > 0");
    const double rb = std::sqrt(beta);
    cmat compressor(2 * n, n);
    compressor.topRows(n) = rb * id;
    compressor.bottomRows(n) = -(1.0 / rb) * id;
    push("beta-difference", compressor.adjoint() * corner * compressor);

    return steps;
}

// ---------------------------------------------------------------------------
// Thompson witness |A+B| <= U|A|U^* + V|B|V^*. With W the polar factor of
// A+B, |A+B| = Re(W^*A) + Re(W^*B), and Fan-Hoffman dominates each summand's
// eigenvalues by the corresponding singular values, so orbit dominance
// produces the two unitaries. Infeasible dominance here means a bug.
// ---------------------------------------------------------------------------

inline OrbitBound thompson_witness(const cmat& a, const cmat& b, const Tolerance& tol = {}) {
    detail::require_same_dim({a, b}, "thompson_witness");
    const cmat w = polar_decompose(a + b).unitary;
    const cmat abs_a = abs_right(a);
    const cmat abs_b = abs_right(b);
    const cmat re_a = hermitian_part(w.adjoint() * a);
    const cmat re_b = hermitian_part(w.adjoint() * b);

    const OrbitDominance da = orbit_dominance(re_a, abs_a, tol);
    const OrbitDominance db = orbit_dominance(re_b, abs_b, tol);
    if (!da.feasible || !db.feasible)
        throw std::logic_error("thompson_witness: Fan-Hoffman dominance failed");

    OrbitBound out;
    out.lhs = abs_right(a + b);
    out.terms = {{1.0, da.witness, abs_a}, {1.0, db.witness, abs_b}};
    out.compute_margin(tol);
    return out;
}

// K C K^* <= U C U^* for a contraction K and PSD C; U is the polar factor of
// K C^{1/2}.
inline cmat contraction_lift(const cmat& k, const cmat& c, const Tolerance& tol = {}) {
    detail::require_same_dim({k, c}, "contraction_lift");
    if (singular_values(k).lambda(1) > 1.0 + tol.rel)
        throw std::invalid_argument("contraction_lift: input is not a contraction");
    return polar_decompose(k * psd_sqrt(c, tol)).unitary;
}

namespace detail {

// Corner compression of a Thompson bound in dimension 2n: embed, extract the
// top-left contractions, and lift them against the given cores.
inline OrbitBound corner_compressed_bound(const cmat& a_emb, const cmat& b_emb, const cmat& lhs,
                                          const cmat& core_a, const cmat& core_b,
                                          const Tolerance& tol) {
    const int n = static_cast<int>(lhs.rows());
    const OrbitBound embedded = thompson_witness(a_emb, b_emb, tol);
    const cmat k = embedded.terms[0].witness.topLeftCorner(n, n);
    const cmat l = embedded.terms[1].witness.topLeftCorner(n, n);
    OrbitBound out;
    out.lhs = lhs;
    out.terms = {{1.0, contraction_lift(k, core_a, tol), core_a},
                 {1.0, contraction_lift(l, core_b, tol), core_b}};
    out.compute_margin(tol);
    return out;
}

}  // namespace detail

// sqrt(X^2 + Y^2) <= U X U^* + V Y V^* for PSD X, Y via the 2n-dimensional
// embedding [[X,0],[0,0]], [[0,0],[Y,0]] and corner compression.
inline OrbitBound sqrt_sum_squares_witness(const cmat& x, const cmat& y,
                                           const Tolerance& tol = {}) {
    detail::require_same_dim({x, y}, "sqrt_sum_squares_witness");
    if (!is_psd(x, tol).ok || !is_psd(y, tol).ok)
        throw std::invalid_argument("sqrt_sum_squares_witness: inputs must be PSD");
    const int n = static_cast<int>(x.rows());
    cmat a_emb = cmat::Zero(2 * n, 2 * n);
    cmat b_emb = cmat::Zero(2 * n, 2 * n);
    a_emb.topLeftCorner(n, n) = hermitian_part(x);
    b_emb.bottomLeftCorner(n, n) = hermitian_part(y);
    const cmat lhs = psd_sqrt(hermitian_part(x) * hermitian_part(x) +
                                  hermitian_part(y) * hermitian_part(y),
                              tol);
    return detail::corner_compressed_bound(a_emb, b_emb, lhs, hermitian_part(x),
                                           hermitian_part(y), tol);
}

// |A+B|_qsym <= U |A|_qsym U^* + V |B|_qsym V^* through the column embedding
// [[A,0],[A^*,0]], whose modulus is sqrt(2) times the quadratic symmetric
// modulus, followed by corner compression and the contraction lift.
inline OrbitBound qsym_triangle_witness(const cmat& a, const cmat& b, const Tolerance& tol = {}) {
    detail::require_same_dim({a, b}, "qsym_triangle_witness");
    const int n = static_cast<int>(a.rows());
    cmat a_emb = cmat::Zero(2 * n, 2 * n);
    cmat b_emb = cmat::Zero(2 * n, 2 * n);
    a_emb.topLeftCorner(n, n) = a;
    a_emb.bottomLeftCorner(n, n) = a.adjoint();
    b_emb.topLeftCorner(n, n) = b;
    b_emb.bottomLeftCorner(n, n) = b.adjoint();
    return detail::corner_compressed_bound(a_emb, b_emb, qsym_modulus(a + b, tol),
                                           qsym_modulus(a, tol), qsym_modulus(b, tol), tol);
}

// ---------------------------------------------------------------------------
// Polar-Hermitian detection: V is a unimodular scalar multiple of a Hermitian
// unitary iff V^2 is a unimodular scalar multiple of the identity.
// ---------------------------------------------------------------------------

struct PolarHermitianCert {
    bool is_ph = false;
    double theta = 0.0;  // branch in (-pi/2, pi/2]
    cmat w;              // Hermitian unitary with V = e^{i theta} W, when is_ph
    double residual = 0.0;
};

namespace detail {

// Decide whether a unitary V equals e^{i theta} W for Hermitian unitary W.
// residual = max(||V^2 - e^{2 i theta} I||_F, ||W - W^*||_F) / sqrt(n).
inline PolarHermitianCert phase_hermitian(const cmat& v, const Tolerance& tol) {
    const int n = static_cast<int>(v.rows());
    const cmat v2 = v * v;
    const complexd mean = v2.trace() / static_cast<double>(n);
    const double theta = std::arg(mean) / 2.0;
    const complexd phase = std::exp(complexd(0.0, theta));
    const cmat w = v / phase;
    const double res_scalar = (v2 - phase * phase * cmat::Identity(n, n)).norm();
    const double res_herm = (w - w.adjoint()).norm();
    PolarHermitianCert out;
    out.theta = theta;
    out.residual = std::max(res_scalar, res_herm) / std::sqrt(static_cast<double>(n));
    out.is_ph = out.residual <= tol.rel;
    if (out.is_ph) out.w = w;
    return out;
}

}  // namespace detail

// Detection is defined through the canonical polar factor, which is unique
// only for invertible input; singular matrices are rejected rather than
// guessed.
inline PolarHermitianCert polar_hermitian_cert(const cmat& s, const Tolerance& tol = {}) {
    detail::require_square(s, "polar_hermitian_cert");
    detail::require_finite(s, "polar_hermitian_cert");
    const PolarParts pp = polar_decompose(s, tol);
    if (!pp.unique)
        throw std::invalid_argument("polar_hermitian_cert: input is singular; the polar factor is not unique");
    return detail::phase_hermitian(pp.unitary, tol);
}

// ---------------------------------------------------------------------------
// Single-witness bound for polar-Hermitian sums:
//   |sum X_k|_sym <= beta * M + (1/(4 beta)) W M W,   M = sum |X_k|_sym.
// The phases of V = e^{i theta} W cancel in the main bound's orbit terms;
// identity_residual records how exactly they collapse to the W-form.
// ---------------------------------------------------------------------------

struct PolarHermitianWitness {
    cmat w;        // Hermitian unitary
    double theta = 0.0;
    cmat lhs;      // |sum X_k|_sym
    cmat sym_sum;  // M = sum |X_k|_sym
    double identity_residual = 0.0;

    cmat rhs(double beta) const {
        if (beta <= 0.0) throw std::invalid_argument("PolarHermitianWitness: beta must be > 0");
        return beta * sym_sum + (w * sym_sum * w) / (4.0 * beta);
    }

    double margin(double beta, const Tolerance& tol = {}) const {
        return loewner_leq(lhs, rhs(beta), tol).margin;
    }
};

// Accepts any input list whose sum's canonical polar factor is a phase times
// a Hermitian unitary. For singular sums this is a sound (if conservative)
// reading of polar-Hermiticity: the canonical completion must itself work.
inline PolarHermitianWitness polar_hermitian_witness(const std::vector<cmat>& xs,
                                                     const Tolerance& tol = {}) {
    detail::require_same_dim(xs, "polar_hermitian_witness");
    const MainTheoremWitness base = main_theorem_witness(xs);
    const PolarHermitianCert cert = detail::phase_hermitian(base.v, tol);
    if (!cert.is_ph)
        throw std::invalid_argument("polar_hermitian_witness: sum is not certified polar Hermitian");
    PolarHermitianWitness out;
    out.w = cert.w;
    out.theta = cert.theta;
    out.lhs = base.lhs;
    out.sym_sum = base.sym_sum;
    const cmat via_v = base.v * base.right_sum * base.v.adjoint() +
                       base.v.adjoint() * base.left_sum * base.v;
    const cmat via_w = 2.0 * (out.w * out.sym_sum * out.w);
    out.identity_residual =
        (via_v - via_w).norm() / std::max(1.0, via_w.norm());
    return out;
}

struct GeoMeanWitness {
    cmat w;
    double margin = 0.0;
};

// Refinement of the polar-Hermitian bound through the geometric mean:
//   |sum X_k|_sym <= M # (W M W).
inline GeoMeanWitness geomean_witness(const std::vector<cmat>& xs, const GeoMeanConfig& cfg = {},
                                      const Tolerance& tol = {}) {
    const PolarHermitianWitness ph = polar_hermitian_witness(xs, tol);
    GeoMeanWitness out;
    out.w = ph.w;
    const cmat mean = geometric_mean(ph.sym_sum, ph.w * ph.sym_sum * ph.w, cfg, tol);
    out.margin = loewner_leq(ph.lhs, mean, tol).margin;
    return out;
}

}  // namespace symmod
