#pragma once
//
// symmod/spectral_order.hpp
//
// Spectral comparison toolbox: Loewner order, Weyl-type index inequalities,
// symmetric (unitarily invariant) norms, weak and weak-log majorisation, and
// the single-orbit dominance oracle X <= V E V^*.
//

#include "symmod/matcore.hpp"

#include <vector>

namespace symmod {

// Loewner order A <= B, decided by the PSD test on B - A.
inline PsdCheck loewner_leq(const cmat& a, const cmat& b, const Tolerance& tol = {}) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("loewner_leq: dimension mismatch");
    return is_psd(b - a, tol);
}

// lambda_{1+3j}(A+B+C) <= lambda_{1+j}(A) + lambda_{1+j}(B) + lambda_{1+j}(C)
// for PSD A, B, C, over the indices that are in range; larger indices are
// vacuous under the zero-padding convention.
inline bool weyl_triple_check(const cmat& a, const cmat& b, const cmat& c,
                              const Tolerance& tol = {}) {
    const SpectrumDesc sum = eigvalsh(a + b + c);
    const SpectrumDesc sa = eigvalsh(a);
    const SpectrumDesc sb = eigvalsh(b);
    const SpectrumDesc sc = eigvalsh(c);
    const int n = sum.dim();
    const double scale = std::max(1.0, sum.max_abs());
    for (int j = 0; 1 + 3 * j <= n; ++j) {
        const double lhs = sum.lambda(1 + 3 * j);
        const double rhs = sa.lambda(1 + j) + sb.lambda(1 + j) + sc.lambda(1 + j);
        if (lhs > rhs + tol.rel * scale) return false;
    }
    return true;
}

struct NormKind {
    enum class Tag { op, trace, frobenius, schatten, kyfan };
    Tag tag = Tag::op;
    double p = 2.0;  // schatten only
    int k = 1;       // kyfan only

    static NormKind op() { return {Tag::op}; }
    static NormKind trace() { return {Tag::trace}; }
    static NormKind frobenius() { return {Tag::frobenius}; }
    static NormKind schatten(double p) { return {Tag::schatten, p}; }
    static NormKind kyfan(int k) { return {Tag::kyfan, 2.0, k}; }

    std::string name() const {
        switch (tag) {
            case Tag::op: return "operator";
            case Tag::trace: return "trace";
            case Tag::frobenius: return "frobenius";
            case Tag::schatten: return "schatten-" + std::to_string(p);
            case Tag::kyfan: return "kyfan-" + std::to_string(k);
        }
        return "?";
    }
};

inline double sym_norm(const cmat& m, const NormKind& kind) {
    const SpectrumDesc sigma = singular_values(m);
    const int n = sigma.dim();
    switch (kind.tag) {
        case NormKind::Tag::op:
            return sigma.lambda(1);
        case NormKind::Tag::trace:
            return sigma.values.sum();
        case NormKind::Tag::frobenius:
            return sigma.values.norm();
        case NormKind::Tag::schatten: {
            if (kind.p < 1.0) throw std::invalid_argument("sym_norm: schatten p must be >= 1");
            double acc = 0.0;
            for (int i = 0; i < n; ++i) acc += std::pow(sigma.values[i], kind.p);
            return std::pow(acc, 1.0 / kind.p);
        }
        case NormKind::Tag::kyfan: {
            if (kind.k < 1 || kind.k > n)
                throw std::invalid_argument("sym_norm: ky fan k out of range");
            return sigma.values.head(kind.k).sum();
        }
    }
    throw std::invalid_argument("sym_norm: unknown kind");
}

// Ky Fan dominance makes this family sufficient to certify "for all
// symmetric norms" statements; operator/trace/frobenius/schatten-3 ride
// along as the familiar named cases.
inline std::vector<NormKind> norm_test_set(int n) {
    std::vector<NormKind> out{NormKind::op(), NormKind::trace(), NormKind::frobenius(),
                              NormKind::schatten(3.0)};
    for (int k = 1; k <= n; ++k) out.push_back(NormKind::kyfan(k));
    return out;
}

// True iff b is weakly majorised by a: all partial sums of b are dominated.
inline bool weak_majorizes(const SpectrumDesc& a, const SpectrumDesc& b,
                           const Tolerance& tol = {}) {
    const int n = std::max(a.dim(), b.dim());
    const double scale = std::max({1.0, a.max_abs(), b.max_abs()});
    double sa = 0.0, sb = 0.0;
    for (int k = 1; k <= n; ++k) {
        sa += a.lambda(k);
        sb += b.lambda(k);
        if (sb > sa + tol.rel * scale * k) return false;
    }
    return true;
}

// Weak log-majorisation on nonnegative spectra. Partial products are
// compared as sums of logs with values clamped at abs_floor, so a zero on
// the majorising side against a nonzero on the majorised side yields false.
inline bool weak_log_majorizes(const SpectrumDesc& a, const SpectrumDesc& b,
                               const Tolerance& tol = {}) {
    const double scale = std::max({1.0, a.max_abs(), b.max_abs()});
    for (int i = 0; i < a.dim(); ++i)
        if (a.values[i] < -tol.rel * scale)
            throw std::invalid_argument("weak_log_majorizes: negative entry on majorising side");
    for (int i = 0; i < b.dim(); ++i)
        if (b.values[i] < -tol.rel * scale)
            throw std::invalid_argument("weak_log_majorizes: negative entry on majorised side");
    const int n = std::max(a.dim(), b.dim());
    double la = 0.0, lb = 0.0;
    for (int k = 1; k <= n; ++k) {
        la += std::log(std::max(a.lambda(k), tol.abs_floor));
        lb += std::log(std::max(b.lambda(k), tol.abs_floor));
        if (lb > la + tol.rel * k) return false;
    }
    return true;
}

struct OrbitDominance {
    bool feasible = false;
    cmat witness;  // unitary V with X <= V E V^*, empty when infeasible
};

// Single-orbit dominance: a unitary V with X <= V E V^* exists iff
// lambda_j(X) <= lambda_j(E) for every j; the witness pairs the descending
// eigenbases of X and E.
inline OrbitDominance orbit_dominance(const cmat& x, const cmat& e, const Tolerance& tol = {}) {
    if (x.rows() != e.rows())
        throw std::invalid_argument("orbit_dominance: dimension mismatch");
    const EigResult ex = eig_hermitian(x);
    const EigResult ee = eig_hermitian(e);
    const double scale =
        std::max({1.0, ex.spectrum.max_abs(), ee.spectrum.max_abs()});
    for (int j = 1; j <= ex.spectrum.dim(); ++j)
        if (ex.spectrum.lambda(j) > ee.spectrum.lambda(j) + tol.rel * scale)
            return {};
    OrbitDominance out;
    out.feasible = true;
    out.witness = ex.vectors * ee.vectors.adjoint();
    return out;
}

}  // namespace symmod
