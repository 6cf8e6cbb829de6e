#pragma once
//
// symmod/sampler.hpp
//
// Random matrix ensembles feeding the verifiers and searches. Sampling is
// pure given (spec, seed); distributions are built from raw mt19937_64
// output so batches replay bit-identically.
//

#include "symmod/matcore.hpp"
#include "symmod/moduli.hpp"

#include <random>
#include <vector>

namespace symmod {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Derived per-trial seed; injective in trial_index, so concurrent trials
// never share generator state.
inline std::uint64_t seed_stream(std::uint64_t root_seed, std::uint64_t trial_index) {
    return splitmix64(root_seed + (trial_index + 1) * 0x9E3779B97F4A7C15ULL);
}

// mt19937_64 plus hand-rolled uniform/gaussian maps. The standard pins down
// the engine but not the library distributions, and reports must replay.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() {  // (0, 1)
        return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    std::uint64_t bits() { return engine_(); }

    double gaussian() {  // standard normal, Box-Muller
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    complexd complex_gaussian() {  // E|g|^2 = 1
        const double s = 1.0 / std::sqrt(2.0);
        return {s * gaussian(), s * gaussian()};
    }

    bool coin() { return (engine_() & 1ULL) != 0; }

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

struct EnsembleSpec {
    enum class Kind {
        ginibre,
        haar_unitary,
        psd,
        hermitian,
        normal,
        contraction,
        involution,
        hermitian_unitary,
        polar_hermitian
    };
    Kind kind = Kind::ginibre;
    int dim = 2;
    std::uint64_t seed = 0;
    double scale = 1.0;
};

inline cmat sample_ginibre(int n, Rng& rng) {
    cmat g(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) g(i, j) = rng.complex_gaussian();
    return g;
}

// QR of a Ginibre sample with the R-diagonal phase correction; plain QR is
// not Haar-distributed.
inline cmat sample_haar_unitary(int n, Rng& rng) {
    const cmat g = sample_ginibre(n, rng);
    Eigen::HouseholderQR<cmat> qr(g);
    cmat q = qr.householderQ();
    const cmat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j) {
        const complexd d = r(j, j);
        const double ad = std::abs(d);
        q.col(j) *= (ad > 0.0) ? d / ad : complexd(1.0, 0.0);
    }
    return q;
}

inline rvec sample_signs(int n, Rng& rng) {
    rvec s(n);
    for (int i = 0; i < n; ++i) s[i] = rng.coin() ? 1.0 : -1.0;
    return s;
}

inline cmat sample(const EnsembleSpec& spec, Rng& rng) {
    const int n = spec.dim;
    if (n < 1) throw std::invalid_argument("sample: dim must be >= 1");
    using Kind = EnsembleSpec::Kind;
    cmat out;
    switch (spec.kind) {
        case Kind::ginibre:
            out = sample_ginibre(n, rng);
            break;
        case Kind::haar_unitary:
            out = sample_haar_unitary(n, rng);
            break;
        case Kind::psd: {
            const cmat g = sample_ginibre(n, rng);
            out = g.adjoint() * g / static_cast<double>(n);
            break;
        }
        case Kind::hermitian: {
            const cmat g = sample_ginibre(n, rng);
            out = (g + g.adjoint()) / 2.0;
            break;
        }
        case Kind::normal: {
            const cmat u = sample_haar_unitary(n, rng);
            cvec d(n);
            for (int i = 0; i < n; ++i) d[i] = rng.complex_gaussian();
            out = u * d.asDiagonal() * u.adjoint();
            break;
        }
        case Kind::contraction: {
            const cmat u = sample_haar_unitary(n, rng);
            const cmat w = sample_haar_unitary(n, rng);
            rvec s(n);
            for (int i = 0; i < n; ++i) s[i] = rng.uniform();
            out = u * s.asDiagonal() * w.adjoint();
            break;
        }
        case Kind::involution: {
            // Similarity (not unitary conjugation) of a +-1 diagonal, so the
            // samples are genuinely non-normal; singular values of the basis
            // are kept in [1/2, 2] to bound the conditioning.
            const cmat u = sample_haar_unitary(n, rng);
            const cmat w = sample_haar_unitary(n, rng);
            rvec s(n);
            for (int i = 0; i < n; ++i) s[i] = rng.uniform(0.5, 2.0);
            const cmat p = u * s.asDiagonal() * w.adjoint();
            const cmat p_inv = w * s.cwiseInverse().asDiagonal() * u.adjoint();
            out = p * sample_signs(n, rng).asDiagonal() * p_inv;
            break;
        }
        case Kind::hermitian_unitary: {
            const cmat q = sample_haar_unitary(n, rng);
            out = q * sample_signs(n, rng).asDiagonal() * q.adjoint();
            break;
        }
        case Kind::polar_hermitian: {
            const cmat q = sample_haar_unitary(n, rng);
            const cmat h = q * sample_signs(n, rng).asDiagonal() * q.adjoint();
            const cmat g = sample_ginibre(n, rng);
            const cmat p = g.adjoint() * g / static_cast<double>(n);
            const double theta = rng.uniform(0.0, 2.0 * M_PI);
            out = std::exp(complexd(0.0, theta)) * (h * p);
            break;
        }
    }
    if (spec.scale != 1.0) out *= spec.scale;
    return out;
}

inline cmat sample(const EnsembleSpec& spec) {
    Rng rng(spec.seed);
    return sample(spec, rng);
}

// Decompose target into m parts that sum to it exactly: m-1 Ginibre pieces
// scaled to ||target|| / m and the closing remainder.
inline std::vector<cmat> split_sum(const cmat& target, int m, Rng& rng) {
    detail::require_square(target, "split_sum");
    if (m < 1) throw std::invalid_argument("split_sum: m must be >= 1");
    const int n = static_cast<int>(target.rows());
    const double scale = op_norm(target);
    std::vector<cmat> parts;
    parts.reserve(m);
    cmat rest = target;
    for (int k = 0; k + 1 < m; ++k) {
        cmat y = sample_ginibre(n, rng);
        const double ynorm = op_norm(y);
        y *= (ynorm > 0.0 && scale > 0.0) ? scale / (m * ynorm) : 1.0 / m;
        parts.push_back(y);
        rest -= y;
    }
    parts.push_back(rest);
    return parts;
}

}  // namespace symmod
