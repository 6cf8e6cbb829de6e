#pragma once
//
// symmod/probe.hpp
//
// Sharpness and counterexample search: maximises scale-invariant ratio
// functionals over matrix tuples by multi-restart derivative-free ascent.
// Eigenvalue crossings make the objectives only piecewise smooth, so the
// optimiser never relies on gradients.
//

#include "symmod/matcore.hpp"
#include "symmod/moduli.hpp"
#include "symmod/sampler.hpp"
#include "symmod/spectral_order.hpp"

#include <future>
#include <limits>
#include <vector>

namespace symmod {

// Minimal c >= 0 with lambda_j(|A+B| - |A| - |B|) <= c * lambda_j(|A|+|B|)
// for all j; by orbit dominance this is the smallest constant for which
// |A+B| <= |A| + |B| + c V (|A|+|B|) V^* is unitarily feasible.
inline double feasibility_min_c(const cmat& a, const cmat& b, const Tolerance& tol = {}) {
    detail::require_same_dim({a, b}, "feasibility_min_c");
    if (!is_normal(a, tol) || !is_normal(b, tol))
        throw std::invalid_argument("feasibility_min_c: inputs must be normal");
    const cmat mod_sum = abs_right(a) + abs_right(b);
    const SpectrumDesc sd = eigvalsh(abs_right(a + b) - mod_sum);
    const SpectrumDesc st = eigvalsh(mod_sum);
    const double scale = std::max(1.0, st.max_abs());
    double c = 0.0;
    for (int j = 1; j <= sd.dim(); ++j) {
        const double d = sd.lambda(j);
        if (d <= tol.abs_floor * scale) continue;
        const double t = st.lambda(j);
        if (t <= tol.abs_floor * scale) return std::numeric_limits<double>::infinity();
        c = std::max(c, d / t);
    }
    return c;
}

struct SearchTarget {
    enum class Id {
        opnorm_triangle_failure_m2,
        cor25_best_constant,
        quarter_sharpness_m3,
        frobenius_constant,
        cor24_best_constant
    };
    Id id = Id::opnorm_triangle_failure_m2;
    int dim = 2;
    int m = 2;

    static SearchTarget from_name(const std::string& name, int dim = 0, int m = 0) {
        SearchTarget t;
        if (name == "opnorm-triangle-failure-m2") {
            t.id = Id::opnorm_triangle_failure_m2;
            t.dim = 2;
            t.m = 2;
        } else if (name == "cor25-best-constant") {
            t.id = Id::cor25_best_constant;
            t.dim = dim > 0 ? dim : 3;
            t.m = m > 0 ? m : 2;
        } else if (name == "quarter-sharpness-m3") {
            t.id = Id::quarter_sharpness_m3;
            t.dim = 3;
            t.m = 2;
        } else if (name == "frobenius-constant") {
            t.id = Id::frobenius_constant;
            t.dim = dim > 0 ? dim : 2;
            t.m = m > 0 ? m : 2;
        } else if (name == "cor24-best-constant") {
            t.id = Id::cor24_best_constant;
            t.dim = dim > 0 ? dim : 3;
            t.m = m > 0 ? m : 2;
        } else {
            throw std::invalid_argument("unknown search target: " + name);
        }
        return t;
    }

    std::string name() const {
        switch (id) {
            case Id::opnorm_triangle_failure_m2: return "opnorm-triangle-failure-m2";
            case Id::cor25_best_constant: return "cor25-best-constant";
            case Id::quarter_sharpness_m3: return "quarter-sharpness-m3";
            case Id::frobenius_constant: return "frobenius-constant";
            case Id::cor24_best_constant: return "cor24-best-constant";
        }
        return "?";
    }
};

struct SearchResult {
    double best_value = 0.0;
    std::vector<cmat> argmax;
    std::vector<double> restart_best;  // best value per restart, by restart index
    long budget_used = 0;
};

namespace detail {

inline std::vector<cmat> decode_matrices(const std::vector<double>& params, int n, int m) {
    std::vector<cmat> out(m, cmat(n, n));
    std::size_t idx = 0;
    for (int t = 0; t < m; ++t)
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) {
                out[t](i, j) = complexd(params[idx], params[idx + 1]);
                idx += 2;
            }
    return out;
}

inline cmat project_hermitian_contraction(const cmat& m) {
    const EigResult e = eig_hermitian(m);
    rvec clipped(e.spectrum.dim());
    for (int i = 0; i < e.spectrum.dim(); ++i)
        clipped[i] = std::clamp(e.spectrum.values[i], -1.0, 1.0);
    return e.vectors * clipped.asDiagonal() * e.vectors.adjoint();
}

struct ObjectiveSpec {
    int n = 2;
    int m = 2;
    bool hermitian_contraction = false;
};

inline ObjectiveSpec objective_spec(const SearchTarget& t) {
    ObjectiveSpec s;
    s.n = t.dim;
    s.m = t.m;
    s.hermitian_contraction = t.id == SearchTarget::Id::quarter_sharpness_m3;
    return s;
}

// Decode a parameter vector into the target's hypothesis class.
inline std::vector<cmat> decode_point(const SearchTarget& t, const std::vector<double>& params) {
    const ObjectiveSpec s = objective_spec(t);
    std::vector<cmat> xs = decode_matrices(params, s.n, s.m);
    if (s.hermitian_contraction)
        for (auto& x : xs) x = project_hermitian_contraction(x);
    return xs;
}

inline double evaluate_target(const SearchTarget& t, const std::vector<cmat>& xs,
                              const Tolerance& tol) {
    switch (t.id) {
        case SearchTarget::Id::opnorm_triangle_failure_m2: {
            const double den = op_norm(sym_modulus(xs[0])) + op_norm(sym_modulus(xs[1]));
            if (den < tol.abs_floor) return 0.0;
            return op_norm(sym_modulus(xs[0] + xs[1])) / den;
        }
        case SearchTarget::Id::cor25_best_constant: {
            cmat total = cmat::Zero(xs[0].rows(), xs[0].cols());
            cmat sym_sum = cmat::Zero(xs[0].rows(), xs[0].cols());
            for (const auto& x : xs) {
                total += x;
                sym_sum += sym_modulus(x);
            }
            const SpectrumDesc sl = eigvalsh(sym_modulus(total));
            const SpectrumDesc sr = eigvalsh(sym_sum);
            double best = 0.0;
            double num = 0.0, den = 0.0;
            for (int k = 1; k <= sl.dim(); ++k) {  // Ky Fan family
                num += sl.lambda(k);
                den += sr.lambda(k);
                if (den > tol.abs_floor) best = std::max(best, num / den);
            }
            return best;
        }
        case SearchTarget::Id::quarter_sharpness_m3:
            return feasibility_min_c(xs[0], xs[1], tol);
        case SearchTarget::Id::frobenius_constant: {
            cmat total = cmat::Zero(xs[0].rows(), xs[0].cols());
            cmat mod_total = cmat::Zero(xs[0].rows(), xs[0].cols());
            for (const auto& x : xs) {
                total += x;
                mod_total += abs_right(x);
            }
            const double den = mod_total.norm();
            return den > tol.abs_floor ? total.norm() / den : 0.0;
        }
        case SearchTarget::Id::cor24_best_constant: {
            cmat total = cmat::Zero(xs[0].rows(), xs[0].cols());
            cmat sym_sum = cmat::Zero(xs[0].rows(), xs[0].cols());
            for (const auto& x : xs) {
                total += x;
                sym_sum += sym_modulus(x);
            }
            const SpectrumDesc sl = eigvalsh(sym_modulus(total));
            const SpectrumDesc sr = eigvalsh(sym_sum);
            double best = 0.0;
            for (int j = 0; 1 + 3 * j <= sl.dim(); ++j) {
                const double den = sr.lambda(1 + j);
                if (den > tol.abs_floor) best = std::max(best, sl.lambda(1 + 3 * j) / den);
            }
            return best;
        }
    }
    return 0.0;
}

struct RestartOutcome {
    double best = 0.0;
    std::vector<double> best_params;
    long evals = 0;
};

inline RestartOutcome run_restart(const SearchTarget& t, long eval_budget, std::uint64_t seed,
                                  const Tolerance& tol) {
    const ObjectiveSpec s = objective_spec(t);
    const std::size_t dim = static_cast<std::size_t>(2 * s.n * s.n * s.m);
    Rng rng(seed);
    RestartOutcome out;

    std::vector<double> p(dim);
    for (auto& x : p) x = rng.gaussian();
    auto eval = [&](const std::vector<double>& q) {
        ++out.evals;
        return evaluate_target(t, decode_point(t, q), tol);
    };
    double cur = eval(p);
    out.best = cur;
    out.best_params = p;

    double step = 0.5;
    std::vector<double> q(dim);
    while (out.evals < eval_budget) {
        for (std::size_t i = 0; i < dim; ++i) q[i] = p[i] + step * rng.gaussian();
        const double v = eval(q);
        if (v > cur) {
            p = q;
            cur = v;
            step = std::min(step * 1.3, 1.0);
            if (cur > out.best) {
                out.best = cur;
                out.best_params = p;
            }
        } else {
            step *= 0.99;
            if (step < 1e-10) break;
        }
    }
    return out;
}

}  // namespace detail

// Multi-restart ascent; deterministic given (target, budget, seed). Restarts
// own their generator state via seed_stream and are reduced by max, so they
// may run on a worker pool without affecting the result.
inline SearchResult search(const SearchTarget& target, long budget, std::uint64_t seed,
                           int threads = 1, const Tolerance& tol = {}) {
    if (budget < 1) throw std::invalid_argument("search: budget must be >= 1");
    const int restarts = static_cast<int>(std::clamp<long>(budget / 2000, 1, 20));
    const long per_restart = std::max<long>(budget / restarts, 1);

    std::vector<detail::RestartOutcome> outcomes(restarts);
    if (threads <= 1) {
        for (int r = 0; r < restarts; ++r)
            outcomes[r] = detail::run_restart(target, per_restart,
                                              seed_stream(seed, static_cast<std::uint64_t>(r)), tol);
    } else {
        std::vector<std::future<detail::RestartOutcome>> futs;
        futs.reserve(restarts);
        for (int r = 0; r < restarts; ++r)
            futs.push_back(std::async(std::launch::async, [&, r] {
                return detail::run_restart(target, per_restart,
                                           seed_stream(seed, static_cast<std::uint64_t>(r)), tol);
            }));
        for (int r = 0; r < restarts; ++r) outcomes[r] = futs[r].get();
    }

    SearchResult result;
    int best_idx = 0;
    for (int r = 0; r < restarts; ++r) {
        result.restart_best.push_back(outcomes[r].best);
        result.budget_used += outcomes[r].evals;
        if (outcomes[r].best > outcomes[best_idx].best) best_idx = r;
    }
    result.best_value = outcomes[best_idx].best;
    result.argmax = detail::decode_point(target, outcomes[best_idx].best_params);
    return result;
}

inline SearchResult search(const std::string& target_name, long budget, std::uint64_t seed,
                           int threads = 1, int dim = 0, int m = 0, const Tolerance& tol = {}) {
    return search(SearchTarget::from_name(target_name, dim, m), budget, seed, threads, tol);
}

}  // namespace symmod
