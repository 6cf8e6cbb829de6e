#include "symmod/spectral_order.hpp"

#include "symmod/moduli.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

namespace {

using namespace symmod;
using namespace symmod::testing;

TEST(Loewner, KnownCases) {
    Rng rng(1);
    const cmat p = random_psd(3, rng);
    EXPECT_TRUE(loewner_leq(cmat::Zero(3, 3), p).ok);

    // Eigenvalue dominance holds but the Loewner order fails.
    const PsdCheck c = loewner_leq(diag({2, 0}), diag({1, 1}));
    EXPECT_FALSE(c.ok);
    EXPECT_NEAR(c.margin, -1.0, 1e-14);

    const PsdCheck eq = loewner_leq(p, p);
    EXPECT_TRUE(eq.ok);
    EXPECT_NEAR(eq.margin, 0.0, 1e-14);

    EXPECT_THROW(loewner_leq(cmat::Zero(2, 2), cmat::Zero(3, 3)), std::invalid_argument);
}

TEST(WeylTriple, IdentityAndRankOne) {
    const cmat id = cmat::Identity(4, 4);
    EXPECT_TRUE(weyl_triple_check(id, id, id));

    cvec x(3);
    x << 1, 2, complexd(0, 1);
    const cmat p = x * x.adjoint();  // aligned rank-one triple: equality at j = 0
    EXPECT_TRUE(weyl_triple_check(p, p, p));
}

TEST(WeylTriple, RandomPsdTriples) {
    Rng rng(2);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng.bits() % 7);
        EXPECT_TRUE(weyl_triple_check(random_psd(n, rng), random_psd(n, rng), random_psd(n, rng)));
    }
}

TEST(SymNorm, KnownValues) {
    const cmat m = diag({3, 1});
    EXPECT_DOUBLE_EQ(sym_norm(m, NormKind::op()), 3.0);
    EXPECT_DOUBLE_EQ(sym_norm(m, NormKind::trace()), 4.0);
    EXPECT_NEAR(sym_norm(m, NormKind::frobenius()), std::sqrt(10.0), 1e-14);
    EXPECT_DOUBLE_EQ(sym_norm(m, NormKind::kyfan(1)), 3.0);
    EXPECT_THROW(sym_norm(m, NormKind::kyfan(5)), std::invalid_argument);
    EXPECT_THROW(sym_norm(m, NormKind::schatten(0.5)), std::invalid_argument);
}

TEST(SymNorm, UnitarySchatten) {
    Rng rng(3);
    const int n = 5;
    const cmat q = sample_haar_unitary(n, rng);
    for (double p : {1.0, 2.0, 3.0, 7.5})
        EXPECT_NEAR(sym_norm(q, NormKind::schatten(p)), std::pow(n, 1.0 / p), 1e-10);
}

TEST(SymNorm, KyFanFullEqualsTraceNorm) {
    Rng rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(rng.bits() % 6);
        const cmat z = sample_ginibre(n, rng);
        EXPECT_NEAR(sym_norm(z, NormKind::kyfan(n)), sym_norm(z, NormKind::trace()), 1e-10);
    }
}

TEST(Majorization, ForcedConventionAtZero) {
    const SpectrumDesc a{(rvec(2) << 2, 0).finished()};
    const SpectrumDesc b{(rvec(2) << 1, 1).finished()};
    EXPECT_TRUE(weak_majorizes(a, b));
    // A zero on the majorising side against a positive entry: partial
    // products force FALSE under the abs_floor clamping convention.
    EXPECT_FALSE(weak_log_majorizes(a, b));
    EXPECT_TRUE(weak_majorizes(a, a));
    EXPECT_TRUE(weak_log_majorizes(a, a));
}

TEST(Majorization, LogImpliesPlainOnPositiveSpectra) {
    Rng rng(5);
    int covered = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng.bits() % 5);
        rvec av(n), bv(n);
        for (int i = 0; i < n; ++i) {
            av[i] = 0.1 + rng.uniform();
            bv[i] = 0.1 + rng.uniform();
        }
        std::sort(av.data(), av.data() + n, std::greater<>());
        std::sort(bv.data(), bv.data() + n, std::greater<>());
        const SpectrumDesc a{av}, b{bv};
        if (weak_log_majorizes(a, b, Tolerance{0.0, 1e-12})) {
            ++covered;
            EXPECT_TRUE(weak_majorizes(a, b, Tolerance{1e-12, 1e-12}));
        }
    }
    EXPECT_GT(covered, 10);  // the filter must actually fire
}

TEST(Majorization, RejectsNegativeForLog) {
    const SpectrumDesc a{(rvec(2) << 1, -1).finished()};
    const SpectrumDesc b{(rvec(2) << 1, 0).finished()};
    EXPECT_THROW(weak_log_majorizes(a, b), std::invalid_argument);
}

// Fan dominance: weak majorisation of singular values is inherited by every
// Ky Fan norm (and hence all symmetric norms).
TEST(Majorization, FanDominance) {
    Rng rng(6);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng.bits() % 5);
        const cmat a = sample_ginibre(n, rng);
        EnsembleSpec cspec{EnsembleSpec::Kind::contraction, n};
        const cmat k = sample(cspec, rng);
        const cmat l = sample(cspec, rng);
        const cmat b = k * a * l;  // sigma_j(KAL) <= sigma_j(A)
        ASSERT_TRUE(weak_majorizes(singular_values(a), singular_values(b), Tolerance{1e-10, 1e-12}));
        for (const NormKind& kind : norm_test_set(n))
            EXPECT_LE(sym_norm(b, kind), sym_norm(a, kind) + 1e-9);
    }
}

TEST(OrbitDominance, KnownCases) {
    const OrbitDominance feasible = orbit_dominance(diag({1, -5}), diag({1, 0}));
    ASSERT_TRUE(feasible.feasible);
    expect_near_mat(feasible.witness, cmat::Identity(2, 2), 1e-12);

    const OrbitDominance infeasible = orbit_dominance(diag({2, 0}), diag({1, 1}));
    EXPECT_FALSE(infeasible.feasible);
}

TEST(OrbitDominance, CompressedOrbitAlwaysFeasible) {
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng.bits() % 5);
        EnsembleSpec cspec{EnsembleSpec::Kind::contraction, n};
        const cmat k = sample(cspec, rng);
        const cmat c = random_psd(n, rng);
        const OrbitDominance od = orbit_dominance(k * c * k.adjoint(), c);
        ASSERT_TRUE(od.feasible);
        EXPECT_TRUE(is_unitary(od.witness, Tolerance{1e-10, 1e-14}));
        const cmat moved = od.witness * c * od.witness.adjoint();
        EXPECT_GE(is_psd(moved - k * c * k.adjoint()).margin, -1e-8);
    }
}

// Completeness spot check: when the eigenvalue test says no, random unitaries
// cannot do better. (The acceptance suite runs the full 10,000-probe version.)
TEST(OrbitDominance, InfeasibleVerdictUnbeatable) {
    Rng rng(8);
    for (int instance = 0; instance < 5; ++instance) {
        const int n = 2 + static_cast<int>(rng.bits() % 2);
        const cmat e = random_psd(n, rng);
        cmat x = random_hermitian(n, rng);
        const double top = eigvalsh(e).lambda(1);
        x += (top - eigvalsh(x).lambda(1) + 0.5) * cmat::Identity(n, n);  // force lambda_1(X) > lambda_1(E)
        ASSERT_FALSE(orbit_dominance(x, e).feasible);
        for (int probe = 0; probe < 2000; ++probe) {
            const cmat v = sample_haar_unitary(n, rng);
            EXPECT_FALSE(is_psd(v * e * v.adjoint() - x).ok);
        }
    }
}

}  // namespace
