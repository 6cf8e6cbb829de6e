#include "symmod/probe.hpp"

#include "test_util.hpp"

#include <gtest/gtest.h>

namespace {

using namespace symmod;
using namespace symmod::testing;

TEST(FeasibilityMinC, KnownCases) {
    Rng rng(1);
    const cmat p = random_psd(3, rng);
    const cmat q = random_psd(3, rng);
    EXPECT_DOUBLE_EQ(feasibility_min_c(p, q), 0.0);  // excess is never positive for PSD pairs

    // Cancelling Hermitians: |A+B| = 0.
    EXPECT_DOUBLE_EQ(feasibility_min_c(diag({1, -1}), diag({-1, 1})), 0.0);

    EXPECT_THROW(feasibility_min_c(nilpotent2(), cmat::Zero(2, 2)), std::invalid_argument);
}

TEST(FeasibilityMinC, BoundedByQuarterOnNormalPairs) {
    Rng rng(2);
    for (int trial = 0; trial < 200; ++trial) {
        EnsembleSpec spec{EnsembleSpec::Kind::normal, 2 + trial % 5};
        const double c = feasibility_min_c(sample(spec, rng), sample(spec, rng));
        EXPECT_LE(c, 0.25 + 1e-8);
        EXPECT_GE(c, 0.0);
    }
}

TEST(Objectives, ScaleInvariant) {
    Rng rng(3);
    for (const char* name : {"opnorm-triangle-failure-m2", "cor25-best-constant",
                             "frobenius-constant", "cor24-best-constant"}) {
        const SearchTarget t = SearchTarget::from_name(name);
        std::vector<cmat> xs;
        for (int k = 0; k < t.m; ++k) xs.push_back(sample_ginibre(t.dim, rng));
        const double v1 = detail::evaluate_target(t, xs, Tolerance{});
        std::vector<cmat> scaled = xs;
        for (auto& x : scaled) x *= 7.5;
        const double v2 = detail::evaluate_target(t, scaled, Tolerance{});
        EXPECT_NEAR(v1, v2, 1e-10 * std::max(1.0, std::abs(v1))) << name;
    }
    // Quarter-sharpness functional on a normal (Hermitian) pair.
    const cmat a = random_hermitian(3, rng);
    const cmat b = random_hermitian(3, rng);
    EXPECT_NEAR(feasibility_min_c(a, b), feasibility_min_c(3.0 * a, 3.0 * b), 1e-10);
}

TEST(Search, SingleEvaluationRespectsTheorem) {
    const SearchResult r = search(SearchTarget::from_name("cor25-best-constant"), 1, 5);
    EXPECT_LE(r.best_value, std::sqrt(2.0) + 1e-9);
    EXPECT_GE(r.budget_used, 1);
}

TEST(Search, DeterministicGivenSeed) {
    const SearchTarget t = SearchTarget::from_name("frobenius-constant", 2, 2);
    const SearchResult r1 = search(t, 3000, 11);
    const SearchResult r2 = search(t, 3000, 11);
    EXPECT_EQ(r1.best_value, r2.best_value);
    ASSERT_EQ(r1.argmax.size(), r2.argmax.size());
    for (std::size_t i = 0; i < r1.argmax.size(); ++i)
        EXPECT_EQ((r1.argmax[i] - r2.argmax[i]).norm(), 0.0);

    const SearchResult r3 = search(t, 3000, 11, /*threads=*/2);
    EXPECT_EQ(r1.best_value, r3.best_value);
}

TEST(Search, BestValueMatchesArgmax) {
    for (const char* name :
         {"opnorm-triangle-failure-m2", "cor25-best-constant", "quarter-sharpness-m3",
          "frobenius-constant", "cor24-best-constant"}) {
        const SearchTarget t = SearchTarget::from_name(name);
        const SearchResult r = search(t, 2000, 23);
        const double again = detail::evaluate_target(t, r.argmax, Tolerance{});
        EXPECT_NEAR(r.best_value, again, 1e-10) << name;
    }
}

TEST(Search, FindsTriangleFailure) {
    const SearchResult r = search(SearchTarget::from_name("opnorm-triangle-failure-m2"), 30000, 7);
    EXPECT_GT(r.best_value, 1.001);
    EXPECT_LE(r.best_value, std::sqrt(2.0) + 1e-6);  // capped by the norm bound
    ASSERT_EQ(r.argmax.size(), 2u);
    EXPECT_EQ(r.argmax[0].rows(), 2);
}

TEST(Search, FrobeniusApproachesSharpConstant) {
    const SearchTarget t = SearchTarget::from_name("frobenius-constant", 2, 2);
    const SearchResult r = search(t, 30000, 9);
    const double bound = std::sqrt((1.0 + std::sqrt(2.0)) / 2.0);
    EXPECT_GT(r.best_value, 1.0);
    EXPECT_LE(r.best_value, bound + 1e-6);
    EXPECT_NEAR(r.best_value, bound, 0.05);
}

TEST(Search, QuarterSharpnessStaysBelowQuarter) {
    const SearchResult r = search(SearchTarget::from_name("quarter-sharpness-m3"), 10000, 13);
    EXPECT_LE(r.best_value, 0.25 + 1e-8);
    EXPECT_GT(r.best_value, 0.05);  // ascent should find a meaningfully positive c
}

// Ascent must never climb past a proven constant; doing so flags a numerical
// bug, not a disproof.
TEST(Search, IndexAndNormSearchesRespectBounds) {
    const SearchResult r24 = search(SearchTarget::from_name("cor24-best-constant", 3, 2), 8000, 17);
    EXPECT_LE(r24.best_value, std::sqrt(2.0) + 1e-6);
    const SearchResult r25 = search(SearchTarget::from_name("cor25-best-constant", 3, 2), 8000, 19);
    EXPECT_LE(r25.best_value, std::sqrt(2.0) + 1e-6);
    EXPECT_GT(r25.best_value, 0.9);
}

TEST(Search, RejectsBadArguments) {
    EXPECT_THROW(SearchTarget::from_name("nope"), std::invalid_argument);
    EXPECT_THROW(search(SearchTarget::from_name("cor25-best-constant"), 0, 1),
                 std::invalid_argument);
}

}  // namespace
