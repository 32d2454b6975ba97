#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

#include "strev/cli.hpp"
#include "strev/io.hpp"
#include "strev/verify.hpp"
#include "support.hpp"

using namespace strev;
using testing_support::mat;
using testing_support::q;
using testing_support::spec;

namespace {

/// Number of nonempty multisets of (eigenvalue, size) pairs of total size at
/// most n with `pool` eigenvalues: coefficients of prod_s (1 - x^s)^{-pool}.
long multiset_count(int n, int pool) {
    std::vector<long> c(static_cast<std::size_t>(n + 1), 0);
    c[0] = 1;
    for (int s = 1; s <= n; ++s)
        for (int copy = 0; copy < pool; ++copy)
            for (int t = s; t <= n; ++t) c[static_cast<std::size_t>(t)] += c[static_cast<std::size_t>(t - s)];
    long total = 0;
    for (int t = 1; t <= n; ++t) total += c[static_cast<std::size_t>(t)];
    return total;
}

/// Condition two with the number of distinct sizes 2 mod 4 in place of
/// their multiplicity.
StrongReversibilityReport cardinality_classifier(const JordanSpec& s) {
    StrongReversibilityReport r = is_strongly_reversible(s);
    if (!r.reversibility.reversible) return r;
    const long n = s.dimension();
    const long value = static_cast<long>(derive_sets(r.dp).e2_set.size() + derive_sets(r.dq).e2_set.size()) +
                       (n - r.p - r.q) / 2;
    r.condition2_value = value;
    r.condition2 = value % 2 == 0;
    r.strongly_reversible = r.condition1 || r.condition2;
    return r;
}

}  // namespace

TEST(CheckWitness, Examples) {
    const ExactMatrix a = jordan_matrix(spec({{"1", 2}}));
    const VerificationReport good = check_witness(a, omega_closed(q("1"), 2));
    EXPECT_TRUE(good.reverses);
    EXPECT_TRUE(good.involution);
    EXPECT_EQ(good.determinant, q("-1"));
    EXPECT_FALSE(good.in_special);
    EXPECT_FALSE(good.all());
    EXPECT_TRUE(good.residuals.empty());

    const VerificationReport bad = check_witness(a, ExactMatrix::identity(2));
    EXPECT_FALSE(bad.reverses);
    EXPECT_TRUE(bad.involution);
    EXPECT_TRUE(bad.in_special);
    ASSERT_FALSE(bad.residuals.empty());
    EXPECT_EQ(bad.residuals[0].check, "reverses");
    EXPECT_EQ(bad.residuals[0].row, 0u);
    EXPECT_EQ(bad.residuals[0].col, 1u);

    const VerificationReport singular = check_witness(a, mat({{"1", "0"}, {"0", "0"}}));
    EXPECT_FALSE(singular.reverses);
    EXPECT_EQ(singular.determinant, q("0"));

    const ExactMatrix b = jordan_matrix(spec({{"2", 1}, {"1/2", 1}}));
    const VerificationReport swap = check_witness(b, mat({{"0", "i"}, {"-i", "0"}}));
    EXPECT_TRUE(swap.reverses && swap.involution);
    EXPECT_EQ(swap.determinant, q("-1"));
    EXPECT_THROW(check_witness(a, ExactMatrix::identity(3)), DimensionError);
    EXPECT_THROW(check_witness(mat({{"0", "1"}, {"0", "0"}}), ExactMatrix::identity(2)), SingularMatrixError);
}

TEST(CheckWitness, UnipotentSixReverserShape) {
    // A = J(1,2)^3. Every reverser has 2x2 blocks [[x, y], [0, -x]]; with X
    // the matrix of the x entries, det g = -det(X)^2.
    const ExactMatrix a = jordan_matrix(spec({{"1", 2}, {"1", 2}, {"1", 2}}));
    std::mt19937_64 rng(61);
    for (int t = 0; t < 10; ++t) {
        ExactMatrix x(3, 3);
        ExactMatrix g(6, 6);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                x(i, j) = testing_support::random_scalar(rng);
                g(2 * i, 2 * j) = x(i, j);
                g(2 * i, 2 * j + 1) = testing_support::random_scalar(rng);
                g(2 * i + 1, 2 * j + 1) = -x(i, j);
            }
        if (mat_det(x).is_zero()) continue;
        const VerificationReport r = check_witness(a, g);
        EXPECT_TRUE(r.reverses);
        EXPECT_EQ(r.determinant, -(mat_det(x) * mat_det(x)));
    }
}

TEST(Generator, ExhaustiveCountsMatchOracle) {
    for (int n = 1; n <= 6; ++n) {
        const auto specs = SpecGenerator::exhaustive(n, default_pool()).generate();
        EXPECT_EQ(static_cast<long>(specs.size()), multiset_count(n, 6)) << n;
        std::set<std::string> seen;
        for (const auto& s : specs) {
            EXPECT_LE(s.dimension(), n);
            seen.insert(format_spec(s));
        }
        EXPECT_EQ(seen.size(), specs.size());
    }
    long count = 0;
    SpecGenerator::exhaustive(8, default_pool()).for_each([&](const JordanSpec&) { ++count; });
    EXPECT_EQ(count, multiset_count(8, 6));
    EXPECT_EQ(count, 25753);
}

TEST(Generator, BlockSizeCapAndRandomMode) {
    for (const auto& s : SpecGenerator::exhaustive(5, {q("2"), q("1/2")}, 1).generate())
        for (const auto& b : s.blocks()) EXPECT_EQ(b.size, 1);
    EXPECT_EQ(static_cast<long>(SpecGenerator::exhaustive(5, {q("2"), q("1/2")}, 1).generate().size()), 20L);

    const auto r1 = SpecGenerator::random(7, default_pool(), 9, 40).generate();
    const auto r2 = SpecGenerator::random(7, default_pool(), 9, 40).generate();
    ASSERT_EQ(r1.size(), 40u);
    for (std::size_t k = 0; k < r1.size(); ++k) {
        EXPECT_EQ(r1[k].blocks(), r2[k].blocks());
        EXPECT_LE(r1[k].dimension(), 7);
    }
    EXPECT_THROW(SpecGenerator::exhaustive(3, {}).generate(), std::invalid_argument);
    EXPECT_THROW(SpecGenerator::exhaustive(3, {q("0")}).generate(), std::invalid_argument);
    EXPECT_THROW(SpecGenerator::exhaustive(3, {q("2"), q("2")}).generate(), std::invalid_argument);
}

TEST(Harness, ReversibleByCounts) {
    EXPECT_TRUE(reversible_by_counts(spec({{"2", 3}, {"1/2", 3}, {"1", 2}})));
    EXPECT_FALSE(reversible_by_counts(spec({{"2", 3}, {"1/2", 2}})));
    EXPECT_FALSE(reversible_by_counts(spec({{"i", 1}})));
    EXPECT_TRUE(reversible_by_counts(spec({{"-1", 4}})));
}

TEST(Harness, InvolutiveReverserFamilies) {
    const JordanSpec s = spec({{"1", 2}, {"1", 2}, {"1", 2}});
    const auto hs = harness_involutive_reversers(s, 3, 4);
    EXPECT_GE(hs.size(), 8u + 4u);
    const ExactMatrix a = jordan_matrix(s);
    for (const auto& h : hs) {
        EXPECT_TRUE(check_witness(a, h).reverses);
        EXPECT_TRUE((h * h).is_identity());
        EXPECT_EQ(mat_det(h), q("-1"));
    }
    EXPECT_TRUE(harness_involutive_reversers(spec({{"2", 1}}), 1).empty());
}

TEST(ExhaustiveCheck, DefaultPoolCounts) {
    const CheckSummary s = exhaustive_theorem_check(SpecGenerator::exhaustive(6, default_pool()));
    EXPECT_TRUE(s.ok()) << (s.failures.empty() ? "" : s.failures[0].detail);
    EXPECT_EQ(s.cases, multiset_count(6, 6));
    EXPECT_EQ(s.cases, s.strongly_reversible + s.reversible_only + s.not_reversible);
    EXPECT_GT(s.reversible_only, 0);
    EXPECT_GT(s.matrices_checked, s.strongly_reversible);
    EXPECT_THROW(exhaustive_theorem_check(SpecGenerator::exhaustive(3, {q("2")})), PreconditionError);
}

TEST(ExhaustiveCheck, MutatedClassifierIsCaught) {
    const CheckSummary s = exhaustive_theorem_check(SpecGenerator::exhaustive(6, default_pool()), cardinality_classifier);
    EXPECT_FALSE(s.ok());
    // Same verdict on J(1,2)^3, wrong verdict on J(1,2)^2.
    EXPECT_EQ(cardinality_classifier(spec({{"1", 2}, {"1", 2}, {"1", 2}})).strongly_reversible, false);
    EXPECT_EQ(cardinality_classifier(spec({{"1", 2}, {"1", 2}})).strongly_reversible, false);

    std::ostringstream out;
    EXPECT_NE(run_selftest_command(6, 1, OutputFormat::Json, out, cardinality_classifier), 0);
    std::ostringstream good;
    EXPECT_EQ(run_selftest_command(6, 1, OutputFormat::Json, good), 0);
}

TEST(WeyrDet, SmallCases) {
    for (int k = 1; k <= 3; ++k)
        for (int m = 1; k * m <= 4; ++m) {
            const CheckSummary s = weyr_det_argument_check(k, m, 4, 77);
            EXPECT_TRUE(s.ok()) << s.name;
            EXPECT_EQ(s.cases, 4);
        }
    EXPECT_THROW(weyr_det_argument_check(0, 1, 1, 1), PreconditionError);
}

TEST(CaseVerdicts, Examples) {
    EXPECT_EQ(semisimple_verdict(spec({{"2", 1}, {"1/2", 1}})), false);
    EXPECT_EQ(semisimple_verdict(spec({{"2", 1}, {"1/2", 1}, {"3", 1}, {"1/3", 1}})), true);
    EXPECT_EQ(semisimple_verdict(spec({{"2", 1}, {"1/2", 1}, {"1", 1}})), true);
    EXPECT_EQ(semisimple_verdict(spec({{"2", 1}})), false);
    EXPECT_FALSE(semisimple_verdict(spec({{"1", 2}})).has_value());

    EXPECT_EQ(unipotent_verdict(spec({{"1", 2}, {"1", 2}, {"1", 2}})), false);
    EXPECT_EQ(unipotent_verdict(spec({{"1", 2}, {"1", 2}})), true);
    EXPECT_EQ(unipotent_verdict(spec({{"1", 6}, {"1", 4}})), false);
    EXPECT_FALSE(unipotent_verdict(spec({{"-1", 2}})).has_value());

    EXPECT_EQ(minus_one_verdict(spec({{"-1", 2}, {"-1", 2}})), true);
    EXPECT_EQ(minus_one_verdict(spec({{"-1", 2}})), false);

    EXPECT_EQ(single_pair_verdict(spec({{"2", 3}, {"1/2", 3}})), false);
    EXPECT_EQ(single_pair_verdict(spec({{"2", 2}, {"1/2", 2}})), true);
    EXPECT_FALSE(single_pair_verdict(spec({{"2", 2}, {"1/2", 2}, {"1", 1}})).has_value());
}

TEST(CaseVerdicts, CrossChecks) {
    EXPECT_TRUE(semisimple_cross_check(SpecGenerator::exhaustive(8, default_pool(), 1)).ok());
    EXPECT_THROW(semisimple_cross_check(SpecGenerator::exhaustive(4, default_pool())), PreconditionError);
    for (const auto& d : std::vector<std::vector<GaussianRational>>{{q("1")}, {q("-1")}, {q("2"), q("1/2")}, {q("i"), q("-i")}}) {
        const CheckSummary s = cross_path_check(SpecGenerator::exhaustive(10, d));
        EXPECT_TRUE(s.ok()) << (s.failures.empty() ? "" : s.failures[0].detail);
        EXPECT_GT(s.cases, 0);
    }
}

TEST(Selftest, ComponentChecksPass) {
    EXPECT_TRUE(omega_law_check(8, 2, 3).ok());
    EXPECT_TRUE(single_block_det_check(10).ok());
    EXPECT_TRUE(pair_det_check(8, 2, 4).ok());
    EXPECT_TRUE(partition_duality_check(200, 12, 5).ok());
    EXPECT_TRUE(weyr_centralizer_check(15, 8, 6).ok());
    EXPECT_TRUE(coset_check(15, 8, 7).ok());
    for (const auto& s : run_selftest(5, 11)) EXPECT_TRUE(s.ok()) << s.name;
}

TEST(CheckSummary, MergeAndFail) {
    CheckSummary a;
    a.cases = 2;
    a.strongly_reversible = 1;
    CheckSummary b;
    b.cases = 3;
    b.fail("x", std::nullopt, "detail");
    a.merge(b);
    EXPECT_EQ(a.cases, 5);
    EXPECT_EQ(a.strongly_reversible, 1);
    EXPECT_FALSE(a.ok());
    EXPECT_EQ(a.failures[0].check, "x");
}
