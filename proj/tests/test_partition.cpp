#include <gtest/gtest.h>

#include <random>

#include "strev/partition.hpp"

using namespace strev;

namespace {

/// m_j = number of parts >= j, straight from the definition.
std::vector<int> conjugate_by_counting(const std::vector<int>& parts) {
    std::vector<int> out;
    for (int j = 1;; ++j) {
        int c = 0;
        for (int p : parts) c += p >= j ? 1 : 0;
        if (c == 0) return out;
        out.push_back(c);
    }
}

Partition random_partition(std::mt19937_64& rng, int max_total) {
    int remaining = std::uniform_int_distribution<int>(1, max_total)(rng);
    std::vector<int> parts;
    while (remaining > 0) {
        const int p = std::uniform_int_distribution<int>(1, remaining)(rng);
        parts.push_back(p);
        remaining -= p;
    }
    return Partition(parts);
}

}  // namespace

TEST(Partition, SortsAndValidates) {
    EXPECT_EQ(Partition({2, 4, 4}).parts(), (std::vector<int>{4, 4, 2}));
    EXPECT_THROW(Partition({3, 0}), std::invalid_argument);
    EXPECT_THROW(Partition({-1}), std::invalid_argument);
    EXPECT_TRUE(Partition().empty());
    EXPECT_EQ(Partition({4, 4, 2}).total(), 10);
}

TEST(Partition, MultiplicityView) {
    const Partition p({4, 4, 2, 1, 1, 1});
    ASSERT_EQ(p.multiplicities().size(), 3u);
    EXPECT_EQ(p.multiplicities()[0].size, 4);
    EXPECT_EQ(p.multiplicities()[0].multiplicity, 2);
    EXPECT_EQ(p.multiplicities()[2].size, 1);
    EXPECT_EQ(p.multiplicities()[2].multiplicity, 3);
    EXPECT_EQ(Partition::from_multiplicities({{1, 3}, {4, 2}, {2, 1}}), p);
    EXPECT_THROW(Partition::from_multiplicities({{2, 1}, {2, 1}}), std::invalid_argument);
}

TEST(Partition, ConjugateExamples) {
    EXPECT_EQ(conjugate(Partition({4, 4, 2})), Partition({3, 3, 2, 2}));
    EXPECT_EQ(conjugate(Partition({5})), Partition({1, 1, 1, 1, 1}));
    EXPECT_EQ(conjugate(Partition({1, 1, 1})), Partition({3}));
    EXPECT_TRUE(conjugate(Partition()).empty());
}

TEST(Partition, ConjugateMultiplicityFormula) {
    // [d1^t1, d2^t2, d3^t3] -> [(t1+t2+t3)^{d3}, (t1+t2)^{d2-d3}, t1^{d1-d2}]
    const Partition p = Partition::from_multiplicities({{7, 2}, {4, 3}, {1, 1}});
    EXPECT_EQ(conjugate(p), Partition::from_multiplicities({{6, 1}, {5, 3}, {2, 3}}));
}

TEST(Partition, DerivedSets) {
    const PartitionSets a = derive_sets(Partition({2, 2, 2}));
    EXPECT_TRUE(a.o_set.empty());
    EXPECT_EQ(a.e2_set, (std::set<int>{2}));
    EXPECT_EQ(a.e2_weight, 3);

    const PartitionSets b = derive_sets(Partition({4, 4, 2}));
    EXPECT_TRUE(b.o_set.empty());
    EXPECT_EQ(b.e_set, (std::set<int>{2, 4}));
    EXPECT_EQ(b.e2_set, (std::set<int>{2}));
    EXPECT_EQ(b.e2_weight, 1);

    const PartitionSets c = derive_sets(Partition({3}));
    EXPECT_EQ(c.o_set, (std::set<int>{3}));
    EXPECT_TRUE(c.e2_set.empty());
    EXPECT_EQ(c.e2_weight, 0);

    const PartitionSets d = derive_sets(Partition({6, 6, 2, 5}));
    EXPECT_EQ(d.n_set, (std::set<int>{2, 5, 6}));
    EXPECT_EQ(d.e2_weight, 3);
}

TEST(Partition, BinomialIdentities) {
    EXPECT_EQ(binomial(5, 2), 10);
    EXPECT_EQ(binomial(5, -1), 0);
    EXPECT_EQ(binomial(5, 6), 0);
    EXPECT_EQ(binomial(0, 0), 1);
    EXPECT_EQ(binomial(60, 30), BigInteger("118264581564861424"));
    for (long n = 0; n <= 25; ++n) {
        BigInteger alternating = 0;
        for (long k = 0; k <= n + 1; ++k) {
            EXPECT_EQ(binomial(n, k) + binomial(n, k - 1), binomial(n + 1, k));
            for (long r = 0; r <= k; ++r)
                EXPECT_EQ(binomial(n, k) * binomial(k, r), binomial(n, r) * binomial(n - r, k - r));
            if (k <= n) alternating += (k % 2 == 0 ? 1 : -1) * binomial(n, k);
        }
        if (n >= 1) EXPECT_EQ(alternating, 0) << n;
    }
}

TEST(Partition, YoungDiagrams) {
    EXPECT_EQ(young_ascii(Partition({2, 1})), "[][]\n[]\n");
    EXPECT_EQ(young_ascii(Partition({1})), "[]\n");
    EXPECT_EQ(young_ascii(Partition({4, 4, 2})), "[][][][]\n[][][][]\n[][]\n");
    EXPECT_EQ(young_ascii(conjugate(Partition({4, 4, 2}))), "[][][]\n[][][]\n[][]\n[][]\n");
    EXPECT_EQ(format_partition(Partition({4, 4, 2})), "(4,4,2)");
    EXPECT_EQ(format_partition(Partition()), "()");
}

TEST(PartitionProperty, ConjugateIsAnInvolutionAndMatchesCounting) {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 500; ++t) {
        const Partition p = random_partition(rng, 30);
        const Partition d = conjugate(p);
        ASSERT_EQ(conjugate(d), p);
        ASSERT_EQ(d.parts(), conjugate_by_counting(p.parts()));
        ASSERT_EQ(d, conjugate_by_transpose(p));
        ASSERT_EQ(d.total(), p.total());
        ASSERT_EQ(static_cast<int>(d.length()), p.largest());
    }
}
