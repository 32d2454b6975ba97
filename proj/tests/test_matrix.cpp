#include <gtest/gtest.h>

#include <random>

#include "strev/matrix.hpp"
#include "support.hpp"

using namespace strev;
using testing_support::mat;
using testing_support::q;

TEST(Matrix, IdentityTimesMatrix) {
    const ExactMatrix m = mat({{"1", "2", "i"}, {"0", "-1/2", "3"}, {"4", "5", "6"}});
    EXPECT_EQ(ExactMatrix::identity(3) * m, m);
    EXPECT_EQ(mat_mul(m, ExactMatrix::identity(3)), m);
}

TEST(Matrix, JordanSquare) {
    EXPECT_EQ(jordan_block(q("1"), 2) * jordan_block(q("1"), 2), mat({{"1", "2"}, {"0", "1"}}));
}

TEST(Matrix, OmegaTimesJordanAtOne) {
    // Omega(1,4) J(1,4) with lambda = 1 substituted into the displayed product.
    const ExactMatrix omega = mat({{"-1", "-2", "-1", "0"}, {"0", "1", "1", "0"}, {"0", "0", "-1", "0"}, {"0", "0", "0", "1"}});
    const ExactMatrix expected =
        mat({{"-1", "-3", "-3", "-1"}, {"0", "1", "2", "1"}, {"0", "0", "-1", "-1"}, {"0", "0", "0", "1"}});
    EXPECT_EQ(omega * jordan_block(q("1"), 4), expected);
}

TEST(Matrix, MultiplyShapeMismatch) {
    EXPECT_THROW(ExactMatrix(2, 3) * ExactMatrix(2, 3), DimensionError);
    EXPECT_THROW(ExactMatrix(2, 2) + ExactMatrix(3, 3), DimensionError);
}

TEST(Matrix, InverseExamples) {
    EXPECT_EQ(mat_inverse(ExactMatrix::identity(5)), ExactMatrix::identity(5));
    EXPECT_EQ(mat_inverse(mat({{"2", "0"}, {"0", "1/2"}})), mat({{"1/2", "0"}, {"0", "2"}}));
    EXPECT_EQ(mat_inverse(mat({{"0", "i"}, {"1", "0"}})), mat({{"0", "1"}, {"-i", "0"}}));
}

TEST(Matrix, InverseOfSingularThrows) {
    EXPECT_THROW(mat_inverse(mat({{"1", "2"}, {"2", "4"}})), SingularMatrixError);
    EXPECT_THROW(mat_inverse(ExactMatrix(2, 3)), DimensionError);
}

TEST(Matrix, DeterminantExamples) {
    const ExactMatrix omega = mat({{"-1", "-2", "-1", "0"}, {"0", "1", "1", "0"}, {"0", "0", "-1", "0"}, {"0", "0", "0", "1"}});
    EXPECT_EQ(mat_det(omega), GaussianRational(1L));
    for (std::size_t n = 1; n <= 5; ++n) {
        ExactMatrix swap(2 * n, 2 * n);
        swap.set_block(0, n, ExactMatrix::identity(n));
        swap.set_block(n, 0, ExactMatrix::identity(n));
        EXPECT_EQ(mat_det(swap), GaussianRational(n % 2 == 0 ? 1L : -1L)) << n;
        EXPECT_EQ(mat_det(ExactMatrix::identity(n)), GaussianRational::one());
    }
    EXPECT_EQ(mat_det(ExactMatrix(0, 0)), GaussianRational::one());
}

TEST(Matrix, DirectSumExamples) {
    const ExactMatrix j = jordan_block(q("1"), 2);
    const ExactMatrix a = direct_sum({j, j, j});
    ASSERT_EQ(a.rows(), 6u);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t c = 0; c < 6; ++c) {
            const bool one = i == c || (c == i + 1 && i % 2 == 0);
            EXPECT_EQ(a(i, c), GaussianRational(one ? 1L : 0L)) << i << "," << c;
        }
    EXPECT_EQ(direct_sum({j}), j);
    EXPECT_EQ(direct_sum({mat({{"2"}}), mat({{"i"}})}), mat({{"2", "0"}, {"0", "i"}}));
}

TEST(Matrix, PermuteSimilarityExamples) {
    const ExactMatrix d = mat({{"3", "0"}, {"0", "5"}});
    EXPECT_EQ(permute_similarity(PermutationMap::identity(2), d), d);
    EXPECT_EQ(permute_similarity(PermutationMap({1, 0}), d), mat({{"5", "0"}, {"0", "3"}}));
    const ExactMatrix m = mat({{"1", "2", "3"}, {"4", "5", "6"}, {"7", "8", "9"}});
    const PermutationMap p({2, 0, 1});
    const ExactMatrix pm = ExactMatrix::permutation(p);
    EXPECT_EQ(permute_similarity(p, m), pm * m * mat_inverse(pm));
    EXPECT_THROW(permute_similarity(p, d), DimensionError);
}

TEST(Matrix, PermutationMapBasics) {
    EXPECT_THROW(PermutationMap({0, 0}), std::invalid_argument);
    const std::vector<std::size_t> one_based = {2, 3, 1};
    const PermutationMap p = PermutationMap::from_one_based(one_based);
    EXPECT_EQ(p.one_based(), one_based);
    EXPECT_EQ(p * p.inverse(), PermutationMap::identity(3));
    EXPECT_EQ(p.sign(), 1);
    EXPECT_EQ(PermutationMap({1, 0, 2}).sign(), -1);
}

TEST(Matrix, BlocksAndShapes) {
    ExactMatrix m(3, 3);
    m.set_block(1, 1, mat({{"1", "2"}, {"3", "4"}}));
    EXPECT_EQ(m.block(1, 1, 2, 2), mat({{"1", "2"}, {"3", "4"}}));
    EXPECT_THROW(m.set_block(2, 2, mat({{"1", "2"}, {"3", "4"}})), DimensionError);
    EXPECT_TRUE(mat({{"1", "5"}, {"0", "2"}}).is_upper_triangular());
    EXPECT_FALSE(mat({{"1", "0"}, {"5", "2"}}).is_upper_triangular());
}

TEST(Matrix, FormatAligned) {
    EXPECT_EQ(format_matrix(mat({{"1", "-1/2"}, {"i", "0"}})), "[1 -1/2]\n[i    0]\n");
}

TEST(MatrixProperty, InverseOfRandomInvertible) {
    std::mt19937_64 rng(21);
    int done = 0;
    while (done < 200) {
        const std::size_t n = 1 + rng() % 8;
        const ExactMatrix a = testing_support::random_matrix(rng, n, n);
        if (mat_det(a).is_zero()) continue;
        ASSERT_TRUE((a * mat_inverse(a)).is_identity());
        ASSERT_TRUE((mat_inverse(a) * a).is_identity());
        ++done;
    }
}

TEST(MatrixProperty, DeterminantMatchesCofactorAndIsMultiplicative) {
    std::mt19937_64 rng(22);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 1 + rng() % 5;
        const ExactMatrix a = testing_support::random_matrix(rng, n, n);
        const ExactMatrix b = testing_support::random_matrix(rng, n, n);
        ASSERT_EQ(mat_det(a), testing_support::cofactor_det(a));
        ASSERT_EQ(mat_det(a * b), mat_det(a) * mat_det(b));
    }
}

TEST(MatrixProperty, PermutationDeterminantIsSign) {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 1 + rng() % 7;
        std::vector<std::size_t> images(n);
        for (std::size_t i = 0; i < n; ++i) images[i] = i;
        std::shuffle(images.begin(), images.end(), rng);
        const PermutationMap p(images);
        ASSERT_EQ(mat_det(ExactMatrix::permutation(p)), GaussianRational(static_cast<long>(p.sign())));
    }
}
