#include <gtest/gtest.h>

#include <random>

#include "gave/matrix_class.hpp"
#include "gave/problems.hpp"
#include "test_support.hpp"

using namespace gave;
using gave::oracle::to_eigen;
using gave::oracle::tridiag;

namespace {

// Oracle: nonsingular Z-matrix whose dense inverse is entrywise >= -1e-12.
bool dense_m_matrix(const Matrix& v)
{
    const Eigen::MatrixXd d = to_eigen(v);
    for (Eigen::Index i = 0; i < d.rows(); ++i) {
        for (Eigen::Index j = 0; j < d.cols(); ++j) {
            if (i != j && d(i, j) > 0.0) {
                return false;
            }
        }
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(d);
    if (!lu.isInvertible()) {
        return false;
    }
    return lu.inverse().minCoeff() >= -1e-12;
}

} // namespace

TEST(MMatrix, Examples)
{
    const Matrix t = tridiag(5, -1.0, 4.0, -1.0);
    EXPECT_TRUE(is_m_matrix(t));
    EXPECT_TRUE(dense_m_matrix(t));

    const double v[] = {1.0, -2.0, -2.0, 1.0};
    const Matrix bad = Matrix::from_dense(2, v);
    EXPECT_FALSE(is_m_matrix(bad));
    EXPECT_LT(to_eigen(bad).inverse().minCoeff(), 0.0);

    EXPECT_TRUE(is_m_matrix(Matrix::identity(4)));
}

TEST(MMatrix, NotZPatternOrSingular)
{
    EXPECT_FALSE(is_m_matrix(tridiag(4, 1.0, 4.0, -1.0)));
    const double v[] = {1.0, -1.0, -1.0, 1.0};
    EXPECT_FALSE(is_m_matrix(Matrix::from_dense(2, v)));
    EXPECT_FALSE(is_z_matrix(tridiag(3, 0.5, 1.0, 0.0)));
    EXPECT_TRUE(is_z_matrix(tridiag(3, -0.5, -1.0, 0.0)));
}

TEST(MMatrix, AgreesWithDenseInverseOracle)
{
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> off(-1.0, 0.0);
    std::uniform_real_distribution<double> diag(0.5, 6.0);
    int positives = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 3 + static_cast<std::size_t>(trial % 8);
        Eigen::MatrixXd d(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
        for (Eigen::Index i = 0; i < d.rows(); ++i) {
            for (Eigen::Index j = 0; j < d.cols(); ++j) {
                d(i, j) = i == j ? diag(rng) : off(rng);
            }
        }
        const Matrix v = gave::oracle::from_eigen(d);
        const bool got = is_m_matrix(v);
        positives += got ? 1 : 0;
        EXPECT_EQ(got, dense_m_matrix(v)) << "trial " << trial;
        if (got) {
            EXPECT_GE(d.inverse().minCoeff(), -1e-12);
        }
    }
    EXPECT_GT(positives, 0);
    EXPECT_LT(positives, 200);
}

TEST(HPlus, Examples)
{
    const Matrix t = tridiag(5, -1.5, 4.0, -0.5);
    EXPECT_TRUE(is_h_plus_matrix(t));
    EXPECT_TRUE(dense_m_matrix(comparison_matrix(t)));

    const double d[] = {-1.0, 2.0};
    EXPECT_FALSE(is_h_plus_matrix(Matrix::diagonal(d)));

    const Matrix mhat = gen_example({1, 5, 0.0}).lcp.m;
    EXPECT_TRUE(is_h_plus_matrix(mhat));
    EXPECT_TRUE(dense_m_matrix(comparison_matrix(mhat)));
}

TEST(HPlus, ShiftedFamiliesAtMuFour)
{
    for (int example : {1, 2}) {
        for (std::size_t m : {2u, 5u, 10u, 20u}) {
            const Matrix a = gen_example({example, m, 4.0}).lcp.m;
            EXPECT_TRUE(is_h_plus_matrix(a)) << "example " << example << " m " << m;
            if (m <= 10) {
                EXPECT_TRUE(dense_m_matrix(comparison_matrix(a)));
            }
        }
    }
}

TEST(HPlus, NegativeShiftIsNotHPlus)
{
    EXPECT_FALSE(is_h_plus_matrix(gen_example({1, 6, -4.0}).lcp.m));
    EXPECT_FALSE(is_h_plus_matrix(gen_example({2, 6, -2.0}).lcp.m));
}

TEST(HPlus, InverseComparisonBound)
{
    // |(A + w I)^{-1}| <= (<A> + w I)^{-1} entrywise for H+ matrices.
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> off(-1.0, 1.0);
    int checked = 0;
    for (int trial = 0; trial < 60 && checked < 30; ++trial) {
        const std::size_t n = 5 + static_cast<std::size_t>(trial % 20);
        Eigen::MatrixXd d(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
        for (Eigen::Index i = 0; i < d.rows(); ++i) {
            double row = 0.0;
            for (Eigen::Index j = 0; j < d.cols(); ++j) {
                d(i, j) = i == j ? 0.0 : off(rng) / static_cast<double>(n) * 2.0;
                row += std::abs(d(i, j));
            }
            d(i, i) = row * (0.8 + 0.6 * std::abs(off(rng)));
        }
        const Matrix a = gave::oracle::from_eigen(d);
        if (!is_h_plus_matrix(a)) {
            continue;
        }
        ++checked;
        for (double omega : {0.1, 1.0, 5.0}) {
            const Eigen::MatrixXd shift = omega * Eigen::MatrixXd::Identity(d.rows(), d.cols());
            const Eigen::MatrixXd lhs = (to_eigen(comparison_matrix(a)) + shift).inverse();
            const Eigen::MatrixXd rhs = (d + shift).inverse().cwiseAbs();
            EXPECT_GE((lhs - rhs).minCoeff(), -1e-10);
        }
    }
    for (int example : {1, 2}) {
        const Matrix a = gen_example({example, 6, 4.0}).lcp.m;
        const Eigen::MatrixXd shift = 2.0 * Eigen::MatrixXd::Identity(36, 36);
        const Eigen::MatrixXd lhs = (to_eigen(comparison_matrix(a)) + shift).inverse();
        const Eigen::MatrixXd rhs = (to_eigen(a) + shift).inverse().cwiseAbs();
        EXPECT_GE((lhs - rhs).minCoeff(), -1e-10);
    }
    EXPECT_GE(checked, 10);
}
