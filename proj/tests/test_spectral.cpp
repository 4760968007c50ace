#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "gave/error.hpp"
#include "gave/problems.hpp"
#include "gave/spectral.hpp"
#include "test_support.hpp"

using namespace gave;
using gave::oracle::rel_err;
using gave::oracle::to_eigen;

TEST(StartVector, DeterministicUnitAndNonConstant)
{
    const Vector v = power_start_vector(17);
    EXPECT_NEAR(norm2(v), 1.0, 1e-15);
    EXPECT_EQ(v, power_start_vector(17));
    EXPECT_NE(v[0], v[1]);
    for (double x : v) {
        EXPECT_GT(x, 0.0);
    }
}

TEST(TwoNorm, Diagonal)
{
    const double d[] = {1.0, 2.0, 3.0};
    const auto e = two_norm_estimate(Matrix::diagonal(d));
    EXPECT_TRUE(e.converged);
    EXPECT_NEAR(e.value, 3.0, 3e-10);
}

TEST(TwoNorm, NilpotentJordanBlock)
{
    const double v[] = {0.0, 1.0, 0.0, 0.0};
    const auto e = two_norm_estimate(Matrix::from_dense(2, v));
    EXPECT_TRUE(e.converged);
    EXPECT_NEAR(e.value, 1.0, 1e-12);
}

TEST(TwoNorm, ZeroMatrix)
{
    const auto e = two_norm_estimate(Matrix::banded(4, 1, 1));
    EXPECT_TRUE(e.converged);
    EXPECT_EQ(e.value, 0.0);
}

TEST(TwoNorm, RandomAgainstSvd)
{
    std::mt19937 rng(31);
    for (int trial = 0; trial < 5; ++trial) {
        const Eigen::MatrixXd d = gave::oracle::random_dense(50, rng);
        const auto e = two_norm_estimate(gave::oracle::from_eigen(d));
        EXPECT_TRUE(e.converged);
        EXPECT_LE(rel_err(e.value, gave::oracle::sigma_max(d)), 1e-8) << "trial " << trial;
    }
}

TEST(InverseTwoNorm, Diagonal)
{
    const double d[] = {2.0, 4.0};
    const auto e = inverse_two_norm_estimate(factorize(Matrix::diagonal(d), true));
    EXPECT_NEAR(e.value, 0.5, 1e-10);
    const auto i = inverse_two_norm_estimate(factorize(Matrix::identity(5), true));
    EXPECT_NEAR(i.value, 1.0, 1e-12);
}

TEST(InverseTwoNorm, RandomAgainstSvd)
{
    std::mt19937 rng(32);
    for (int trial = 0; trial < 5; ++trial) {
        Eigen::MatrixXd d = gave::oracle::random_dense(50, rng);
        d += 6.0 * Eigen::MatrixXd::Identity(50, 50);
        const auto e = inverse_two_norm_estimate(factorize(gave::oracle::from_eigen(d), false));
        EXPECT_TRUE(e.converged);
        EXPECT_LE(rel_err(e.value, 1.0 / gave::oracle::sigma_min(d)), 1e-8) << "trial " << trial;
    }
}

TEST(ExtremeEigenvalues, Identity)
{
    const auto r = extreme_eigenvalues_sym(Matrix::identity(6));
    EXPECT_NEAR(r.min, 1.0, 1e-12);
    EXPECT_NEAR(r.max, 1.0, 1e-12);
}

TEST(ExtremeEigenvalues, Tridiagonal)
{
    const auto r = extreme_eigenvalues_sym(gave::oracle::tridiag(3, -1.0, 4.0, -1.0));
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.min, 4.0 - std::sqrt(2.0), 1e-9);
    EXPECT_NEAR(r.max, 4.0 + std::sqrt(2.0), 1e-9);
}

TEST(ExtremeEigenvalues, IndefiniteGeneratedAgainstEigensolver)
{
    // M = Mhat - 3 I for the first family at m = 8
    const Matrix a = gen_example({1, 8, -3.0}).lcp.m;
    const auto r = extreme_eigenvalues_sym(a);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_eigen(a));
    const double lo = es.eigenvalues().minCoeff();
    const double hi = es.eigenvalues().maxCoeff();
    EXPECT_TRUE(r.converged);
    EXPECT_LE(rel_err(r.min, lo), 1e-8);
    EXPECT_LE(rel_err(r.max, hi), 1e-8);
    EXPECT_LT(lo, 0.0);
}

TEST(ExtremeEigenvalues, RejectsUnsymmetric)
{
    EXPECT_THROW(extreme_eigenvalues_sym(gave::oracle::tridiag(4, -1.5, 4.0, -0.5)), NotSymmetric);
    Matrix flagged = gave::oracle::tridiag(3, -1.0, 4.0, -1.0);
    flagged.band_at(0, 1) = -1.0 + 1e-15;
    flagged.set_symmetric(true);
    EXPECT_THROW(extreme_eigenvalues_sym(flagged), NotSymmetric);
    flagged.set_symmetric(false);
    EXPECT_NO_THROW(extreme_eigenvalues_sym(flagged));
}

TEST(SpectralEstimate, IterationCapIsReported)
{
    PowerOptions opts;
    opts.max_iterations = 2;
    std::mt19937 rng(33);
    const auto e = two_norm_estimate(gave::oracle::from_eigen(gave::oracle::random_dense(30, rng)), opts);
    EXPECT_FALSE(e.converged);
    EXPECT_EQ(e.iterations_used, 2);
    EXPECT_EQ(e.relative_tolerance, opts.relative_tolerance);
}
