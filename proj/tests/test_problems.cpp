#include <gtest/gtest.h>

#include "gave/error.hpp"
#include "gave/problems.hpp"
#include "test_support.hpp"

using namespace gave;

namespace {

Matrix scalar(double v)
{
    const double d[] = {v};
    return Matrix::diagonal(d);
}

Vector dense_of(const Matrix& m)
{
    return m.to_dense();
}

} // namespace

TEST(LcpToGave, OneByOne)
{
    const auto p = lcp_to_gave({scalar(2.0), {-2.4}});
    EXPECT_EQ(p.a(0, 0), 3.0);
    EXPECT_EQ(p.b_mat(0, 0), 1.0);
    EXPECT_EQ(p.b, (Vector{-2.4}));
}

TEST(LcpToGave, IdentityDegeneratesToLinearSystem)
{
    const Vector q{1.0, -2.0, 3.0};
    const auto p = lcp_to_gave({Matrix::identity(3), q});
    EXPECT_EQ(dense_of(p.a), dense_of(scaled(Matrix::identity(3), 2.0)));
    EXPECT_EQ(p.b_mat.max_abs(), 0.0);
    EXPECT_EQ(p.b, q);
}

TEST(LcpToGave, SmallestFirstExampleByHand)
{
    const auto p = lcp_to_gave(gen_example({1, 2, 0.0}).lcp);
    const Vector a{5, -1, -1, 0, -1, 5, 0, -1, -1, 0, 5, -1, 0, -1, -1, 5};
    const Vector b{3, -1, -1, 0, -1, 3, 0, -1, -1, 0, 3, -1, 0, -1, -1, 3};
    EXPECT_EQ(dense_of(p.a), a);
    EXPECT_EQ(dense_of(p.b_mat), b);
}

TEST(LcpToGave, DimensionMismatch)
{
    EXPECT_THROW(lcp_to_gave({Matrix::identity(3), {1.0}}), DimensionMismatch);
}

TEST(SolutionRecovery, Examples)
{
    const auto s = gave_solution_to_lcp(Vector{-0.6});
    EXPECT_DOUBLE_EQ(s.z[0], 1.2);
    EXPECT_DOUBLE_EQ(s.w[0], 0.0);
    // x = ((M - I) z + q) / 2 with M = [[2]], q = [-2.4]
    EXPECT_DOUBLE_EQ(((2.0 - 1.0) * s.z[0] - 2.4) / 2.0, -0.6);

    const auto zero = gave_solution_to_lcp(Vector{0.0, 0.0});
    EXPECT_EQ(zero.z, (Vector{0.0, 0.0}));
    EXPECT_EQ(zero.w, (Vector{0.0, 0.0}));

    const auto pos = gave_solution_to_lcp(Vector{0.5, 2.0});
    EXPECT_EQ(pos.z, (Vector{0.0, 0.0}));
    EXPECT_EQ(pos.w, (Vector{1.0, 4.0}));
    EXPECT_EQ(pos.complementarity_gap, 0.0);
    EXPECT_TRUE(pos.feasible(0.0));
}

TEST(SolutionRecovery, FeasibilityTolerance)
{
    LcpSolution s{{1.0, -1e-3}, {0.0, 1.0}, 0.0};
    EXPECT_FALSE(s.feasible(1e-6));
    EXPECT_TRUE(s.feasible(1e-2));
}

TEST(Residual, Examples)
{
    const GaveProblem p{scalar(3.0), scalar(1.0), {-2.4}};
    EXPECT_NEAR(gave_residual(p, Vector{-0.6}), 0.0, 1e-15);
    EXPECT_DOUBLE_EQ(gave_residual(p, Vector{0.0}), 1.0);
    // the literal form drops B; here B = 1 so both agree
    EXPECT_NEAR(gave_residual(p, Vector{-0.6}, ResidualMode::paper_literal), 0.0, 1e-15);
}

TEST(Residual, ModesDifferWhenBIsNotIdentity)
{
    const GaveProblem p{scalar(3.0), scalar(2.0), {1.0}};
    EXPECT_DOUBLE_EQ(gave_residual(p, Vector{1.0}), 0.0);
    EXPECT_DOUBLE_EQ(gave_residual(p, Vector{1.0}, ResidualMode::paper_literal), 1.0);
}

TEST(Residual, ExactSolutionOfGeneratedInstances)
{
    for (int example : {1, 2}) {
        for (double mu : {-4.0, 4.0}) {
            const auto ex = gen_example({example, 20, mu});
            const auto p = lcp_to_gave(ex.lcp);
            const Vector x(p.size(), -0.5 * kSolutionValue);
            EXPECT_LE(gave_residual(p, x), 1e-14);
        }
    }
}

TEST(Residual, ErrorsAndModeNames)
{
    const GaveProblem p{scalar(3.0), scalar(1.0), {0.0}};
    EXPECT_THROW(gave_residual(p, Vector{1.0}), ZeroRhs);
    const GaveProblem q{scalar(3.0), scalar(1.0), {1.0}};
    EXPECT_THROW(gave_residual(q, Vector{1.0, 2.0}), DimensionMismatch);
    EXPECT_EQ(residual_mode_from_string("gave"), ResidualMode::gave);
    EXPECT_EQ(residual_mode_from_string("literal"), ResidualMode::paper_literal);
    EXPECT_EQ(to_string(ResidualMode::paper_literal), "literal");
    EXPECT_THROW(residual_mode_from_string("other"), InvalidArgument);
}

TEST(Generator, SmallestInstances)
{
    const auto e1 = gen_example({1, 2, 0.0});
    EXPECT_EQ(dense_of(e1.lcp.m), (Vector{4, -1, -1, 0, -1, 4, 0, -1, -1, 0, 4, -1, 0, -1, -1, 4}));
    EXPECT_TRUE(e1.lcp.m.symmetric());
    const auto e2 = gen_example({2, 2, 0.0});
    EXPECT_EQ(dense_of(e2.lcp.m),
              (Vector{4, -0.5, -0.5, 0, -1.5, 4, 0, -0.5, -1.5, 0, 4, -0.5, 0, -1.5, -1.5, 4}));
    EXPECT_FALSE(e2.lcp.m.symmetric());
}

TEST(Generator, LargeFirstExample)
{
    const auto ex = gen_example({1, 60, -4.0});
    EXPECT_EQ(ex.lcp.size(), 3600u);
    EXPECT_TRUE(ex.lcp.m.symmetric());
    EXPECT_TRUE(is_symmetric(ex.lcp.m));
    EXPECT_EQ(ex.lcp.m.lower_bandwidth(), 60u);
    EXPECT_EQ(ex.lcp.m.upper_bandwidth(), 60u);
    EXPECT_EQ(ex.z_star, Vector(3600, 1.2));

    // independent oracle: row sums of M times 1.2, from the stencil
    for (std::size_t i = 0; i < 3600; ++i) {
        const std::size_t r = i / 60;
        const std::size_t c = i % 60;
        const int neighbours = (c > 0) + (c < 59) + (r > 0) + (r < 59);
        const double row_sum = (4.0 - 4.0) - neighbours;
        EXPECT_DOUBLE_EQ(ex.lcp.q[i], -1.2 * row_sum);
    }
    const Vector r = matvec(ex.lcp.m, ex.z_star);
    for (std::size_t i = 0; i < 3600; ++i) {
        EXPECT_EQ(r[i] + ex.lcp.q[i], 0.0);
    }
}

TEST(Generator, SecondExampleIsUnsymmetric)
{
    const auto ex = gen_example({2, 8, -2.0});
    EXPECT_FALSE(is_symmetric(ex.lcp.m, 1e-12));
    EXPECT_EQ(ex.lcp.m(9, 8), -1.5);
    EXPECT_EQ(ex.lcp.m(8, 9), -0.5);
    EXPECT_EQ(ex.lcp.m(8, 0), -1.5);
    EXPECT_EQ(ex.lcp.m(0, 8), -0.5);
    EXPECT_EQ(ex.lcp.m(8, 7), 0.0);
    EXPECT_EQ(ex.lcp.m(9, 9), 2.0);
}

TEST(Generator, Validation)
{
    EXPECT_THROW(gen_example({3, 4, 0.0}), InvalidArgument);
    EXPECT_THROW(gen_example({1, 1, 0.0}), InvalidArgument);
}

TEST(LcpResidualTest, Examples)
{
    for (int example : {1, 2}) {
        const auto ex = gen_example({example, 10, -2.0});
        const auto r = lcp_residual(ex.lcp, ex.z_star);
        EXPECT_EQ(r.feasibility, 0.0);
        EXPECT_LE(r.gap, 1e-10 * 100);
    }
    const LcpProblem p{Matrix::identity(2), {1.0, 0.0}};
    const auto zero = lcp_residual(p, Vector{0.0, 0.0});
    EXPECT_EQ(zero.feasibility, 0.0);
    EXPECT_EQ(zero.gap, 0.0);
    EXPECT_GE(lcp_residual(p, Vector{-1.0, 0.0}).feasibility, 1.0);
}
