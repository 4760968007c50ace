#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "gave/error.hpp"
#include "gave/matrix_market.hpp"
#include "gave/problems.hpp"

using namespace gave;

TEST(MatrixMarket, GeneralRoundTripIsExact)
{
    const Matrix m = gen_example({2, 4, -2.0}).lcp.m;
    std::stringstream buf;
    mm::write_matrix(buf, m);
    EXPECT_NE(buf.str().find("general"), std::string::npos);
    const Matrix back = mm::read_matrix(buf);
    EXPECT_FALSE(back.symmetric());
    EXPECT_EQ(back.to_dense(), m.to_dense());
}

TEST(MatrixMarket, SymmetricRoundTripIsExact)
{
    const Matrix m = scaled(gen_example({1, 4, 0.3}).lcp.m, 1.0 / 3.0);
    std::stringstream buf;
    mm::write_matrix(buf, m);
    EXPECT_NE(buf.str().find("symmetric"), std::string::npos);
    const Matrix back = mm::read_matrix(buf);
    EXPECT_TRUE(back.symmetric());
    EXPECT_EQ(back.to_dense(), m.to_dense());
}

TEST(MatrixMarket, ReadsCommentsIntegersAndDetectsSymmetry)
{
    std::istringstream in("%%MatrixMarket matrix coordinate integer general\n"
                          "% a comment\n"
                          "3 3 4\n"
                          "1 1 2\n"
                          "1 2 -1\n"
                          "2 1 -1\n"
                          "3 3 5\n");
    const Matrix m = mm::read_matrix(in);
    EXPECT_TRUE(m.symmetric());
    EXPECT_EQ(m(0, 1), -1.0);
    EXPECT_EQ(m(2, 2), 5.0);
    EXPECT_EQ(m(1, 1), 0.0);
}

TEST(MatrixMarket, RejectsMalformedInput)
{
    std::istringstream no_banner("3 3 1\n1 1 1\n");
    EXPECT_THROW(mm::read_matrix(no_banner), ParseError);
    std::istringstream array("%%MatrixMarket matrix array real general\n2 2\n1\n2\n3\n4\n");
    EXPECT_THROW(mm::read_matrix(array), ParseError);
    std::istringstream complex("%%MatrixMarket matrix coordinate complex general\n1 1 1\n1 1 1 0\n");
    EXPECT_THROW(mm::read_matrix(complex), ParseError);
    std::istringstream rect("%%MatrixMarket matrix coordinate real general\n2 3 1\n1 1 1\n");
    EXPECT_THROW(mm::read_matrix(rect), ParseError);
    std::istringstream short_data("%%MatrixMarket matrix coordinate real general\n2 2 3\n1 1 1\n");
    EXPECT_THROW(mm::read_matrix(short_data), ParseError);
    std::istringstream out_of_range("%%MatrixMarket matrix coordinate real general\n2 2 1\n3 1 1\n");
    EXPECT_THROW(mm::read_matrix(out_of_range), ParseError);
    EXPECT_THROW(mm::read_matrix(std::filesystem::path("/nonexistent/file.mtx")), ParseError);
}

TEST(MatrixMarket, VectorRoundTrip)
{
    const Vector v{1.0 / 3.0, -2.4, 1e-300, 0.0};
    std::stringstream buf;
    mm::write_vector(buf, v);
    EXPECT_EQ(mm::read_vector(buf), v);

    std::istringstream commented("# q\n% more\n\n1.5\n-2\n");
    EXPECT_EQ(mm::read_vector(commented), (Vector{1.5, -2.0}));
    std::istringstream bad("1.0\nabc\n");
    EXPECT_THROW(mm::read_vector(bad), ParseError);
}

TEST(MatrixMarket, FileRoundTrip)
{
    const auto dir = std::filesystem::temp_directory_path() / "gave_mm_test";
    std::filesystem::create_directories(dir);
    const auto ex = gen_example({1, 3, -4.0});
    mm::write_matrix(dir / "M.mtx", ex.lcp.m);
    mm::write_vector(dir / "q.txt", ex.lcp.q);
    EXPECT_EQ(mm::read_matrix(dir / "M.mtx").to_dense(), ex.lcp.m.to_dense());
    EXPECT_EQ(mm::read_vector(dir / "q.txt"), ex.lcp.q);
    std::filesystem::remove_all(dir);
}
