#pragma once

#include <string_view>

#include "gave/matrix.hpp"

namespace gave {

/// A x - B |x| = b
struct GaveProblem {
    Matrix a;
    Matrix b_mat;
    Vector b;

    std::size_t size() const { return a.size(); }
    /// Throws DimensionMismatch unless A, B and b agree in dimension.
    void validate() const;
};

/// Find z >= 0 with w = M z + q >= 0 and z^T w = 0.
struct LcpProblem {
    Matrix m;
    Vector q;

    std::size_t size() const { return m.size(); }
};

/// Block-tridiagonal benchmark family: M = Mhat + mu*I with n = m^2.
/// Example 1 is Tridiag(-I, S, -I), S = Tridiag(-1, 4, -1) (symmetric);
/// example 2 is Tridiag(-1.5I, S, -0.5I), S = Tridiag(-1.5, 4, -0.5).
struct TestProblemSpec {
    int example_id = 1;
    std::size_t m = 2;
    double mu = 0.0;

    std::size_t n() const { return m * m; }
    void validate() const;
};

struct GeneratedExample {
    LcpProblem lcp;
    Vector z_star;
};

struct LcpSolution {
    Vector z;
    Vector w;
    double complementarity_gap = 0.0;

    /// min(z) >= -tol, min(w) >= -tol, |z^T w| <= tol * (1 + ||z|| ||w||).
    bool feasible(double tol) const;
};

struct LcpResidual {
    double feasibility = 0.0;
    double gap = 0.0;
};

enum class ResidualMode { gave, paper_literal };

std::string_view to_string(ResidualMode mode);
ResidualMode residual_mode_from_string(std::string_view s);

/// Entries of every generated solution vector.
inline constexpr double kSolutionValue = 1.2;

/// A = M + I, B = M - I, b = q.
GaveProblem lcp_to_gave(const LcpProblem& p);

/// z = |x| - x, w = |x| + x, gap = |z^T w|.
///
/// Follows from x = ((M - I) z + q) / 2, i.e. x = (w - z) / 2, together with
/// complementarity, which forces |x| = (w + z) / 2.
LcpSolution gave_solution_to_lcp(std::span<const double> x);

/// ||A x - B|x| - b||_2 / ||b||_2 in gave mode; paper_literal drops B and
/// evaluates ||A x - |x| - b||_2 / ||b||_2. Throws ZeroRhs when b = 0.
double gave_residual(const GaveProblem& p, std::span<const double> x,
                     ResidualMode mode = ResidualMode::gave);

/// Benchmark LCP with q = -M z*, z* = 1.2 * ones, banded with bandwidth m.
GeneratedExample gen_example(const TestProblemSpec& spec);

/// feasibility = max(0, -min z, -min(Mz + q)); gap = |z^T (Mz + q)|.
LcpResidual lcp_residual(const LcpProblem& p, std::span<const double> z);

} // namespace gave
