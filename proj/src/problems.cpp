#include "gave/problems.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gave/error.hpp"

namespace gave {

void GaveProblem::validate() const
{
    if (a.size() == 0 || a.size() != b_mat.size() || a.size() != b.size()) {
        throw DimensionMismatch("GAVE problem: A, B and b must share dimension n");
    }
}

void TestProblemSpec::validate() const
{
    if (example_id != 1 && example_id != 2) {
        throw InvalidArgument("example id must be 1 or 2");
    }
    if (m < 2) {
        throw InvalidArgument("grid dimension m must be at least 2");
    }
    if (!std::isfinite(mu)) {
        throw InvalidArgument("mu must be finite");
    }
}

bool LcpSolution::feasible(double tol) const
{
    const double min_z = z.empty() ? 0.0 : *std::min_element(z.begin(), z.end());
    const double min_w = w.empty() ? 0.0 : *std::min_element(w.begin(), w.end());
    return min_z >= -tol && min_w >= -tol &&
           complementarity_gap <= tol * (1.0 + norm2(z) * norm2(w));
}

std::string_view to_string(ResidualMode mode)
{
    return mode == ResidualMode::gave ? "gave" : "literal";
}

ResidualMode residual_mode_from_string(std::string_view s)
{
    if (s == "gave") {
        return ResidualMode::gave;
    }
    if (s == "literal" || s == "paper_literal") {
        return ResidualMode::paper_literal;
    }
    throw InvalidArgument("unknown residual mode '" + std::string(s) + "'");
}

GaveProblem lcp_to_gave(const LcpProblem& p)
{
    if (p.m.size() != p.q.size()) {
        throw DimensionMismatch("LCP: M and q dimensions differ");
    }
    return {shifted(p.m, 1.0), shifted(p.m, -1.0), p.q};
}

LcpSolution gave_solution_to_lcp(std::span<const double> x)
{
    LcpSolution s;
    s.z.resize(x.size());
    s.w.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double ax = std::fabs(x[i]);
        s.z[i] = ax - x[i];
        s.w[i] = ax + x[i];
    }
    s.complementarity_gap = std::fabs(dot(s.z, s.w));
    return s;
}

double gave_residual(const GaveProblem& p, std::span<const double> x, ResidualMode mode)
{
    if (x.size() != p.size()) {
        throw DimensionMismatch("residual: iterate length differs from problem size");
    }
    const double nb = norm2(p.b);
    if (nb == 0.0) {
        throw ZeroRhs();
    }
    Vector r = matvec(p.a, x);
    const Vector ax = abs(x);
    const Vector bx = mode == ResidualMode::gave ? matvec(p.b_mat, ax) : ax;
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] = r[i] - bx[i] - p.b[i];
    }
    return norm2(r) / nb;
}

GeneratedExample gen_example(const TestProblemSpec& spec)
{
    spec.validate();
    const std::size_t m = spec.m;
    const std::size_t n = spec.n();
    const bool symmetric = spec.example_id == 1;
    // (sub, super) couplings inside S and between blocks
    const double s_lower = symmetric ? -1.0 : -1.5;
    const double s_upper = symmetric ? -1.0 : -0.5;

    Matrix mat = Matrix::banded(n, m, m, symmetric);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t col = i % m;
        mat.band_at(i, i) = 4.0 + spec.mu;
        if (col > 0) {
            mat.band_at(i, i - 1) = s_lower;
        }
        if (col + 1 < m) {
            mat.band_at(i, i + 1) = s_upper;
        }
        if (i >= m) {
            mat.band_at(i, i - m) = s_lower;
        }
        if (i + m < n) {
            mat.band_at(i, i + m) = s_upper;
        }
    }

    GeneratedExample ex;
    ex.z_star.assign(n, kSolutionValue);
    ex.lcp.q = matvec(mat, ex.z_star);
    for (auto& v : ex.lcp.q) {
        v = -v;
    }
    ex.lcp.m = std::move(mat);
    return ex;
}

LcpResidual lcp_residual(const LcpProblem& p, std::span<const double> z)
{
    if (z.size() != p.size()) {
        throw DimensionMismatch("lcp_residual: z length differs from problem size");
    }
    Vector w = matvec(p.m, z);
    for (std::size_t i = 0; i < w.size(); ++i) {
        w[i] += p.q[i];
    }
    LcpResidual r;
    for (std::size_t i = 0; i < z.size(); ++i) {
        r.feasibility = std::max({r.feasibility, -z[i], -w[i]});
    }
    r.gap = std::fabs(dot(z, w));
    return r;
}

} // namespace gave
