#pragma once

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "gave/matrix.hpp"
#include "gave/problems.hpp"

namespace gave {

enum class Method { picard, mn, nmn };

std::string_view to_string(Method m);
Method method_from_string(std::string_view s);

enum class InitialGuess { paper_alternating, zeros, custom };

/// Shift Omega: a scalar omega stands for omega * I.
using Shift = std::variant<double, Matrix>;

struct SolverConfig {
    Method method = Method::nmn;
    Shift omega = 0.0;
    double tol = 1e-7;
    int k_max = 5000;
    InitialGuess x0_policy = InitialGuess::paper_alternating;
    Vector x0; ///< used with InitialGuess::custom
    ResidualMode residual_mode = ResidualMode::gave;
    /// Check that a matrix Omega is positive semidefinite (symmetric part,
    /// n <= 500). Scalar omega >= 0 is always checked.
    bool validate_shift = false;
    /// Keep every iterate in SolveReport::iterates.
    bool record_iterates = false;

    void validate(std::size_t n) const;
};

struct SolveReport {
    Method method = Method::nmn;
    bool converged = false;
    /// Number of linear solves performed.
    int iterations = 0;
    double final_residual = 0.0;
    /// RES(x^(0)), ..., RES(x^(iterations)).
    Vector residual_history;
    /// Seconds spent in the iteration loop only.
    double wall_time_loop = 0.0;
    /// Seconds including the factorization.
    double wall_time_total = 0.0;
    Vector x;
    std::vector<Vector> iterates;
};

/// (1, 0, 1, 0, ...): odd 1-based positions are one.
Vector default_x0(std::size_t n);

/// A x^{k+1} = B|x^k| + b
SolveReport solve_picard(const GaveProblem& p, const SolverConfig& cfg);
/// (Omega + A) x^{k+1} = Omega x^k + B|x^k| + b
SolveReport solve_mn(const GaveProblem& p, const SolverConfig& cfg);
/// (Omega + A) x^{k+1} = (Omega - A) x^k + 2 (B|x^k| + b)
SolveReport solve_nmn(const GaveProblem& p, const SolverConfig& cfg);
/// Dispatches on cfg.method.
SolveReport solve(const GaveProblem& p, const SolverConfig& cfg);

/// Provenance fields echoed into the JSON report.
struct ReportContext {
    std::optional<int> example;
    std::optional<double> mu;
};

/// {method, omega, n, mu, example, iterations, converged, final_residual,
///  wall_time_loop, wall_time_total}; omega is null for a matrix shift,
/// mu and example are null for imported problems.
nlohmann::json to_json(const SolveReport& r, const SolverConfig& cfg, std::size_t n,
                       const ReportContext& ctx = {});

} // namespace gave
