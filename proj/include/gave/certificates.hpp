#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gave/problems.hpp"
#include "gave/solvers.hpp"
#include "gave/spectral.hpp"

namespace gave {

enum class Theorem { thm1, thm2, thm3_spd, thm4_hplus };

std::string_view to_string(Theorem t);

/// Relative guard band on the strict inequalities: holds requires
/// lhs < rhs * (1 - kGuardBand).
inline constexpr double kGuardBand = 1e-9;

/// Evaluated sufficient condition for NMN convergence.
///
/// Certificates are informational. The conditions are sufficient only, so a
/// failed certificate says nothing about whether the iteration converges.
struct Certificate {
    Theorem theorem = Theorem::thm1;
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
    /// ||(A + Omega)^{-1}||_2 (||Omega - A||_2 + 2 ||B||_2); set for thm1 and thm3.
    std::optional<double> contraction_bound;
    std::vector<std::string> preconditions;
    std::vector<std::pair<std::string, double>> quantities;
    /// False when any power iteration hit its iteration cap.
    bool estimates_converged = true;
};

/// ||(Omega + A)^{-1}||_2 < 1 / (||A - Omega||_2 + 2 ||B||_2)
Certificate cert_thm1(const GaveProblem& p, const Shift& omega, const PowerOptions& opts = {});

/// ||A^{-1}||_2 < 1 / (||A - Omega||_2 + ||Omega||_2 + 2 ||B||_2)
///
/// Note that ||A - Omega|| + ||Omega|| >= ||A|| >= 1 / ||A^{-1}||, so this
/// condition cannot be met by any instance; the checker still evaluates it.
Certificate cert_thm2(const GaveProblem& p, const Shift& omega, const PowerOptions& opts = {});

/// Symmetric positive definite A, Omega = omega I:
/// tau < mu_min and omega > (mu_max - mu_min) / 2 + tau with tau = ||B||_2.
/// Reported as lhs = piecewise contraction bound, rhs = 1, which is
/// equivalent. Throws NotSpd when mu_min <= 0.
Certificate cert_thm3_spd(const GaveProblem& p, double omega, const PowerOptions& opts = {});

/// H+ matrix A, Omega = omega I:
/// ||(<A> + omega I)^{-1}||_2 < 1 / ||omega I + |A| + 2|B| ||_2.
/// Throws NotHPlus when A is not an H+ matrix.
///
/// Since sigma_min(<A> + omega I) <= ||(<A> + omega I) e_i|| =
/// ||(omega I + |A|) e_i|| for any unit vector e_i, the strict inequality
/// cannot hold; the guard band keeps equality cases (B = 0, diagonal A)
/// from flipping.
Certificate cert_thm4_hplus(const GaveProblem& p, double omega, const PowerOptions& opts = {});

/// Piecewise bound from the SPD analysis, split at omega = (mu_max + mu_min) / 2.
double spd_contraction_bound(double mu_min, double mu_max, double tau, double omega);

/// One entry per theorem; `error` is set when a precondition fails.
struct CertificateOutcome {
    Theorem theorem;
    std::optional<Certificate> certificate;
    std::string error;
};

/// Evaluates all four checks with Omega = omega I.
std::vector<CertificateOutcome> certify_all(const GaveProblem& p, double omega,
                                            const PowerOptions& opts = {});

/// {theorem, lhs, rhs, holds, contraction_bound, preconditions, quantities,
///  estimates_converged}
nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const CertificateOutcome& o);

} // namespace gave
