#include "gave/certificates.hpp"

#include <cmath>
#include <limits>

#include "gave/error.hpp"
#include "gave/factorization.hpp"
#include "gave/matrix_class.hpp"

namespace gave {

namespace {

Matrix shift_matrix(const Shift& omega, std::size_t n)
{
    if (const auto* w = std::get_if<double>(&omega)) {
        return scaled(Matrix::identity(n), *w);
    }
    const Matrix& m = std::get<Matrix>(omega);
    if (m.size() != n) {
        throw DimensionMismatch("shift matrix dimension differs from problem size");
    }
    return m;
}

double reciprocal(double denominator)
{
    return denominator > 0.0 ? 1.0 / denominator : std::numeric_limits<double>::infinity();
}

void decide(Certificate& c)
{
    c.holds = c.lhs < c.rhs * (1.0 - kGuardBand);
}

} // namespace

std::string_view to_string(Theorem t)
{
    switch (t) {
    case Theorem::thm1:
        return "thm1";
    case Theorem::thm2:
        return "thm2";
    case Theorem::thm3_spd:
        return "thm3_spd";
    case Theorem::thm4_hplus:
        return "thm4_hplus";
    }
    return "?";
}

Certificate cert_thm1(const GaveProblem& p, const Shift& omega, const PowerOptions& opts)
{
    p.validate();
    const Matrix om = shift_matrix(omega, p.size());
    const Matrix sum = add(1.0, om, 1.0, p.a);
    const auto inv = inverse_two_norm_estimate(factorize(sum, sum.symmetric()), opts);
    const auto diff = two_norm_estimate(add(1.0, p.a, -1.0, om), opts);
    const auto nb = two_norm_estimate(p.b_mat, opts);

    Certificate c;
    c.theorem = Theorem::thm1;
    c.lhs = inv.value;
    c.rhs = reciprocal(diff.value + 2.0 * nb.value);
    c.contraction_bound = inv.value * (diff.value + 2.0 * nb.value);
    c.preconditions = {"Omega + A nonsingular"};
    c.quantities = {{"norm_inv_Omega_plus_A", inv.value},
                    {"norm_A_minus_Omega", diff.value},
                    {"norm_B", nb.value}};
    c.estimates_converged = inv.converged && diff.converged && nb.converged;
    decide(c);
    return c;
}

Certificate cert_thm2(const GaveProblem& p, const Shift& omega, const PowerOptions& opts)
{
    p.validate();
    const Matrix om = shift_matrix(omega, p.size());
    const auto inv = inverse_two_norm_estimate(factorize(p.a, p.a.symmetric()), opts);
    const auto diff = two_norm_estimate(add(1.0, p.a, -1.0, om), opts);
    const auto nom = two_norm_estimate(om, opts);
    const auto nb = two_norm_estimate(p.b_mat, opts);

    Certificate c;
    c.theorem = Theorem::thm2;
    c.lhs = inv.value;
    c.rhs = reciprocal(diff.value + nom.value + 2.0 * nb.value);
    c.preconditions = {"A nonsingular"};
    c.quantities = {{"norm_inv_A", inv.value},
                    {"norm_A_minus_Omega", diff.value},
                    {"norm_Omega", nom.value},
                    {"norm_B", nb.value}};
    c.estimates_converged = inv.converged && diff.converged && nom.converged && nb.converged;
    decide(c);
    return c;
}

double spd_contraction_bound(double mu_min, double mu_max, double tau, double omega)
{
    if (omega >= 0.5 * (mu_max + mu_min)) {
        return (omega - mu_min + 2.0 * tau) / (omega + mu_min);
    }
    return (mu_max - omega + 2.0 * tau) / (omega + mu_min);
}

Certificate cert_thm3_spd(const GaveProblem& p, double omega, const PowerOptions& opts)
{
    p.validate();
    if (!(omega > 0.0)) {
        throw InvalidArgument("SPD certificate requires omega > 0");
    }
    const auto range = extreme_eigenvalues_sym(p.a, opts);
    if (!(range.min > 0.0)) {
        throw NotSpd("A is not positive definite (smallest eigenvalue " +
                     std::to_string(range.min) + ")");
    }
    const auto tau = two_norm_estimate(p.b_mat, opts);
    const double threshold = 0.5 * (range.max - range.min) + tau.value;

    Certificate c;
    c.theorem = Theorem::thm3_spd;
    c.lhs = spd_contraction_bound(range.min, range.max, tau.value, omega);
    c.rhs = 1.0;
    c.contraction_bound = c.lhs;
    c.preconditions = {"A symmetric", "A positive definite", "Omega = omega I, omega > 0"};
    c.quantities = {{"mu_min", range.min},
                    {"mu_max", range.max},
                    {"tau", tau.value},
                    {"omega", omega},
                    {"omega_threshold", threshold}};
    c.estimates_converged = range.converged && tau.converged;
    decide(c);
    return c;
}

Certificate cert_thm4_hplus(const GaveProblem& p, double omega, const PowerOptions& opts)
{
    p.validate();
    if (!(omega > 0.0)) {
        throw InvalidArgument("H+ certificate requires omega > 0");
    }
    if (!is_h_plus_matrix(p.a)) {
        throw NotHPlus("A is not an H+ matrix");
    }
    const Matrix cmp = shifted(comparison_matrix(p.a), omega);
    const auto inv = inverse_two_norm_estimate(factorize(cmp, cmp.symmetric()), opts);
    const Matrix majorant = add(1.0, shifted(abs_matrix(p.a), omega), 2.0, abs_matrix(p.b_mat));
    const auto nmaj = two_norm_estimate(majorant, opts);

    Certificate c;
    c.theorem = Theorem::thm4_hplus;
    c.lhs = inv.value;
    c.rhs = reciprocal(nmaj.value);
    c.preconditions = {"A is an H+ matrix", "Omega = omega I, omega > 0"};
    c.quantities = {{"norm_inv_cmpA_plus_Omega", inv.value},
                    {"norm_Omega_plus_absA_plus_2absB", nmaj.value},
                    {"spectral_radius_bound", inv.value * nmaj.value}};
    c.estimates_converged = inv.converged && nmaj.converged;
    decide(c);
    return c;
}

std::vector<CertificateOutcome> certify_all(const GaveProblem& p, double omega,
                                            const PowerOptions& opts)
{
    std::vector<CertificateOutcome> out;
    auto attempt = [&](Theorem t, auto&& eval) {
        CertificateOutcome o{t, std::nullopt, {}};
        try {
            o.certificate = eval();
        } catch (const Error& e) {
            o.error = e.what();
        }
        out.push_back(std::move(o));
    };
    attempt(Theorem::thm1, [&] { return cert_thm1(p, omega, opts); });
    attempt(Theorem::thm2, [&] { return cert_thm2(p, omega, opts); });
    attempt(Theorem::thm3_spd, [&] { return cert_thm3_spd(p, omega, opts); });
    attempt(Theorem::thm4_hplus, [&] { return cert_thm4_hplus(p, omega, opts); });
    return out;
}

nlohmann::json to_json(const Certificate& c)
{
    nlohmann::json j;
    j["theorem"] = std::string(to_string(c.theorem));
    j["lhs"] = c.lhs;
    j["rhs"] = std::isfinite(c.rhs) ? nlohmann::json(c.rhs) : nlohmann::json("inf");
    j["holds"] = c.holds;
    j["contraction_bound"] =
        c.contraction_bound ? nlohmann::json(*c.contraction_bound) : nlohmann::json(nullptr);
    j["preconditions"] = c.preconditions;
    nlohmann::json q = nlohmann::json::object();
    for (const auto& [name, value] : c.quantities) {
        q[name] = value;
    }
    j["quantities"] = q;
    j["estimates_converged"] = c.estimates_converged;
    return j;
}

nlohmann::json to_json(const CertificateOutcome& o)
{
    if (o.certificate) {
        auto j = to_json(*o.certificate);
        j["applicable"] = true;
        return j;
    }
    return {{"theorem", std::string(to_string(o.theorem))},
            {"applicable", false},
            {"holds", false},
            {"error", o.error}};
}

} // namespace gave
