#include "gave/solvers.hpp"

#include <chrono>
#include <cmath>
#include <string>

#include "gave/error.hpp"
#include "gave/factorization.hpp"
#include "gave/spectral.hpp"

namespace gave {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void check_shift_psd(const Matrix& omega)
{
    if (omega.size() > 500) {
        return;
    }
    const Matrix sym = add(0.5, omega, 0.5, transpose(omega));
    Matrix s = sym;
    s.set_symmetric(true);
    const auto range = extreme_eigenvalues_sym(s);
    if (range.min < -1e-12 * std::max(1.0, s.max_abs())) {
        throw InvalidArgument("shift matrix is not positive semidefinite (min eigenvalue " +
                              std::to_string(range.min) + ")");
    }
}

// Matrix-vector products in the loop go through compressed rows when the
// band is mostly structural zeros.
Matrix product_operator(const Matrix& a)
{
    if (!a.is_banded()) {
        return a;
    }
    const std::size_t stored = a.size() * (a.lower_bandwidth() + a.upper_bandwidth() + 1);
    return 2 * a.nonzeros() < stored ? a.to_csr() : a;
}

Vector initial_vector(const SolverConfig& cfg, std::size_t n)
{
    switch (cfg.x0_policy) {
    case InitialGuess::paper_alternating:
        return default_x0(n);
    case InitialGuess::zeros:
        return Vector(n, 0.0);
    case InitialGuess::custom:
        break;
    }
    return cfg.x0;
}

// Shared fixed-point loop. Each step evaluates A x^k and B|x^k| once; they
// feed both the residual of x^k and the right-hand side of the next solve.
SolveReport run(const GaveProblem& p, const SolverConfig& cfg, Method method)
{
    p.validate();
    const std::size_t n = p.size();
    cfg.validate(n);

    const auto t_start = Clock::now();
    const double* omega_scalar = std::get_if<double>(&cfg.omega);
    const Matrix* omega_matrix = std::get_if<Matrix>(&cfg.omega);
    if (method == Method::nmn && omega_scalar != nullptr && !(*omega_scalar > 0.0)) {
        throw InvalidArgument("NMN requires omega > 0");
    }
    if (omega_matrix != nullptr && cfg.validate_shift && method != Method::picard) {
        check_shift_psd(*omega_matrix);
    }

    Matrix coefficient;
    if (method == Method::picard) {
        coefficient = p.a;
    } else if (omega_scalar != nullptr) {
        coefficient = shifted(p.a, *omega_scalar);
    } else {
        coefficient = add(1.0, p.a, 1.0, *omega_matrix);
    }
    const auto factors = factorize(coefficient, coefficient.symmetric());

    const double nb = norm2(p.b);
    if (nb == 0.0) {
        throw ZeroRhs();
    }

    const Matrix a_op = product_operator(p.a);
    const Matrix b_op = product_operator(p.b_mat);
    const std::optional<Matrix> omega_op =
        omega_matrix != nullptr ? std::optional<Matrix>(product_operator(*omega_matrix)) : std::nullopt;

    const auto t_loop = Clock::now();
    SolveReport report;
    report.method = method;
    Vector x = initial_vector(cfg, n);
    Vector ax(n), absx(n), bx(n), r(n), rhs(n), wx(n);

    auto evaluate = [&]() {
        matvec_into(a_op, x, ax);
        kernels::abs(x, absx);
        matvec_into(b_op, absx, bx);
        const Vector& nonlinear = cfg.residual_mode == ResidualMode::gave ? bx : absx;
        for (std::size_t i = 0; i < n; ++i) {
            r[i] = ax[i] - nonlinear[i] - p.b[i];
        }
        return norm2(r) / nb;
    };

    double res = evaluate();
    report.residual_history.push_back(res);
    if (cfg.record_iterates) {
        report.iterates.push_back(x);
    }

    int k = 0;
    while (!(res <= cfg.tol) && k < cfg.k_max) {
        if (method != Method::picard && omega_op) {
            matvec_into(*omega_op, x, wx);
        } else {
            const double w = method == Method::picard ? 0.0 : *omega_scalar;
            for (std::size_t i = 0; i < n; ++i) {
                wx[i] = w * x[i];
            }
        }
        switch (method) {
        case Method::picard:
            for (std::size_t i = 0; i < n; ++i) {
                rhs[i] = bx[i] + p.b[i];
            }
            break;
        case Method::mn:
            for (std::size_t i = 0; i < n; ++i) {
                rhs[i] = wx[i] + bx[i] + p.b[i];
            }
            break;
        case Method::nmn:
            for (std::size_t i = 0; i < n; ++i) {
                rhs[i] = (wx[i] - ax[i]) + 2.0 * (bx[i] + p.b[i]);
            }
            break;
        }
        factors.solve_in_place(rhs);
        x.swap(rhs);
        ++k;

        for (double v : x) {
            if (!std::isfinite(v)) {
                throw NonFiniteIterate(k);
            }
        }
        res = evaluate();
        if (!std::isfinite(res)) {
            throw NonFiniteIterate(k);
        }
        report.residual_history.push_back(res);
        if (cfg.record_iterates) {
            report.iterates.push_back(x);
        }
    }

    report.iterations = k;
    report.final_residual = res;
    report.converged = res <= cfg.tol;
    report.x = std::move(x);
    report.wall_time_loop = seconds_since(t_loop);
    report.wall_time_total = seconds_since(t_start);
    return report;
}

} // namespace

std::string_view to_string(Method m)
{
    switch (m) {
    case Method::picard:
        return "picard";
    case Method::mn:
        return "mn";
    case Method::nmn:
        return "nmn";
    }
    return "?";
}

Method method_from_string(std::string_view s)
{
    if (s == "picard") {
        return Method::picard;
    }
    if (s == "mn") {
        return Method::mn;
    }
    if (s == "nmn") {
        return Method::nmn;
    }
    throw InvalidArgument("unknown method '" + std::string(s) + "'");
}

void SolverConfig::validate(std::size_t n) const
{
    if (!(tol > 0.0)) {
        throw InvalidArgument("tol must be positive");
    }
    if (k_max < 1) {
        throw InvalidArgument("k_max must be at least 1");
    }
    if (const auto* w = std::get_if<double>(&omega)) {
        if (!(*w >= 0.0) || !std::isfinite(*w)) {
            throw InvalidArgument("omega must be a finite nonnegative scalar");
        }
    } else if (std::get<Matrix>(omega).size() != n) {
        throw DimensionMismatch("shift matrix dimension differs from problem size");
    }
    if (x0_policy == InitialGuess::custom && x0.size() != n) {
        throw DimensionMismatch("custom initial vector length differs from problem size");
    }
}

Vector default_x0(std::size_t n)
{
    Vector x(n, 0.0);
    for (std::size_t i = 0; i < n; i += 2) {
        x[i] = 1.0;
    }
    return x;
}

SolveReport solve_picard(const GaveProblem& p, const SolverConfig& cfg)
{
    return run(p, cfg, Method::picard);
}

SolveReport solve_mn(const GaveProblem& p, const SolverConfig& cfg)
{
    return run(p, cfg, Method::mn);
}

SolveReport solve_nmn(const GaveProblem& p, const SolverConfig& cfg)
{
    return run(p, cfg, Method::nmn);
}

SolveReport solve(const GaveProblem& p, const SolverConfig& cfg)
{
    return run(p, cfg, cfg.method);
}

nlohmann::json to_json(const SolveReport& r, const SolverConfig& cfg, std::size_t n,
                       const ReportContext& ctx)
{
    nlohmann::json j;
    j["method"] = std::string(to_string(r.method));
    if (const auto* w = std::get_if<double>(&cfg.omega)) {
        j["omega"] = *w;
    } else {
        j["omega"] = nullptr;
    }
    j["n"] = n;
    j["mu"] = ctx.mu ? nlohmann::json(*ctx.mu) : nlohmann::json(nullptr);
    j["example"] = ctx.example ? nlohmann::json(*ctx.example) : nlohmann::json(nullptr);
    j["iterations"] = r.iterations;
    j["converged"] = r.converged;
    j["final_residual"] = r.final_residual;
    j["wall_time_loop"] = r.wall_time_loop;
    j["wall_time_total"] = r.wall_time_total;
    return j;
}

} // namespace gave
