#include "gave/spectral.hpp"

#include <cmath>
#include <limits>

#include "gave/error.hpp"

namespace gave {

namespace {

constexpr double kInverseGolden = 0.6180339887498949;

struct PowerResult {
    SpectralEstimate estimate;
    Vector vector;
};

// Power iteration for a symmetric positive semidefinite operator. The
// estimate is the Rayleigh quotient; iteration stops once its relative change
// and the geometric extrapolation of the remaining error are both within
// tolerance.
template <class Apply>
PowerResult power_iteration(std::size_t n, Apply&& apply, const PowerOptions& opts)
{
    PowerResult out;
    out.estimate.relative_tolerance = opts.relative_tolerance;
    Vector v = power_start_vector(n);
    Vector w(n);
    apply(v, w);
    double lambda = dot(v, w);
    double prev_change = std::numeric_limits<double>::infinity();

    for (int k = 1; k <= opts.max_iterations; ++k) {
        const double nw = norm2(w);
        out.estimate.iterations_used = k;
        if (nw == 0.0) {
            lambda = 0.0;
            out.estimate.converged = true;
            break;
        }
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = w[i] / nw;
        }
        apply(v, w);
        const double next = dot(v, w);
        const double change = next == 0.0 ? std::fabs(next - lambda)
                                           : std::fabs(next - lambda) / std::fabs(next);
        lambda = next;

        if (change <= opts.relative_tolerance) {
            const double ratio = change / prev_change;
            const double tail = ratio < 1.0 ? change * ratio / (1.0 - ratio)
                                            : std::numeric_limits<double>::infinity();
            if (change <= 1e-3 * opts.relative_tolerance || tail <= opts.relative_tolerance) {
                out.estimate.converged = true;
                break;
            }
        }
        prev_change = change;
    }
    out.estimate.value = std::max(lambda, 0.0);
    out.vector = std::move(v);
    return out;
}

double rayleigh(const Matrix& a, const Vector& v)
{
    return dot(v, matvec(a, v)) / dot(v, v);
}

} // namespace

Vector power_start_vector(std::size_t n)
{
    Vector v(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i + 1) * kInverseGolden;
        v[i] = 1.0 + (t - std::floor(t));
    }
    const double nv = norm2(v);
    for (auto& x : v) {
        x /= nv;
    }
    return v;
}

SpectralEstimate two_norm_estimate(const Matrix& a, const PowerOptions& opts)
{
    Vector tmp(a.size());
    auto result = power_iteration(
        a.size(),
        [&](const Vector& v, Vector& w) {
            matvec_into(a, v, tmp);
            matvec_transpose_into(a, tmp, w);
        },
        opts);
    result.estimate.value = std::sqrt(result.estimate.value);
    return result.estimate;
}

SpectralEstimate inverse_two_norm_estimate(const FactorizedOperator& f, const PowerOptions& opts)
{
    auto result = power_iteration(
        f.size(),
        [&](const Vector& v, Vector& w) {
            w = v;
            f.solve_in_place(w);
            f.solve_transpose_in_place(w);
        },
        opts);
    result.estimate.value = std::sqrt(result.estimate.value);
    return result.estimate;
}

EigenRange extreme_eigenvalues_sym(const Matrix& a, const PowerOptions& opts)
{
    if (!is_symmetric(a, a.symmetric() ? 0.0 : 1e-12)) {
        throw NotSymmetric("extreme_eigenvalues_sym requires a symmetric matrix");
    }
    const std::size_t n = a.size();
    const SpectralEstimate radius = two_norm_estimate(a, opts);
    const double rho = radius.value;

    auto top = power_iteration(
        n,
        [&](const Vector& v, Vector& w) {
            matvec_into(a, v, w);
            kernels::axpy(rho, v, w);
        },
        opts);
    const double mu_max = rayleigh(a, top.vector);

    auto bottom = power_iteration(
        n,
        [&](const Vector& v, Vector& w) {
            matvec_into(a, v, w);
            for (std::size_t i = 0; i < n; ++i) {
                w[i] = mu_max * v[i] - w[i];
            }
        },
        opts);
    const double mu_min = rayleigh(a, bottom.vector);

    EigenRange r;
    r.max = mu_max;
    r.min = std::min(mu_min, mu_max);
    r.converged = radius.converged && top.estimate.converged && bottom.estimate.converged;
    r.iterations_used = radius.iterations_used + top.estimate.iterations_used +
                        bottom.estimate.iterations_used;
    return r;
}

} // namespace gave
