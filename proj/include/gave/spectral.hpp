#pragma once

#include <cstddef>

#include "gave/factorization.hpp"
#include "gave/matrix.hpp"

namespace gave {

struct PowerOptions {
    double relative_tolerance = 1e-10;
    int max_iterations = 10000;
};

/// Result of one power iteration.
struct SpectralEstimate {
    double value = 0.0;
    int iterations_used = 0;
    bool converged = false;
    double relative_tolerance = 0.0;
};

/// Deterministic, non-constant start vector of unit length shared by all
/// power iterations. Entries are 1 + frac(k / golden ratio) for k = 1..n.
Vector power_start_vector(std::size_t n);

/// ||A||_2 via power iteration on A^T A.
SpectralEstimate two_norm_estimate(const Matrix& a, const PowerOptions& opts = {});

/// ||A^{-1}||_2 via power iteration on A^{-T} A^{-1}, two triangular sweeps
/// per product.
SpectralEstimate inverse_two_norm_estimate(const FactorizedOperator& f,
                                           const PowerOptions& opts = {});

struct EigenRange {
    double min = 0.0;
    double max = 0.0;
    bool converged = false;
    int iterations_used = 0;
};

/// Smallest and largest eigenvalue of a symmetric matrix.
///
/// The spectral radius bounds the spectrum, power iteration on A + rho*I
/// finds the top eigenvector, power iteration on mu_max*I - A the bottom
/// one; both reported values are Rayleigh quotients of A at the converged
/// vectors. Throws NotSymmetric when the symmetry check fails (exact for
/// matrices flagged symmetric, 1e-12 relative otherwise).
EigenRange extreme_eigenvalues_sym(const Matrix& a, const PowerOptions& opts = {});

} // namespace gave
