#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gave/matrix.hpp"

namespace gave {

/// Relative pivot threshold: a pivot below kPivotTolerance * max|a_ij|
/// makes the factorization fail with SingularMatrix.
inline constexpr double kPivotTolerance = 1e-14;

/// Band Cholesky or band LU factors of a square matrix.
///
/// Cholesky is attempted when the caller passes spd_hint and the matrix
/// carries the symmetric flag; any nonpositive pivot falls back to LU with
/// partial pivoting. LU follows the usual band layout with kl extra
/// superdiagonals reserved for pivoting fill. Immutable after construction.
class FactorizedOperator {
public:
    enum class Kind { cholesky, lu };

    Kind kind() const { return kind_; }
    std::size_t size() const { return n_; }
    std::size_t lower_bandwidth() const { return kl_; }
    std::size_t upper_bandwidth() const { return ku_; }

    /// x = A^{-1} b
    Vector solve(std::span<const double> b) const;
    void solve_in_place(std::span<double> b) const;
    /// x = A^{-T} b
    Vector solve_transpose(std::span<const double> b) const;
    void solve_transpose_in_place(std::span<double> b) const;

private:
    friend FactorizedOperator factorize(const Matrix& a, bool spd_hint);

    bool try_cholesky(const Matrix& a, double threshold);
    void lu(const Matrix& a, double threshold);

    // Cholesky: row i holds L(i, i-kl .. i).
    double& chol(std::size_t i, std::size_t j) { return factors_[i * (kl_ + 1) + (j + kl_ - i)]; }
    double chol(std::size_t i, std::size_t j) const { return factors_[i * (kl_ + 1) + (j + kl_ - i)]; }

    // LU: column-major band with leading dimension 2*kl + ku + 1.
    double& ab(std::size_t i, std::size_t j) { return factors_[j * ldab_ + (kl_ + ku_ + i - j)]; }
    double ab(std::size_t i, std::size_t j) const { return factors_[j * ldab_ + (kl_ + ku_ + i - j)]; }

    Kind kind_ = Kind::lu;
    std::size_t n_ = 0;
    std::size_t kl_ = 0;
    std::size_t ku_ = 0;
    std::size_t ldab_ = 0;
    std::vector<double> factors_;
    std::vector<std::size_t> pivots_;
};

/// Factorizes a (compressed-row input is converted to its band first).
/// Throws SingularMatrix when a pivot falls below the relative threshold.
FactorizedOperator factorize(const Matrix& a, bool spd_hint);

} // namespace gave
