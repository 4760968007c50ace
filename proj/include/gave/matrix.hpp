#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "gave/kernels.hpp"

namespace gave {

using Vector = std::vector<double>;

struct Triplet {
    std::size_t row;
    std::size_t col;
    double value;
};

namespace detail {

struct BandStorage {
    std::size_t lower = 0;
    std::size_t upper = 0;
    std::vector<double> values;
};

struct CsrStorage {
    std::vector<std::size_t> row_ptr;
    std::vector<std::size_t> cols;
    std::vector<double> values;
};

} // namespace detail

/// Square real matrix in banded or compressed-row storage.
///
/// Banded storage keeps row i's entries for columns i-lower .. i+upper in one
/// contiguous slab; entries outside the band are structurally zero. The
/// compressed-row form is what Matrix Market imports produce. Both are
/// immutable through the public interface except for the explicit band
/// accessor used by generators.
///
/// The symmetric flag is a hint consumed by the factorization (Cholesky
/// first) and by the eigenvalue estimator; is_symmetric() checks it.
class Matrix {
public:
    using Banded = detail::BandStorage;
    using Csr = detail::CsrStorage;

    Matrix() = default;

    /// All-zero banded matrix.
    static Matrix banded(std::size_t n, std::size_t lower, std::size_t upper,
                         bool symmetric = false);
    static Matrix identity(std::size_t n);
    static Matrix diagonal(std::span<const double> d);
    /// Row-major dense input; stored banded with the tightest bandwidths.
    static Matrix from_dense(std::size_t n, std::span<const double> row_major,
                             bool symmetric = false);
    /// Compressed-row matrix; duplicate coordinates are summed.
    static Matrix from_triplets(std::size_t n, std::vector<Triplet> entries,
                                bool symmetric = false);

    std::size_t size() const { return n_; }
    bool is_banded() const { return std::holds_alternative<Banded>(storage_); }
    const Banded* band() const { return std::get_if<Banded>(&storage_); }
    const Csr* csr() const { return std::get_if<Csr>(&storage_); }

    /// Bandwidths of the stored pattern (computed for compressed rows).
    std::size_t lower_bandwidth() const;
    std::size_t upper_bandwidth() const;

    bool symmetric() const { return symmetric_; }
    void set_symmetric(bool s) { symmetric_ = s; }

    double operator()(std::size_t i, std::size_t j) const;

    /// Writable reference into banded storage; (i, j) must lie inside the band.
    double& band_at(std::size_t i, std::size_t j);

    /// Calls f(i, j, value) for every stored entry, row by row.
    template <class F>
    void for_each_entry(F&& f) const
    {
        if (const auto* b = band()) {
            const std::size_t width = b->lower + b->upper + 1;
            for (std::size_t i = 0; i < n_; ++i) {
                const std::size_t first = i >= b->lower ? i - b->lower : 0;
                const std::size_t last = std::min(n_ - 1, i + b->upper);
                for (std::size_t j = first; j <= last; ++j) {
                    f(i, j, b->values[i * width + (j + b->lower - i)]);
                }
            }
        } else if (const auto* c = csr()) {
            for (std::size_t i = 0; i < n_; ++i) {
                for (std::size_t k = c->row_ptr[i]; k < c->row_ptr[i + 1]; ++k) {
                    f(i, c->cols[k], c->values[k]);
                }
            }
        }
    }

    double max_abs() const;
    Vector diagonal_entries() const;

    Matrix to_banded() const;
    /// Compressed rows holding only the nonzero entries.
    Matrix to_csr() const;
    std::size_t nonzeros() const;
    Vector to_dense() const;

    kernels::BandView band_view() const;
    kernels::CsrView csr_view() const;

private:
    std::size_t n_ = 0;
    std::variant<Banded, Csr> storage_;
    bool symmetric_ = false;
};

Vector matvec(const Matrix& a, std::span<const double> x);
void matvec_into(const Matrix& a, std::span<const double> x, std::span<double> y);
Vector matvec_transpose(const Matrix& a, std::span<const double> x);
void matvec_transpose_into(const Matrix& a, std::span<const double> x, std::span<double> y);

/// alpha * x + beta * y. Banded when both operands are banded.
Matrix add(double alpha, const Matrix& x, double beta, const Matrix& y);
/// a + shift * I
Matrix shifted(const Matrix& a, double shift);
Matrix scaled(const Matrix& a, double factor);
Matrix transpose(const Matrix& a);

/// <V>: |v_ii| on the diagonal, -|v_ij| elsewhere.
Matrix comparison_matrix(const Matrix& v);
/// Entrywise |v_ij|.
Matrix abs_matrix(const Matrix& v);

/// Entrywise symmetry check. rel_tol = 0 demands exact equality; otherwise
/// |a_ij - a_ji| <= rel_tol * max|a| is accepted.
bool is_symmetric(const Matrix& a, double rel_tol = 0.0);

Vector abs(std::span<const double> x);
double norm2(std::span<const double> x);
double norm_inf(std::span<const double> x);
double dot(std::span<const double> x, std::span<const double> y);

} // namespace gave
