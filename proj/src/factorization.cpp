#include "gave/factorization.hpp"

#include <algorithm>
#include <cmath>

#include "gave/error.hpp"

namespace gave {

bool FactorizedOperator::try_cholesky(const Matrix& a, double threshold)
{
    kind_ = Kind::cholesky;
    factors_.assign(n_ * (kl_ + 1), 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
        const std::size_t first = i >= kl_ ? i - kl_ : 0;
        for (std::size_t j = first; j <= i; ++j) {
            double s = a(i, j);
            // first >= j - kl, so every k below lies in row j's band too
            for (std::size_t k = first; k < j; ++k) {
                s -= chol(i, k) * chol(j, k);
            }
            if (i == j) {
                if (!(s > threshold)) {
                    return false;
                }
                chol(i, i) = std::sqrt(s);
            } else {
                chol(i, j) = s / chol(j, j);
            }
        }
    }
    return true;
}

void FactorizedOperator::lu(const Matrix& a, double threshold)
{
    kind_ = Kind::lu;
    ldab_ = 2 * kl_ + ku_ + 1;
    factors_.assign(n_ * ldab_, 0.0);
    pivots_.assign(n_, 0);
    a.for_each_entry([&](std::size_t i, std::size_t j, double v) { ab(i, j) += v; });

    std::size_t ju = 0;
    for (std::size_t j = 0; j < n_; ++j) {
        const std::size_t km = std::min(kl_, n_ - 1 - j);

        std::size_t jp = 0;
        double best = std::fabs(ab(j, j));
        for (std::size_t r = 1; r <= km; ++r) {
            const double v = std::fabs(ab(j + r, j));
            if (v > best) {
                best = v;
                jp = r;
            }
        }
        pivots_[j] = j + jp;
        if (!(best >= threshold)) {
            throw SingularMatrix(j, best, threshold);
        }

        ju = std::max(ju, std::min(j + ku_ + jp, n_ - 1));
        if (jp != 0) {
            for (std::size_t c = j; c <= ju; ++c) {
                std::swap(ab(j, c), ab(j + jp, c));
            }
        }

        const double pivot = ab(j, j);
        for (std::size_t r = 1; r <= km; ++r) {
            ab(j + r, j) /= pivot;
        }
        for (std::size_t c = j + 1; c <= ju; ++c) {
            const double t = ab(j, c);
            if (t == 0.0) {
                continue;
            }
            for (std::size_t r = 1; r <= km; ++r) {
                ab(j + r, c) -= ab(j + r, j) * t;
            }
        }
    }
}

FactorizedOperator factorize(const Matrix& a, bool spd_hint)
{
    FactorizedOperator f;
    f.n_ = a.size();
    f.kl_ = a.lower_bandwidth();
    f.ku_ = a.upper_bandwidth();
    const Matrix band = a.to_banded();
    const double threshold = kPivotTolerance * band.max_abs();
    if (band.max_abs() == 0.0) {
        throw SingularMatrix(0, 0.0, 0.0);
    }

    if (spd_hint && a.symmetric() && f.kl_ == f.ku_ && f.try_cholesky(band, threshold)) {
        return f;
    }
    f.lu(band, threshold);
    return f;
}

void FactorizedOperator::solve_in_place(std::span<double> b) const
{
    if (b.size() != n_) {
        throw DimensionMismatch("solve: right-hand side length differs from operator size");
    }
    if (kind_ == Kind::cholesky) {
        for (std::size_t i = 0; i < n_; ++i) {
            const std::size_t first = i >= kl_ ? i - kl_ : 0;
            const double* row = &factors_[i * (kl_ + 1) + (first + kl_ - i)];
            const std::size_t len = i - first;
            const double* bk = &b[first];
            double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
            std::size_t k = 0;
            for (; k + 4 <= len; k += 4) {
                s0 += row[k] * bk[k];
                s1 += row[k + 1] * bk[k + 1];
                s2 += row[k + 2] * bk[k + 2];
                s3 += row[k + 3] * bk[k + 3];
            }
            for (; k < len; ++k) {
                s0 += row[k] * bk[k];
            }
            b[i] = (b[i] - ((s0 + s1) + (s2 + s3))) / row[len];
        }
        // column-oriented so the inner loop walks row i of the factor
        for (std::size_t i = n_; i-- > 0;) {
            const std::size_t first = i >= kl_ ? i - kl_ : 0;
            const double* row = &factors_[i * (kl_ + 1) + (first + kl_ - i)];
            const double t = b[i] / row[i - first];
            b[i] = t;
            for (std::size_t k = first; k < i; ++k) {
                b[k] -= row[k - first] * t;
            }
        }
        return;
    }

    // L with the row interchanges interleaved, then the banded U.
    const std::size_t kv = kl_ + ku_;
    for (std::size_t j = 0; j < n_; ++j) {
        const std::size_t km = std::min(kl_, n_ - 1 - j);
        if (pivots_[j] != j) {
            std::swap(b[j], b[pivots_[j]]);
        }
        const double t = b[j];
        for (std::size_t r = 1; r <= km; ++r) {
            b[j + r] -= ab(j + r, j) * t;
        }
    }
    for (std::size_t i = n_; i-- > 0;) {
        const std::size_t last = std::min(n_ - 1, i + kv);
        double s = b[i];
        for (std::size_t c = i + 1; c <= last; ++c) {
            s -= ab(i, c) * b[c];
        }
        b[i] = s / ab(i, i);
    }
}

void FactorizedOperator::solve_transpose_in_place(std::span<double> b) const
{
    if (kind_ == Kind::cholesky) {
        solve_in_place(b);
        return;
    }
    if (b.size() != n_) {
        throw DimensionMismatch("solve_transpose: right-hand side length differs from operator size");
    }
    const std::size_t kv = kl_ + ku_;
    // U^T y = b
    for (std::size_t i = 0; i < n_; ++i) {
        const std::size_t first = i >= kv ? i - kv : 0;
        double s = b[i];
        for (std::size_t r = first; r < i; ++r) {
            s -= ab(r, i) * b[r];
        }
        b[i] = s / ab(i, i);
    }
    // L^T with interchanges applied in reverse
    for (std::size_t j = n_; j-- > 0;) {
        const std::size_t km = std::min(kl_, n_ - 1 - j);
        double s = b[j];
        for (std::size_t r = 1; r <= km; ++r) {
            s -= ab(j + r, j) * b[j + r];
        }
        b[j] = s;
        if (pivots_[j] != j) {
            std::swap(b[j], b[pivots_[j]]);
        }
    }
}

Vector FactorizedOperator::solve(std::span<const double> b) const
{
    Vector x(b.begin(), b.end());
    solve_in_place(x);
    return x;
}

Vector FactorizedOperator::solve_transpose(std::span<const double> b) const
{
    Vector x(b.begin(), b.end());
    solve_transpose_in_place(x);
    return x;
}

} // namespace gave
