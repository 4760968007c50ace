#include "gave/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gave/error.hpp"

namespace gave {

namespace {

void require_finite(double v)
{
    if (!std::isfinite(v)) {
        throw InvalidArgument("matrix entries must be finite");
    }
}

void require_length(std::size_t expected, std::size_t actual, const char* what)
{
    if (expected != actual) {
        throw DimensionMismatch(std::string(what) + ": expected length " +
                                std::to_string(expected) + ", got " + std::to_string(actual));
    }
}

} // namespace

Matrix Matrix::banded(std::size_t n, std::size_t lower, std::size_t upper, bool symmetric)
{
    if (n == 0) {
        throw InvalidArgument("matrix dimension must be positive");
    }
    lower = std::min(lower, n - 1);
    upper = std::min(upper, n - 1);
    Matrix m;
    m.n_ = n;
    m.storage_ = Banded{lower, upper, std::vector<double>(n * (lower + upper + 1), 0.0)};
    m.symmetric_ = symmetric;
    return m;
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m = banded(n, 0, 0, true);
    std::fill(std::get<Banded>(m.storage_).values.begin(),
              std::get<Banded>(m.storage_).values.end(), 1.0);
    return m;
}

Matrix Matrix::diagonal(std::span<const double> d)
{
    Matrix m = banded(d.size(), 0, 0, true);
    for (std::size_t i = 0; i < d.size(); ++i) {
        require_finite(d[i]);
        m.band_at(i, i) = d[i];
    }
    return m;
}

Matrix Matrix::from_dense(std::size_t n, std::span<const double> row_major, bool symmetric)
{
    require_length(n * n, row_major.size(), "from_dense");
    std::size_t lower = 0;
    std::size_t upper = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double v = row_major[i * n + j];
            require_finite(v);
            if (v != 0.0) {
                if (j < i) {
                    lower = std::max(lower, i - j);
                } else {
                    upper = std::max(upper, j - i);
                }
            }
        }
    }
    Matrix m = banded(n, lower, upper, symmetric);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t first = i >= lower ? i - lower : 0;
        const std::size_t last = std::min(n - 1, i + upper);
        for (std::size_t j = first; j <= last; ++j) {
            m.band_at(i, j) = row_major[i * n + j];
        }
    }
    return m;
}

Matrix Matrix::from_triplets(std::size_t n, std::vector<Triplet> entries, bool symmetric)
{
    if (n == 0) {
        throw InvalidArgument("matrix dimension must be positive");
    }
    for (const auto& t : entries) {
        if (t.row >= n || t.col >= n) {
            throw DimensionMismatch("triplet index out of range");
        }
        require_finite(t.value);
    }
    std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });

    Csr c;
    c.row_ptr.assign(n + 1, 0);
    for (std::size_t k = 0; k < entries.size(); ++k) {
        if (k > 0 && entries[k].row == entries[k - 1].row &&
            entries[k].col == entries[k - 1].col) {
            c.values.back() += entries[k].value;
            continue;
        }
        c.cols.push_back(entries[k].col);
        c.values.push_back(entries[k].value);
        ++c.row_ptr[entries[k].row + 1];
    }
    for (std::size_t i = 0; i < n; ++i) {
        c.row_ptr[i + 1] += c.row_ptr[i];
    }

    Matrix m;
    m.n_ = n;
    m.storage_ = std::move(c);
    m.symmetric_ = symmetric;
    return m;
}

std::size_t Matrix::lower_bandwidth() const
{
    if (const auto* b = band()) {
        return b->lower;
    }
    std::size_t lower = 0;
    for_each_entry([&](std::size_t i, std::size_t j, double) {
        if (j < i) {
            lower = std::max(lower, i - j);
        }
    });
    return lower;
}

std::size_t Matrix::upper_bandwidth() const
{
    if (const auto* b = band()) {
        return b->upper;
    }
    std::size_t upper = 0;
    for_each_entry([&](std::size_t i, std::size_t j, double) {
        if (j > i) {
            upper = std::max(upper, j - i);
        }
    });
    return upper;
}

double Matrix::operator()(std::size_t i, std::size_t j) const
{
    if (i >= n_ || j >= n_) {
        throw DimensionMismatch("matrix index out of range");
    }
    if (const auto* b = band()) {
        if (j + b->lower < i || j > i + b->upper) {
            return 0.0;
        }
        return b->values[i * (b->lower + b->upper + 1) + (j + b->lower - i)];
    }
    const auto& c = std::get<Csr>(storage_);
    const auto first = c.cols.begin() + static_cast<std::ptrdiff_t>(c.row_ptr[i]);
    const auto last = c.cols.begin() + static_cast<std::ptrdiff_t>(c.row_ptr[i + 1]);
    const auto it = std::lower_bound(first, last, j);
    if (it == last || *it != j) {
        return 0.0;
    }
    return c.values[static_cast<std::size_t>(it - c.cols.begin())];
}

double& Matrix::band_at(std::size_t i, std::size_t j)
{
    auto* b = std::get_if<Banded>(&storage_);
    if (b == nullptr) {
        throw InvalidArgument("band_at requires banded storage");
    }
    if (i >= n_ || j >= n_ || j + b->lower < i || j > i + b->upper) {
        throw DimensionMismatch("band_at index outside the band");
    }
    return b->values[i * (b->lower + b->upper + 1) + (j + b->lower - i)];
}

double Matrix::max_abs() const
{
    double m = 0.0;
    for_each_entry([&](std::size_t, std::size_t, double v) { m = std::max(m, std::fabs(v)); });
    return m;
}

Vector Matrix::diagonal_entries() const
{
    Vector d(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        d[i] = (*this)(i, i);
    }
    return d;
}

Matrix Matrix::to_banded() const
{
    if (is_banded()) {
        return *this;
    }
    Matrix m = banded(n_, lower_bandwidth(), upper_bandwidth(), symmetric_);
    for_each_entry([&](std::size_t i, std::size_t j, double v) { m.band_at(i, j) += v; });
    return m;
}

Matrix Matrix::to_csr() const
{
    std::vector<Triplet> entries;
    for_each_entry([&](std::size_t i, std::size_t j, double v) {
        if (v != 0.0) {
            entries.push_back({i, j, v});
        }
    });
    return from_triplets(n_, std::move(entries), symmetric_);
}

std::size_t Matrix::nonzeros() const
{
    std::size_t count = 0;
    for_each_entry([&](std::size_t, std::size_t, double v) { count += v != 0.0 ? 1 : 0; });
    return count;
}

Vector Matrix::to_dense() const
{
    Vector d(n_ * n_, 0.0);
    for_each_entry([&](std::size_t i, std::size_t j, double v) { d[i * n_ + j] += v; });
    return d;
}

kernels::BandView Matrix::band_view() const
{
    const auto& b = std::get<Banded>(storage_);
    return {n_, b.lower, b.upper, b.values};
}

kernels::CsrView Matrix::csr_view() const
{
    const auto& c = std::get<Csr>(storage_);
    return {n_, c.row_ptr, c.cols, c.values};
}

void matvec_into(const Matrix& a, std::span<const double> x, std::span<double> y)
{
    require_length(a.size(), x.size(), "matvec input");
    require_length(a.size(), y.size(), "matvec output");
    if (a.is_banded()) {
        kernels::band_matvec(a.band_view(), x, y);
    } else {
        kernels::csr_matvec(a.csr_view(), x, y);
    }
}

Vector matvec(const Matrix& a, std::span<const double> x)
{
    Vector y(a.size());
    matvec_into(a, x, y);
    return y;
}

void matvec_transpose_into(const Matrix& a, std::span<const double> x, std::span<double> y)
{
    require_length(a.size(), x.size(), "matvec_transpose input");
    require_length(a.size(), y.size(), "matvec_transpose output");
    if (a.is_banded()) {
        kernels::band_matvec_transpose(a.band_view(), x, y);
        return;
    }
    std::fill(y.begin(), y.end(), 0.0);
    a.for_each_entry([&](std::size_t i, std::size_t j, double v) { y[j] += v * x[i]; });
}

Vector matvec_transpose(const Matrix& a, std::span<const double> x)
{
    Vector y(a.size());
    matvec_transpose_into(a, x, y);
    return y;
}

Matrix add(double alpha, const Matrix& x, double beta, const Matrix& y)
{
    if (x.size() != y.size()) {
        throw DimensionMismatch("add: operand dimensions differ");
    }
    const bool symmetric = x.symmetric() && y.symmetric();
    if (x.is_banded() && y.is_banded()) {
        Matrix out = Matrix::banded(x.size(), std::max(x.lower_bandwidth(), y.lower_bandwidth()),
                                    std::max(x.upper_bandwidth(), y.upper_bandwidth()), symmetric);
        x.for_each_entry([&](std::size_t i, std::size_t j, double v) { out.band_at(i, j) += alpha * v; });
        y.for_each_entry([&](std::size_t i, std::size_t j, double v) { out.band_at(i, j) += beta * v; });
        return out;
    }
    std::vector<Triplet> entries;
    x.for_each_entry([&](std::size_t i, std::size_t j, double v) { entries.push_back({i, j, alpha * v}); });
    y.for_each_entry([&](std::size_t i, std::size_t j, double v) { entries.push_back({i, j, beta * v}); });
    return Matrix::from_triplets(x.size(), std::move(entries), symmetric);
}

Matrix shifted(const Matrix& a, double shift)
{
    if (a.is_banded()) {
        return add(1.0, a, shift, Matrix::identity(a.size()));
    }
    std::vector<Triplet> diag;
    for (std::size_t i = 0; i < a.size(); ++i) {
        diag.push_back({i, i, 1.0});
    }
    return add(1.0, a, shift, Matrix::from_triplets(a.size(), std::move(diag), true));
}

Matrix scaled(const Matrix& a, double factor)
{
    if (const auto* b = a.band()) {
        Matrix m = Matrix::banded(a.size(), b->lower, b->upper, a.symmetric());
        a.for_each_entry([&](std::size_t i, std::size_t j, double v) { m.band_at(i, j) = factor * v; });
        return m;
    }
    std::vector<Triplet> entries;
    a.for_each_entry([&](std::size_t i, std::size_t j, double v) { entries.push_back({i, j, factor * v}); });
    return Matrix::from_triplets(a.size(), std::move(entries), a.symmetric());
}

Matrix transpose(const Matrix& a)
{
    if (const auto* b = a.band()) {
        Matrix t = Matrix::banded(a.size(), b->upper, b->lower, a.symmetric());
        a.for_each_entry([&](std::size_t i, std::size_t j, double v) { t.band_at(j, i) = v; });
        return t;
    }
    std::vector<Triplet> entries;
    a.for_each_entry([&](std::size_t i, std::size_t j, double v) { entries.push_back({j, i, v}); });
    return Matrix::from_triplets(a.size(), std::move(entries), a.symmetric());
}

namespace {

template <class F>
Matrix map_entries(const Matrix& v, F&& f)
{
    if (const auto* b = v.band()) {
        Matrix m = Matrix::banded(v.size(), b->lower, b->upper, v.symmetric());
        v.for_each_entry([&](std::size_t i, std::size_t j, double x) { m.band_at(i, j) = f(i, j, x); });
        return m;
    }
    std::vector<Triplet> entries;
    v.for_each_entry([&](std::size_t i, std::size_t j, double x) { entries.push_back({i, j, f(i, j, x)}); });
    return Matrix::from_triplets(v.size(), std::move(entries), v.symmetric());
}

} // namespace

Matrix comparison_matrix(const Matrix& v)
{
    return map_entries(v, [](std::size_t i, std::size_t j, double x) {
        return i == j ? std::fabs(x) : -std::fabs(x);
    });
}

Matrix abs_matrix(const Matrix& v)
{
    return map_entries(v, [](std::size_t, std::size_t, double x) { return std::fabs(x); });
}

bool is_symmetric(const Matrix& a, double rel_tol)
{
    const double tol = rel_tol * a.max_abs();
    bool ok = true;
    a.for_each_entry([&](std::size_t i, std::size_t j, double v) {
        if (ok && i != j && std::fabs(v - a(j, i)) > tol) {
            ok = false;
        }
    });
    return ok;
}

Vector abs(std::span<const double> x)
{
    Vector y(x.size());
    kernels::abs(x, y);
    return y;
}

double norm2(std::span<const double> x)
{
    return kernels::norm2(x);
}

double norm_inf(std::span<const double> x)
{
    return kernels::norm_inf(x);
}

double dot(std::span<const double> x, std::span<const double> y)
{
    if (x.size() != y.size()) {
        throw DimensionMismatch("dot: lengths differ");
    }
    return kernels::dot(x, y);
}

} // namespace gave
