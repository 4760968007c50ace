#include "gave/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace gave::kernels {

namespace {

// Row i of the band product, entries visited left to right.
inline double band_row(const BandView& a, std::span<const double> x, std::size_t i)
{
    const std::size_t width = a.lower + a.upper + 1;
    const std::size_t first = i >= a.lower ? i - a.lower : 0;
    const std::size_t last = std::min(a.n - 1, i + a.upper);
    const double* row = a.values.data() + i * width;
    double sum = 0.0;
    for (std::size_t j = first; j <= last; ++j) {
        sum += row[j + a.lower - i] * x[j];
    }
    return sum;
}

// Column j of the band, i.e. row j of the transpose, entries top to bottom.
inline double band_column(const BandView& a, std::span<const double> x, std::size_t j)
{
    const std::size_t width = a.lower + a.upper + 1;
    const std::size_t first = j >= a.upper ? j - a.upper : 0;
    const std::size_t last = std::min(a.n - 1, j + a.lower);
    double sum = 0.0;
    for (std::size_t i = first; i <= last; ++i) {
        sum += a.values[i * width + (j + a.lower - i)] * x[i];
    }
    return sum;
}

inline double csr_row(const CsrView& a, std::span<const double> x, std::size_t i)
{
    double sum = 0.0;
    for (std::size_t k = a.row_ptr[i]; k < a.row_ptr[i + 1]; ++k) {
        sum += a.values[k] * x[a.cols[k]];
    }
    return sum;
}

} // namespace

namespace serial {

void band_matvec(const BandView& a, std::span<const double> x, std::span<double> y)
{
    for (std::size_t i = 0; i < a.n; ++i) {
        y[i] = band_row(a, x, i);
    }
}

void band_matvec_transpose(const BandView& a, std::span<const double> x, std::span<double> y)
{
    for (std::size_t j = 0; j < a.n; ++j) {
        y[j] = band_column(a, x, j);
    }
}

void csr_matvec(const CsrView& a, std::span<const double> x, std::span<double> y)
{
    for (std::size_t i = 0; i < a.n; ++i) {
        y[i] = csr_row(a, x, i);
    }
}

void abs(std::span<const double> x, std::span<double> y)
{
    for (std::size_t i = 0; i < x.size(); ++i) {
        y[i] = std::fabs(x[i]);
    }
}

void axpy(double alpha, std::span<const double> x, std::span<double> y)
{
    for (std::size_t i = 0; i < x.size(); ++i) {
        y[i] += alpha * x[i];
    }
}

double dot(std::span<const double> x, std::span<const double> y)
{
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sum += x[i] * y[i];
    }
    return sum;
}

double norm2(std::span<const double> x)
{
    return std::sqrt(dot(x, x));
}

double norm_inf(std::span<const double> x)
{
    double m = 0.0;
    for (double v : x) {
        m = std::max(m, std::fabs(v));
    }
    return m;
}

} // namespace serial

namespace omp {

void band_matvec(const BandView& a, std::span<const double> x, std::span<double> y)
{
    const auto n = static_cast<std::ptrdiff_t>(a.n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        y[i] = band_row(a, x, static_cast<std::size_t>(i));
    }
}

void band_matvec_transpose(const BandView& a, std::span<const double> x, std::span<double> y)
{
    const auto n = static_cast<std::ptrdiff_t>(a.n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t j = 0; j < n; ++j) {
        y[j] = band_column(a, x, static_cast<std::size_t>(j));
    }
}

void csr_matvec(const CsrView& a, std::span<const double> x, std::span<double> y)
{
    const auto n = static_cast<std::ptrdiff_t>(a.n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        y[i] = csr_row(a, x, static_cast<std::size_t>(i));
    }
}

void abs(std::span<const double> x, std::span<double> y)
{
    const auto n = static_cast<std::ptrdiff_t>(x.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        y[i] = std::fabs(x[i]);
    }
}

void axpy(double alpha, std::span<const double> x, std::span<double> y)
{
    const auto n = static_cast<std::ptrdiff_t>(x.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        y[i] += alpha * x[i];
    }
}

} // namespace omp

void band_matvec(const BandView& a, std::span<const double> x, std::span<double> y)
{
    if (a.n >= kParallelThreshold) {
        omp::band_matvec(a, x, y);
    } else {
        serial::band_matvec(a, x, y);
    }
}

void band_matvec_transpose(const BandView& a, std::span<const double> x, std::span<double> y)
{
    if (a.n >= kParallelThreshold) {
        omp::band_matvec_transpose(a, x, y);
    } else {
        serial::band_matvec_transpose(a, x, y);
    }
}

void csr_matvec(const CsrView& a, std::span<const double> x, std::span<double> y)
{
    if (a.n >= kParallelThreshold) {
        omp::csr_matvec(a, x, y);
    } else {
        serial::csr_matvec(a, x, y);
    }
}

void abs(std::span<const double> x, std::span<double> y)
{
    if (x.size() >= kParallelThreshold) {
        omp::abs(x, y);
    } else {
        serial::abs(x, y);
    }
}

void axpy(double alpha, std::span<const double> x, std::span<double> y)
{
    if (x.size() >= kParallelThreshold) {
        omp::axpy(alpha, x, y);
    } else {
        serial::axpy(alpha, x, y);
    }
}

} // namespace gave::kernels
