#pragma once

// Data-parallel inner loops shared by the solvers and estimators.
//
// Every kernel has a serial reference in gave::kernels::serial and an
// OpenMP version in gave::kernels::omp. Row-wise kernels compute each
// output entry with the same operation order in both versions, so their
// results are bitwise identical. Reductions (dot, norms) exist only in
// serial form: a fixed summation order keeps solves reproducible no matter
// how many threads run.

#include <cstddef>
#include <span>

namespace gave::kernels {

/// Band layout shared by the matvec kernels: row i stores columns
/// i-lower .. i+upper contiguously at values[i * (lower + upper + 1)].
struct BandView {
    std::size_t n = 0;
    std::size_t lower = 0;
    std::size_t upper = 0;
    std::span<const double> values;
};

struct CsrView {
    std::size_t n = 0;
    std::span<const std::size_t> row_ptr;
    std::span<const std::size_t> cols;
    std::span<const double> values;
};

/// Below this length the dispatching kernels stay serial.
inline constexpr std::size_t kParallelThreshold = 4096;

namespace serial {

void band_matvec(const BandView& a, std::span<const double> x, std::span<double> y);
void band_matvec_transpose(const BandView& a, std::span<const double> x, std::span<double> y);
void csr_matvec(const CsrView& a, std::span<const double> x, std::span<double> y);
void abs(std::span<const double> x, std::span<double> y);
/// y = alpha * x + y
void axpy(double alpha, std::span<const double> x, std::span<double> y);
double dot(std::span<const double> x, std::span<const double> y);
double norm2(std::span<const double> x);
double norm_inf(std::span<const double> x);

} // namespace serial

namespace omp {

void band_matvec(const BandView& a, std::span<const double> x, std::span<double> y);
void band_matvec_transpose(const BandView& a, std::span<const double> x, std::span<double> y);
void csr_matvec(const CsrView& a, std::span<const double> x, std::span<double> y);
void abs(std::span<const double> x, std::span<double> y);
void axpy(double alpha, std::span<const double> x, std::span<double> y);

} // namespace omp

// Dispatchers: OpenMP above kParallelThreshold, serial otherwise.
void band_matvec(const BandView& a, std::span<const double> x, std::span<double> y);
void band_matvec_transpose(const BandView& a, std::span<const double> x, std::span<double> y);
void csr_matvec(const CsrView& a, std::span<const double> x, std::span<double> y);
void abs(std::span<const double> x, std::span<double> y);
void axpy(double alpha, std::span<const double> x, std::span<double> y);
using serial::dot;
using serial::norm2;
using serial::norm_inf;

} // namespace gave::kernels
