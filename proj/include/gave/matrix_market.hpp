#pragma once

#include <filesystem>
#include <iosfwd>

#include "gave/matrix.hpp"

namespace gave::mm {

/// Reads a real (or integer) coordinate Matrix Market file, general or
/// symmetric. The result uses compressed-row storage; the symmetric flag is
/// set for symmetric headers and for general files that pass a 1e-12
/// relative symmetry check.
Matrix read_matrix(std::istream& in);
Matrix read_matrix(const std::filesystem::path& path);

/// Writes coordinate real format, "symmetric" (lower triangle) when the
/// matrix carries the symmetric flag, otherwise "general". Values use
/// 17 significant digits, so a read-back reproduces the matrix exactly.
void write_matrix(std::ostream& out, const Matrix& a);
void write_matrix(const std::filesystem::path& path, const Matrix& a);

/// Plain-text vectors: one value per line; blank lines and lines starting
/// with '%' or '#' are skipped.
Vector read_vector(std::istream& in);
Vector read_vector(const std::filesystem::path& path);
void write_vector(std::ostream& out, std::span<const double> v);
void write_vector(const std::filesystem::path& path, std::span<const double> v);

} // namespace gave::mm
