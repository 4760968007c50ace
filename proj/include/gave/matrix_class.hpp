#pragma once

#include "gave/matrix.hpp"

namespace gave {

/// Nonpositive off-diagonal entries.
bool is_z_matrix(const Matrix& v);

/// Nonsingular Z-matrix with nonnegative inverse.
///
/// Uses the semipositivity characterization instead of forming V^{-1}:
/// solve V x = 1 and require every x_i > 1e-12. A singular V yields false.
bool is_m_matrix(const Matrix& v);

/// Positive diagonal and <V> an M-matrix.
bool is_h_plus_matrix(const Matrix& v);

} // namespace gave
