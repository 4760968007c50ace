#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "gave/solvers.hpp"

namespace gave {

/// One published benchmark cell: the experimentally optimal shift, the
/// iteration count at that shift and the final residual.
struct ReferenceRow {
    int table;
    int example;
    double mu;
    Method method;
    std::size_t m;
    double omega_exp;
    int iterations;
    double res;
};

/// Six tables x two methods x five sizes (m = 60, 70, 80, 90, 100).
std::span<const ReferenceRow> reference_rows();

std::optional<ReferenceRow> find_reference(int example, double mu, Method method, std::size_t m);

} // namespace gave
