#include "gave/reference_tables.hpp"

#include <array>

namespace gave {

namespace {

// clang-format off
constexpr std::array<ReferenceRow, 60> kRows{{
    // table, example, mu, method, m, omega_exp, IT, RES
    {1, 1, -4.0, Method::mn, 60, 4.3, 42, 9.99e-08},
    {1, 1, -4.0, Method::mn, 70, 4.3, 42, 8.23e-08},
    {1, 1, -4.0, Method::mn, 80, 4.2, 42, 7.77e-08},
    {1, 1, -4.0, Method::mn, 90, 4.2, 41, 9.78e-08},
    {1, 1, -4.0, Method::mn, 100, 4.2, 41, 9.40e-08},
    {1, 1, -4.0, Method::nmn, 60, 5.9, 23, 7.15e-08},
    {1, 1, -4.0, Method::nmn, 70, 5.8, 22, 9.46e-08},
    {1, 1, -4.0, Method::nmn, 80, 5.8, 22, 8.86e-08},
    {1, 1, -4.0, Method::nmn, 90, 5.9, 22, 9.59e-08},
    {1, 1, -4.0, Method::nmn, 100, 5.8, 22, 9.10e-08},
    {2, 1, -1.0, Method::mn, 60, 1.2, 45, 8.80e-08},
    {2, 1, -1.0, Method::mn, 70, 1.2, 45, 7.76e-08},
    {2, 1, -1.0, Method::mn, 80, 1.2, 44, 9.50e-08},
    {2, 1, -1.0, Method::mn, 90, 1.2, 44, 8.97e-08},
    {2, 1, -1.0, Method::mn, 100, 1.2, 44, 8.53e-08},
    {2, 1, -1.0, Method::nmn, 60, 5.8, 33, 9.95e-08},
    {2, 1, -1.0, Method::nmn, 70, 5.6, 33, 8.22e-08},
    {2, 1, -1.0, Method::nmn, 80, 5.8, 33, 8.74e-08},
    {2, 1, -1.0, Method::nmn, 90, 5.7, 33, 7.43e-08},
    {2, 1, -1.0, Method::nmn, 100, 5.5, 33, 7.62e-08},
    {3, 1, 4.0, Method::mn, 60, 5.1, 12, 4.92e-08},
    {3, 1, 4.0, Method::mn, 70, 5.1, 12, 4.98e-08},
    {3, 1, 4.0, Method::mn, 80, 5.1, 12, 5.03e-08},
    {3, 1, 4.0, Method::mn, 90, 5.1, 12, 5.07e-08},
    {3, 1, 4.0, Method::mn, 100, 5.1, 12, 5.11e-08},
    {3, 1, 4.0, Method::nmn, 60, 19, 17, 8.93e-08},
    {3, 1, 4.0, Method::nmn, 70, 18.9, 17, 9.82e-08},
    {3, 1, 4.0, Method::nmn, 80, 18.9, 17, 9.30e-08},
    {3, 1, 4.0, Method::nmn, 90, 18.9, 17, 8.87e-08},
    {3, 1, 4.0, Method::nmn, 100, 18.8, 17, 9.95e-08},
    {4, 2, -4.0, Method::mn, 60, 4.1, 43, 8.90e-08},
    {4, 2, -4.0, Method::mn, 70, 4.1, 43, 8.24e-08},
    {4, 2, -4.0, Method::mn, 80, 4.2, 44, 8.88e-08},
    {4, 2, -4.0, Method::mn, 90, 4.2, 43, 8.36e-08},
    {4, 2, -4.0, Method::mn, 100, 4.3, 43, 9.12e-08},
    {4, 2, -4.0, Method::nmn, 60, 5.7, 23, 8.45e-08},
    {4, 2, -4.0, Method::nmn, 70, 5.8, 23, 8.74e-08},
    {4, 2, -4.0, Method::nmn, 80, 5.9, 23, 9.35e-08},
    {4, 2, -4.0, Method::nmn, 90, 5.8, 23, 7.70e-08},
    {4, 2, -4.0, Method::nmn, 100, 5.7, 23, 6.92e-08},
    {5, 2, -2.0, Method::mn, 60, 2.1, 46, 8.86e-08},
    {5, 2, -2.0, Method::mn, 70, 2.1, 46, 8.11e-08},
    {5, 2, -2.0, Method::mn, 80, 2.2, 46, 8.80e-08},
    {5, 2, -2.0, Method::mn, 90, 2.3, 46, 9.60e-08},
    {5, 2, -2.0, Method::mn, 100, 2.2, 46, 7.77e-08},
    {5, 2, -2.0, Method::nmn, 60, 3.7, 25, 6.92e-08},
    {5, 2, -2.0, Method::nmn, 70, 3.7, 25, 6.32e-08},
    {5, 2, -2.0, Method::nmn, 80, 3.7, 24, 9.53e-08},
    {5, 2, -2.0, Method::nmn, 90, 3.7, 24, 8.91e-08},
    {5, 2, -2.0, Method::nmn, 100, 3.7, 23, 8.40e-08},
    {6, 2, 4.0, Method::mn, 60, 4.9, 12, 7.33e-08},
    {6, 2, 4.0, Method::mn, 70, 4.8, 12, 9.50e-08},
    {6, 2, 4.0, Method::mn, 80, 4.8, 12, 8.94e-08},
    {6, 2, 4.0, Method::mn, 90, 4.8, 12, 8.47e-08},
    {6, 2, 4.0, Method::mn, 100, 4.8, 12, 8.06e-08},
    {6, 2, 4.0, Method::nmn, 60, 19.5, 17, 9.21e-08},
    {6, 2, 4.0, Method::nmn, 70, 19.4, 17, 9.61e-08},
    {6, 2, 4.0, Method::nmn, 80, 19.4, 17, 9.28e-08},
    {6, 2, 4.0, Method::nmn, 90, 19.4, 17, 9.00e-08},
    {6, 2, 4.0, Method::nmn, 100, 19.3, 17, 9.55e-08},
}};
// clang-format on

} // namespace

std::span<const ReferenceRow> reference_rows()
{
    return kRows;
}

std::optional<ReferenceRow> find_reference(int example, double mu, Method method, std::size_t m)
{
    for (const auto& row : kRows) {
        if (row.example == example && row.mu == mu && row.method == method && row.m == m) {
            return row;
        }
    }
    return std::nullopt;
}

} // namespace gave
