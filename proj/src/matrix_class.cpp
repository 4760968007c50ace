#include "gave/matrix_class.hpp"

#include "gave/error.hpp"
#include "gave/factorization.hpp"

namespace gave {

bool is_z_matrix(const Matrix& v)
{
    bool z = true;
    v.for_each_entry([&](std::size_t i, std::size_t j, double x) {
        if (i != j && x > 0.0) {
            z = false;
        }
    });
    return z;
}

bool is_m_matrix(const Matrix& v)
{
    if (!is_z_matrix(v)) {
        return false;
    }
    try {
        const auto f = factorize(v, false);
        const Vector x = f.solve(Vector(v.size(), 1.0));
        for (double xi : x) {
            if (!(xi > 1e-12)) {
                return false;
            }
        }
        return true;
    } catch (const SingularMatrix&) {
        return false;
    }
}

bool is_h_plus_matrix(const Matrix& v)
{
    for (double d : v.diagonal_entries()) {
        if (!(d > 0.0)) {
            return false;
        }
    }
    return is_m_matrix(comparison_matrix(v));
}

} // namespace gave
