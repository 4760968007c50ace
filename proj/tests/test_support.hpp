#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "gave/matrix.hpp"

namespace gave::oracle {

inline Eigen::MatrixXd to_eigen(const Matrix& a)
{
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(a.size()),
                                              static_cast<Eigen::Index>(a.size()));
    a.for_each_entry([&](std::size_t i, std::size_t j, double v) {
        d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) += v;
    });
    return d;
}

inline Matrix from_eigen(const Eigen::MatrixXd& d, bool symmetric = false)
{
    const auto n = static_cast<std::size_t>(d.rows());
    std::vector<double> rows(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            rows[i * n + j] = d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        }
    }
    return Matrix::from_dense(n, rows, symmetric);
}

inline Eigen::VectorXd to_eigen(const Vector& v)
{
    return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

inline Vector to_vector(const Eigen::VectorXd& v)
{
    return Vector(v.data(), v.data() + v.size());
}

/// Tridiag(sub, diag, super) of order n.
inline Matrix tridiag(std::size_t n, double sub, double diag, double super)
{
    Matrix m = Matrix::banded(n, 1, 1, sub == super);
    for (std::size_t i = 0; i < n; ++i) {
        m.band_at(i, i) = diag;
        if (i > 0) {
            m.band_at(i, i - 1) = sub;
        }
        if (i + 1 < n) {
            m.band_at(i, i + 1) = super;
        }
    }
    return m;
}

inline Eigen::MatrixXd random_dense(std::size_t n, std::mt19937& rng, double lo = -1.0, double hi = 1.0)
{
    std::uniform_real_distribution<double> dist(lo, hi);
    Eigen::MatrixXd d(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < d.rows(); ++i) {
        for (Eigen::Index j = 0; j < d.cols(); ++j) {
            d(i, j) = dist(rng);
        }
    }
    return d;
}

inline Vector random_vector(std::size_t n, std::mt19937& rng, double lo = -1.0, double hi = 1.0)
{
    std::uniform_real_distribution<double> dist(lo, hi);
    Vector v(n);
    for (auto& x : v) {
        x = dist(rng);
    }
    return v;
}

inline double sigma_max(const Eigen::MatrixXd& d)
{
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(d);
    return svd.singularValues()(0);
}

inline double sigma_min(const Eigen::MatrixXd& d)
{
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(d);
    return svd.singularValues()(svd.singularValues().size() - 1);
}

inline double rel_err(double got, double want)
{
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

} // namespace gave::oracle
