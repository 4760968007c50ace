#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gave {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A pivot fell below the singularity threshold during factorization.
class SingularMatrix : public Error {
public:
    SingularMatrix(std::size_t column, double pivot, double threshold)
        : Error("singular matrix: pivot " + std::to_string(pivot) + " in column " +
                std::to_string(column) + " below threshold " + std::to_string(threshold)),
          column_(column) {}

    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

class NotSymmetric : public Error {
public:
    using Error::Error;
};

class NotSpd : public Error {
public:
    using Error::Error;
};

class NotHPlus : public Error {
public:
    using Error::Error;
};

/// Relative residuals are undefined for b = 0.
class ZeroRhs : public Error {
public:
    ZeroRhs() : Error("right-hand side has zero norm") {}
};

/// An iterate picked up an inf or NaN component.
class NonFiniteIterate : public Error {
public:
    explicit NonFiniteIterate(int iteration)
        : Error("non-finite iterate at iteration " + std::to_string(iteration)),
          iteration_(iteration) {}

    int iteration() const { return iteration_; }

private:
    int iteration_;
};

class EmptyGrid : public Error {
public:
    EmptyGrid() : Error("sweep grid contains no points") {}
};

class AllDiverged : public Error {
public:
    AllDiverged() : Error("no grid point converged") {}
};

class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace gave
