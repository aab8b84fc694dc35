#pragma once

#include "liexp/number.hpp"

#include <optional>
#include <vector>

namespace liexp {

using Vector = std::vector<QSqrt2>;
using Matrix = std::vector<Vector>;  // row-major, rows of equal length

Matrix identity_matrix(int n);
Matrix scalar_matrix(int n, const QSqrt2& s);
/// Rank by exact Gaussian elimination.
int rank(Matrix m);
/// Exact inverse, or nullopt when singular. Throws for a non-square input.
std::optional<Matrix> inverse(const Matrix& m);
Matrix multiply(const Matrix& x, const Matrix& y);

struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;
    friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Sylvester inertia of a symmetric matrix by exact congruence diagonalization.
Inertia inertia(Matrix symmetric);

}  // namespace liexp
