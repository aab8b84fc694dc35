#include "liexp/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace liexp {

Matrix identity_matrix(int n) { return scalar_matrix(n, QSqrt2(1)); }

Matrix scalar_matrix(int n, const QSqrt2& s) {
    Matrix m(static_cast<std::size_t>(n), Vector(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = s;
    return m;
}

int rank(Matrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        const QSqrt2 inv = m[r][c].inverse();
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            const QSqrt2 f = m[i][c] * inv;
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

std::optional<Matrix> inverse(const Matrix& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("inverse of a non-square matrix");
    Matrix a = m;
    Matrix inv = identity_matrix(static_cast<int>(n));
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && a[pivot][c].is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[c], a[pivot]);
        std::swap(inv[c], inv[pivot]);
        const QSqrt2 p = a[c][c].inverse();
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] *= p;
            inv[c][j] *= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c].is_zero()) continue;
            const QSqrt2 f = a[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

Matrix multiply(const Matrix& x, const Matrix& y) {
    if (x.empty()) return {};
    if (x[0].size() != y.size()) throw std::invalid_argument("matrix shape mismatch");
    const std::size_t cols = y.empty() ? 0 : y[0].size();
    Matrix out(x.size(), Vector(cols));
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t k = 0; k < y.size(); ++k) {
            if (x[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < cols; ++j) out[i][j] += x[i][k] * y[k][j];
        }
    return out;
}

Inertia inertia(Matrix a) {
    const std::size_t n = a.size();
    Inertia out;
    for (std::size_t k = 0; k < n; ++k) {
        // bring a nonzero diagonal entry to position k, creating one if needed
        std::size_t p = k;
        while (p < n && a[p][p].is_zero()) ++p;
        if (p == n) {
            std::size_t i = n, j = n;
            for (std::size_t r = k; r < n && i == n; ++r)
                for (std::size_t s = r + 1; s < n; ++s)
                    if (!a[r][s].is_zero()) {
                        i = r;
                        j = s;
                        break;
                    }
            if (i == n) {
                out.zero += static_cast<int>(n - k);
                return out;
            }
            // row_i += row_j and col_i += col_j gives a_ii' = a_ii + 2 a_ij + a_jj = 2 a_ij
            for (std::size_t s = 0; s < n; ++s) a[i][s] += a[j][s];
            for (std::size_t s = 0; s < n; ++s) a[s][i] += a[s][j];
            p = i;
        }
        if (p != k) {
            std::swap(a[p], a[k]);
            for (auto& row : a) std::swap(row[p], row[k]);
        }
        const QSqrt2 inv = a[k][k].inverse();
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k].is_zero()) continue;
            const QSqrt2 f = a[i][k] * inv;
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
            for (std::size_t j = k; j < n; ++j) a[j][i] = a[i][j];
        }
        if (a[k][k].sign() > 0) ++out.positive;
        else ++out.negative;
    }
    return out;
}

}  // namespace liexp
