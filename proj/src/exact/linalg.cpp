#include "g2maps/linalg.hpp"

#include <utility>

#include "g2maps/errors.hpp"

namespace g2maps {

std::size_t span_dimension(const std::vector<RationalVector>& vectors) {
    if (vectors.empty()) return 0;
    const std::size_t d = vectors.front().size();
    if (d == 0) throw DimensionMismatch("vectors must have length at least 1");
    for (const auto& v : vectors)
        if (v.size() != d) throw DimensionMismatch("vectors of different lengths");

    RationalMatrix m = vectors;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < d && rank < m.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t i = rank + 1; i < m.size(); ++i) {
            if (m[i][col] == 0) continue;
            const Rational f = m[i][col] / m[rank][col];
            for (std::size_t j = col; j < d; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

Rational determinant(RationalMatrix m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw DimensionMismatch("determinant of a non-square matrix");
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m[i][col] == 0) continue;
            const Rational f = m[i][col] / m[col][col];
            for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
        }
    }
    return det;
}

Rational determinant(const Matrix3& m) {
    return Rational(m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                    m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                    m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]));
}

Matrix3 adjugate(const Matrix3& m) {
    Matrix3 adj;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            // cofactor of entry (j, i)
            const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
            const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            adj[i][j] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
        }
    }
    return adj;
}

std::array<Rational, 3> cross(const std::array<Rational, 3>& a, const std::array<Rational, 3>& b) {
    return {Rational(a[1] * b[2] - a[2] * b[1]), Rational(a[2] * b[0] - a[0] * b[2]),
            Rational(a[0] * b[1] - a[1] * b[0])};
}

Rational dot(const std::array<Rational, 3>& a, const std::array<Rational, 3>& b) {
    return Rational(a[0] * b[0] + a[1] * b[1] + a[2] * b[2]);
}

}  // namespace g2maps
