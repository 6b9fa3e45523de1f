#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "g2maps/rational.hpp"

namespace g2maps {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;
using Matrix3 = std::array<std::array<Rational, 3>, 3>;

/// Rank of the matrix whose rows are `vectors` (exact Gaussian elimination).
/// All vectors must share one length d >= 1 (DimensionMismatch otherwise);
/// the empty list spans the zero space.
std::size_t span_dimension(const std::vector<RationalVector>& vectors);

Rational determinant(RationalMatrix m);
Rational determinant(const Matrix3& m);
Matrix3 adjugate(const Matrix3& m);

/// Determinant of the 2x2 matrix with rows a, b.
inline Rational det2(const Rational& a0, const Rational& a1, const Rational& b0, const Rational& b1) {
    return Rational(a0 * b1 - a1 * b0);
}

std::array<Rational, 3> cross(const std::array<Rational, 3>& a, const std::array<Rational, 3>& b);
Rational dot(const std::array<Rational, 3>& a, const std::array<Rational, 3>& b);

}  // namespace g2maps
