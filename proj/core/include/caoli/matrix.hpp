#pragma once

#include "caoli/bigint.hpp"

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

namespace caoli {

using Vec = std::vector<Int>;

/// Dense row-major matrix of arbitrary-precision integers. Dimensions are
/// small (tens to low hundreds) while entries can run to thousands of bits,
/// so entry size dominates and no sparse storage is attempted. Values are
/// treated as immutable once built; the free functions below are pure and
/// safe to call concurrently on shared matrices.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<Int>> rows);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& entry(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& entry(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    bool operator==(const Matrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> entries_;
};

std::ostream& operator<<(std::ostream& out, const Matrix& m);

/// Exact integer product. Throws DimensionError unless a.cols() == b.rows().
Matrix operator*(const Matrix& a, const Matrix& b);

Matrix transpose(const Matrix& a);

bool is_symmetric(const Matrix& a);
bool is_unit_lower_triangular(const Matrix& a);
bool all_non_negative(const Matrix& a);

/// x B x^T for a square symmetric B with x.size() == B.rows().
Int quadratic_form(const Vec& x, const Matrix& b);

/// Solves x * u = z for a unit upper-triangular u, by forward substitution.
/// The solution is integral because u is unimodular; no inverse is formed
/// and no division happens.
Vec solve_unit_upper(const Matrix& u, const Vec& z);

/// Entrywise v / s with every division checked for exactness; a remainder
/// raises InexactDivisionError rather than truncating.
Vec exact_div(const Vec& v, const Int& s);

}  // namespace caoli
