#include "caoli/matrix.hpp"

#include "caoli/errors.hpp"

#include <ostream>
#include <string>

namespace caoli {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
    if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Int>> rows)
    : Matrix(rows.size(), rows.size() ? rows.begin()->size() : 0) {
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != cols_) throw DimensionError("ragged initializer rows");
        std::size_t j = 0;
        for (const auto& v : row) entry(i, j++) = v;
        ++i;
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.entry(i, i) = 1;
    return m;
}

std::ostream& operator<<(std::ostream& out, const Matrix& m) {
    out << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << (i ? " [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << " ";
            out << m.entry(i, j);
        }
        out << "]";
    }
    return out << "]";
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("matrix product: " + std::to_string(a.cols()) +
                             " columns against " + std::to_string(b.rows()) + " rows");
    }
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a.entry(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                c.entry(i, j) += aik * b.entry(k, j);
            }
        }
    }
    return c;
}

Matrix transpose(const Matrix& a) {
    Matrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) t.entry(j, i) = a.entry(i, j);
    }
    return t;
}

bool is_symmetric(const Matrix& a) {
    if (a.rows() != a.cols()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = i + 1; j < a.cols(); ++j) {
            if (a.entry(i, j) != a.entry(j, i)) return false;
        }
    }
    return true;
}

bool is_unit_lower_triangular(const Matrix& a) {
    if (a.rows() != a.cols()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (a.entry(i, i) != 1) return false;
        for (std::size_t j = i + 1; j < a.cols(); ++j) {
            if (a.entry(i, j) != 0) return false;
        }
    }
    return true;
}

bool all_non_negative(const Matrix& a) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a.entry(i, j) < 0) return false;
        }
    }
    return true;
}

Int quadratic_form(const Vec& x, const Matrix& b) {
    if (b.rows() != b.cols()) throw DimensionError("quadratic form needs a square matrix");
    if (x.size() != b.rows()) {
        throw DimensionError("quadratic form: vector length " + std::to_string(x.size()) +
                             " against " + std::to_string(b.rows()) + " rows");
    }
    if (!is_symmetric(b)) throw ParamError("quadratic form: matrix is not symmetric");
    Int y = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        Int row = 0;
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (x[j] == 0) continue;
            row += b.entry(i, j) * x[j];
        }
        y += x[i] * row;
    }
    return y;
}

Vec solve_unit_upper(const Matrix& u, const Vec& z) {
    bool unit_upper = u.rows() == u.cols();
    for (std::size_t i = 0; unit_upper && i < u.rows(); ++i) {
        if (u.entry(i, i) != 1) unit_upper = false;
        for (std::size_t j = 0; unit_upper && j < i; ++j) {
            if (u.entry(i, j) != 0) unit_upper = false;
        }
    }
    if (!unit_upper) {
        throw ParamError("solve_unit_upper: matrix is not unit upper-triangular");
    }
    if (z.size() != u.rows()) {
        throw DimensionError("solve_unit_upper: vector length " + std::to_string(z.size()) +
                             " against " + std::to_string(u.rows()) + " rows");
    }
    Vec x(z.size());
    for (std::size_t j = 0; j < z.size(); ++j) {
        Int acc = z[j];
        for (std::size_t i = 0; i < j; ++i) acc -= x[i] * u.entry(i, j);
        x[j] = std::move(acc);
    }
    return x;
}

Vec exact_div(const Vec& v, const Int& s) {
    if (s == 0) throw ParamError("exact_div: divisor is zero");
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Int q, r;
        boost::multiprecision::divide_qr(v[i], s, q, r);
        if (r != 0) {
            throw InexactDivisionError("inexact division at entry " + std::to_string(i) +
                                       ": input is malformed");
        }
        out[i] = std::move(q);
    }
    return out;
}

}  // namespace caoli
