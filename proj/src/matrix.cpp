#include "sheets/matrix.hpp"

#include <algorithm>
#include <ostream>
#include <string>

namespace sheets {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols)
{
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size())
{
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw DimensionError("ragged matrix literal");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

RatMatrix RatMatrix::identity(std::size_t n)
{
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

RatMatrix RatMatrix::diagonal(const Vector& entries)
{
    RatMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        m(i, i) = entries[i];
    }
    return m;
}

RatMatrix RatMatrix::unit(std::size_t n, std::size_t r, std::size_t c)
{
    RatMatrix m(n, n);
    m(r, c) = 1;
    return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<Vector>& columns, std::size_t rows)
{
    RatMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) {
            throw DimensionError("column length mismatch");
        }
        for (std::size_t r = 0; r < rows; ++r) {
            m(r, c) = columns[c][r];
        }
    }
    return m;
}

Vector RatMatrix::column(std::size_t c) const
{
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        v[r] = (*this)(r, c);
    }
    return v;
}

RatMatrix RatMatrix::transpose() const
{
    RatMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

Rational RatMatrix::trace() const
{
    Rational s = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) {
        s += (*this)(i, i);
    }
    return s;
}

bool RatMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

bool RatMatrix::is_diagonal() const
{
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (r != c && sgn((*this)(r, c)) != 0) {
                return false;
            }
        }
    }
    return true;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& other)
{
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw DimensionError("matrix sum: shape mismatch");
    }
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] += other.data_[i];
    }
    return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& other)
{
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw DimensionError("matrix difference: shape mismatch");
    }
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] -= other.data_[i];
    }
    return *this;
}

RatMatrix& RatMatrix::operator*=(const Rational& s)
{
    for (auto& q : data_) {
        q *= s;
    }
    return *this;
}

RatMatrix operator+(RatMatrix a, const RatMatrix& b)
{
    a += b;
    return a;
}

RatMatrix operator-(RatMatrix a, const RatMatrix& b)
{
    a -= b;
    return a;
}

RatMatrix operator-(RatMatrix a)
{
    a *= Rational(-1);
    return a;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b)
{
    if (a.cols() != b.rows()) {
        throw DimensionError("matrix product: inner dimensions differ");
    }
    RatMatrix p(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (sgn(aik) == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (sgn(b(k, j)) != 0) {
                    p(i, j) += aik * b(k, j);
                }
            }
        }
    }
    return p;
}

RatMatrix operator*(const Rational& s, RatMatrix a)
{
    a *= s;
    return a;
}

Vector operator*(const RatMatrix& a, const Vector& v)
{
    if (a.cols() != v.size()) {
        throw DimensionError("matrix-vector product: size mismatch");
    }
    Vector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (sgn(a(i, k)) != 0 && sgn(v[k]) != 0) {
                out[i] += a(i, k) * v[k];
            }
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const RatMatrix& m)
{
    std::vector<std::string> cells;
    cells.reserve(m.entries().size());
    std::size_t width = 1;
    for (const auto& q : m.entries()) {
        cells.push_back(to_display_string(q));
        width = std::max(width, cells.back().size());
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << "[";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const auto& cell = cells[r * m.cols() + c];
            os << (c == 0 ? "" : " ") << std::string(width - cell.size(), ' ') << cell;
        }
        os << "]\n";
    }
    return os;
}

}  // namespace sheets
