#ifndef SHEETS_MATRIX_HPP
#define SHEETS_MATRIX_HPP

#include "sheets/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <vector>

namespace sheets {

using Vector = std::vector<Rational>;

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Dense row-major matrix of exact rationals.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);
    RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RatMatrix zero(std::size_t n) { return RatMatrix(n, n); }
    static RatMatrix identity(std::size_t n);
    static RatMatrix diagonal(const Vector& entries);
    // One-hot matrix unit E_{r,c}.
    static RatMatrix unit(std::size_t n, std::size_t r, std::size_t c);
    static RatMatrix from_columns(const std::vector<Vector>& columns, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<Rational>& entries() const { return data_; }

    Vector column(std::size_t c) const;
    RatMatrix transpose() const;
    Rational trace() const;
    bool is_zero() const;
    bool is_diagonal() const;

    RatMatrix& operator+=(const RatMatrix& other);
    RatMatrix& operator-=(const RatMatrix& other);
    RatMatrix& operator*=(const Rational& s);

    friend bool operator==(const RatMatrix& a, const RatMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

RatMatrix operator+(RatMatrix a, const RatMatrix& b);
RatMatrix operator-(RatMatrix a, const RatMatrix& b);
RatMatrix operator-(RatMatrix a);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(const Rational& s, RatMatrix a);
Vector operator*(const RatMatrix& a, const Vector& v);

std::ostream& operator<<(std::ostream& os, const RatMatrix& m);

}  // namespace sheets

#endif
