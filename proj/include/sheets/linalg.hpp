#ifndef SHEETS_LINALG_HPP
#define SHEETS_LINALG_HPP

#include "sheets/matrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace sheets {

// Coefficients in ascending degree: coeffs[k] multiplies x^k.
struct Polynomial {
    std::vector<Rational> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    Rational operator()(const Rational& x) const;
    friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

struct Eigenvalue {
    Rational value;
    std::size_t multiplicity = 0;
    friend bool operator==(const Eigenvalue&, const Eigenvalue&) = default;
};

// Eigenvalues in ascending order.
using Spectrum = std::vector<Eigenvalue>;

// [x, y] = xy - yx. Throws DimensionError unless both are square of one size.
RatMatrix bracket(const RatMatrix& x, const RatMatrix& y);

// Rank over Q by fraction-free (Bareiss) elimination on the row-scaled
// integer matrix.
std::size_t rank(const RatMatrix& x);

// Basis of the right null space, one vector per free column of the reduced
// row echelon form. Empty when x is injective.
std::vector<Vector> kernel_basis(const RatMatrix& x);

// Some x with a x = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve_linear(const RatMatrix& a, const Vector& b);

// Throws std::domain_error when x is singular.
RatMatrix inverse(const RatMatrix& x);

RatMatrix matrix_power(const RatMatrix& x, std::size_t k);

bool is_nilpotent(const RatMatrix& x);

// Monic characteristic polynomial det(t I - x) (Faddeev-LeVerrier).
Polynomial char_poly(const RatMatrix& x);

// Full factorization of char_poly(x) into rational linear factors, or
// nullopt when it does not split over Q. Not an error: callers probe.
std::optional<Spectrum> rational_spectrum(const RatMatrix& x);

// Rational roots of p with multiplicity, ascending. p must be nonzero.
Spectrum rational_roots(const Polynomial& p);

// exp(n) x exp(-n) via the finite exponential series.
// Throws std::domain_error if n is not nilpotent.
RatMatrix conjugate_by_exp(const RatMatrix& n, const RatMatrix& x);

// rank((x - c I)^k) for k = 1..rows(x).
std::vector<std::size_t> rank_sequence(const RatMatrix& x, const Rational& c);

// Sizes of the Jordan blocks of x for eigenvalue c, weakly decreasing.
std::vector<std::size_t> jordan_block_sizes(const RatMatrix& x, const Rational& c);

}  // namespace sheets

#endif
