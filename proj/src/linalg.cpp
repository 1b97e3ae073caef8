#include "sheets/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace sheets {

Rational Polynomial::operator()(const Rational& x) const
{
    Rational acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

RatMatrix bracket(const RatMatrix& x, const RatMatrix& y)
{
    if (!x.is_square() || !y.is_square() || x.rows() != y.rows()) {
        throw DimensionError("bracket: operands must be square of equal size");
    }
    return x * y - y * x;
}

std::size_t rank(const RatMatrix& x)
{
    const std::size_t rows = x.rows();
    const std::size_t cols = x.cols();
    std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        Integer scale = 1;
        for (std::size_t c = 0; c < cols; ++c) {
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x(r, c).get_den_mpz_t());
        }
        for (std::size_t c = 0; c < cols; ++c) {
            m[r][c] = x(r, c).get_num() * (scale / x(r, c).get_den());
        }
    }

    Integer prev = 1;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t p = pivot_row;
        while (p < rows && m[p][col] == 0) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        std::swap(m[p], m[pivot_row]);
        const Integer& pivot = m[pivot_row][col];
        for (std::size_t i = pivot_row + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                Integer v = pivot * m[i][j] - m[i][col] * m[pivot_row][j];
                mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][col] = 0;
        }
        prev = pivot;
        ++pivot_row;
    }
    return pivot_row;
}

namespace {

// Reduced row echelon form in place; returns the pivot column of each
// nonzero row.
std::vector<std::size_t> reduce(RatMatrix& m, std::size_t active_cols)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < active_cols && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && sgn(m(p, col)) == 0) {
            ++p;
        }
        if (p == m.rows()) {
            continue;
        }
        if (p != row) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                std::swap(m(p, j), m(row, j));
            }
        }
        const Rational inv = 1 / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) {
            m(row, j) *= inv;
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || sgn(m(i, col)) == 0) {
                continue;
            }
            const Rational factor = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) {
                if (sgn(m(row, j)) != 0) {
                    m(i, j) -= factor * m(row, j);
                }
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::vector<Vector> kernel_basis(const RatMatrix& x)
{
    RatMatrix m = x;
    const auto pivots = reduce(m, m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) {
        is_pivot[c] = true;
    }
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) {
            continue;
        }
        Vector v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            v[pivots[r]] = -m(r, free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vector> solve_linear(const RatMatrix& a, const Vector& b)
{
    if (b.size() != a.rows()) {
        throw DimensionError("solve_linear: right-hand side length mismatch");
    }
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            aug(r, c) = a(r, c);
        }
        aug(r, a.cols()) = b[r];
    }
    const auto pivots = reduce(aug, a.cols());
    for (std::size_t r = pivots.size(); r < aug.rows(); ++r) {
        if (sgn(aug(r, a.cols())) != 0) {
            return std::nullopt;
        }
    }
    Vector x(a.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        x[pivots[r]] = aug(r, a.cols());
    }
    return x;
}

RatMatrix inverse(const RatMatrix& x)
{
    if (!x.is_square()) {
        throw DimensionError("inverse: matrix not square");
    }
    const std::size_t n = x.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            aug(r, c) = x(r, c);
        }
        aug(r, n + r) = 1;
    }
    if (reduce(aug, n).size() != n) {
        throw std::domain_error("inverse: matrix is singular");
    }
    RatMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            inv(r, c) = aug(r, n + c);
        }
    }
    return inv;
}

RatMatrix matrix_power(const RatMatrix& x, std::size_t k)
{
    if (!x.is_square()) {
        throw DimensionError("matrix_power: matrix not square");
    }
    RatMatrix result = RatMatrix::identity(x.rows());
    for (std::size_t i = 0; i < k; ++i) {
        result = result * x;
    }
    return result;
}

bool is_nilpotent(const RatMatrix& x)
{
    return matrix_power(x, x.rows()).is_zero();
}

Polynomial char_poly(const RatMatrix& x)
{
    if (!x.is_square()) {
        throw DimensionError("char_poly: matrix not square");
    }
    const std::size_t n = x.rows();
    Polynomial p;
    p.coeffs.assign(n + 1, Rational(0));
    p.coeffs[n] = 1;
    // M_k = x M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(x M_k) / k.
    RatMatrix m = RatMatrix::zero(n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = x * m;
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) += p.coeffs[n - k + 1];
        }
        p.coeffs[n - k] = -(x * m).trace() / Rational(static_cast<long>(k));
    }
    return p;
}

namespace {

void trim(Polynomial& p)
{
    while (p.coeffs.size() > 1 && sgn(p.coeffs.back()) == 0) {
        p.coeffs.pop_back();
    }
}

bool is_zero_poly(const Polynomial& p)
{
    return std::all_of(p.coeffs.begin(), p.coeffs.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Polynomial derivative(const Polynomial& p)
{
    Polynomial d;
    for (std::size_t k = 1; k < p.coeffs.size(); ++k) {
        d.coeffs.push_back(p.coeffs[k] * Rational(static_cast<long>(k)));
    }
    if (d.coeffs.empty()) {
        d.coeffs.push_back(0);
    }
    return d;
}

// Quotient and remainder of a by nonzero b.
std::pair<Polynomial, Polynomial> divide(Polynomial a, Polynomial b)
{
    trim(a);
    trim(b);
    if (a.degree() < b.degree()) {
        return {Polynomial{{Rational(0)}}, a};
    }
    Polynomial q;
    q.coeffs.assign(static_cast<std::size_t>(a.degree() - b.degree() + 1), Rational(0));
    const Rational lead = b.coeffs.back();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        const Rational coef = a.coeffs[static_cast<std::size_t>(k + b.degree())] / lead;
        q.coeffs[static_cast<std::size_t>(k)] = coef;
        if (sgn(coef) == 0) {
            continue;
        }
        for (int j = 0; j <= b.degree(); ++j) {
            a.coeffs[static_cast<std::size_t>(k + j)] -= coef * b.coeffs[static_cast<std::size_t>(j)];
        }
    }
    a.coeffs.resize(std::max<std::size_t>(1, static_cast<std::size_t>(std::max(b.degree(), 1))));
    trim(a);
    return {q, a};
}

Polynomial make_monic(Polynomial p)
{
    trim(p);
    const Rational lead = p.coeffs.back();
    for (auto& c : p.coeffs) {
        c /= lead;
    }
    return p;
}

Polynomial gcd(Polynomial a, Polynomial b)
{
    trim(a);
    trim(b);
    while (!is_zero_poly(b)) {
        auto r = divide(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

int sign_at(const Polynomial& p, const Rational& x)
{
    return sgn(p(x));
}

std::vector<Polynomial> sturm_chain(const Polynomial& p)
{
    std::vector<Polynomial> chain{p, derivative(p)};
    while (!is_zero_poly(chain.back()) && chain.back().degree() > 0) {
        auto r = divide(chain[chain.size() - 2], chain.back()).second;
        if (is_zero_poly(r)) {
            break;
        }
        for (auto& c : r.coeffs) {
            c = -c;
        }
        chain.push_back(std::move(r));
    }
    return chain;
}

int sign_variations(const std::vector<Polynomial>& chain, const Rational& x)
{
    int variations = 0;
    int last = 0;
    for (const auto& p : chain) {
        const int s = sign_at(p, x);
        if (s == 0) {
            continue;
        }
        if (last != 0 && s != last) {
            ++variations;
        }
        last = s;
    }
    return variations;
}

// Integer roots of a monic square-free integer polynomial, found by Sturm
// bisection on half-integer endpoints (never roots).
void integer_roots_in(const Polynomial& p, const std::vector<Polynomial>& chain, const Integer& lo,
                      const Integer& hi, std::vector<Integer>& out)
{
    const Rational half(1, 2);
    const int count = sign_variations(chain, Rational(lo) + half) - sign_variations(chain, Rational(hi) + half);
    if (count == 0) {
        return;
    }
    if (hi - lo <= 8) {
        for (Integer k = lo + 1; k <= hi; ++k) {
            if (sgn(p(Rational(k))) == 0) {
                out.push_back(k);
            }
        }
        return;
    }
    Integer mid = lo + (hi - lo) / 2;
    integer_roots_in(p, chain, lo, mid, out);
    integer_roots_in(p, chain, mid, hi, out);
}

}  // namespace

Spectrum rational_roots(const Polynomial& input)
{
    Polynomial p = input;
    trim(p);
    if (is_zero_poly(p)) {
        throw std::invalid_argument("rational_roots: zero polynomial");
    }
    if (p.degree() == 0) {
        return {};
    }
    // Square-free part carries every root once.
    Polynomial sqf = make_monic(divide(p, gcd(p, derivative(p))).first);

    // Clear denominators: integer coefficients a_0..a_d.
    Integer scale = 1;
    for (const auto& c : sqf.coeffs) {
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
    }
    std::vector<Integer> a;
    for (const auto& c : sqf.coeffs) {
        a.push_back(c.get_num() * (scale / c.get_den()));
    }
    std::vector<Rational> roots;
    std::size_t shift = 0;
    while (shift < a.size() && a[shift] == 0) {
        ++shift;
    }
    if (shift > 0) {
        roots.push_back(0);
        a.erase(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(shift));
    }
    const std::size_t d = a.size() - 1;
    if (d > 0) {
        // y = lead * x turns the polynomial monic with integer coefficients,
        // so its rational roots are integers.
        const Integer lead = a[d];
        Polynomial monic;
        monic.coeffs.resize(d + 1);
        // Coefficient of y^k is a_k * lead^(d-1-k) for k < d.
        Integer power = 1;
        monic.coeffs[d] = 1;
        for (std::size_t k = d; k-- > 0;) {
            monic.coeffs[k] = Rational(a[k] * power);
            power *= lead;
        }
        Integer bound = 1;
        for (std::size_t k = 0; k < d; ++k) {
            Integer mag = abs(monic.coeffs[k].get_num());
            if (mag > bound) {
                bound = mag;
            }
        }
        bound += 1;
        const auto chain = sturm_chain(monic);
        std::vector<Integer> ints;
        integer_roots_in(monic, chain, -bound - 1, bound, ints);
        for (const auto& y : ints) {
            Rational r(y, lead);
            r.canonicalize();
            roots.push_back(r);
        }
    }
    std::sort(roots.begin(), roots.end());

    Spectrum spectrum;
    for (const auto& r : roots) {
        Polynomial rest = p;
        std::size_t mult = 0;
        const Polynomial linear{{-r, Rational(1)}};
        while (rest.degree() > 0) {
            auto [q, rem] = divide(rest, linear);
            if (!is_zero_poly(rem)) {
                break;
            }
            rest = std::move(q);
            ++mult;
        }
        spectrum.push_back({r, mult});
    }
    return spectrum;
}

std::optional<Spectrum> rational_spectrum(const RatMatrix& x)
{
    const Polynomial p = char_poly(x);
    Spectrum spectrum = rational_roots(p);
    std::size_t total = 0;
    for (const auto& ev : spectrum) {
        total += ev.multiplicity;
    }
    if (total != x.rows()) {
        return std::nullopt;
    }
    return spectrum;
}

RatMatrix conjugate_by_exp(const RatMatrix& n, const RatMatrix& x)
{
    if (!n.is_square() || n.rows() != x.rows() || !x.is_square()) {
        throw DimensionError("conjugate_by_exp: size mismatch");
    }
    if (!is_nilpotent(n)) {
        throw std::domain_error("conjugate_by_exp: generator is not nilpotent");
    }
    const std::size_t size = n.rows();
    RatMatrix exp_pos = RatMatrix::identity(size);
    RatMatrix exp_neg = RatMatrix::identity(size);
    RatMatrix term = RatMatrix::identity(size);
    Rational factorial = 1;
    for (std::size_t k = 1; k < size; ++k) {
        term = term * n;
        if (term.is_zero()) {
            break;
        }
        factorial *= Rational(static_cast<long>(k));
        RatMatrix scaled = (1 / factorial) * term;
        exp_pos += scaled;
        if (k % 2 == 1) {
            exp_neg -= scaled;
        } else {
            exp_neg += scaled;
        }
    }
    return exp_pos * x * exp_neg;
}

std::vector<std::size_t> rank_sequence(const RatMatrix& x, const Rational& c)
{
    if (!x.is_square()) {
        throw DimensionError("rank_sequence: matrix not square");
    }
    RatMatrix shifted = x;
    for (std::size_t i = 0; i < x.rows(); ++i) {
        shifted(i, i) -= c;
    }
    std::vector<std::size_t> ranks;
    RatMatrix power = RatMatrix::identity(x.rows());
    for (std::size_t k = 1; k <= x.rows(); ++k) {
        power = power * shifted;
        ranks.push_back(rank(power));
        if (ranks.size() >= 2 && ranks[ranks.size() - 1] == ranks[ranks.size() - 2]) {
            // Stabilized; every higher power has the same rank.
            ranks.resize(x.rows(), ranks.back());
            break;
        }
    }
    return ranks;
}

std::vector<std::size_t> jordan_block_sizes(const RatMatrix& x, const Rational& c)
{
    const auto ranks = rank_sequence(x, c);
    std::vector<std::size_t> r{x.rows()};
    r.insert(r.end(), ranks.begin(), ranks.end());
    r.push_back(ranks.empty() ? 0 : ranks.back());
    std::vector<std::size_t> sizes;
    for (std::size_t k = x.rows(); k >= 1; --k) {
        // Blocks of size >= k: r_{k-1} - r_k.
        const std::size_t at_least_k = r[k - 1] - r[k];
        const std::size_t at_least_k1 = r[k] - r[k + 1];
        for (std::size_t i = 0; i < at_least_k - at_least_k1; ++i) {
            sizes.push_back(k);
        }
    }
    return sizes;
}

}  // namespace sheets
