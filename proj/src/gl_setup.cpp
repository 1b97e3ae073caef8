#include "sheets/gl_setup.hpp"

#include "sheets/linalg.hpp"

#include <stdexcept>

namespace sheets {

BasisLayout::BasisLayout(const Partition& lambda)
    : lambda_(lambda)
{
    std::size_t flat = 0;
    for (std::size_t i = 1; i <= lambda.length(); ++i) {
        offsets_.push_back(flat);
        for (std::size_t j = 1; j <= lambda.part(i); ++j) {
            index_.push_back({i, j, flat++});
        }
    }
}

std::size_t BasisLayout::flat(std::size_t block, std::size_t position) const
{
    if (block < 1 || block > lambda_.length() || position < 1 || position > lambda_.part(block)) {
        throw std::out_of_range("basis index out of range");
    }
    return offsets_[block - 1] + position - 1;
}

BasisIndex BasisLayout::at(std::size_t flat) const
{
    return index_.at(flat);
}

std::vector<std::size_t> BasisLayout::block_indices(std::size_t block) const
{
    std::vector<std::size_t> out;
    for (std::size_t j = 1; j <= lambda_.part(block); ++j) {
        out.push_back(flat(block, j));
    }
    return out;
}

SL2Triple build_triple(const Partition& lambda)
{
    const BasisLayout layout(lambda);
    const std::size_t n = lambda.size();
    SL2Triple t{RatMatrix::zero(n), RatMatrix::zero(n), RatMatrix::zero(n), lambda};
    for (std::size_t i = 1; i <= lambda.length(); ++i) {
        const long li = static_cast<long>(lambda.part(i));
        for (std::size_t j = 1; j <= lambda.part(i); ++j) {
            const long jl = static_cast<long>(j);
            const std::size_t here = layout.flat(i, j);
            t.h(here, here) = li + 1 - 2 * jl;
            if (j >= 2) {
                t.e(layout.flat(i, j - 1), here) = 1;
            }
            if (j < lambda.part(i)) {
                t.f(layout.flat(i, j + 1), here) = jl * (li - jl);
            }
        }
    }
    return t;
}

RatMatrix torus_matrix(const Partition& lambda, const TorusElement& t)
{
    if (t.coords.size() != lambda.largest()) {
        throw DimensionError("torus coordinates: expected " + std::to_string(lambda.largest()) + " values, got " +
                             std::to_string(t.coords.size()));
    }
    const BasisLayout layout(lambda);
    RatMatrix m = RatMatrix::zero(lambda.size());
    for (std::size_t k = 0; k < layout.dimension(); ++k) {
        m(k, k) = t.coords[layout.at(k).position - 1];
    }
    return m;
}

std::vector<long> integer_weights(const RatMatrix& h)
{
    if (!h.is_square() || !h.is_diagonal()) {
        throw std::invalid_argument("grading element must be diagonal");
    }
    std::vector<long> w;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        const Rational& q = h(i, i);
        if (q.get_den() != 1 || !q.get_num().fits_slong_p()) {
            throw std::invalid_argument("grading element must have integer eigenvalues");
        }
        w.push_back(q.get_num().get_si());
    }
    return w;
}

RatMatrix grading_component(const RatMatrix& x, const RatMatrix& h, long w)
{
    const auto weights = integer_weights(h);
    if (x.rows() != weights.size() || x.cols() != weights.size()) {
        throw DimensionError("grading_component: size mismatch");
    }
    RatMatrix out(x.rows(), x.cols());
    for (std::size_t r = 0; r < x.rows(); ++r) {
        for (std::size_t c = 0; c < x.cols(); ++c) {
            if (weights[r] - weights[c] == w) {
                out(r, c) = x(r, c);
            }
        }
    }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> weight_space_positions(const std::vector<long>& weights, long w)
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t r = 0; r < weights.size(); ++r) {
        for (std::size_t c = 0; c < weights.size(); ++c) {
            if (weights[r] - weights[c] == w) {
                out.emplace_back(r, c);
            }
        }
    }
    return out;
}

RatMatrix ad_matrix(const RatMatrix& y)
{
    if (!y.is_square()) {
        throw DimensionError("ad_matrix: matrix not square");
    }
    const std::size_t n = y.rows();
    RatMatrix ad(n * n, n * n);
    // [y, x]_{rc} = sum_k y_{rk} x_{kc} - x_{rk} y_{kc}
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            for (std::size_t k = 0; k < n; ++k) {
                ad(r * n + c, k * n + c) += y(r, k);
                ad(r * n + c, r * n + k) -= y(k, c);
            }
        }
    }
    return ad;
}

Vector flatten(const RatMatrix& x)
{
    return x.entries();
}

RatMatrix unflatten(const Vector& v, std::size_t n)
{
    if (v.size() != n * n) {
        throw DimensionError("unflatten: length is not n^2");
    }
    RatMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            m(r, c) = v[r * n + c];
        }
    }
    return m;
}

std::vector<RatMatrix> centralizer_of_f(const SL2Triple& triple)
{
    std::vector<RatMatrix> basis;
    for (const auto& v : kernel_basis(ad_matrix(triple.f))) {
        basis.push_back(unflatten(v, triple.f.rows()));
    }
    return basis;
}

std::vector<TorusElement> c_basis(const Partition& lambda)
{
    std::vector<TorusElement> out;
    for (std::size_t i = 1; i <= lambda.length(); ++i) {
        const std::size_t gap = lambda.part(i) - lambda.part(i + 1);
        for (std::size_t j = 0; j < gap / 2; ++j) {
            TorusElement t{std::vector<Rational>(lambda.largest(), Rational(0))};
            // 1-based positions lambda_{i+1} + 2j + 1 and + 2.
            const std::size_t k = lambda.part(i + 1) + 2 * j + 1;
            t.coords[k - 1] = 1;
            t.coords[k] = -1;
            out.push_back(std::move(t));
        }
    }
    return out;
}

}  // namespace sheets
