#ifndef SHEETS_GL_SETUP_HPP
#define SHEETS_GL_SETUP_HPP

#include "sheets/matrix.hpp"
#include "sheets/partition.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace sheets {

// Position of a Jordan basis vector v_j^{(i)}; block and position are
// 1-based, flat is the block-major index into [0, N).
struct BasisIndex {
    std::size_t block = 0;
    std::size_t position = 0;
    std::size_t flat = 0;
};

// Block-major enumeration v_1^{(1)}, ..., v_{lambda_1}^{(1)}, v_1^{(2)}, ...
class BasisLayout {
public:
    explicit BasisLayout(const Partition& lambda);

    std::size_t flat(std::size_t block, std::size_t position) const;
    BasisIndex at(std::size_t flat) const;
    std::size_t dimension() const { return index_.size(); }
    // Flat indices belonging to one block, in position order.
    std::vector<std::size_t> block_indices(std::size_t block) const;

private:
    Partition lambda_;
    std::vector<std::size_t> offsets_;
    std::vector<BasisIndex> index_;
};

struct SL2Triple {
    RatMatrix e;
    RatMatrix h;
    RatMatrix f;
    Partition lambda;
};

// Coordinates (x_1, ..., x_{lambda_1}) of a point of the torus t.
struct TorusElement {
    std::vector<Rational> coords;
    friend bool operator==(const TorusElement&, const TorusElement&) = default;
};

// Standard triple: e_i shifts v_j -> v_{j-1}, h_i = diag(lambda_i - 1, ...,
// 1 - lambda_i), f_i v_j = j (lambda_i - j) v_{j+1}.
SL2Triple build_triple(const Partition& lambda);

// Diagonal matrix with x_j at every slot (i, j). Throws DimensionError unless
// coords has lambda_1 entries.
RatMatrix torus_matrix(const Partition& lambda, const TorusElement& t);

// Integer diagonal of h. Throws std::invalid_argument if h is not diagonal
// with integer entries.
std::vector<long> integer_weights(const RatMatrix& h);

// Projection of x onto g(w, h): keep entry (r, c) iff h_r - h_c = w.
RatMatrix grading_component(const RatMatrix& x, const RatMatrix& h, long w);

// Positions (r, c) spanning g(w, h), row-major.
std::vector<std::pair<std::size_t, std::size_t>> weight_space_positions(const std::vector<long>& weights, long w);

// Matrix of the linear map x -> [y, x] on the row-major vectorization of gl_N.
RatMatrix ad_matrix(const RatMatrix& y);

Vector flatten(const RatMatrix& x);
RatMatrix unflatten(const Vector& v, std::size_t n);

// Basis of g^f = ker(ad f).
std::vector<RatMatrix> centralizer_of_f(const SL2Triple& triple);

// The generators c(i, j) of c, with i running over [1, delta].
std::vector<TorusElement> c_basis(const Partition& lambda);

}  // namespace sheets

#endif
