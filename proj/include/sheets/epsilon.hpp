#ifndef SHEETS_EPSILON_HPP
#define SHEETS_EPSILON_HPP

#include "sheets/gl_setup.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace sheets {

// A broken internal invariant (a linear system that must be solvable was
// not). Never caused by user input.
class InternalInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class NotSplitError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// e + z with z in the sum of the non-positive even ad-h weight spaces.
struct GradedPoint {
    SL2Triple triple;
    RatMatrix z;
};

// Throws std::invalid_argument if z has a component of positive or odd weight.
void validate_graded_point(const GradedPoint& pt);

// Projection onto the Slodowy slice e + g^f by successive unipotent
// conjugations, one per weight 0, -2, -4, ... For each weight w the space
// g(w) splits as [e, g(w-2)] + (g^f cap g(w)); the [e, g(w-2)] part of the
// current weight-w component is removed by conjugating with exp(ad eta),
// where [e, eta] equals that part.
//
// The per-weight splittings depend only on the triple and are built once.
class SliceProjector {
public:
    explicit SliceProjector(SL2Triple triple);

    const SL2Triple& triple() const { return triple_; }

    RatMatrix operator()(const RatMatrix& z) const;

private:
    struct WeightStep {
        long weight = 0;
        std::vector<std::pair<std::size_t, std::size_t>> target;  // spans g(w)
        std::vector<std::pair<std::size_t, std::size_t>> source;  // spans g(w-2)
        RatMatrix system;  // columns: [e, E_src] for each source, then g^f cap g(w)
    };

    SL2Triple triple_;
    std::vector<long> weights_;
    std::vector<WeightStep> steps_;
};

RatMatrix epsilon(const GradedPoint& pt);

// Convenience: epsilon(e + torus_matrix(lambda, t)).
RatMatrix epsilon_of_torus(const SL2Triple& triple, const TorusElement& t);

// True iff [f, x - e] = 0.
bool slice_contains(const SL2Triple& triple, const RatMatrix& x);

// Conjugacy test over gl_N for matrices with split rational spectrum:
// rank((x - c)^k) = rank((y - c)^k) for all c in either spectrum and all k.
// Throws NotSplitError otherwise.
bool same_rank_profile(const RatMatrix& x, const RatMatrix& y);

// sum_w s^(w-2) * grading_component(x, h, w). Throws std::invalid_argument
// for s = 0.
RatMatrix scaling_action(const Rational& s, const SL2Triple& triple, const RatMatrix& x);

}  // namespace sheets

#endif
