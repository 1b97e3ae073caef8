#include "sheets/epsilon.hpp"

#include "sheets/linalg.hpp"

#include <algorithm>
#include <set>

namespace sheets {

void validate_graded_point(const GradedPoint& pt)
{
    const auto weights = integer_weights(pt.triple.h);
    if (pt.z.rows() != weights.size() || pt.z.cols() != weights.size()) {
        throw DimensionError("graded point: z has the wrong size");
    }
    for (std::size_t r = 0; r < weights.size(); ++r) {
        for (std::size_t c = 0; c < weights.size(); ++c) {
            const long w = weights[r] - weights[c];
            if ((w > 0 || w % 2 != 0) && sgn(pt.z(r, c)) != 0) {
                throw std::invalid_argument("graded point: z has a component of weight " + std::to_string(w) +
                                            "; only non-positive even weights are allowed");
            }
        }
    }
}

SliceProjector::SliceProjector(SL2Triple triple)
    : triple_(std::move(triple)), weights_(integer_weights(triple_.h))
{
    const std::size_t n = weights_.size();
    const long top = n == 0 ? 0 : *std::max_element(weights_.begin(), weights_.end());
    const long lowest = -2 * top;
    for (long w = 0; w >= lowest; w -= 2) {
        WeightStep step;
        step.weight = w;
        step.target = weight_space_positions(weights_, w);
        step.source = weight_space_positions(weights_, w - 2);
        if (step.target.empty()) {
            continue;
        }
        std::vector<Vector> columns;
        for (auto [r, c] : step.source) {
            const RatMatrix image = bracket(triple_.e, RatMatrix::unit(n, r, c));
            Vector col;
            for (auto [tr, tc] : step.target) {
                col.push_back(image(tr, tc));
            }
            columns.push_back(std::move(col));
        }
        // g^f cap g(w): kernel of ad f from g(w) to g(w-2).
        RatMatrix ad_f(step.source.size(), step.target.size());
        for (std::size_t k = 0; k < step.target.size(); ++k) {
            auto [r, c] = step.target[k];
            const RatMatrix image = bracket(triple_.f, RatMatrix::unit(n, r, c));
            for (std::size_t s = 0; s < step.source.size(); ++s) {
                ad_f(s, k) = image(step.source[s].first, step.source[s].second);
            }
        }
        for (auto& v : kernel_basis(ad_f)) {
            columns.push_back(std::move(v));
        }
        step.system = RatMatrix::from_columns(columns, step.target.size());
        if (step.system.cols() != step.target.size() || rank(step.system) != step.target.size()) {
            throw InternalInconsistency("weight " + std::to_string(w) +
                                        ": [e, g(w-2)] and g^f cap g(w) do not form a direct sum");
        }
        steps_.push_back(std::move(step));
    }
}

RatMatrix SliceProjector::operator()(const RatMatrix& z) const
{
    validate_graded_point({triple_, z});
    const std::size_t n = weights_.size();
    RatMatrix current = triple_.e + z;
    for (const auto& step : steps_) {
        Vector component;
        bool nonzero = false;
        for (auto [r, c] : step.target) {
            component.push_back(current(r, c));
            nonzero = nonzero || sgn(current(r, c)) != 0;
        }
        if (!nonzero || step.source.empty()) {
            continue;
        }
        const auto coeffs = solve_linear(step.system, component);
        if (!coeffs) {
            throw InternalInconsistency("weight " + std::to_string(step.weight) +
                                        ": component does not decompose along [e, g(w-2)] + g^f");
        }
        RatMatrix eta(n, n);
        for (std::size_t k = 0; k < step.source.size(); ++k) {
            auto [r, c] = step.source[k];
            eta(r, c) = (*coeffs)[k];
        }
        // [eta, e] = -pr_1(w), so exp(ad eta) leaves only the g^f part at weight w.
        current = conjugate_by_exp(eta, current);
    }
    return current;
}

RatMatrix epsilon(const GradedPoint& pt)
{
    return SliceProjector(pt.triple)(pt.z);
}

RatMatrix epsilon_of_torus(const SL2Triple& triple, const TorusElement& t)
{
    return SliceProjector(triple)(torus_matrix(triple.lambda, t));
}

bool slice_contains(const SL2Triple& triple, const RatMatrix& x)
{
    return bracket(triple.f, x - triple.e).is_zero();
}

bool same_rank_profile(const RatMatrix& x, const RatMatrix& y)
{
    if (!x.is_square() || !y.is_square()) {
        throw DimensionError("same_rank_profile: matrices must be square");
    }
    if (x.rows() != y.rows()) {
        return false;
    }
    const auto sx = rational_spectrum(x);
    const auto sy = rational_spectrum(y);
    if (!sx || !sy) {
        throw NotSplitError("same_rank_profile: characteristic polynomial does not split over Q");
    }
    std::set<Rational> values;
    for (const auto& ev : *sx) {
        values.insert(ev.value);
    }
    for (const auto& ev : *sy) {
        values.insert(ev.value);
    }
    return std::all_of(values.begin(), values.end(),
                       [&](const Rational& c) { return rank_sequence(x, c) == rank_sequence(y, c); });
}

RatMatrix scaling_action(const Rational& s, const SL2Triple& triple, const RatMatrix& x)
{
    if (sgn(s) == 0) {
        throw std::invalid_argument("scaling_action: scale must be nonzero");
    }
    const auto weights = integer_weights(triple.h);
    RatMatrix out(x.rows(), x.cols());
    for (std::size_t r = 0; r < x.rows(); ++r) {
        for (std::size_t c = 0; c < x.cols(); ++c) {
            const long exponent = weights[r] - weights[c] - 2;
            Rational factor = 1;
            for (long k = 0; k < std::abs(exponent); ++k) {
                factor *= s;
            }
            if (exponent < 0) {
                factor = 1 / factor;
            }
            out(r, c) = factor * x(r, c);
        }
    }
    return out;
}

}  // namespace sheets
