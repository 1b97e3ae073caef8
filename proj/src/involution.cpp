#include "sheets/involution.hpp"

#include "sheets/linalg.hpp"

namespace sheets {

std::string to_string(PairType kind)
{
    switch (kind) {
    case PairType::AI:
        return "AI";
    case PairType::AII:
        return "AII";
    case PairType::AIII:
        return "AIII";
    }
    return "?";
}

PairType parse_pair_type(std::string_view text)
{
    if (text == "AI") {
        return PairType::AI;
    }
    if (text == "AII") {
        return PairType::AII;
    }
    if (text == "AIII") {
        return PairType::AIII;
    }
    throw std::invalid_argument("unknown symmetric pair type '" + std::string(text) + "' (expected AI, AII or AIII)");
}

LabelSequence parse_labels(std::string_view text)
{
    LabelSequence out;
    for (char c : text) {
        if (c == 'a') {
            out.push_back(Label::a);
        } else if (c == 'b') {
            out.push_back(Label::b);
        } else {
            throw std::invalid_argument("label string may only contain 'a' and 'b', got '" + std::string(text) + "'");
        }
    }
    return out;
}

std::string to_string(const LabelSequence& labels)
{
    std::string out;
    for (auto l : labels) {
        out.push_back(static_cast<char>(l));
    }
    return out;
}

RatMatrix Involution::apply(const RatMatrix& x) const
{
    if (x.rows() != dimension() || x.cols() != dimension()) {
        throw DimensionError("involution applied to a matrix of the wrong size");
    }
    if (kind_ == PairType::AIII) {
        RatMatrix out = x;
        for (std::size_t r = 0; r < x.rows(); ++r) {
            for (std::size_t c = 0; c < x.cols(); ++c) {
                if (in_a_[r] != in_a_[c]) {
                    out(r, c) = -out(r, c);
                }
            }
        }
        return out;
    }
    return -(gram_inverse_ * x.transpose() * gram_);
}

Involution build_AI(const Partition& lambda)
{
    const BasisLayout layout(lambda);
    Involution inv;
    inv.kind_ = PairType::AI;
    inv.lambda_ = lambda;
    inv.gram_ = RatMatrix::zero(lambda.size());
    for (std::size_t i = 1; i <= lambda.length(); ++i) {
        const std::size_t li = lambda.part(i);
        for (std::size_t j = 1; j <= li; ++j) {
            inv.gram_(layout.flat(i, j), layout.flat(i, li + 1 - j)) = 1;
        }
    }
    inv.gram_inverse_ = inverse(inv.gram_);
    return inv;
}

Involution build_AII(const Partition& lambda)
{
    if (lambda.length() % 2 != 0) {
        throw PairingViolation("AII needs an even number of parts, " + lambda.to_string() + " has " +
                               std::to_string(lambda.length()));
    }
    for (std::size_t i = 1; i < lambda.length(); i += 2) {
        if (lambda.part(i) != lambda.part(i + 1)) {
            throw PairingViolation("AII needs lambda_" + std::to_string(i) + " = lambda_" + std::to_string(i + 1) +
                                   ", but " + lambda.to_string() + " has " + std::to_string(lambda.part(i)) +
                                   " != " + std::to_string(lambda.part(i + 1)));
        }
    }
    const BasisLayout layout(lambda);
    Involution inv;
    inv.kind_ = PairType::AII;
    inv.lambda_ = lambda;
    inv.gram_ = RatMatrix::zero(lambda.size());
    for (std::size_t i = 1; i < lambda.length(); i += 2) {
        const std::size_t li = lambda.part(i);
        for (std::size_t j = 1; j <= li; ++j) {
            inv.gram_(layout.flat(i, j), layout.flat(i + 1, li + 1 - j)) = 1;
            inv.gram_(layout.flat(i + 1, j), layout.flat(i, li + 1 - j)) = -1;
        }
    }
    inv.gram_inverse_ = inverse(inv.gram_);
    return inv;
}

Involution build_AIII(const Partition& lambda, const LabelSequence& phi)
{
    if (phi.size() != lambda.length()) {
        throw DimensionError("phi has " + std::to_string(phi.size()) + " labels but " + lambda.to_string() +
                             " has " + std::to_string(lambda.length()) + " parts");
    }
    const BasisLayout layout(lambda);
    Involution inv;
    inv.kind_ = PairType::AIII;
    inv.lambda_ = lambda;
    inv.phi_ = phi;
    inv.in_a_.assign(lambda.size(), false);
    for (std::size_t k = 0; k < layout.dimension(); ++k) {
        const auto idx = layout.at(k);
        const bool even = (lambda.part(idx.block) - idx.position) % 2 == 0;
        const bool a = (phi[idx.block - 1] == Label::a) == even;
        inv.in_a_[k] = a;
        (a ? inv.a_indices_ : inv.b_indices_).push_back(k);
    }
    return inv;
}

Involution build_involution(PairType kind, const Partition& lambda, const LabelSequence& phi)
{
    switch (kind) {
    case PairType::AI:
        return build_AI(lambda);
    case PairType::AII:
        return build_AII(lambda);
    case PairType::AIII:
        return build_AIII(lambda, phi);
    }
    throw std::invalid_argument("unknown pair type");
}

RatMatrix theta_apply(const Involution& inv, const RatMatrix& x)
{
    return inv.apply(x);
}

RatMatrix k_part(const Involution& inv, const RatMatrix& x)
{
    return Rational(1, 2) * (x + inv.apply(x));
}

RatMatrix p_part(const Involution& inv, const RatMatrix& x)
{
    return Rational(1, 2) * (x - inv.apply(x));
}

bool in_p(const Involution& inv, const RatMatrix& x)
{
    return inv.apply(x) == -x;
}

bool in_k(const Involution& inv, const RatMatrix& x)
{
    return inv.apply(x) == x;
}

bool is_normal_triple(const Involution& inv, const SL2Triple& triple)
{
    return in_p(inv, triple.e) && in_p(inv, triple.f) && in_k(inv, triple.h);
}

std::pair<std::size_t, std::size_t> eigenspace_dimensions(const Involution& inv)
{
    const std::size_t n = inv.dimension();
    RatMatrix theta(n * n, n * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            const auto image = flatten(inv.apply(RatMatrix::unit(n, r, c)));
            for (std::size_t k = 0; k < image.size(); ++k) {
                theta(k, r * n + c) = image[k];
            }
        }
    }
    const RatMatrix id = RatMatrix::identity(n * n);
    return {n * n - rank(theta - id), n * n - rank(theta + id)};
}

}  // namespace sheets
