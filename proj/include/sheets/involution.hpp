#ifndef SHEETS_INVOLUTION_HPP
#define SHEETS_INVOLUTION_HPP

#include "sheets/gl_setup.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sheets {

enum class PairType { AI, AII, AIII };

std::string to_string(PairType kind);
// Throws std::invalid_argument for anything but "AI", "AII", "AIII".
PairType parse_pair_type(std::string_view text);

enum class Label : char { a = 'a', b = 'b' };
using LabelSequence = std::vector<Label>;

inline Label flip(Label l) { return l == Label::a ? Label::b : Label::a; }
// Throws std::invalid_argument on characters outside {a, b}.
LabelSequence parse_labels(std::string_view text);
std::string to_string(const LabelSequence& labels);

// AII requires the parts to pair up: lambda_{2i-1} = lambda_{2i}.
class PairingViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Signature {
    std::size_t n_a = 0;
    std::size_t n_b = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};

// An involution theta of gl_N adapted to the standard triple of lambda.
// AI/AII: theta(x) = -S^{-1} x^T S for the Gram matrix S of a symmetric
// (AI) or symplectic (AII) form. AIII: theta(x) = J x J with J = +1 on V_a
// and -1 on V_b.
class Involution {
public:
    PairType kind() const { return kind_; }
    const Partition& lambda() const { return lambda_; }
    std::size_t dimension() const { return lambda_.size(); }

    // AI/AII only (empty for AIII).
    const RatMatrix& gram() const { return gram_; }

    // AIII only (empty otherwise).
    const LabelSequence& phi() const { return phi_; }
    const std::vector<std::size_t>& a_indices() const { return a_indices_; }
    const std::vector<std::size_t>& b_indices() const { return b_indices_; }
    Signature signature() const { return {a_indices_.size(), b_indices_.size()}; }
    // Label of the flat basis vector k (AIII only).
    Label label_of(std::size_t flat) const { return in_a_.at(flat) ? Label::a : Label::b; }

    RatMatrix apply(const RatMatrix& x) const;

    friend Involution build_AI(const Partition& lambda);
    friend Involution build_AII(const Partition& lambda);
    friend Involution build_AIII(const Partition& lambda, const LabelSequence& phi);

private:
    PairType kind_ = PairType::AI;
    Partition lambda_;
    RatMatrix gram_;
    RatMatrix gram_inverse_;
    LabelSequence phi_;
    std::vector<std::size_t> a_indices_;
    std::vector<std::size_t> b_indices_;
    std::vector<bool> in_a_;
};

// chi(v_j^(i), v_k^(l)) = 1 iff l = i and j + k = lambda_i + 1.
Involution build_AI(const Partition& lambda);

// Pairs block 2i-1 with block 2i: +1 from the odd block to the even one,
// -1 back, on j + k = lambda_i + 1. Throws PairingViolation.
Involution build_AII(const Partition& lambda);

// v_j^(i) lies in V_a iff (phi(i) = a and lambda_i - j even) or
// (phi(i) = b and lambda_i - j odd). Throws DimensionError unless
// |phi| = delta.
Involution build_AIII(const Partition& lambda, const LabelSequence& phi);

// Dispatch on kind; phi is ignored except for AIII.
Involution build_involution(PairType kind, const Partition& lambda, const LabelSequence& phi = {});

RatMatrix theta_apply(const Involution& inv, const RatMatrix& x);
// (x + theta x) / 2
RatMatrix k_part(const Involution& inv, const RatMatrix& x);
// (x - theta x) / 2
RatMatrix p_part(const Involution& inv, const RatMatrix& x);

bool in_p(const Involution& inv, const RatMatrix& x);
bool in_k(const Involution& inv, const RatMatrix& x);

// e, f in p and h in k.
bool is_normal_triple(const Involution& inv, const SL2Triple& triple);

// (dim k, dim p), computed from the rank of theta - id on gl_N.
std::pair<std::size_t, std::size_t> eigenspace_dimensions(const Involution& inv);

}  // namespace sheets

#endif
