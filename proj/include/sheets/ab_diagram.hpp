#ifndef SHEETS_AB_DIAGRAM_HPP
#define SHEETS_AB_DIAGRAM_HPP

#include "sheets/involution.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sheets {

// Young diagram with a/b labels alternating along each row, up to
// permutation of rows of equal length. Rows are kept sorted by length
// (descending) and then lexicographically, which is a canonical form.
class ABDiagram {
public:
    ABDiagram() = default;
    // Throws std::invalid_argument on an empty or non-alternating row.
    explicit ABDiagram(std::vector<std::string> rows);

    // "abab/aba/b"; the empty string is the empty diagram.
    static ABDiagram parse(std::string_view text);

    const std::vector<std::string>& rows() const { return rows_; }
    bool empty() const { return rows_.empty(); }
    Partition shape() const;
    std::size_t count(Label label) const;
    std::string to_string() const;

    friend bool operator==(const ABDiagram&, const ABDiagram&) = default;
    friend auto operator<=>(const ABDiagram&, const ABDiagram&) = default;

private:
    std::vector<std::string> rows_;
};

// Alternating row of the given length starting with `first`.
std::string alternating_row(Label first, std::size_t length);

// Row i has length lambda_i and starts with phi(i).
ABDiagram delta_of_phi(const Partition& lambda, const LabelSequence& phi);

// (dim V_a, dim V_b) for the splitting defined by phi.
Signature signature_of_phi(const Partition& lambda, const LabelSequence& phi);

bool is_admissible(const ABDiagram& d, std::size_t n_a, std::size_t n_b);

// Every distinct admissible delta_of_phi(lambda, psi), psi in {a,b}^delta,
// in ascending canonical order.
std::vector<ABDiagram> enumerate_admissible(const Partition& lambda, std::size_t n_a, std::size_t n_b);

// ab-diagram of the K-orbit of a nilpotent x in p for an AIII involution,
// read off a Jordan string basis whose vectors each lie in V_a or V_b.
// Throws std::invalid_argument if inv is not AIII, x is not nilpotent or
// theta(x) != -x.
ABDiagram gamma_of_nilpotent(const Involution& inv, const RatMatrix& x);

// Column lengths of the underlying Young diagram.
std::vector<std::size_t> column_lengths(const ABDiagram& d);

// Delete columns j and j+1 (1-based) if they have the same nonzero length.
std::optional<ABDiagram> remove_column_pair(const ABDiagram& d, std::size_t j);

// Remove equal adjacent column pairs, leftmost first, until none remain.
ABDiagram rigidify(const ABDiagram& d);

}  // namespace sheets

#endif
