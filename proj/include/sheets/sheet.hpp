#ifndef SHEETS_SHEET_HPP
#define SHEETS_SHEET_HPP

#include "sheets/ab_diagram.hpp"
#include "sheets/linalg.hpp"

#include <map>
#include <optional>
#include <vector>

namespace sheets {

// Diagonal values of t restricted to each block q_i; block_values[i-1] has
// lambda_i entries.
using BlockValues = std::vector<std::vector<Rational>>;

BlockValues block_values(const Partition& lambda, const TorusElement& t);

// m_i(t, c): one map per block from eigenvalue to multiplicity.
using MultiplicityTable = std::vector<std::map<Rational, std::size_t>>;

MultiplicityTable multiplicities(const BlockValues& values);
MultiplicityTable multiplicities(const Partition& lambda, const TorusElement& t);

// m_i(t, c) = m_i(t, -c) for every block i and every c.
bool satisfies_mitc(const MultiplicityTable& table);
bool satisfies_mitc(const Partition& lambda, const TorusElement& t);

struct JordanType {
    Spectrum semisimple_spectrum;
    Partition nilpotent_partition;
    friend bool operator==(const JordanType&, const JordanType&) = default;
};

// Jordan type of e + t read off the multiplicities: semisimple part
// conjugate to t, nilpotent part given by the nonzero m_i(t, c).
JordanType jordan_type_on_slice(const BlockValues& values);
JordanType jordan_type_on_slice(const Partition& lambda, const TorusElement& t);

// Throws PairingViolation if AII does not exist for lambda.
void check_pair(const Partition& lambda, PairType pair);

// dim X_p: lambda_1 for AI/AII, sum floor(gap_i / 2) for AIII.
std::size_t slice_p_dimension(const Partition& lambda, PairType pair);

// dim (S_G cap p) = dim K.e + dim X_p.
std::size_t intersection_dimension(const Partition& lambda, PairType pair);

// AI/AII: always. AIII: at most one odd gap.
bool is_dixmier(const Partition& lambda, PairType pair);

// AI/AII: only the zero orbit. AIII: every gap at most 1.
bool is_rigid_orbit(const Partition& lambda, PairType pair);

struct SheetComponent {
    // Shared rigidified diagram (AIII); nullopt for AI/AII, where S_G cap p
    // is irreducible and no diagrams are involved.
    std::optional<ABDiagram> rigidified;
    std::vector<ABDiagram> orbits;
};

struct SheetDimensions {
    std::size_t g_orbit = 0;
    std::size_t k_orbit = 0;
    std::size_t slice_p = 0;
    std::size_t intersection = 0;
};

struct SheetReport {
    Partition lambda;
    PairType pair = PairType::AIII;
    std::optional<Signature> signature;
    std::vector<SheetComponent> components;
    SheetDimensions dims;
    bool dixmier = false;
    bool rigid_orbits = false;
};

SheetDimensions sheet_dimensions(const Partition& lambda, PairType pair);

// AIII: admissible diagrams grouped by rigidified diagram; each group is one
// irreducible component (one K-sheet) of S_G cap p. Components are ordered
// by their rigidified diagram, orbits canonically.
SheetReport k_sheet_components(const Partition& lambda, std::size_t n_a, std::size_t n_b);

// AI/AII: a single component.
SheetReport sheet_report(const Partition& lambda, PairType pair);

struct SliceMembership {
    RatMatrix point;       // epsilon(e + t)
    bool in_slice = false; // [f, point - e] = 0
    bool expected_in_p = false;
    bool observed_in_p = false;
};

// Computes epsilon(e + t) and whether it lies in p. Expected: always for
// AI/AII, exactly when t satisfies (mitc) for AIII.
SliceMembership verify_slice_membership(const Partition& lambda, PairType pair, const LabelSequence& phi,
                                        const TorusElement& t);

}  // namespace sheets

#endif
