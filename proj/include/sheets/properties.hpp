#ifndef SHEETS_PROPERTIES_HPP
#define SHEETS_PROPERTIES_HPP

#include "sheets/epsilon.hpp"
#include "sheets/sheet.hpp"

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace sheets {

// Single-instance checks of the library's structural claims, shared by the
// `verify` subcommand and the acceptance suite. Each returns true on success.

// Rational with numerator in [-max_num, max_num] and denominator in [1, max_den].
Rational random_rational(std::mt19937_64& rng, long max_num = 5, long max_den = 3);
TorusElement random_torus(std::mt19937_64& rng, std::size_t length, long max_num = 5, long max_den = 3);

// Every sequence in {a, b}^delta, in binary order with a = 0.
std::vector<LabelSequence> all_label_sequences(std::size_t delta);

// epsilon(e + t) lies in e + g^f and is conjugate to e + t.
bool check_epsilon_point(const SliceProjector& project, const TorusElement& t);

// Weight-2j component scales by s^(1-j) under t -> s t, for every j.
bool check_homogeneity(const SliceProjector& project, const TorusElement& t, const Rational& s);

// theta(epsilon(e + t)) = -epsilon(e + t) for an AI or AII involution.
bool check_unif(const Involution& inv, const SliceProjector& project, const TorusElement& t);

// For AIII: epsilon(e + t) lies in p exactly when t satisfies (mitc).
bool check_mitc_equivalence(const Involution& inv, const SliceProjector& project, const TorusElement& t);

// A random combination of the c-basis (satisfies mitc).
TorusElement random_c_point(std::mt19937_64& rng, const Partition& lambda);
// alpha * (1, 0, ..., 0), which violates mitc in every block for alpha != 0.
TorusElement violating_point(const Partition& lambda, const Rational& alpha);

// Jordan type of an arbitrary split matrix from rank profiles.
JordanType rank_profile_jordan_type(const RatMatrix& x);
// jordan_type_on_slice agrees with the rank profile of e + t.
bool check_jordan_type(const Partition& lambda, const TorusElement& t);

// dim g^f from the kernel of ad f equals N^2 - dim G.e.
bool check_centralizer_dimension(const Partition& lambda);

// is_rigid_orbit(lambda, AIII) iff slice_p_dimension(lambda, AIII) = 0.
bool check_rigid_consistency(const Partition& lambda);

// gamma_of_nilpotent(build_AIII(lambda, phi), e) = delta_of_phi(lambda, phi)
// and its shape is the rank partition of e.
bool check_gamma_round_trip(const Partition& lambda, const LabelSequence& phi);

// Every diagram whose shape is a partition of n.
std::vector<ABDiagram> all_diagrams_of_size(std::size_t n);
// Terminal diagrams over every order of column-pair removals.
std::set<ABDiagram> exhaustive_rigidifications(const ABDiagram& d);
bool check_rigidify_confluence(const ABDiagram& d);

struct PropertyTally {
    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
};

struct SuiteReport {
    std::size_t max_size = 0;
    std::uint64_t seed = 0;
    std::vector<PropertyTally> properties;
    bool all_passed() const;
};

// Runs every check over all partitions of N <= max_size, with `samples`
// random torus points per partition. Deterministic for a fixed seed.
SuiteReport run_property_suite(std::size_t max_size, std::uint64_t seed, std::size_t samples = 5);

}  // namespace sheets

#endif
