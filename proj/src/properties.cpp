#include "sheets/properties.hpp"

#include "sheets/linalg.hpp"

#include <algorithm>

namespace sheets {

Rational random_rational(std::mt19937_64& rng, long max_num, long max_den)
{
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return make_rational(num(rng), den(rng));
}

TorusElement random_torus(std::mt19937_64& rng, std::size_t length, long max_num, long max_den)
{
    TorusElement t;
    for (std::size_t i = 0; i < length; ++i) {
        t.coords.push_back(random_rational(rng, max_num, max_den));
    }
    return t;
}

std::vector<LabelSequence> all_label_sequences(std::size_t delta)
{
    std::vector<LabelSequence> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << delta); ++mask) {
        LabelSequence phi;
        for (std::size_t i = 0; i < delta; ++i) {
            phi.push_back((mask >> (delta - 1 - i)) & 1U ? Label::b : Label::a);
        }
        out.push_back(phi);
    }
    return out;
}

bool check_epsilon_point(const SliceProjector& project, const TorusElement& t)
{
    const auto& triple = project.triple();
    const auto z = torus_matrix(triple.lambda, t);
    const auto x = project(z);
    return slice_contains(triple, x) && same_rank_profile(triple.e + z, x);
}

bool check_homogeneity(const SliceProjector& project, const TorusElement& t, const Rational& s)
{
    const auto& triple = project.triple();
    const auto z = torus_matrix(triple.lambda, t);
    const auto base = project(z) - triple.e;
    const auto scaled = project(s * z) - triple.e;
    const long top = static_cast<long>(triple.lambda.largest());
    Rational factor = s;  // s^(1 - j) at j = 0
    for (long j = 0; j >= -top; --j) {
        if (grading_component(scaled, triple.h, 2 * j) != factor * grading_component(base, triple.h, 2 * j)) {
            return false;
        }
        factor *= s;
    }
    return true;
}

bool check_unif(const Involution& inv, const SliceProjector& project, const TorusElement& t)
{
    return in_p(inv, project(torus_matrix(inv.lambda(), t)));
}

bool check_mitc_equivalence(const Involution& inv, const SliceProjector& project, const TorusElement& t)
{
    const bool observed = in_p(inv, project(torus_matrix(inv.lambda(), t)));
    return observed == satisfies_mitc(inv.lambda(), t);
}

TorusElement random_c_point(std::mt19937_64& rng, const Partition& lambda)
{
    TorusElement out{Vector(lambda.largest(), Rational(0))};
    for (const auto& generator : c_basis(lambda)) {
        const Rational s = random_rational(rng);
        for (std::size_t k = 0; k < out.coords.size(); ++k) {
            out.coords[k] += s * generator.coords[k];
        }
    }
    return out;
}

TorusElement violating_point(const Partition& lambda, const Rational& alpha)
{
    TorusElement out{Vector(lambda.largest(), Rational(0))};
    out.coords.front() = alpha;
    return out;
}

JordanType rank_profile_jordan_type(const RatMatrix& x)
{
    const auto spectrum = rational_spectrum(x);
    if (!spectrum) {
        throw NotSplitError("characteristic polynomial does not split over Q");
    }
    std::vector<std::size_t> sizes;
    for (const auto& ev : *spectrum) {
        const auto blocks = jordan_block_sizes(x, ev.value);
        sizes.insert(sizes.end(), blocks.begin(), blocks.end());
    }
    std::sort(sizes.rbegin(), sizes.rend());
    return {*spectrum, Partition(sizes)};
}

bool check_jordan_type(const Partition& lambda, const TorusElement& t)
{
    const auto x = build_triple(lambda).e + torus_matrix(lambda, t);
    return jordan_type_on_slice(lambda, t) == rank_profile_jordan_type(x);
}

bool check_centralizer_dimension(const Partition& lambda)
{
    const std::size_t n = lambda.size();
    return centralizer_of_f(build_triple(lambda)).size() == n * n - dim_G_orbit(lambda);
}

bool check_rigid_consistency(const Partition& lambda)
{
    return is_rigid_orbit(lambda, PairType::AIII) == (slice_p_dimension(lambda, PairType::AIII) == 0);
}

bool check_gamma_round_trip(const Partition& lambda, const LabelSequence& phi)
{
    const auto e = build_triple(lambda).e;
    const auto d = gamma_of_nilpotent(build_AIII(lambda, phi), e);
    if (d != delta_of_phi(lambda, phi)) {
        return false;
    }
    // Shape against the Jordan blocks of e at 0, found by ranks.
    auto blocks = jordan_block_sizes(e, Rational(0));
    std::sort(blocks.rbegin(), blocks.rend());
    return d.shape().parts() == blocks;
}

std::vector<ABDiagram> all_diagrams_of_size(std::size_t n)
{
    std::vector<ABDiagram> out;
    for (const auto& lambda : partitions_of(n)) {
        for (std::size_t n_a = 0; n_a <= n; ++n_a) {
            const auto part = enumerate_admissible(lambda, n_a, n - n_a);
            out.insert(out.end(), part.begin(), part.end());
        }
    }
    return out;
}

std::set<ABDiagram> exhaustive_rigidifications(const ABDiagram& d)
{
    std::set<ABDiagram> terminals;
    std::set<ABDiagram> seen{d};
    std::vector<ABDiagram> stack{d};
    while (!stack.empty()) {
        const ABDiagram current = stack.back();
        stack.pop_back();
        bool terminal = true;
        const std::size_t width = current.empty() ? 0 : current.rows().front().size();
        for (std::size_t j = 1; j < width; ++j) {
            if (auto next = remove_column_pair(current, j)) {
                terminal = false;
                if (seen.insert(*next).second) {
                    stack.push_back(*next);
                }
            }
        }
        if (terminal) {
            terminals.insert(current);
        }
    }
    return terminals;
}

bool check_rigidify_confluence(const ABDiagram& d)
{
    return exhaustive_rigidifications(d) == std::set<ABDiagram>{rigidify(d)};
}

bool SuiteReport::all_passed() const
{
    return std::all_of(properties.begin(), properties.end(), [](const PropertyTally& p) { return p.failed == 0; });
}

namespace {

void record(PropertyTally& tally, bool ok)
{
    ++(ok ? tally.passed : tally.failed);
}

bool is_paired(const Partition& lambda)
{
    try {
        check_pair(lambda, PairType::AII);
        return true;
    } catch (const PairingViolation&) {
        return false;
    }
}

}  // namespace

SuiteReport run_property_suite(std::size_t max_size, std::uint64_t seed, std::size_t samples)
{
    std::mt19937_64 rng(seed);
    PropertyTally slice{"epsilon lands in slice, conjugate to e+t"};
    PropertyTally homogeneity{"epsilon homogeneity"};
    PropertyTally unif{"theta(epsilon) = -epsilon for AI/AII"};
    PropertyTally mitc{"AIII: epsilon in p iff mitc"};
    PropertyTally jordan{"Jordan type on slice vs rank profile"};
    PropertyTally centralizer{"dim g^f = N^2 - dim G.e"};
    PropertyTally rigid{"rigid iff dim X_p = 0"};
    PropertyTally gamma{"gamma(e) = delta(phi)"};
    PropertyTally confluence{"rigidify confluence"};

    for (std::size_t n = 1; n <= max_size; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            const SliceProjector project(build_triple(lambda));
            const std::size_t len = lambda.largest();
            const auto ai = build_AI(lambda);
            const bool paired = is_paired(lambda);
            const auto phis = all_label_sequences(lambda.length());
            for (std::size_t i = 0; i < samples; ++i) {
                const auto t = random_torus(rng, len);
                record(slice, check_epsilon_point(project, t));
                Rational s = random_rational(rng);
                if (s == 0) {
                    s = 1;
                }
                record(homogeneity, check_homogeneity(project, t, s));
                record(unif, check_unif(ai, project, t));
                if (paired) {
                    record(unif, check_unif(build_AII(lambda), project, t));
                }
                record(jordan, check_jordan_type(lambda, random_torus(rng, len, 1, 1)));
                const auto& phi = phis[i % phis.size()];
                const auto aiii = build_AIII(lambda, phi);
                record(mitc, check_mitc_equivalence(aiii, project, random_c_point(rng, lambda)));
                record(mitc, check_mitc_equivalence(aiii, project, random_torus(rng, len, 1, 1)));
            }
            for (const auto& phi : phis) {
                const auto aiii = build_AIII(lambda, phi);
                record(mitc, !in_p(aiii, project(torus_matrix(lambda, violating_point(lambda, Rational(1))))));
                record(gamma, check_gamma_round_trip(lambda, phi));
            }
            record(centralizer, check_centralizer_dimension(lambda));
            record(rigid, check_rigid_consistency(lambda));
        }
        for (const auto& d : all_diagrams_of_size(n)) {
            record(confluence, check_rigidify_confluence(d));
        }
    }
    return {max_size, seed, {slice, homogeneity, unif, mitc, jordan, centralizer, rigid, gamma, confluence}};
}

}  // namespace sheets
