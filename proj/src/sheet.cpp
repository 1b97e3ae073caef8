#include "sheets/sheet.hpp"

#include "sheets/epsilon.hpp"

#include <algorithm>
#include <functional>

namespace sheets {

BlockValues block_values(const Partition& lambda, const TorusElement& t)
{
    if (t.coords.size() != lambda.largest()) {
        throw DimensionError("torus coordinates: expected " + std::to_string(lambda.largest()) + " values");
    }
    BlockValues values;
    for (auto li : lambda.parts()) {
        values.emplace_back(t.coords.begin(), t.coords.begin() + static_cast<std::ptrdiff_t>(li));
    }
    return values;
}

MultiplicityTable multiplicities(const BlockValues& values)
{
    MultiplicityTable table(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (const auto& c : values[i]) {
            ++table[i][c];
        }
    }
    return table;
}

MultiplicityTable multiplicities(const Partition& lambda, const TorusElement& t)
{
    return multiplicities(block_values(lambda, t));
}

bool satisfies_mitc(const MultiplicityTable& table)
{
    for (const auto& block : table) {
        for (const auto& [c, m] : block) {
            auto it = block.find(-c);
            if (it == block.end() || it->second != m) {
                return false;
            }
        }
    }
    return true;
}

bool satisfies_mitc(const Partition& lambda, const TorusElement& t)
{
    return satisfies_mitc(multiplicities(lambda, t));
}

JordanType jordan_type_on_slice(const BlockValues& values)
{
    std::map<Rational, std::size_t> total;
    std::vector<std::size_t> parts;
    for (const auto& block : multiplicities(values)) {
        for (const auto& [c, m] : block) {
            total[c] += m;
            parts.push_back(m);
        }
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    JordanType jt{{}, Partition(std::move(parts))};
    for (const auto& [c, m] : total) {
        jt.semisimple_spectrum.push_back({c, m});
    }
    return jt;
}

JordanType jordan_type_on_slice(const Partition& lambda, const TorusElement& t)
{
    return jordan_type_on_slice(block_values(lambda, t));
}

void check_pair(const Partition& lambda, PairType pair)
{
    if (pair == PairType::AII) {
        // Same obstruction and message as the involution builder.
        (void)build_AII(lambda);
    }
}

std::size_t slice_p_dimension(const Partition& lambda, PairType pair)
{
    check_pair(lambda, pair);
    if (pair != PairType::AIII) {
        return lambda.largest();
    }
    std::size_t dim = 0;
    for (auto g : gaps(lambda)) {
        dim += g / 2;
    }
    return dim;
}

std::size_t intersection_dimension(const Partition& lambda, PairType pair)
{
    return dim_K_orbit(lambda) + slice_p_dimension(lambda, pair);
}

bool is_dixmier(const Partition& lambda, PairType pair)
{
    check_pair(lambda, pair);
    if (pair != PairType::AIII) {
        return true;
    }
    const auto g = gaps(lambda);
    return std::count_if(g.begin(), g.end(), [](std::size_t x) { return x % 2 == 1; }) <= 1;
}

bool is_rigid_orbit(const Partition& lambda, PairType pair)
{
    check_pair(lambda, pair);
    if (pair != PairType::AIII) {
        return lambda.largest() <= 1;
    }
    const auto g = gaps(lambda);
    return std::all_of(g.begin(), g.end(), [](std::size_t x) { return x <= 1; });
}

SheetDimensions sheet_dimensions(const Partition& lambda, PairType pair)
{
    SheetDimensions d;
    d.g_orbit = dim_G_orbit(lambda);
    d.k_orbit = dim_K_orbit(lambda);
    d.slice_p = slice_p_dimension(lambda, pair);
    d.intersection = intersection_dimension(lambda, pair);
    return d;
}

SheetReport k_sheet_components(const Partition& lambda, std::size_t n_a, std::size_t n_b)
{
    if (n_a + n_b != lambda.size()) {
        throw std::invalid_argument("signature (" + std::to_string(n_a) + "," + std::to_string(n_b) +
                                    ") does not sum to N = " + std::to_string(lambda.size()));
    }
    SheetReport report;
    report.lambda = lambda;
    report.pair = PairType::AIII;
    report.signature = Signature{n_a, n_b};
    std::map<ABDiagram, std::vector<ABDiagram>> groups;
    for (auto& d : enumerate_admissible(lambda, n_a, n_b)) {
        groups[rigidify(d)].push_back(std::move(d));
    }
    for (auto& [rigid, orbits] : groups) {
        report.components.push_back({rigid, std::move(orbits)});
    }
    report.dims = sheet_dimensions(lambda, PairType::AIII);
    report.dixmier = is_dixmier(lambda, PairType::AIII);
    report.rigid_orbits = is_rigid_orbit(lambda, PairType::AIII);
    return report;
}

SheetReport sheet_report(const Partition& lambda, PairType pair)
{
    if (pair == PairType::AIII) {
        throw std::invalid_argument("AIII components depend on a signature; use k_sheet_components");
    }
    SheetReport report;
    report.lambda = lambda;
    report.pair = pair;
    report.dims = sheet_dimensions(lambda, pair);
    report.components.push_back({std::nullopt, {}});
    report.dixmier = is_dixmier(lambda, pair);
    report.rigid_orbits = is_rigid_orbit(lambda, pair);
    return report;
}

SliceMembership verify_slice_membership(const Partition& lambda, PairType pair, const LabelSequence& phi,
                                        const TorusElement& t)
{
    const Involution inv = build_involution(pair, lambda, phi);
    const SL2Triple triple = build_triple(lambda);
    SliceMembership out;
    out.point = epsilon_of_torus(triple, t);
    out.in_slice = slice_contains(triple, out.point);
    out.expected_in_p = pair != PairType::AIII || satisfies_mitc(lambda, t);
    out.observed_in_p = in_p(inv, out.point);
    return out;
}

}  // namespace sheets
