#ifndef SHEETS_TESTS_SUPPORT_HPP
#define SHEETS_TESTS_SUPPORT_HPP

// Generators and brute-force oracles shared by the test binaries. Nothing
// here calls the library routine it is used to check.

#include "sheets/ab_diagram.hpp"
#include "sheets/gl_setup.hpp"
#include "sheets/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace sheets::testing {

inline Rational random_rational(std::mt19937& rng, int max_num = 5, int max_den = 4)
{
    std::uniform_int_distribution<int> num(-max_num, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    return make_rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(std::mt19937& rng, int max_num = 5, int max_den = 4)
{
    Rational q;
    do {
        q = random_rational(rng, max_num, max_den);
    } while (sgn(q) == 0);
    return q;
}

inline RatMatrix random_matrix(std::mt19937& rng, std::size_t n, int max_num = 5, int max_den = 4)
{
    RatMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            m(r, c) = random_rational(rng, max_num, max_den);
        }
    }
    return m;
}

inline RatMatrix random_invertible(std::mt19937& rng, std::size_t n)
{
    while (true) {
        RatMatrix m = random_matrix(rng, n, 3, 2);
        if (rank(m) == n) {
            return m;
        }
    }
}

inline TorusElement random_torus(std::mt19937& rng, std::size_t length, int max_num = 5, int max_den = 3)
{
    TorusElement t;
    for (std::size_t k = 0; k < length; ++k) {
        t.coords.push_back(random_rational(rng, max_num, max_den));
    }
    return t;
}

// Leibniz expansion; independent of every elimination routine.
inline Rational leibniz_det(const RatMatrix& m)
{
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rational det = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                inversions += perm[i] > perm[j] ? 1 : 0;
            }
        }
        Rational term = inversions % 2 == 0 ? 1 : -1;
        for (std::size_t i = 0; i < n && sgn(term) != 0; ++i) {
            term *= m(i, perm[i]);
        }
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

// Every ab-picture of shape lambda by labeling each box freely and keeping
// the row-alternating ones; canonicalized independently of ABDiagram.
inline std::set<std::vector<std::string>> brute_force_diagrams(const std::vector<std::size_t>& shape)
{
    std::size_t total = 0;
    for (auto p : shape) {
        total += p;
    }
    std::set<std::vector<std::string>> out;
    for (unsigned long mask = 0; mask < (1UL << total); ++mask) {
        std::vector<std::string> rows;
        std::size_t bit = 0;
        bool ok = true;
        for (auto p : shape) {
            std::string row;
            for (std::size_t k = 0; k < p; ++k, ++bit) {
                row.push_back((mask >> bit) & 1UL ? 'b' : 'a');
                if (k > 0 && row[k] == row[k - 1]) {
                    ok = false;
                }
            }
            rows.push_back(row);
        }
        if (!ok) {
            continue;
        }
        std::sort(rows.begin(), rows.end(), [](const std::string& x, const std::string& y) {
            return x.size() != y.size() ? x.size() > y.size() : x < y;
        });
        out.insert(rows);
    }
    return out;
}

inline std::size_t count_label(const std::vector<std::string>& rows, char label)
{
    std::size_t n = 0;
    for (const auto& r : rows) {
        n += static_cast<std::size_t>(std::count(r.begin(), r.end(), label));
    }
    return n;
}

// All terminal diagrams reachable by removing equal adjacent column pairs
// in every possible order.
inline std::set<ABDiagram> exhaustive_rigidifications(const ABDiagram& d)
{
    std::set<ABDiagram> terminals;
    std::set<ABDiagram> seen{d};
    std::vector<ABDiagram> stack{d};
    while (!stack.empty()) {
        ABDiagram cur = stack.back();
        stack.pop_back();
        bool terminal = true;
        const std::size_t width = cur.empty() ? 0 : cur.rows().front().size();
        for (std::size_t j = 1; j < width; ++j) {
            if (auto next = remove_column_pair(cur, j)) {
                terminal = false;
                if (seen.insert(*next).second) {
                    stack.push_back(*next);
                }
            }
        }
        if (terminal) {
            terminals.insert(cur);
        }
    }
    return terminals;
}

// Every ab-diagram whose shape is a partition of n.
inline std::vector<ABDiagram> all_diagrams_of_size(std::size_t n)
{
    std::vector<ABDiagram> out;
    for (const auto& lambda : partitions_of(n)) {
        for (const auto& rows : brute_force_diagrams(lambda.parts())) {
            out.emplace_back(rows);
        }
    }
    return out;
}

// Jordan partition of a nilpotent matrix from rank(x^k) differences.
inline std::vector<std::size_t> nilpotent_partition_by_ranks(const RatMatrix& x)
{
    const std::size_t n = x.rows();
    std::vector<std::size_t> r{n};
    RatMatrix p = RatMatrix::identity(n);
    for (std::size_t k = 1; k <= n + 1; ++k) {
        p = p * x;
        r.push_back(rank(p));
    }
    std::vector<std::size_t> parts;
    for (std::size_t k = n; k >= 1; --k) {
        const std::size_t exact = (r[k - 1] - r[k]) - (r[k] - r[k + 1]);
        parts.insert(parts.end(), exact, k);
    }
    return parts;
}

}  // namespace sheets::testing

#endif
