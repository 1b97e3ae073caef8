#include "doctest.h"

#include "sheets/ab_diagram.hpp"
#include "sheets/linalg.hpp"
#include "support.hpp"

using namespace sheets;

namespace {

LabelSequence labels_from_mask(std::size_t delta, std::size_t mask)
{
    LabelSequence out;
    for (std::size_t i = 0; i < delta; ++i) {
        out.push_back((mask >> i) & 1U ? Label::b : Label::a);
    }
    return out;
}

std::vector<std::string> to_strings(const std::vector<ABDiagram>& ds)
{
    std::vector<std::string> out;
    for (const auto& d : ds) {
        out.push_back(d.to_string());
    }
    return out;
}

// Random element of K: invertible on V_a and on V_b separately.
RatMatrix random_k_element(std::mt19937& rng, const Involution& inv)
{
    const auto& a = inv.a_indices();
    const auto& b = inv.b_indices();
    const auto ga = testing::random_invertible(rng, a.size());
    const auto gb = testing::random_invertible(rng, b.size());
    RatMatrix g = RatMatrix::zero(inv.dimension());
    for (std::size_t r = 0; r < a.size(); ++r) {
        for (std::size_t c = 0; c < a.size(); ++c) {
            g(a[r], a[c]) = ga(r, c);
        }
    }
    for (std::size_t r = 0; r < b.size(); ++r) {
        for (std::size_t c = 0; c < b.size(); ++c) {
            g(b[r], b[c]) = gb(r, c);
        }
    }
    return g;
}

}  // namespace

TEST_CASE("construction and serialization")
{
    const auto d = ABDiagram::parse("b/aba/abab");
    CHECK(d.to_string() == "abab/aba/b");
    CHECK(d.shape() == Partition({4, 3, 1}));
    CHECK(d.count(Label::a) == 4);
    CHECK(d.count(Label::b) == 4);
    CHECK(ABDiagram::parse("").empty());
    CHECK(ABDiagram::parse("").to_string().empty());
    CHECK(ABDiagram::parse("ba/ab").to_string() == "ab/ba");
    CHECK(ABDiagram::parse(d.to_string()) == d);
    CHECK_THROWS_AS(ABDiagram::parse("aab"), std::invalid_argument);
    CHECK_THROWS_AS(ABDiagram::parse("ab//a"), std::invalid_argument);
    CHECK_THROWS_AS(ABDiagram::parse("abc"), std::invalid_argument);
    CHECK(alternating_row(Label::b, 5) == "babab");
}

TEST_CASE("delta_of_phi and signatures")
{
    const auto lambda = Partition({4, 3, 1});
    CHECK(delta_of_phi(lambda, parse_labels("aab")).to_string() == "abab/aba/b");
    CHECK(delta_of_phi(lambda, parse_labels("bba")).to_string() == "baba/bab/a");
    CHECK(signature_of_phi(lambda, parse_labels("aab")) == Signature{4, 4});
    CHECK(signature_of_phi(lambda, parse_labels("aaa")) == Signature{5, 3});
    CHECK(is_admissible(ABDiagram::parse("abab/aba/b"), 4, 4));
    CHECK_FALSE(is_admissible(ABDiagram::parse("abab/aba/a"), 4, 4));

    // signature_of_phi agrees with the splitting of the involution.
    for (std::size_t n = 1; n <= 6; ++n) {
        for (const auto& mu : partitions_of(n)) {
            for (std::size_t mask = 0; mask < (std::size_t{1} << mu.length()); ++mask) {
                const auto phi = labels_from_mask(mu.length(), mask);
                CHECK(signature_of_phi(mu, phi) == build_AIII(mu, phi).signature());
            }
        }
    }
}

TEST_CASE("enumerate_admissible")
{
    CHECK(to_strings(enumerate_admissible(Partition({4, 3, 1}), 4, 4)) ==
          std::vector<std::string>{"abab/aba/b", "abab/bab/a", "baba/aba/b", "baba/bab/a"});
    CHECK(to_strings(enumerate_admissible(Partition({1}), 1, 0)) == std::vector<std::string>{"a"});
    CHECK(enumerate_admissible(Partition({1}), 0, 0).empty());
    CHECK(enumerate_admissible(Partition({2}), 2, 0).empty());

    for (std::size_t n = 1; n <= 8; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            const auto pictures = testing::brute_force_diagrams(lambda.parts());
            for (std::size_t na = 0; na <= n; ++na) {
                std::vector<std::string> expected;
                for (const auto& rows : pictures) {
                    if (testing::count_label(rows, 'a') == na) {
                        std::string joined;
                        for (const auto& r : rows) {
                            joined += (joined.empty() ? "" : "/") + r;
                        }
                        expected.push_back(joined);
                    }
                }
                CHECK(to_strings(enumerate_admissible(lambda, na, n - na)) == expected);
            }
        }
    }
}

TEST_CASE("gamma of the standard nilpotent")
{
    for (std::size_t n = 1; n <= 6; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            const auto e = build_triple(lambda).e;
            for (std::size_t mask = 0; mask < (std::size_t{1} << lambda.length()); ++mask) {
                const auto phi = labels_from_mask(lambda.length(), mask);
                CHECK(gamma_of_nilpotent(build_AIII(lambda, phi), e) == delta_of_phi(lambda, phi));
            }
        }
    }
}

TEST_CASE("gamma of other nilpotents")
{
    const auto lambda = Partition({3, 2});
    const auto inv = build_AIII(lambda, parse_labels("ab"));
    // Zero: one single-box row per basis vector.
    REQUIRE(inv.signature() == Signature{3, 2});
    CHECK(gamma_of_nilpotent(inv, RatMatrix::zero(5)).to_string() == "a/a/a/b/b");

    // Invariance under K-conjugation, and shape equals the rank partition.
    std::mt19937 rng(17);
    for (const auto& mu : {Partition({3, 2}), Partition({4, 3, 1}), Partition({2, 2, 1, 1})}) {
        const auto e = build_triple(mu).e;
        for (std::size_t mask = 0; mask < (std::size_t{1} << mu.length()); ++mask) {
            const auto aiii = build_AIII(mu, labels_from_mask(mu.length(), mask));
            const auto g = random_k_element(rng, aiii);
            const auto x = g * e * inverse(g);
            REQUIRE(in_p(aiii, x));
            const auto d = gamma_of_nilpotent(aiii, x);
            CHECK(d == gamma_of_nilpotent(aiii, e));
            CHECK(d.shape().parts() == testing::nilpotent_partition_by_ranks(x));
        }
    }

    // A nilpotent in p that is not K-conjugate to e: e restricted to one block.
    const auto aiii = build_AIII(Partition({4, 3, 1}), parse_labels("aab"));
    RatMatrix x = build_triple(Partition({4, 3, 1})).e;
    for (std::size_t c = 4; c < 8; ++c) {
        for (std::size_t r = 0; r < 8; ++r) {
            x(r, c) = 0;
        }
    }
    CHECK(gamma_of_nilpotent(aiii, x).to_string() == "abab/a/a/b/b");

    CHECK_THROWS_AS(gamma_of_nilpotent(build_AI(lambda), RatMatrix::zero(5)), std::invalid_argument);
    CHECK_THROWS_AS(gamma_of_nilpotent(inv, RatMatrix::identity(5)), std::invalid_argument);
    RatMatrix not_in_p = RatMatrix::zero(5);
    not_in_p(0, 2) = 1;  // v_1 and v_3 of the first block share a label
    CHECK_THROWS_AS(gamma_of_nilpotent(inv, not_in_p), std::invalid_argument);
}

TEST_CASE("column removal and rigidify")
{
    CHECK(column_lengths(ABDiagram::parse("abab/aba/b")) == std::vector<std::size_t>{3, 2, 2, 1});
    CHECK_FALSE(remove_column_pair(ABDiagram::parse("abab/aba/b"), 1).has_value());
    CHECK(remove_column_pair(ABDiagram::parse("abab/aba/b"), 2)->to_string() == "ab/a/b");
    CHECK(rigidify(ABDiagram::parse("abab/aba/b")).to_string() == "ab/a/b");
    CHECK(rigidify(ABDiagram::parse("abab/bab/a")).to_string() == "ab/a/b");
    CHECK(rigidify(ABDiagram::parse("baba/aba/b")).to_string() == "ba/a/b");
    CHECK(rigidify(ABDiagram::parse("baba/bab/a")).to_string() == "ba/a/b");
    CHECK(rigidify(ABDiagram::parse("aba/ba/a")).to_string() == "aba/ba/a");
    CHECK(rigidify(ABDiagram::parse("ab")).empty());
    CHECK(rigidify(ABDiagram()).empty());

    for (std::size_t n = 1; n <= 7; ++n) {
        for (const auto& d : testing::all_diagrams_of_size(n)) {
            const auto r = rigidify(d);
            CHECK(rigidify(r) == r);
            CHECK(testing::exhaustive_rigidifications(d) == std::set<ABDiagram>{r});
            CHECK(d.count(Label::a) - r.count(Label::a) == d.count(Label::b) - r.count(Label::b));
        }
    }
}
