#include "doctest.h"

#include "sheets/gl_setup.hpp"
#include "sheets/linalg.hpp"
#include "support.hpp"

#include <map>

using namespace sheets;
using sheets::testing::random_matrix;

namespace {

const SL2Triple gl2 = build_triple(Partition({2}));

Rational q(long n, long d = 1) { return make_rational(n, d); }

}  // namespace

TEST_CASE("rational normalization and string forms")
{
    CHECK(make_rational(6, -4) == q(-3, 2));
    CHECK(make_rational(6, -4).get_den() == 2);
    CHECK(to_fraction_string(q(3)) == "3/1");
    CHECK(to_fraction_string(q(-1, 2)) == "-1/2");
    CHECK(to_display_string(q(3)) == "3");
    CHECK(parse_rational("-6/4") == q(-3, 2));
    CHECK(parse_rational("7") == q(7));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);

    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        const Rational r = testing::random_rational(rng, 50, 50);
        CHECK(parse_rational(to_fraction_string(r)) == r);
    }
}

TEST_CASE("bracket")
{
    CHECK(bracket(gl2.e, gl2.f) == RatMatrix::diagonal({q(1), q(-1)}));
    CHECK(bracket(gl2.h, gl2.e) == q(2) * gl2.e);
    CHECK(bracket(gl2.e, gl2.e).is_zero());
    CHECK_THROWS_AS(bracket(RatMatrix::zero(2), RatMatrix::zero(3)), DimensionError);
    CHECK_THROWS_AS(bracket(RatMatrix(2, 3), RatMatrix(2, 3)), DimensionError);

    std::mt19937 rng(11);
    for (int i = 0; i < 20; ++i) {
        const auto x = random_matrix(rng, 4);
        const auto y = random_matrix(rng, 4);
        const auto z = random_matrix(rng, 4);
        CHECK(bracket(x, y) == -bracket(y, x));
        CHECK((bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))).is_zero());
    }
}

TEST_CASE("rank and kernel")
{
    CHECK(rank(RatMatrix::zero(3)) == 0);
    CHECK(rank(RatMatrix::identity(5)) == 5);
    CHECK(rank(build_triple(Partition({4, 3, 1})).e) == 5);
    CHECK(kernel_basis(RatMatrix::identity(3)).empty());
    CHECK(kernel_basis(RatMatrix::zero(2)).size() == 2);

    // f v_1 = v_2, f v_2 = 0: the kernel is the line of v_2.
    const auto ker = kernel_basis(gl2.f);
    REQUIRE(ker.size() == 1);
    CHECK(sgn(ker[0][0]) == 0);
    CHECK(sgn(ker[0][1]) != 0);

    std::mt19937 rng(3);
    for (int i = 0; i < 30; ++i) {
        // Low-rank products exercise the rank-deficient paths.
        const std::size_t inner = 1 + static_cast<std::size_t>(i % 4);
        RatMatrix a(5, inner);
        RatMatrix b(inner, 6);
        for (std::size_t r = 0; r < 5; ++r) {
            for (std::size_t c = 0; c < inner; ++c) {
                a(r, c) = testing::random_rational(rng);
            }
        }
        for (std::size_t r = 0; r < inner; ++r) {
            for (std::size_t c = 0; c < 6; ++c) {
                b(r, c) = testing::random_rational(rng);
            }
        }
        const RatMatrix m = a * b;
        const auto kernel = kernel_basis(m);
        CHECK(rank(m) + kernel.size() == m.cols());
        CHECK(rank(m) <= inner);
        for (const auto& v : kernel) {
            const Vector image = m * v;
            CHECK(std::all_of(image.begin(), image.end(), [](const Rational& x) { return sgn(x) == 0; }));
        }
    }
}

TEST_CASE("solve_linear")
{
    const Vector b{q(1), q(-2), q(3, 4)};
    CHECK(solve_linear(RatMatrix::identity(3), b) == b);
    CHECK_FALSE(solve_linear(RatMatrix::zero(2), Vector{q(1), q(0)}).has_value());

    const RatMatrix under{{q(1), q(1)}, {q(0), q(0)}};
    const auto x = solve_linear(under, Vector{q(2), q(0)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] + (*x)[1] == q(2));

    CHECK_THROWS_AS(solve_linear(RatMatrix::identity(2), Vector{q(1)}), DimensionError);
}

TEST_CASE("char_poly")
{
    CHECK(char_poly(RatMatrix::diagonal({q(1), q(2)})).coeffs == std::vector<Rational>{q(2), q(-3), q(1)});
    CHECK(char_poly(build_triple(Partition({3})).e).coeffs == std::vector<Rational>{q(0), q(0), q(0), q(1)});

    // [[m,1],[c^2,m]] -> x^2 - 2 m x + (m^2 - c^2)
    const Rational m = q(5, 3);
    const Rational c = q(-2, 7);
    const RatMatrix x{{m, q(1)}, {c * c, m}};
    CHECK(char_poly(x).coeffs == std::vector<Rational>{m * m - c * c, -2 * m, q(1)});

    std::mt19937 rng(5);
    for (int i = 0; i < 10; ++i) {
        const auto a = random_matrix(rng, 4);
        const auto p = char_poly(a);
        const Rational at = testing::random_rational(rng);
        CHECK(p(at) == testing::leibniz_det(at * RatMatrix::identity(4) - a));
    }
}

TEST_CASE("rational_spectrum")
{
    const auto s = rational_spectrum(RatMatrix::diagonal({q(3), q(3), q(0)}));
    REQUIRE(s.has_value());
    CHECK(*s == Spectrum{{q(0), 1}, {q(3), 2}});

    const auto swap = rational_spectrum(RatMatrix{{q(0), q(1)}, {q(1), q(0)}});
    REQUIRE(swap.has_value());
    CHECK(*swap == Spectrum{{q(-1), 1}, {q(1), 1}});

    CHECK_FALSE(rational_spectrum(RatMatrix{{q(0), q(1)}, {q(-1), q(0)}}).has_value());

    // x^2 - 2 is irreducible; a split factor alongside does not help.
    CHECK_FALSE(rational_spectrum(RatMatrix{{q(0), q(2), q(0)}, {q(1), q(0), q(0)}, {q(0), q(0), q(5)}}).has_value());

    SUBCASE("conjugated diagonal matrices recover their spectrum")
    {
        std::mt19937 rng(17);
        for (int i = 0; i < 10; ++i) {
            Vector diag;
            for (int k = 0; k < 5; ++k) {
                diag.push_back(testing::random_rational(rng, 3, 3));
            }
            diag[3] = diag[1];
            const auto g = testing::random_invertible(rng, 5);
            const auto spectrum = rational_spectrum(g * RatMatrix::diagonal(diag) * inverse(g));
            REQUIRE(spectrum.has_value());
            std::map<Rational, std::size_t> expected;
            for (const auto& d : diag) {
                ++expected[d];
            }
            REQUIRE(spectrum->size() == expected.size());
            for (const auto& ev : *spectrum) {
                CHECK(expected[ev.value] == ev.multiplicity);
            }
        }
    }

    SUBCASE("large rational roots")
    {
        const Rational big = parse_rational("123456789123/1000");
        const auto spectrum = rational_spectrum(RatMatrix::diagonal({big, -big, q(1, 3)}));
        REQUIRE(spectrum.has_value());
        CHECK(*spectrum == Spectrum{{-big, 1}, {q(1, 3), 1}, {big, 1}});
    }
}

TEST_CASE("conjugate_by_exp")
{
    std::mt19937 rng(23);
    const RatMatrix x = random_matrix(rng, 3);
    CHECK(conjugate_by_exp(RatMatrix::zero(3), x) == x);

    // exp(c f) (e + diag(a, b)) exp(-c f) with c = (a - b)/2.
    const Rational a = q(7, 3);
    const Rational b = q(-1, 2);
    const Rational c = (a - b) / 2;
    const RatMatrix expected{{(a + b) / 2, q(1)}, {c * c, (a + b) / 2}};
    CHECK(conjugate_by_exp(c * gl2.f, gl2.e + RatMatrix::diagonal({a, b})) == expected);

    CHECK_THROWS_AS(conjugate_by_exp(RatMatrix::identity(2), RatMatrix::zero(2)), std::domain_error);

    const auto e = build_triple(Partition({3, 2})).e;
    for (int i = 0; i < 10; ++i) {
        const RatMatrix n = testing::random_rational(rng) * e + testing::random_rational(rng) * e * e;
        const RatMatrix y = random_matrix(rng, 5);
        const RatMatrix z = conjugate_by_exp(n, y);
        CHECK(char_poly(z) == char_poly(y));
        const Rational shift = testing::random_rational(rng);
        CHECK(rank_sequence(z, shift) == rank_sequence(y, shift));
    }
}

TEST_CASE("jordan_block_sizes")
{
    const auto e = build_triple(Partition({4, 3, 1})).e;
    CHECK(jordan_block_sizes(e, q(0)) == std::vector<std::size_t>{4, 3, 1});
    CHECK(jordan_block_sizes(e + RatMatrix::identity(8), q(1)) == std::vector<std::size_t>{4, 3, 1});
    CHECK(jordan_block_sizes(e, q(1)).empty());
}
