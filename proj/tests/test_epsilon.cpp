#include "doctest.h"

#include "sheets/epsilon.hpp"
#include "sheets/linalg.hpp"
#include "support.hpp"

#include <algorithm>

using namespace sheets;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

Rational power(const Rational& s, long k)
{
    Rational out = 1;
    for (long i = 0; i < std::abs(k); ++i) {
        out *= s;
    }
    return k < 0 ? 1 / out : out;
}

}  // namespace

TEST_CASE("epsilon on gl_2")
{
    const auto t = build_triple(Partition({2}));
    CHECK(epsilon_of_torus(t, {{q(2), q(0)}}) == RatMatrix{{q(1), q(1)}, {q(1), q(1)}});
    CHECK(epsilon(GradedPoint{t, RatMatrix::zero(2)}) == t.e);

    // e + m I + c^2 f with m = (a+b)/2, c = (a-b)/2.
    const Rational a = q(3);
    const Rational b = q(-1, 2);
    const Rational m = (a + b) / 2;
    const Rational c = (a - b) / 2;
    CHECK(epsilon_of_torus(t, {{a, b}}) == RatMatrix{{m, q(1)}, {c * c, m}});
}

TEST_CASE("epsilon on lambda = (2,1)")
{
    // Frozen from a symbolic enumeration of e + (g^f in non-positive even
    // weights): the unique point with the rank profile of e + diag(1,-1,1).
    const auto t = build_triple(Partition({2, 1}));
    const RatMatrix expected{{q(0), q(1), q(0)}, {q(1), q(0), q(0)}, {q(0), q(0), q(1)}};
    CHECK(epsilon_of_torus(t, {{q(1), q(-1)}}) == expected);
}

TEST_CASE("epsilon on the full graded domain")
{
    const auto t = build_triple(Partition({3, 2}));
    std::mt19937 rng(31);
    const auto weights = integer_weights(t.h);
    for (int i = 0; i < 10; ++i) {
        RatMatrix z = RatMatrix::zero(5);
        for (std::size_t r = 0; r < 5; ++r) {
            for (std::size_t c = 0; c < 5; ++c) {
                const long w = weights[r] - weights[c];
                if (w <= 0 && w % 2 == 0) {
                    z(r, c) = testing::random_rational(rng, 3, 2);
                }
            }
        }
        const auto x = epsilon(GradedPoint{t, z});
        CHECK(slice_contains(t, x));
        for (long w = 1; w <= 8; ++w) {
            CHECK(grading_component(x - t.e, t.h, w).is_zero());
        }
        CHECK(char_poly(x) == char_poly(t.e + z));
    }

    RatMatrix bad = RatMatrix::zero(5);
    bad(0, 1) = 1;  // weight 2
    CHECK_THROWS_AS(epsilon(GradedPoint{t, bad}), std::invalid_argument);
    RatMatrix odd = RatMatrix::zero(5);
    odd(3, 0) = 1;  // weight -1 - 2 = -3
    CHECK_THROWS_AS(epsilon(GradedPoint{t, odd}), std::invalid_argument);
}

TEST_CASE("slice_contains")
{
    const auto t = build_triple(Partition({2}));
    CHECK(slice_contains(t, t.e));
    CHECK_FALSE(slice_contains(t, t.e + RatMatrix::diagonal({q(1), q(0)})));
    CHECK(slice_contains(t, t.e + q(5) * t.f + q(2) * RatMatrix::identity(2)));
}

TEST_CASE("same_rank_profile")
{
    std::mt19937 rng(13);
    for (int i = 0; i < 10; ++i) {
        const auto lambda = Partition({3, 2, 1});
        const auto x = build_triple(lambda).e + torus_matrix(lambda, testing::random_torus(rng, 3, 2, 1));
        const auto g = testing::random_invertible(rng, 6);
        CHECK(same_rank_profile(x, g * x * inverse(g)));
    }
    const auto e2 = build_triple(Partition({2})).e;
    CHECK_FALSE(same_rank_profile(e2, RatMatrix::zero(2)));
    CHECK_FALSE(same_rank_profile(RatMatrix::diagonal({q(1), q(2)}), RatMatrix::diagonal({q(1), q(3)})));
    CHECK_THROWS_AS(same_rank_profile(RatMatrix{{q(0), q(1)}, {q(-1), q(0)}}, RatMatrix::zero(2)), NotSplitError);
}

TEST_CASE("slice landing and conjugacy on small partitions")
{
    std::mt19937 rng(101);
    for (std::size_t n = 1; n <= 5; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            const auto triple = build_triple(lambda);
            const SliceProjector project(triple);
            for (int i = 0; i < 5; ++i) {
                const auto z = torus_matrix(lambda, testing::random_torus(rng, lambda.largest()));
                const auto x = project(z);
                CHECK(slice_contains(triple, x));
                CHECK(same_rank_profile(triple.e + z, x));
            }
        }
    }
}

TEST_CASE("scaling_action")
{
    const auto t = build_triple(Partition({3, 1}));
    std::mt19937 rng(9);
    const auto x = testing::random_matrix(rng, 4);
    CHECK(scaling_action(q(7, 3), t, t.e) == t.e);
    CHECK(scaling_action(q(1), t, x) == x);
    CHECK_THROWS_AS(scaling_action(q(0), t, x), std::invalid_argument);
    const Rational s = q(-2, 5);
    CHECK(scaling_action(1 / s, t, scaling_action(s, t, x)) == x);

    // gl_2: the weight -2 (f) coefficient of epsilon(e + s^2 t) is s^4 c^2.
    const auto t2 = build_triple(Partition({2}));
    const Rational a = q(4, 3);
    const Rational b = q(1, 2);
    const Rational c = (a - b) / 2;
    const auto scaled = epsilon_of_torus(t2, {{s * s * a, s * s * b}});
    CHECK(scaled(1, 0) == power(s, 4) * c * c);

    // Slice points stay in the slice.
    for (const auto& lambda : {Partition({3, 1}), Partition({2, 2}), Partition({4})}) {
        const auto triple = build_triple(lambda);
        const auto point = epsilon_of_torus(triple, testing::random_torus(rng, lambda.largest()));
        CHECK(slice_contains(triple, scaling_action(s, triple, point)));
    }
}

TEST_CASE("homogeneity of the graded components")
{
    std::mt19937 rng(55);
    for (const auto& lambda : {Partition({3}), Partition({3, 2}), Partition({4, 2, 1}), Partition({2, 2, 1})}) {
        const auto triple = build_triple(lambda);
        const SliceProjector project(triple);
        for (int i = 0; i < 3; ++i) {
            const auto t = torus_matrix(lambda, testing::random_torus(rng, lambda.largest()));
            const Rational s = testing::random_nonzero_rational(rng);
            const auto base = project(t) - triple.e;
            const auto scaled = project(s * t) - triple.e;
            for (long j = 0; j >= -static_cast<long>(lambda.largest()); --j) {
                CHECK(grading_component(scaled, triple.h, 2 * j) ==
                      power(s, -j + 1) * grading_component(base, triple.h, 2 * j));
            }
        }
    }
}

TEST_CASE("regular case: symmetry and Jordan blocks")
{
    std::mt19937 rng(77);
    for (std::size_t n = 2; n <= 4; ++n) {
        const auto triple = build_triple(Partition({n}));
        const SliceProjector project(triple);
        auto coords = testing::random_torus(rng, n).coords;
        std::sort(coords.begin(), coords.end());
        const auto reference = project(RatMatrix::diagonal(coords));
        while (std::next_permutation(coords.begin(), coords.end())) {
            CHECK(project(RatMatrix::diagonal(coords)) == reference);
        }
    }

    // One Jordan block per eigenvalue, of size m(z, c).
    const auto triple = build_triple(Partition({5}));
    const Vector z{q(1), q(-2), q(1), q(1), q(-2)};
    const auto x = epsilon_of_torus(triple, {z});
    CHECK(jordan_block_sizes(x, q(1)) == std::vector<std::size_t>{3});
    CHECK(jordan_block_sizes(x, q(-2)) == std::vector<std::size_t>{2});
}
