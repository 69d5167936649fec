#include "balcone/errors.hpp"
#include "balcone/variety.hpp"

#include "doctest.h"
#include "support.hpp"

#include <algorithm>

using namespace balcone;

namespace {

struct QuinticConifold {
    AmbientSpace x = AmbientSpace::make({4, 1});
    CompleteIntersection y = CompleteIntersection::make(x, {{{1, 1}}, {{4, 1}}});
    CohomClass beta = CohomClass::generator(x, 0);
    CohomClass alpha = CohomClass::generator(x, 1);
};

Rational number(const CompleteIntersection &ci,
                std::initializer_list<CohomClass> factors) {
    std::vector<CohomClass> f(factors);
    return intersection_number(ci, f);
}

} // namespace

TEST_CASE("ci_new") {
    QuinticConifold q;
    CHECK(q.y.dim() == 3);
    CHECK(q.y.codim() == 2);

    auto p2 = CompleteIntersection::make(AmbientSpace::make({2}), {});
    CHECK(p2.dim() == 2);

    std::vector<MultiDegree> five(5, MultiDegree{{1, 1}});
    CHECK_THROWS_AS(CompleteIntersection::make(q.x, five), ValidationError);

    // h_1^2 = 0 on P^1 x P^2, so two (1,0) divisors cut out nothing.
    CHECK_THROWS_WITH_AS(
        CompleteIntersection::make(AmbientSpace::make({1, 2}),
                                   {{{1, 0}}, {{1, 0}}}),
        doctest::Contains("annihilate"), ValidationError);
    CHECK_THROWS_AS(CompleteIntersection::make(q.x, {{{1, 1, 1}}}),
                    ValidationError);
}

TEST_CASE("fundamental_class") {
    QuinticConifold q;
    CHECK(fundamental_class(q.y) ==
          Rational(5) * (q.alpha * q.beta) + Rational(4) * (q.beta * q.beta));

    auto p2 = CompleteIntersection::make(AmbientSpace::make({2}), {});
    CHECK(fundamental_class(p2) == CohomClass::one(p2.space()));

    AmbientSpace p3 = AmbientSpace::make({3});
    auto quadric = CompleteIntersection::make(p3, {{{2}}});
    CHECK(fundamental_class(quadric) ==
          Rational(2) * CohomClass::generator(p3, 0));
}

TEST_CASE("intersection_number on the quintic conifold") {
    QuinticConifold q;
    CHECK(number(q.y, {q.alpha, q.beta, q.beta}) == 4);
    CHECK(number(q.y, {q.beta, q.beta, q.beta}) == 5);
    CHECK(number(q.y, {q.alpha, q.alpha, q.beta}) == 0);
    // A degree-2 factor counts twice.
    CHECK(number(q.y, {q.alpha, q.beta * q.beta}) == 4);
}

TEST_CASE("intersection_number degree checks") {
    QuinticConifold q;
    try {
        number(q.y, {q.alpha, q.beta});
        FAIL("expected a degree mismatch");
    } catch (const DegreeMismatchError &e) {
        CHECK(e.expected() == 3);
        CHECK(e.actual() == 2);
        CHECK(std::string(e.what()).find("expected total degree 3") !=
              std::string::npos);
    }
    CHECK_THROWS_AS(number(q.y, {q.alpha + CohomClass::one(q.x), q.beta, q.beta}),
                    ValidationError);
    CHECK(number(q.y, {q.alpha * q.alpha, q.beta}) == 0);
}

TEST_CASE("intersection_number is symmetric and multilinear") {
    QuinticConifold q;
    balcone::testing::Rng rng(11);
    auto random_divisor = [&] {
        return balcone::testing::random_rational(rng) * q.alpha +
               balcone::testing::random_rational(rng) * q.beta;
    };
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<CohomClass> f = {random_divisor(), random_divisor(),
                                     random_divisor()};
        Rational v = intersection_number(q.y, f);
        std::sort(f.begin(), f.end(), [](const CohomClass &a, const CohomClass &b) {
            return a.terms() < b.terms();
        });
        do {
            CHECK(intersection_number(q.y, f) == v);
        } while (std::next_permutation(
            f.begin(), f.end(), [](const CohomClass &a, const CohomClass &b) {
                return a.terms() < b.terms();
            }));

        CohomClass g = random_divisor();
        Rational a = balcone::testing::random_rational(rng);
        std::vector<CohomClass> mixed = {a * f[0] + g, f[1], f[2]};
        std::vector<CohomClass> only_g = {g, f[1], f[2]};
        CHECK(intersection_number(q.y, mixed) ==
              a * intersection_number(q.y, f) + intersection_number(q.y, only_g));
    }
}

TEST_CASE("pairing_matrix") {
    QuinticConifold q;
    PairingMatrix pm =
        pairing_matrix(q.y, {q.alpha, q.beta}, {q.alpha * q.beta, q.beta * q.beta});
    CHECK(pm.entries == Matrix{{0, 4}, {4, 5}});
    CHECK(pm.entries.determinant() == -16);
    CHECK(pm.non_degenerate());
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(pm.entries(i, j) ==
                  number(q.y, {pm.row_basis[i], pm.col_basis[j]}));

    AmbientSpace p2 = AmbientSpace::make({2});
    auto y2 = CompleteIntersection::make(p2, {});
    CohomClass h = CohomClass::generator(p2, 0);
    CHECK(pairing_matrix(y2, {h}, {h}).entries == Matrix{{1}});

    AmbientSpace p1p1 = AmbientSpace::make({1, 1});
    auto y11 = CompleteIntersection::make(p1p1, {});
    CohomClass h1 = CohomClass::generator(p1p1, 0);
    CohomClass h2 = CohomClass::generator(p1p1, 1);
    PairingMatrix k = pairing_matrix(y11, {h1, h2}, {h1, h2});
    CHECK(k.entries == Matrix{{0, 1}, {1, 0}});
    CHECK(k.non_degenerate());

    CHECK_THROWS_AS(pairing_matrix(q.y, {q.alpha * q.beta}, {q.beta}),
                    ValidationError);
}

TEST_CASE("exceptional divisor classes from divisor relations") {
    // [x_4 = 0] has bidegree (1,0), [y_1 = 0] has (0,1), [g = 0] has (4,0).
    QuinticConifold q;
    CohomClass e1 = divisor_class(q.x, {{1, 0}}) - divisor_class(q.x, {{0, 1}});
    CohomClass e2 = divisor_class(q.x, {{4, 0}}) - divisor_class(q.x, {{0, 1}});
    CHECK(e1 == q.beta - q.alpha);
    CHECK(e2 == Rational(4) * q.beta - q.alpha);
}
