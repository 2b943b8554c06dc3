#include <doctest.h>

#include "innc/errors.hpp"
#include "innc/geometry.hpp"

using namespace innc;

namespace {

AffineForm form(std::vector<long> c, Rational constant) {
    std::vector<Integer> coeffs(c.begin(), c.end());
    return {coeffs, constant};
}

CubePoint pt(std::vector<Rational> x) { return CubePoint(std::move(x)); }

} // namespace

TEST_CASE("evaluate_form") {
    CHECK(evaluate_form(form({2, 3}, 2), pt({make_rational(1, 2), make_rational(1, 2)})) ==
          make_rational(1, 2));
    CHECK(evaluate_form(form({4, -1, 7}, make_rational(5, 3)), pt({0, 0, 0})) ==
          make_rational(-5, 3));
    CHECK(evaluate_form(form({1, -1}, 0), pt({make_rational(1, 3), make_rational(1, 3)})) == 0);
    CHECK_THROWS_AS(evaluate_form(form({1, 1, 1}, 0), pt({0, 0})), DimensionError);
}

TEST_CASE("cube points stay in the unit cube") {
    CHECK_NOTHROW(pt({0, 1, make_rational(1, 2)}));
    CHECK_THROWS_AS(pt({make_rational(3, 2)}), DomainError);
    CHECK_THROWS_AS(pt({make_rational(-1, 5)}), DomainError);
}

TEST_CASE("contains") {
    // 2x1 + 3x2 >= 2 written as 2 - 2x1 - 3x2 <= 0
    const HalfspaceSystem sys(2, {form({-2, -3}, -2)});
    CHECK(contains(sys, pt({make_rational(1, 2), make_rational(1, 2)})));
    CHECK_FALSE(contains(sys, pt({make_rational(1, 4), make_rational(1, 4)})));
    CHECK(contains(HalfspaceSystem(3), pt({0, make_rational(2, 7), 1})));
    CHECK_THROWS_AS(contains(sys, pt({0})), DimensionError);
    CHECK_THROWS_AS(HalfspaceSystem(2, {form({1}, 0)}), DimensionError);
}

TEST_CASE("tight_set") {
    const HalfspaceSystem sys(2, {form({-2, -3}, -2)});
    CHECK(tight_set(sys, pt({1, 0})) == std::vector<std::size_t>{0});
    CHECK(tight_set(sys, pt({1, 1})).empty());

    const HalfspaceSystem two(2, {form({-1, 0}, make_rational(-1, 2)), form({0, -1}, make_rational(-1, 3))});
    CHECK(tight_set(two, pt({make_rational(1, 2), make_rational(1, 3)})) ==
          std::vector<std::size_t>{0, 1});
    CHECK_THROWS_AS(tight_set(sys, pt({0, 0})), DomainError);
}

TEST_CASE("face_dimension") {
    const std::vector<AffineForm> one{form({2, 3}, 2)};
    CHECK(face_dimension(one) == 1);
    const std::vector<AffineForm> two{form({1, 0, 0}, 0), form({0, 1, 1}, 1)};
    CHECK(face_dimension(two) == 1);
    const std::vector<AffineForm> dup{form({2, 3}, 2), form({2, 3}, 2), form({4, 6}, 4)};
    CHECK(face_dimension(dup) == 1);
    const std::vector<AffineForm> bad{form({1, 1}, 1), form({2, 2}, 1)};
    CHECK_THROWS_AS(face_dimension(bad), DomainError);
    CHECK_THROWS_AS(face_dimension(std::vector<AffineForm>{}), DomainError);
    const std::vector<AffineForm> mixed{form({1, 1}, 1), form({1}, 1)};
    CHECK_THROWS_AS(face_dimension(mixed), DimensionError);
}

TEST_CASE("forms combine exactly") {
    const auto a = form({1, -2}, make_rational(1, 3));
    const auto b = form({0, 5}, make_rational(1, 6));
    CHECK(a + b == form({1, 3}, make_rational(1, 2)));
    CHECK(a.scaled(-3) == form({-3, 6}, -1));
    CHECK(form({0, 0}, 1).is_constant());
    CHECK_THROWS_AS(a + form({1}, 0), DimensionError);
}

TEST_CASE("integer_rank") {
    CHECK(integer_rank({}) == 0);
    CHECK(integer_rank({{1, 2}, {2, 4}}) == 1);
    CHECK(integer_rank({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}) == 2);
    CHECK(integer_rank({{0, 0}}) == 0);
}

TEST_CASE("box_tight_forms") {
    CHECK(box_tight_forms(pt({make_rational(1, 2), make_rational(1, 2)})).empty());
    const auto forms = box_tight_forms(pt({0, 1}));
    REQUIRE(forms.size() == 2);
    for (const auto &f : forms)
        CHECK(evaluate_form(f, pt({0, 1})) == 0);
}

TEST_CASE("relative_interior_point") {
    // the segment x1 + x2 = 1 inside the square
    const std::vector<AffineForm> eq{form({1, 1}, 1)};
    const auto p = relative_interior_point(2, {}, eq);
    REQUIRE(p);
    CHECK((*p)[0] + (*p)[1] == 1);
    CHECK((*p)[0] > 0);
    CHECK((*p)[0] < 1);

    // x1 + x2 = 3 misses the square
    const std::vector<AffineForm> far{form({1, 1}, 3)};
    CHECK_FALSE(relative_interior_point(2, {}, far));

    // x1 <= 0 forces the facet
    const std::vector<AffineForm> ineq{form({1, 0}, 0)};
    const auto q = relative_interior_point(2, ineq, {});
    REQUIRE(q);
    CHECK((*q)[0] == 0);
    CHECK((*q)[1] > 0);
    CHECK((*q)[1] < 1);
    CHECK_THROWS_AS(relative_interior_point(3, ineq, {}), DimensionError);
}

TEST_CASE("affine_span_key ignores scaling and order") {
    const std::vector<AffineForm> a{form({2, 3}, 2), form({1, 0}, make_rational(1, 2))};
    const std::vector<AffineForm> b{form({-2, 0}, -1), form({4, 6}, 4)};
    CHECK(affine_span_key(a) == affine_span_key(b));
    const std::vector<AffineForm> c{form({2, 3}, 1)};
    CHECK_FALSE(affine_span_key(a) == affine_span_key(c));
}
