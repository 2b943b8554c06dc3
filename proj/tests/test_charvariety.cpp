#include <doctest.h>

#include "innc/charvariety.hpp"
#include "innc/errors.hpp"

using namespace innc;

namespace {

Rational q(long a, long b) { return make_rational(a, b); }

std::vector<Integer> vec(std::vector<long> v) { return {v.begin(), v.end()}; }

TranslatedSubtorus torus(std::size_t r, std::vector<std::pair<std::vector<long>, Rational>> eqs) {
    std::vector<TorusEquation> out;
    for (auto &[v, ph] : eqs)
        out.push_back({vec(v), ph});
    return TranslatedSubtorus(r, out);
}

PrincipalComponent comp(TranslatedSubtorus t, std::size_t k = 1) { return {std::move(t), k, 1, 0}; }

CharacterPoint chi(std::vector<Rational> ph) { return CharacterPoint(std::move(ph)); }

} // namespace

TEST_CASE("character points") {
    const auto c = chi({q(5, 4), q(-1, 3), 0});
    CHECK(c[0] == q(1, 4));
    CHECK(c[1] == q(2, 3));
    CHECK(c.order() == 12);
    CHECK(c.conjugate() == chi({q(3, 4), q(1, 3), 0}));
    CHECK(chi({0, 1}).is_trivial());
}

TEST_CASE("translated subtori") {
    const auto t = torus(2, {{{2, 3}, 0}});
    CHECK(t.codimension() == 1);
    CHECK_FALSE(t.is_empty());
    CHECK(t.contains(chi({q(1, 5), q(1, 5)})));
    CHECK_FALSE(t.contains(chi({q(1, 5), 0})));

    // t^2 = 1 and t^2 = -1 have no common point
    CHECK(torus(1, {{{2}, 0}, {{2}, q(1, 2)}}).is_empty());
    // t^2 = 1 and t^4 = 1 describe the same set
    CHECK(torus(1, {{{2}, 0}, {{4}, 0}}) == torus(1, {{{2}, 0}}));

    CHECK_THROWS_AS(torus(2, {{{0, 0}, 0}}), DomainError);
    CHECK_THROWS_AS(torus(2, {{{1}, 0}}), DimensionError);
    CHECK_THROWS_AS(t.contains(chi({0})), DimensionError);
}

TEST_CASE("subset_of") {
    const auto line = torus(2, {{{1, 1}, 0}});
    const auto point = torus(2, {{{1, 0}, q(1, 2)}, {{0, 1}, q(1, 2)}});
    CHECK(point.subset_of(line));
    CHECK_FALSE(line.subset_of(point));
    CHECK(line.subset_of(line));
    // t1^2 t2^2 = 1 contains t1 t2 = 1 but also t1 t2 = -1
    const auto doubled = torus(2, {{{2, 2}, 0}});
    CHECK(line.subset_of(doubled));
    CHECK_FALSE(doubled.subset_of(line));
    CHECK(torus(2, {{{1, 1}, q(1, 2)}}).subset_of(doubled));
}

TEST_CASE("coordinate slices") {
    const auto t = torus(2, {{{0, 1}, 0}, {{2, 0}, 0}});
    CHECK(t.in_coordinate_slice(1));
    CHECK_FALSE(t.in_coordinate_slice(0));
    CHECK(t.drop_coordinate(1) == torus(1, {{{2}, 0}}));
    CHECK_THROWS_AS(t.drop_coordinate(0), DomainError);
    CHECK_THROWS_AS(torus(1, {{{1}, 0}}).drop_coordinate(0), DimensionError);
    CHECK(torus(1, {{{2}, 0}}).extend_trivially(1) == t);
    CHECK_THROWS_AS(t.extend_trivially(3), DimensionError);
}

TEST_CASE("exp_face on the builtin families") {
    const auto cone = cone_over({2, 3}, 2, 0);
    const auto faces = faces_of_quasiadjunction(cone);
    REQUIRE(faces.size() == 1);
    const auto c = exp_face(faces[0], 1, 1);
    CHECK(c.torus == torus(2, {{{2, 3}, 0}}));

    const auto arr = generic_arrangement(4, 2, 0);
    const auto comps = principal_components(faces_of_quasiadjunction(arr));
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].torus == torus(4, {{{1, 1, 1, 1}, 0}}));
    CHECK(comps[0].k == 1);
    CHECK(comps[0].l == 1);
}

TEST_CASE("exp_face reduces the phase mod 1") {
    // the face x1 + x2 = 3/2
    AffineForm f{vec({1, 1}), q(3, 2)};
    FaceOfQuasiadjunction face{{f}, {}, HalfspaceSystem(2), 1, {{1, 1}}, {},
                               CubePoint({q(3, 4), q(3, 4)}), "1"};
    const auto c = exp_face(face, 1, 1);
    CHECK(c.torus == torus(2, {{{1, 1}, q(1, 2)}}));
    CHECK(contains_character(c, chi({q(1, 4), q(1, 4)})));
    CHECK_THROWS_AS(exp_face(face, 0, 1), DomainError);
}

TEST_CASE("contains_character") {
    const auto c = comp(torus(4, {{{1, 1, 1, 1}, 0}}));
    CHECK(contains_character(c, chi({q(1, 4), q(1, 4), q(1, 4), q(1, 4)})));
    CHECK_FALSE(contains_character(c, chi({q(1, 3), 0, 0, 0})));
    CHECK(contains_character(c, chi({0, 0, 0, 0})));
    CHECK_FALSE(contains_character(comp(torus(1, {{{1}, q(1, 2)}})), chi({0})));
    CHECK_THROWS_AS(contains_character(c, chi({0, 0})), DimensionError);
}

TEST_CASE("principal_f") {
    const std::vector<PrincipalComponent> comps{comp(torus(4, {{{1, 1, 1, 1}, 0}}))};
    CHECK(principal_f(chi({q(1, 4), q(1, 4), q(1, 4), q(1, 4)}), comps) == 1);
    CHECK(principal_f(chi({q(1, 3), 0, 0, 0}), comps) == 0);
    CHECK(principal_f(chi({q(1, 3), 0, 0, 0}), {}) == 0);
    const std::vector<PrincipalComponent> nested{comp(torus(1, {{{2}, 0}}), 1),
                                                 comp(torus(1, {{{1}, q(1, 2)}}), 3)};
    CHECK(principal_f(chi({q(1, 2)}), nested) == 3);
    CHECK(principal_f(chi({0}), nested) == 1);
}

TEST_CASE("torsion_characters") {
    CHECK(torsion_characters({2, 2}).size() == 4);
    const auto triv = torsion_characters({1, 1, 1});
    REQUIRE(triv.size() == 1);
    CHECK(triv[0].is_trivial());
    CHECK(torsion_characters({3, 3, 3, 3}).size() == 81);

    const auto m = torsion_characters({2, 3});
    CHECK(m[0] == chi({0, 0}));
    CHECK(m[1] == chi({0, q(1, 3)}));
    CHECK(m[3] == chi({q(1, 2), 0}));
    std::size_t count = 0;
    for (const auto &c : m) {
        CHECK(c == m[count]);
        ++count;
    }
    CHECK(count == 6);
    CHECK_THROWS_AS(m[6], DomainError);
    CHECK_THROWS_AS(torsion_characters({2, 0}), InputError);
    CHECK_THROWS_AS(torsion_characters({1000, 1000, 1000}), InputError);
    CHECK_THROWS_AS(torsion_characters({4, 4}, 15), InputError);
}

TEST_CASE("classify_essential") {
    const auto cone = cone_over({2, 3}, 2, 0);
    const auto comps = principal_components(faces_of_quasiadjunction(cone));
    std::map<std::size_t, std::vector<PrincipalComponent>> sub;
    for (std::size_t i = 0; i < 2; ++i)
        sub[i] = principal_components(faces_of_quasiadjunction(delete_component(cone, i)));
    const auto part = classify_essential(comps, sub);
    CHECK(part.essential == std::vector<std::size_t>{0});
    CHECK(part.nonessential.empty());

    // {t2 = 1, t1^2 = 1} projects into t1^2 = 1 of the union without D2
    const std::vector<PrincipalComponent> art{comp(torus(2, {{{0, 1}, 0}, {{2, 0}, 0}}))};
    const std::map<std::size_t, std::vector<PrincipalComponent>> art_sub{
        {1, {comp(torus(1, {{{2}, 0}}))}}};
    const auto p = classify_essential(art, art_sub);
    CHECK(p.nonessential == std::vector<std::size_t>{0});
    CHECK(p.essential.empty());

    // the projection t1 = -1 is not inside t1^3 = 1
    const std::vector<PrincipalComponent> other{comp(torus(2, {{{0, 1}, 0}, {{1, 0}, q(1, 2)}}))};
    const std::map<std::size_t, std::vector<PrincipalComponent>> other_sub{
        {1, {comp(torus(1, {{{3}, 0}}))}}};
    CHECK(classify_essential(other, other_sub).essential == std::vector<std::size_t>{0});

    const auto empty = classify_essential({}, {});
    CHECK(empty.essential.empty());
    CHECK(empty.nonessential.empty());
    CHECK_THROWS_AS(classify_essential(art, {}), DomainError);
}

TEST_CASE("polynomial_invariant") {
    const std::vector<PrincipalComponent> arr{comp(torus(4, {{{1, 1, 1, 1}, 0}}))};
    CHECK(polynomial_invariant(arr).polynomial.to_string() == "t1 t2 t3 t4 - 1");
    const std::vector<PrincipalComponent> cone{comp(torus(2, {{{2, 3}, 0}}))};
    CHECK(polynomial_invariant(cone).polynomial.to_string() == "t1^2 t2^3 - 1");
    const std::vector<PrincipalComponent> minus{comp(torus(2, {{{1, 1}, q(1, 2)}}))};
    CHECK(polynomial_invariant(minus).polynomial.to_string() == "t1 t2 + 1");

    // conjugate phases 1/3 and 2/3 give one integral factor
    const std::vector<PrincipalComponent> orbit{comp(torus(1, {{{1}, q(1, 3)}})),
                                                comp(torus(1, {{{1}, q(2, 3)}}))};
    CHECK(polynomial_invariant(orbit).polynomial.to_string() == "t1^2 + t1 + 1");
    const std::vector<PrincipalComponent> squared{comp(torus(1, {{{1}, 0}}), 2)};
    CHECK(polynomial_invariant(squared).polynomial.to_string() == "t1^2 - 2 t1 + 1");

    const std::vector<PrincipalComponent> mixed{comp(torus(2, {{{1, 0}, 0}, {{0, 1}, 0}})),
                                                comp(torus(2, {{{2, 3}, 0}}))};
    CHECK_THROWS_AS(polynomial_invariant(mixed), DomainError);
    const auto excluded = polynomial_invariant(mixed, true);
    CHECK(excluded.excluded == std::vector<std::size_t>{0});
    CHECK(excluded.polynomial.to_string() == "t1^2 t2^3 - 1");
    CHECK(polynomial_invariant({}).polynomial.to_string() == "1");
}
