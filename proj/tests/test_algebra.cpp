#include <doctest.h>

#include "innc/cyclotomic.hpp"
#include "innc/errors.hpp"
#include "innc/laurent.hpp"
#include "innc/lattice.hpp"

using namespace innc;

namespace {

IntegerMatrix mat(std::vector<std::vector<long>> rows) {
    IntegerMatrix out;
    for (const auto &r : rows)
        out.emplace_back(r.begin(), r.end());
    return out;
}

std::vector<Integer> vec(std::vector<long> v) { return {v.begin(), v.end()}; }

} // namespace

TEST_CASE("rational helpers") {
    CHECK(parse_rational("3/4") == make_rational(3, 4));
    CHECK(parse_rational("-6/8") == make_rational(-3, 4));
    CHECK(parse_rational("+5") == 5);
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("x"), InputError);
    CHECK_THROWS_AS(parse_rational("1/"), InputError);
    CHECK_THROWS_AS(make_rational(1, 0), DomainError);
    CHECK(mod_one(make_rational(7, 3)) == make_rational(1, 3));
    CHECK(mod_one(make_rational(-1, 4)) == make_rational(3, 4));
    CHECK(floor(make_rational(-1, 2)) == -1);
    CHECK(lcm(4, 6) == 12);
    CHECK(denominator_lcm({make_rational(1, 4), make_rational(5, 6), 2}) == 12);
    CHECK(to_string(make_rational(-2, 6)) == "-1/3");
    CHECK_THROWS_AS(to_long(Integer("100000000000000000000000")), DomainError);
}

TEST_CASE("hermite_reduce") {
    const auto h = hermite_reduce(mat({{2, 4}, {3, 6}, {0, 1}}), 2);
    CHECK(h.basis == mat({{1, 0}, {0, 1}}));
    CHECK(h.pivots == std::vector<std::size_t>{0, 1});

    // the phase of a dependent row is carried to the relation
    const auto g = hermite_reduce(mat({{2, 0}, {4, 0}}), 2,
                                  {make_rational(1, 4), make_rational(1, 3)});
    REQUIRE(g.basis.size() == 1);
    CHECK(g.basis[0] == vec({2, 0}));
    CHECK(g.phases[0] == make_rational(1, 4));
    REQUIRE(g.relation_phases.size() == 1);
    // 1/3 - 2 * 1/4 = -1/6 = 5/6 mod 1
    CHECK(g.relation_phases[0] == make_rational(5, 6));
}

TEST_CASE("lattice_phase") {
    const auto h = hermite_reduce(mat({{2, 3}}), 2, {make_rational(1, 5)});
    CHECK(lattice_phase(h, vec({4, 6})) == make_rational(2, 5));
    CHECK(lattice_phase(h, vec({-2, -3})) == make_rational(4, 5));
    CHECK_FALSE(lattice_phase(h, vec({1, 1})));
    CHECK_FALSE(lattice_phase(h, vec({1, 3})));
}

TEST_CASE("integer_kernel and saturate") {
    const auto k = integer_kernel(mat({{2, 3}}), 2);
    REQUIRE(k.size() == 1);
    const auto &v = k[0];
    CHECK(2 * v[0] + 3 * v[1] == 0);
    CHECK(gcd(v[0], v[1]) == 1);

    CHECK(saturate(mat({{2, 4}}), 2) == mat({{1, 2}}));
    CHECK(saturate(mat({{2, 0}, {0, 2}}), 2) == mat({{1, 0}, {0, 1}}));
    CHECK(saturate({}, 3).empty());
    CHECK(integer_kernel(mat({{1, 0}, {0, 1}}), 2).empty());
}

TEST_CASE("Laurent polynomial arithmetic") {
    const auto t1 = LaurentPolynomial::variable(2, 0);
    const auto t2 = LaurentPolynomial::variable(2, 1);
    const auto one = LaurentPolynomial::constant(2, 1);
    const auto p = t1.pow(2) * t2.pow(3) - one;
    CHECK(p.to_string() == "t1^2 t2^3 - 1");
    CHECK((p - p).is_zero());
    CHECK((p - p).to_string() == "0");
    CHECK(((t1 - one) * (t1 + one)).to_string() == "t1^2 - 1");

    // normalization clears negative exponents and makes the leading term positive
    const auto q = LaurentPolynomial::monomial({-1, 0}, -1) + LaurentPolynomial::monomial({1, 2}, 3);
    CHECK(q.normalized().to_string() == "3 t1^2 t2^2 - 1");
    CHECK((one - t1).normalized() == (t1 - one));
    CHECK_THROWS_AS(t1 + LaurentPolynomial::variable(3, 0), DimensionError);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == vec({-1, 1}));
    CHECK(cyclotomic_polynomial(2) == vec({1, 1}));
    CHECK(cyclotomic_polynomial(4) == vec({1, 0, 1}));
    CHECK(cyclotomic_polynomial(6) == vec({1, -1, 1}));
    CHECK(cyclotomic_polynomial(12) == vec({1, 0, -1, 0, 1}));
    CHECK(cyclotomic_polynomial(5).size() == 5);
    CHECK(totient(1) == 1);
    CHECK(totient(12) == 4);
    CHECK(totient(7) == 6);
}

TEST_CASE("cyclotomic field arithmetic") {
    const CyclotomicField f(4);
    CHECK(f.degree() == 2);
    const auto i = f.zeta_power(1);
    CHECK(f.mul(i, i) == f.from_integer(-1));
    CHECK(f.zeta_power(4) == f.one());
    CHECK(f.zeta_power(-1) == f.zeta_power(3));
    const auto a = f.sub(i, f.one());
    CHECK(f.mul(a, f.inv(a)) == f.one());
    CHECK(CyclotomicField::is_zero(f.sub(a, a)));
    CHECK_THROWS(f.inv(f.zero()));

    const CyclotomicField g(3);
    // 1 + w + w^2 = 0
    CHECK(CyclotomicField::is_zero(g.add(g.add(g.one(), g.zeta_power(1)), g.zeta_power(2))));
}

TEST_CASE("rank over a cyclotomic field") {
    const CyclotomicField f(4);
    const auto i = f.zeta_power(1);
    CyclotomicMatrix m{4, 2, 2, {f.one(), i, i, f.from_integer(-1)}};
    // second row is i times the first
    CHECK(rank(f, m) == 1);
    CyclotomicMatrix n{4, 2, 2, {f.one(), i, i, f.one()}};
    CHECK(rank(f, n) == 2);
    CHECK(is_zero(CyclotomicMatrix{4, 1, 2, {f.zero(), f.zero()}}));
    const auto p = multiply(f, m, n);
    CHECK(p.rows == 2);
    CHECK(p.cols == 2);
    CHECK(rank(f, p) == 1);
}
