#include <doctest.h>

#include "rational.hpp"

using namespace fc;

TEST_CASE("root exponents reduce to canonical form") {
    CHECK(re_make(2, 4) == re_make(1, 2));
    CHECK(re_make(-1, 3) == re_make(2, 3));
    CHECK(re_make(7, 7) == RootExp{0, 1});
    CHECK(re_make(0, 5) == RootExp{0, 1});
    CHECK(re_make(10, 4) == re_make(1, 2));
    CHECK(re_make(3, 9) == re_make(1, 3));
}

TEST_CASE("root exponent arithmetic") {
    RootExp half = re_make(1, 2), third = re_make(1, 3);
    CHECK(re_add(half, third) == re_make(5, 6));
    CHECK(re_sub(third, half) == re_make(5, 6));
    CHECK(re_add(half, half).is_zero());
    CHECK(re_neg(third) == re_make(2, 3));
    CHECK(re_neg(RootExp{}) == RootExp{});
    CHECK(re_scale(3, third).is_zero());
    CHECK(re_scale(-1, third) == re_make(2, 3));
    CHECK(re_scale(0, half).is_zero());
    CHECK(re_order(re_make(2, 12)) == 6);
    CHECK(re_order(RootExp{}) == 1);
}

TEST_CASE("root exponent total order") {
    CHECK(re_less(RootExp{}, re_make(1, 3)));
    CHECK(re_less(re_make(1, 3), re_make(1, 2)));
    CHECK(!re_less(re_make(1, 2), re_make(1, 2)));
    CHECK(re_less(re_make(2, 5), re_make(1, 2)));
}

TEST_CASE("root exponent string round trip") {
    for (long long den = 1; den <= 12; den++)
        for (long long num = 0; num < den; num++) {
            RootExp x = re_make(num, den);
            CHECK(re_parse(re_str(x)) == x);
        }
}

TEST_CASE("characteristic forbids p-torsion denominators") {
    CHECK_THROWS_AS(re_make(1, 2, 2), Error);
    CHECK_THROWS_AS(re_make(1, 6, 3), Error);
    CHECK(re_make(1, 3, 2) == re_make(1, 3));
    CHECK_THROWS_AS(re_parse(re_str(re_make(1, 4)), 2), Error);
    CHECK_THROWS_AS(re_make(2, 6, 3), Error);  // reduces to 1/3 first, still 3-torsion
}

TEST_CASE("smith normal form on known matrices") {
    IntMatrix m(2, 2);
    m.at(0, 0) = 2; m.at(0, 1) = 4;
    m.at(1, 0) = 6; m.at(1, 1) = 8;
    SnfResult r = smith_normal_form(m);
    CHECK(r.s.at(0, 0) == 2);
    CHECK(r.s.at(1, 1) == 4);  // d1*d2 = |det| = 8
    CHECK(r.s.at(0, 1) == 0);
    CHECK(r.s.at(1, 0) == 0);
    CHECK(mat_mul(mat_mul(r.u, m), r.v) == r.s);
    long long du = mat_det(r.u), dv = mat_det(r.v);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));

    IntMatrix z(2, 3);  // zero matrix stays zero
    SnfResult rz = smith_normal_form(z);
    CHECK(rz.s.a == std::vector<long long>(6, 0));
}

TEST_CASE("smith normal form divisibility chain") {
    IntMatrix m(3, 3);
    long long vals[9] = {6, 4, 2, 4, 6, 8, 2, 8, 6};
    for (int i = 0; i < 9; i++) m.a[i] = vals[i];
    SnfResult r = smith_normal_form(m);
    CHECK(mat_mul(mat_mul(r.u, m), r.v) == r.s);
    long long d1 = r.s.at(0, 0), d2 = r.s.at(1, 1), d3 = r.s.at(2, 2);
    if (d2 != 0) CHECK(d2 % d1 == 0);
    if (d3 != 0) CHECK(d3 % d2 == 0);
}

TEST_CASE("linear solving mod M") {
    IntMatrix m(2, 2);
    m.at(0, 0) = 2; m.at(0, 1) = 1;
    m.at(1, 0) = 1; m.at(1, 1) = 1;
    auto x = solve_linear_mod(m, {1, 2}, 5);
    REQUIRE(x.has_value());
    CHECK((2 * (*x)[0] + (*x)[1]) % 5 == 1);
    CHECK(((*x)[0] + (*x)[1]) % 5 == 2);

    IntMatrix s(1, 1);
    s.at(0, 0) = 2;
    CHECK(!solve_linear_mod(s, {1}, 4).has_value());  // 2x = 1 mod 4
    auto y = solve_linear_mod(s, {2}, 4);
    REQUIRE(y.has_value());
    CHECK((2 * (*y)[0]) % 4 == 2);
}

TEST_CASE("linear solving is deterministic") {
    IntMatrix m(2, 3);
    m.at(0, 0) = 1; m.at(0, 1) = 2; m.at(0, 2) = 3;
    m.at(1, 0) = 0; m.at(1, 1) = 2; m.at(1, 2) = 2;
    auto a = solve_linear_mod(m, {1, 0}, 6);
    auto b = solve_linear_mod(m, {1, 0}, 6);
    REQUIRE(a.has_value());
    CHECK(*a == *b);
}

TEST_CASE("gcd lcm and prime-to parts") {
    CHECK(gcd_ll(12, 18) == 6);
    CHECK(gcd_ll(0, 7) == 7);
    CHECK(lcm_ll(4, 6) == 12);
    CHECK(lcm_ll(1, 1) == 1);
    CHECK(prime_to_part(24, 2) == 3);
    CHECK(prime_to_part(24, 3) == 8);
    CHECK(prime_to_part(24, 5) == 24);
    CHECK(prime_to_part(24, 0) == 24);
    CHECK(prime_to_part(1, 2) == 1);
}

TEST_CASE("error taxonomy carries codes and kinds") {
    Error e = math_error("no", ErrKind::NotInvertible);
    CHECK(e.code() == ErrorCode::MathDomain);
    CHECK(e.kind() == ErrKind::NotInvertible);
    CHECK(std::string(e.what()) == "no");
}
