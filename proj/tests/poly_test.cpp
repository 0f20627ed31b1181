#include <random>

#include "catch_amalgamated.hpp"

#include "girard/poly.hpp"
#include "support.hpp"

using namespace girard;

namespace {
const Polynomial x11{VarId::x(1, 1)};
const Polynomial x21{VarId::x(2, 1)};
const Polynomial x12{VarId::x(1, 2)};
const Polynomial x22{VarId::x(2, 2)};
const Polynomial y2{VarId::y(2)};
const Polynomial y3{VarId::y(3)};
}  // namespace

TEST_CASE("variable ordering", "[poly]") {
    CHECK(VarId::x(9, 9) < VarId::y(1));
    CHECK(VarId::y(9) < VarId::a(1, 1));
    CHECK(VarId::x(1, 2) < VarId::x(2, 1));
    CHECK(VarId::x(1, 1) < VarId::x(1, 2));
    CHECK(VarId::x(1, 2).str() == "x[1]^(2)");
    CHECK(VarId::a(3, 1).str() == "a[3]^(1)");
    CHECK(VarId::y(4).str() == "y[4]");
}

TEST_CASE("poly_add", "[poly]") {
    const Polynomial p = x11 * y2 - BigInt(3) * y3;
    CHECK(poly_add(p, Polynomial{}) == p);
    CHECK(poly_add(x11, -x11).is_zero());
    CHECK(poly_add(x11 + y2, y2) == x11 + BigInt(2) * y2);
    CHECK(poly_add(x11 + y2, y2).str() == "x[1]^(1) + 2*y[2]");
}

TEST_CASE("poly_mul", "[poly]") {
    const Polynomial p = x11 * y2 + Polynomial(4);
    CHECK(poly_mul(p, Polynomial(1)) == p);
    CHECK(poly_mul(p, Polynomial{}).is_zero());
    const Polynomial prod = poly_mul(x11 + x21, x12 + x22);
    CHECK(prod.size() == 4);
    CHECK(prod == x11 * x12 + x11 * x22 + x21 * x12 + x21 * x22);
    CHECK(poly_mul(x11 - y2, x11 + y2) == x11 * x11 - y2 * y2);
    CHECK(poly_pow(x11 + Polynomial(1), 3) == x11 * x11 * x11 + BigInt(3) * x11 * x11 + BigInt(3) * x11 + Polynomial(1));
}

TEST_CASE("poly_eval", "[poly]") {
    CHECK(poly_eval(Polynomial{}, {}) == 0);
    CHECK(poly_eval(x11 * y2, {{VarId::x(1, 1), 3}, {VarId::y(2), 5}}) == 15);
    try {
        (void)poly_eval(x11 * y3, {{VarId::x(1, 1), 3}});
        FAIL("expected missing-variable error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("y[3]") != std::string::npos);
    }
}

TEST_CASE("poly_equal", "[poly]") {
    const Polynomial p = x11 * x11 - y2;
    CHECK(poly_equal(p, p));
    CHECK(poly_equal(x11 + y2, y2 + x11));
    CHECK_FALSE(poly_equal(x11, x12));
}

TEST_CASE("text form", "[poly]") {
    CHECK(Polynomial{}.str() == "0");
    CHECK(Polynomial(-7).str() == "-7");
    CHECK((BigInt(3) * x11 * y2 - y3).str() == "3*x[1]^(1)*y[2] - y[3]");
    CHECK((-y3 + BigInt(3) * x11 * y2).str() == "3*x[1]^(1)*y[2] - y[3]");
    CHECK((-x11 * x11 * x11 + Polynomial(2)).str() == "-x[1]^(1)^3 + 2");
    CHECK((y2 * y2 + x12 * y2).str() == "x[1]^(2)*y[2] + y[2]^2");

    CHECK(parse_polynomial("3*x[1]^(1)*y[2] - y[3]") == BigInt(3) * x11 * y2 - y3);
    CHECK(parse_polynomial("  -y[3] +3*y[2]*x[1]^(1) ").str() == "3*x[1]^(1)*y[2] - y[3]");
    CHECK(parse_polynomial("x[1]^(1) - x[1]^(1)").is_zero());
    CHECK(parse_polynomial("0").is_zero());
    CHECK(parse_polynomial("a[2]^(3)^2") == Polynomial(Monomial(VarId::a(2, 3), 2), BigInt(1)));
    CHECK(parse_polynomial("123456789012345678901234567890*y[2]").terms().begin()->second ==
          BigInt("123456789012345678901234567890"));
}

TEST_CASE("parse errors carry a position", "[poly]") {
    CHECK_THROWS_AS(parse_polynomial(""), PolyParseError);
    try {
        (void)parse_polynomial("x[1]^(1) + z[2]");
        FAIL("expected parse error");
    } catch (const PolyParseError& e) {
        CHECK(e.position() == 11);
    }
    CHECK_THROWS_AS(parse_polynomial("x[0]^(1)"), PolyParseError);
    CHECK_THROWS_AS(parse_polynomial("x[1]"), PolyParseError);
    CHECK_THROWS_AS(parse_polynomial("y[1] y[2]"), PolyParseError);
}

TEST_CASE("ring axioms and evaluation homomorphism", "[poly][property]") {
    std::mt19937_64 rng(20261017);
    for (int trial = 0; trial < 250; ++trial) {
        const auto p = testing::random_polynomial(rng);
        const auto q = testing::random_polynomial(rng);
        const auto r = testing::random_polynomial(rng);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p + (-p)).is_zero());

        const auto at = testing::random_assignment(rng);
        CHECK(poly_eval(p + q, at) == poly_eval(p, at) + poly_eval(q, at));
        CHECK(poly_eval(p * q, at) == poly_eval(p, at) * poly_eval(q, at));

        // Text round trip is the identity on canonical forms.
        const auto text = p.str();
        CHECK(parse_polynomial(text) == p);
        CHECK(parse_polynomial(text).str() == text);
    }
}

TEST_CASE("substitution", "[poly]") {
    const Polynomial a12{VarId::a(1, 2)};
    const Polynomial a11{VarId::a(1, 1)};
    const auto collapse = [](const VarId& v) {
        return v.family == Family::A ? Polynomial(VarId::a(v.sub, 1)) : Polynomial(v);
    };
    CHECK(poly_substitute(a12 * a11 + y2, collapse) == a11 * a11 + y2);
}
