#include <doctest.h>

#include "heispoly/poly.hpp"
#include "heispoly/rat.hpp"
#include "heispoly/verify.hpp"

using namespace heispoly;

TEST_CASE("rationals stay canonical") {
    CHECK(Rat(2, 4).str() == "1/2");
    CHECK(Rat(-3, -6).str() == "1/2");
    CHECK(Rat(3, -6).str() == "-1/2");
    CHECK(Rat(0, 7).str() == "0");
    CHECK(Rat(6, 3).str() == "2");
}

TEST_CASE("rational parsing round-trips and rejects junk") {
    for (const char* text : {"3", "-1/2", "0", "22/7", "-1000000000000000001/3"}) {
        CHECK(Rat::parse(text).str() == text);
    }
    CHECK(Rat::parse("2/4").str() == "1/2");
    CHECK(Rat::parse("+3").str() == "3");
    CHECK_THROWS_AS(Rat::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("1/"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("/2"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse(" 1"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("1/0"), std::domain_error);
}

TEST_CASE("rational arithmetic guards division by zero") {
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
    CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
    CHECK(pow(Rat(0), 0) == Rat(1));
    CHECK(pow(Rat(-2, 3), 3) == Rat(-8, 27));
    CHECK(factorial(6) == Rat(720));
    CHECK(binomial(5, 2) == Rat(10));
    CHECK(binomial(2, 5) == Rat(0));
}

TEST_CASE("evaluation follows the coefficients") {
    const Poly p(2, {Rat(1), Rat(2), Rat(3)});
    CHECK(p.eval(Rat(0)) == Rat(1));
    CHECK(Poly::monomial(2, 2).eval(Rat(1, 2)) == Rat(1, 4));
    const Poly q(2, {Rat(1, 6), Rat(1), Rat(1)});
    CHECK(q.eval(Rat(1)) == Rat(13, 6));
}

TEST_CASE("derivative keeps the bound") {
    CHECK(Poly::monomial(2, 2).derivative() == Poly(2, {Rat(0), Rat(2), Rat(0)}));
    CHECK(Poly(0, {Rat(5)}).derivative() == Poly(0));
    const Poly p(3, {Rat(1), Rat(1), Rat(0), Rat(1)});
    const Poly expected(3, {Rat(1), Rat(0), Rat(3), Rat(0)});
    CHECK(p.derivative() == expected);
    CHECK(p.derivative().bound() == 3);
}

TEST_CASE("primitive integrates with constant zero") {
    for (int k = 0; k <= 5; ++k) {
        const Poly integrated = Poly::monomial(k, 5).primitive();
        CHECK(integrated == Poly::monomial(k + 1, 6, Rat(1, k + 1)));
    }
    CHECK(Poly(3).primitive() == Poly(4));
    CHECK(Poly(1, {Rat(0), Rat(2)}).primitive() == Poly(2, {Rat(0), Rat(0), Rat(1)}));
    CHECK(Poly(1, {Rat(0), Rat(2)}).primitive().bound() == 2);
}

TEST_CASE("projection splits off the constant term") {
    const auto [rest, c0] = Poly(2, {Rat(1, 6), Rat(1), Rat(1)}).project_zero();
    CHECK(rest == Poly(2, {Rat(0), Rat(1), Rat(1)}));
    CHECK(c0 == Rat(1, 6));
    const auto [zrest, zc] = Poly(2).project_zero();
    CHECK(zrest.is_zero());
    CHECK(zc == Rat(0));
    const auto [crest, cc] = Poly(0, {Rat(7)}).project_zero();
    CHECK(crest.is_zero());
    CHECK(cc == Rat(7));
}

TEST_CASE("equality works across zero-extension") {
    const Poly a(1, {Rat(0), Rat(1)});
    CHECK(a == a.with_bound(4));
    CHECK(a.with_bound(4).bound() == 4);
    CHECK(a != Poly(1, {Rat(1), Rat(1)}));
    CHECK_THROWS_AS(a.with_bound(0), std::invalid_argument);
    CHECK_THROWS_AS(Poly(1, {Rat(1)}), std::invalid_argument);
}

TEST_CASE("evaluation is linear, derivative undoes primitive") {
    RandomSource src(2024);
    for (int it = 0; it < 200; ++it) {
        const int n = src.integer(0, 8);
        const Poly p = src.poly(n);
        const Poly q = src.poly(n);
        const Rat a = src.rat();
        const Rat x = src.rat();
        CHECK((a * p + q).eval(x) == a * p.eval(x) + q.eval(x));
        CHECK(p.primitive().derivative() == p.with_bound(n + 1));
        CHECK(p.project_zero().first.eval(Rat(0)) == Rat(0));
    }
}
