#include "doctest.h"
#include "helpers.hpp"

#include "abmod/errors.hpp"
#include "abmod/linalg.hpp"
#include "abmod/polynomial.hpp"

using namespace testing;

TEST_CASE("rational parsing and rendering") {
    CHECK(to_string(q("-2/4")) == "-1/2");
    CHECK(to_string(q("6/3")) == "2");
    CHECK(q("-3/6") == Rational(-1, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("x"), Error);
    CHECK(class_representative(q("-1/2")) == q("1/2"));
    CHECK(class_representative(q("-5/2")) == q("1/2"));
    CHECK(class_representative(q("-1")) == 1);
    CHECK(class_representative(q("-4/3")) == q("1/3"));
}

TEST_CASE("series product and inverse") {
    auto x = ser({"1", "2"}, 6), y = ser({"1", "-1"}, 6);
    CHECK(series_mul(x, y) == ser({"1", "1", "-2"}, 6));
    auto inv = series_invert(ser({"1", "1"}, 6));
    CHECK(inv == ser({"1", "-1", "1", "-1", "1", "-1"}, 6));
    CHECK(series_invert(TruncSeries::constant(2, 4)) == TruncSeries::constant(q("1/2"), 4));
    CHECK_THROWS_AS(series_invert(TruncSeries::monomial(1, 1, 4)), Error);
    auto bb = series_mul(TruncSeries::monomial(1, 1, 5), TruncSeries::monomial(1, 1, 7));
    CHECK(bb.prec() == 5);
    CHECK(bb.valuation() == 2);
}

TEST_CASE("series derivative") {
    CHECK(series_derivative(ser({"1", "1", "1"}, 3)) == ser({"1", "2"}, 2));
    CHECK(series_derivative(TruncSeries::constant(5, 4)).is_zero());
    TruncSeries e(5), e4(4);
    Rational f = 1;
    for (int k = 0; k < 5; ++k) {
        if (k > 0) f *= k;
        e[k] = 1 / f;
        if (k < 4) e4[k] = e[k];
    }
    auto d = series_derivative(e);
    CHECK(d.prec() == 4);
    CHECK(d == e4);
}

TEST_CASE("series ring properties on random samples") {
    std::mt19937 rng(7);
    for (int t = 0; t < 40; ++t) {
        auto x = random_series(rng, 8, 6), y = random_series(rng, 7, 6), z = random_series(rng, 9, 6);
        CHECK(series_mul(series_mul(x, y), z) == series_mul(x, series_mul(y, z)));
        CHECK(series_mul(x, y + z) == series_mul(x, y) + series_mul(x, z));
        CHECK(series_mul(x, y) == series_mul(y, x));
        CHECK(series_derivative(series_mul(x, y)) ==
              series_mul(series_derivative(x), y) + series_mul(x, series_derivative(y)));
        if (x.is_unit()) {
            CHECK(series_mul(x, series_invert(x)) == TruncSeries::constant(1, 8));
        }
        auto u = x.shifted_up(1), v = y.shifted_up(2);
        if (u.valuation() < u.prec() && v.valuation() < v.prec()) {
            auto p = series_mul(u, v);
            if (u.valuation() + v.valuation() < p.prec()) CHECK(p.valuation() == u.valuation() + v.valuation());
        }
    }
}

TEST_CASE("series rendering") {
    CHECK(ser({"1", "-1/2", "0", "3"}, 5).to_string() == "1 - 1/2*b + 3*b^3 + O(b^5)");
}

TEST_CASE("linear algebra") {
    QMatrix m(2, 2);
    m(0, 0) = q("1/2");
    m(0, 1) = 1;
    m(1, 1) = q("1/2");
    CHECK(minimal_polynomial(m) == std::vector<Rational>{q("1/4"), -1, 1});
    CHECK(characteristic_polynomial(m) == std::vector<Rational>{q("1/4"), -1, 1});
    QMatrix d = QMatrix::identity(3);
    d *= q("2/3");
    CHECK(minimal_polynomial(d) == std::vector<Rational>{q("-2/3"), 1});
    CHECK(characteristic_polynomial(d).size() == 4);
    CHECK(rank(m) == 2);
    QMatrix s(2, 3);
    s(0, 0) = 1;
    s(0, 1) = 2;
    s(1, 2) = 1;
    auto ns = nullspace(s);
    CHECK(ns.cols() == 1);
    CHECK((s * ns).is_zero());
    auto inv = inverse(m);
    CHECK(inv * m == QMatrix::identity(2));
}

TEST_CASE("polynomial roots and rendering") {
    RationalPolynomial p({q("1/4"), 1, 1});
    CHECK(p.to_string() == "(x + 1/2)^2");
    REQUIRE(p.roots().size() == 1);
    CHECK(p.roots()[0] == PolynomialRoot{q("-1/2"), 2});
    RationalPolynomial r({q("1/6"), q("5/6"), 1});
    CHECK(r.to_string() == "(x + 1/2)(x + 1/3)");
    RationalPolynomial irr({-2, 0, 1});
    CHECK(!irr.splits());
    CHECK(p.shifted(-1).to_string() == "(x - 1/2)^2");
    CHECK(r.class_part(q("1/2")).to_string() == "x + 1/2");
    CHECK(RationalPolynomial::from_roots({{q("-1/2"), 2}}) == p);
}
