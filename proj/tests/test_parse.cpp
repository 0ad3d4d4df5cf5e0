/*
 * test_parse.cpp
 * --------------
 * Polynomial expression grammar and the LO:HI degree-window parser.
 */

#include <doctest.h>

#include <string>
#include <vector>

#include "cga/core.hpp"
#include "cga/parse.hpp"

using namespace cga;

namespace {

AlgebraPtr alg() { return make_algebra({{"x2", 2}, {"y3", 3}, {"z3", 3}, {"t4", 4}}); }

Polynomial p(const std::string& text) { return parse_polynomial(alg(), text); }

}  // namespace

TEST_CASE("basic terms") {
    AlgebraPtr a = alg();
    CHECK(p("x2") == Polynomial::generator(a, 0));
    CHECK(p("x2^3") == Polynomial::generator(a, 0) * Polynomial::generator(a, 0) *
                           Polynomial::generator(a, 0));
    CHECK(p("x2*y3") == Polynomial::generator(a, 0) * Polynomial::generator(a, 1));
    CHECK(p("2*x2") == Rational(2) * Polynomial::generator(a, 0));
    CHECK(p("-3/2*x2") == Rational(-3, 2) * Polynomial::generator(a, 0));
    CHECK(p("x2 + y3") == Polynomial::generator(a, 0) + Polynomial::generator(a, 1));
    CHECK(p("x2 - y3") == Polynomial::generator(a, 0) - Polynomial::generator(a, 1));
    CHECK(p("-x2 + y3") == -Polynomial::generator(a, 0) + Polynomial::generator(a, 1));
}

TEST_CASE("bare rational terms") {
    AlgebraPtr a = alg();
    CHECK(p("0").is_zero());
    CHECK(p("1") == Polynomial::constant(a, Rational(1)));
    CHECK(p("-2") == Polynomial::constant(a, Rational(-2)));
    CHECK(p("5/3") == Polynomial::constant(a, Rational(5, 3)));
    CHECK(p("1 + x2") == Polynomial::constant(a, Rational(1)) + Polynomial::generator(a, 0));
}

TEST_CASE("normalization happens during parsing") {
    // Odd squares vanish; like terms merge; signs combine.
    CHECK(p("y3^2").is_zero());
    CHECK(p("y3*y3").is_zero());
    CHECK(p("x2 + x2") == p("2*x2"));
    CHECK(p("x2 - x2").is_zero());
    CHECK(p("y3*z3 + z3*y3").is_zero());
    CHECK(p("z3*y3") == p("-y3*z3"));
    CHECK(p("y3*x2") == p("x2*y3"));
}

TEST_CASE("whitespace and implicit multiplication sign") {
    CHECK(p("  x2   +   y3 ") == p("x2 + y3"));
    CHECK(p("2 x2") == p("2*x2"));
    CHECK(p("1/2 x2^2") == p("1/2*x2^2"));
}

TEST_CASE("parse failures") {
    CHECK_THROWS_AS(p("unknown"), parse_error);
    CHECK_THROWS_AS(p(""), parse_error);
    CHECK_THROWS_AS(p("x2 +"), parse_error);
    CHECK_THROWS_AS(p("x2^"), parse_error);
    CHECK_THROWS_AS(p("x2 * * y3"), parse_error);
    CHECK_THROWS_AS(p("x2 - - y3"), parse_error);
    CHECK_THROWS_AS(p("(x2)"), parse_error);
    CHECK_THROWS_AS(p("x2^-1"), parse_error);
    CHECK_THROWS_AS(p("1/0"), parse_error);
}

TEST_CASE("printer output re-parses to the same polynomial") {
    std::vector<std::string> samples = {
        "0",
        "1",
        "-2/3",
        "x2",
        "-x2",
        "x2^2 + 2*x2*y3",
        "1/2*x2^3 - y3*z3 + t4",
        "x2*y3*z3 - 7*t4^2",
        "3*x2 + 1",
    };
    for (const std::string& text : samples) {
        Polynomial q = p(text);
        CHECK(parse_polynomial(alg(), q.str()) == q);
    }
}

TEST_CASE("degree windows") {
    DegreeWindow w = parse_window("2:5");
    CHECK(w.lo == 2);
    CHECK(w.hi == 5);
    w = parse_window("1:1");
    CHECK(w.lo == 1);
    CHECK(w.hi == 1);

    CHECK_THROWS_AS(parse_window("5"), parse_error);
    CHECK_THROWS_AS(parse_window("a:b"), parse_error);
    CHECK_THROWS_AS(parse_window("0:4"), parse_error);
    CHECK_THROWS_AS(parse_window("-1:4"), parse_error);
    CHECK_THROWS_AS(parse_window("4:2"), parse_error);
    CHECK_THROWS_AS(parse_window(""), parse_error);
    CHECK_THROWS_AS(parse_window("2:"), parse_error);
}
