#include <doctest.h>

#include <random>

#include "subdiv/laurent.hpp"
#include "test_util.hpp"

using subdiv::LaurentPolynomial;
using subdiv::Rational;
namespace tt = subdiv::testing;

namespace {

LaurentPolynomial poly(int lowest, std::initializer_list<const char*> coeffs) {
    std::vector<Rational> c;
    for (const char* t : coeffs) c.push_back(Rational::from_string(t));
    return {lowest, std::move(c)};
}

const LaurentPolynomial kChaikinSymbol = poly(0, {"1/4", "3/4", "3/4", "1/4"});

}  // namespace

TEST_CASE("trimming and zero handling") {
    CHECK(poly(0, {"0", "1", "0"}) == poly(1, {"1"}));
    CHECK(LaurentPolynomial(3, {Rational(0), Rational(0)}).is_zero());
    CHECK(LaurentPolynomial{}.degree_span() == -1);
    CHECK(poly(-2, {"1", "0", "5"}).degree_span() == 2);
    CHECK(poly(-2, {"1", "0", "5"}).coefficient(0) == Rational(5));
    CHECK(poly(-2, {"1", "0", "5"}).coefficient(7) == Rational(0));
}

TEST_CASE("products") {
    CHECK(poly(0, {"1", "1"}) * poly(0, {"1", "0", "1"}) == poly(0, {"1", "1", "1", "1"}));
    // Chaikin's symbol times its own c^2 dilation
    CHECK(kChaikinSymbol * substitute_power(kChaikinSymbol, 2) ==
          poly(0, {"1/16", "3/16", "6/16", "10/16", "12/16", "12/16", "10/16", "6/16", "3/16",
                   "1/16"}));
    CHECK((kChaikinSymbol * LaurentPolynomial{}).is_zero());
}

TEST_CASE("power substitution") {
    CHECK(substitute_power(poly(0, {"1", "1"}), 2) == poly(0, {"1", "0", "1"}));
    CHECK(substitute_power(poly(0, {"1/4", "3/4"}), 4) ==
          poly(0, {"1/4", "0", "0", "0", "3/4"}));
    CHECK(substitute_power(kChaikinSymbol, 2) ==
          poly(0, {"1/4", "0", "3/4", "0", "3/4", "0", "1/4"}));
    CHECK_THROWS_AS(substitute_power(kChaikinSymbol, 0), std::invalid_argument);
}

TEST_CASE("exact division") {
    CHECK(*try_divide(poly(0, {"1", "2", "1"}), poly(0, {"1", "1"})) == poly(0, {"1", "1"}));
    CHECK_FALSE(try_divide(poly(0, {"1", "1", "0", "1"}), poly(0, {"1", "1"})).has_value());
    CHECK_THROWS_AS(try_divide(kChaikinSymbol, LaurentPolynomial{}), std::domain_error);

    // 4-point symbol in its centered anchoring over ((1+c)/2)^5
    LaurentPolynomial mu4 = poly(-3, {"1/384", "27/384", "121/384", "235/384", "235/384",
                                      "121/384", "27/384", "1/384"});
    LaurentPolynomial half = poly(0, {"1/2", "1/2"});
    LaurentPolynomial sigma5 = half * half * half * half * half;
    auto nu = try_divide(mu4, sigma5);
    REQUIRE(nu.has_value());
    CHECK(*nu == poly(-3, {"1/12", "11/6", "1/12"}));
}

TEST_CASE("laurent properties over random inputs") {
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        LaurentPolynomial a = tt::random_laurent(rng);
        LaurentPolynomial b = tt::random_laurent(rng);
        CHECK(laurent_multiply(a, b) == laurent_multiply(b, a));
        CHECK((a * b).degree_span() == a.degree_span() + b.degree_span());
        auto q = try_divide(a * b, b);
        REQUIRE(q.has_value());
        CHECK(*q == a);
        CHECK(substitute_power(a, 1) == a);
        CHECK(substitute_power(substitute_power(a, 2), 3) == substitute_power(a, 6));
    }
}

TEST_CASE("evaluation") {
    CHECK(kChaikinSymbol.evaluate(Rational(1)) == Rational(2));
    CHECK(kChaikinSymbol.evaluate(Rational(-1)) == Rational(0));
    CHECK(poly(-2, {"1", "0", "3"}).evaluate(Rational(2)) == Rational(1, 4) + Rational(3));
}
