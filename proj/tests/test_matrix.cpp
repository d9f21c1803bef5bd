#include <doctest.h>

#include <cmath>
#include <random>

#include "subdiv/matrix.hpp"
#include "test_util.hpp"

using subdiv::Rational;
using subdiv::SmallMatrix;
namespace tt = subdiv::testing;

namespace {

SmallMatrix mat2(const char* a, const char* b, const char* c, const char* d) {
    SmallMatrix m(2);
    m.at(1, 1) = Rational::from_string(a);
    m.at(1, 2) = Rational::from_string(b);
    m.at(2, 1) = Rational::from_string(c);
    m.at(2, 2) = Rational::from_string(d);
    return m;
}

}  // namespace

TEST_CASE("infinity norm is the max absolute row sum") {
    CHECK(infinity_norm(mat2("11/6", "0", "1/12", "1/12")) == Rational(11, 6));
    CHECK(infinity_norm(SmallMatrix(3)) == Rational(0));
    CHECK(infinity_norm(mat2("-1/2", "1/2", "0", "1")) == Rational(1));
}

TEST_CASE("spectral radius on fixed matrices") {
    CHECK(subdiv::spectral_radius(mat2("11/6", "0", "1/12", "1/12")) ==
          doctest::Approx(11.0 / 6.0).epsilon(1e-12));
    SmallMatrix id(3);
    for (int i = 1; i <= 3; ++i) id.at(i, i) = Rational(1);
    CHECK(subdiv::spectral_radius(id) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(subdiv::spectral_radius(mat2("0", "11/6", "0", "1/12")) ==
          doctest::Approx(1.0 / 12.0).epsilon(1e-10));
    // nilpotent
    CHECK(subdiv::spectral_radius(mat2("0", "1", "0", "0")) == 0.0);
    // rotation: complex pair of modulus 1
    CHECK(subdiv::spectral_radius(mat2("0", "-1", "1", "0")) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(subdiv::spectral_radius(id, 0.0), std::invalid_argument);
}

TEST_CASE("two norm is the largest singular value") {
    // ||E1||_2 for the worked 4-point remainder: sqrt of the top eigenvalue
    // of E1^T E1, about 1.8352302
    CHECK(subdiv::two_norm(mat2("1/12", "1/12", "0", "11/6")) ==
          doctest::Approx(1.8352302).epsilon(1e-6));
    SmallMatrix diag(2);
    diag.at(1, 1) = Rational(-3);
    diag.at(2, 2) = Rational(2);
    CHECK(subdiv::two_norm(diag) == doctest::Approx(3.0).epsilon(1e-12));
    // nilpotent shift has a nonzero singular value
    CHECK(subdiv::two_norm(mat2("0", "1", "0", "0")) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("spectral radius never exceeds the infinity norm") {
    std::mt19937_64 rng(987654321);
    std::uniform_int_distribution<int> size(1, 8);
    for (int trial = 0; trial < 120; ++trial) {
        int t = size(rng);
        SmallMatrix m(t);
        for (int i = 1; i <= t; ++i)
            for (int j = 1; j <= t; ++j) m.at(i, j) = tt::random_rational(rng, 20, 10);
        double rho = subdiv::spectral_radius(m);
        CHECK(rho <= infinity_norm(m).to_double() + 1e-9);
        CHECK(rho <= subdiv::two_norm(m) + 1e-9);
        CHECK(rho >= 0.0);
    }
}

TEST_CASE("indexing is 1-based and bounds-checked") {
    SmallMatrix m(2);
    m.at(1, 1) = Rational(5);
    CHECK(m.at(1, 1) == Rational(5));
    CHECK_THROWS_AS(m.at(0, 1), std::out_of_range);
    CHECK_THROWS_AS(m.at(1, 3), std::out_of_range);
    CHECK_THROWS_AS(SmallMatrix(0), std::invalid_argument);
}
