#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "subdiv/analysis.hpp"
#include "subdiv/catalog.hpp"
#include "test_util.hpp"

using namespace subdiv;

namespace {

std::vector<Rational> row(std::initializer_list<const char*> toks) {
    std::vector<Rational> out;
    for (const char* t : toks) out.push_back(Rational::from_string(t));
    return out;
}

std::multiset<std::string> multiset_of(const std::vector<Rational>& xs) {
    std::multiset<std::string> out;
    for (const auto& x : xs) out.insert(x.to_string());
    return out;
}

}  // namespace

TEST_CASE("smoothing factorization fixtures") {
    auto f4 = smoothing_factorization(catalog_get("binary-siddiqi-4pt"));
    CHECK(f4.order == 5);
    CHECK(f4.remainder.normalized().coefficients() == row({"1/12", "11/6", "1/12"}));

    auto f5 = smoothing_factorization(catalog_get("quat-5pt"));
    CHECK(f5.order == 5);
    CHECK(multiset_of(f5.remainder.coefficients()) ==
          multiset_of(row({"1/144", "11/72", "23/144", "121/36", "23/144", "11/72", "1/144"})));

    auto fc = smoothing_factorization(catalog_get("binary-chaikin-2pt"));
    CHECK(fc.order == 3);
    CHECK(fc.remainder.normalized() == LaurentPolynomial::constant(Rational(2)));
}

TEST_CASE("factorization is maximal") {
    for (const auto& name : catalog_names()) {
        auto fact = smoothing_factorization(catalog_get(name));
        CAPTURE(name);
        CHECK_FALSE(
            try_divide(fact.remainder, smoothing_factor(catalog_get(name).mask.arity()))
                .has_value());
    }
}

TEST_CASE("transfer matrices match the displayed fixtures") {
    LaurentPolynomial nu4(0, row({"1/12", "11/6", "1/12"}));
    auto mats = transfer_matrices(nu4, 2);
    REQUIRE(mats.size() == 3);
    SmallMatrix e0(2), e1(2), e2(2);
    e0.at(1, 1) = Rational(11, 6); e0.at(1, 2) = Rational(0);
    e0.at(2, 1) = Rational(1, 12); e0.at(2, 2) = Rational(1, 12);
    e1.at(1, 1) = Rational(1, 12); e1.at(1, 2) = Rational(1, 12);
    e1.at(2, 1) = Rational(0);     e1.at(2, 2) = Rational(11, 6);
    e2.at(1, 1) = Rational(0);     e2.at(1, 2) = Rational(11, 6);
    e2.at(2, 1) = Rational(0);     e2.at(2, 2) = Rational(1, 12);
    CHECK(mats[0] == e0);
    CHECK(mats[1] == e1);
    CHECK(mats[2] == e2);
}

TEST_CASE("quaternary transfer matrices carry the displayed sparsity") {
    auto fact = smoothing_factorization(catalog_get("quat-5pt"));
    auto mats = transfer_matrices(fact.remainder, 4);
    REQUIRE(mats.size() == 7);
    const LaurentPolynomial nu = fact.remainder.normalized();
    const auto& e = nu.coefficients();
    // first column of E0 is (e3, e4, e5, e6, 0, 0)
    CHECK(mats[0].at(1, 1) == e[3]);
    CHECK(mats[0].at(2, 1) == e[4]);
    CHECK(mats[0].at(3, 1) == e[5]);
    CHECK(mats[0].at(4, 1) == e[6]);
    CHECK(mats[0].at(5, 1) == Rational(0));
    CHECK(mats[0].at(1, 2) == Rational(0));
    // first column of E4 is all zero
    for (int i = 1; i <= 6; ++i) CHECK(mats[4].at(i, 1) == Rational(0));
}

TEST_CASE("degenerate span-one remainder") {
    // t = 1: two 1x1 matrices, entries e_{1+1-2+q} = e_q
    LaurentPolynomial nu(0, row({"2/3", "4/3"}));
    auto mats = transfer_matrices(nu, 2);
    REQUIRE(mats.size() == 2);
    CHECK(mats[0].size() == 1);
    CHECK(mats[0].at(1, 1) == Rational(2, 3));
    CHECK(mats[1].at(1, 1) == Rational(4, 3));
}

TEST_CASE("holder regularity of the worked pair") {
    RegularityReport r4 = holder_regularity(catalog_get("binary-siddiqi-4pt"));
    CHECK(r4.smoothing_order == 5);
    CHECK(r4.xi_infinity_exact == Rational(11, 6));
    CHECK(std::abs(r4.r_mid - 4.124809715) < 1e-3);
    CHECK(r4.published.has_value());
    CHECK(r4.disagrees_with_published);  // exact 5 - log2(11/6) vs the rounded record

    RegularityReport q5 = holder_regularity(catalog_get("quat-5pt"));
    CHECK(q5.xi_infinity_exact == Rational(121, 36));
    CHECK(std::abs(q5.r_mid - 4.123978973) < 1e-3);
}

TEST_CASE("chaikin hits the constant-remainder branch exactly") {
    RegularityReport rep = holder_regularity(catalog_get("binary-chaikin-2pt"));
    CHECK(rep.matrices.empty());
    CHECK(rep.xi_lower == rep.xi_upper);
    CHECK(rep.r_mid == doctest::Approx(2.0).epsilon(1e-14));
    RegularityReport quat = holder_regularity(catalog_get("quat-chaikin-derived"));
    CHECK(quat.r_mid == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("sandwich ordering holds on every catalog scheme") {
    for (const auto& name : catalog_names()) {
        RegularityReport rep = holder_regularity(catalog_get(name));
        CAPTURE(name);
        CHECK(rep.xi_lower <= rep.xi_upper + 1e-12);
        CHECK(rep.r_lower <= rep.r_mid + 1e-12);
        CHECK(rep.r_mid <= rep.r_upper + 1e-12);
        Rational inf_max(0);
        for (const auto& n : rep.infinity_norms)
            if (n > inf_max) inf_max = n;
        CHECK(rep.xi_infinity_exact == inf_max);
    }
}

TEST_CASE("degree of generation") {
    CHECK(degree_of_generation(catalog_get("binary-chaikin-2pt")) == 2);
    CHECK(degree_of_generation(catalog_get("binary-siddiqi-12pt")) == 12);
    CHECK(degree_of_generation(catalog_get("binary-binomial-10pt")) == 10);
}

TEST_CASE("degree of precision") {
    PrecisionReport chaikin = degree_of_precision(catalog_get("binary-chaikin-2pt"));
    CHECK(chaikin.degree_of_precision == 1);
    CHECK(chaikin.degree_of_generation == 2);
    REQUIRE(chaikin.parameter_shift.has_value());
    CHECK(*chaikin.parameter_shift == Rational(-3, 2));

    PrecisionReport binom = degree_of_precision(catalog_get("binary-binomial-10pt"));
    CHECK(binom.degree_of_precision == 9);
    CHECK(binom.degree_of_generation == 10);

    PrecisionReport binom_q = degree_of_precision(catalog_get("quat-14pt-binomial"));
    CHECK(binom_q.degree_of_precision == 9);
    CHECK(binom_q.degree_of_generation == 10);

    SubdivisionScheme bad{Mask(2, 0, row({"1/2", "1/2", "1/2"})), "bad", ""};
    CHECK_THROWS_AS(degree_of_precision(bad), NotConvergent);
}

TEST_CASE("precision never exceeds generation on the catalog") {
    for (const auto& name : catalog_names()) {
        PrecisionReport rep = degree_of_precision(catalog_get(name));
        CAPTURE(name);
        CHECK(rep.degree_of_precision <= rep.degree_of_generation);
        CHECK(rep.degree_of_generation + 1 ==
              smoothing_factorization(catalog_get(name)).order);
    }
}

TEST_CASE("deeper product bounds tighten the sandwich") {
    SubdivisionScheme s = catalog_get("binary-siddiqi-6pt");
    RegularityReport d1 = holder_regularity(s, 1);
    RegularityReport d2 = holder_regularity(s, 2);
    // products include repeated factors, so the lower bound cannot shrink;
    // submultiplicativity keeps the upper bound from growing
    CHECK(d2.xi_lower >= d1.xi_lower - 1e-9);
    CHECK(d2.xi_upper <= d1.xi_upper + 1e-9);
    CHECK(d2.xi_lower <= d2.xi_upper + 1e-12);
    CHECK_FALSE(d2.published.has_value());
    CHECK_THROWS_AS(holder_regularity(s, 0), std::invalid_argument);
}

TEST_CASE("pair report") {
    RegularityPair pair = regularity_pair_report(catalog_get("binary-siddiqi-6pt"));
    CHECK(pair.binary.published == doctest::Approx(6.383689358));
    CHECK(pair.quaternary.published == doctest::Approx(6.378805452));
    CHECK(pair.binary.smoothing_order == 7);
    CHECK(pair.quaternary.smoothing_order == 7);
    CHECK(pair.r_mid_delta == doctest::Approx(pair.binary.r_mid - pair.quaternary.r_mid));

    RegularityPair chaikin = regularity_pair_report(catalog_get("binary-chaikin-2pt"));
    CHECK(chaikin.binary.r_mid == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(chaikin.quaternary.r_mid == doctest::Approx(2.0).epsilon(1e-14));
}
