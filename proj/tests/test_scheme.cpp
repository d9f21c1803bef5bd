#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <random>

#include "subdiv/catalog.hpp"
#include "subdiv/scheme.hpp"
#include "test_util.hpp"

using namespace subdiv;
namespace tt = subdiv::testing;

namespace {

std::vector<Rational> row(std::initializer_list<const char*> toks) {
    std::vector<Rational> out;
    for (const char* t : toks) out.push_back(Rational::from_string(t));
    return out;
}

bool has_stencil_row(const SubdivisionScheme& s, const std::vector<Rational>& weights) {
    for (const Stencil& st : stencils(s))
        if (st.weights == weights) return true;
    return false;
}

}  // namespace

TEST_CASE("mask invariants") {
    CHECK_THROWS_AS(Mask(1, 0, row({"1"})), std::invalid_argument);
    CHECK_THROWS_AS(Mask(2, 0, row({"0", "0"})), std::invalid_argument);
    Mask trimmed(2, 0, row({"0", "1/2", "1/2", "0"}));
    CHECK(trimmed.first_index() == 1);
    CHECK(trimmed.width() == 2);
    CHECK(Mask(2, 0, row({"1/4", "3/4", "3/4", "1/4"})).is_palindromic());
    CHECK_FALSE(Mask(2, 0, row({"1/4", "3/4", "1/2"})).is_palindromic());
}

TEST_CASE("chaikin stencils carry both weight orders") {
    SubdivisionScheme chaikin{Mask(2, 0, row({"1/4", "3/4", "3/4", "1/4"})), "chaikin", ""};
    auto sts = stencils(chaikin);
    REQUIRE(sts.size() == 2);
    CHECK(has_stencil_row(chaikin, row({"1/4", "3/4"})));
    CHECK(has_stencil_row(chaikin, row({"3/4", "1/4"})));
}

TEST_CASE("corollary-style quaternary stencils are two mirror pairs") {
    SubdivisionScheme q = catalog_get("quat-5pt");
    auto sts = stencils(q);
    REQUIRE(sts.size() == 4);
    auto a_row = row({"241/36864", "1189/4608", "1209/2048", "83/576", "37/36864"});
    auto b_row = row({"3/16384", "9733/147456", "38119/73728", "3213/8192", "3623/147456",
                      "1/147456"});
    auto reversed = [](std::vector<Rational> v) {
        std::reverse(v.begin(), v.end());
        return v;
    };
    CHECK(has_stencil_row(q, a_row));
    CHECK(has_stencil_row(q, reversed(a_row)));
    CHECK(has_stencil_row(q, b_row));
    CHECK(has_stencil_row(q, reversed(b_row)));
}

TEST_CASE("degenerate single-coefficient mask leaves an empty coset") {
    SubdivisionScheme s{Mask(2, 0, row({"1"})), "spike", ""};
    auto sts = stencils(s);
    REQUIRE(sts.size() == 2);
    std::map<int, std::vector<Rational>> by_phase;
    for (auto& st : sts) by_phase[st.phase] = st.weights;
    CHECK(by_phase[0] == row({"1"}));
    CHECK(by_phase[-1].empty());
}

TEST_CASE("stencils partition the mask exactly") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        std::uniform_int_distribution<int> arity(2, 5), width(1, 14), anchor(-6, 6);
        int r = arity(rng), w = width(rng);
        std::vector<Rational> coeffs(static_cast<std::size_t>(w));
        for (auto& c : coeffs) c = tt::random_rational(rng, 30, 10);
        coeffs.front() = tt::random_nonzero_rational(rng, 30, 10);
        coeffs.back() = tt::random_nonzero_rational(rng, 30, 10);
        SubdivisionScheme s{Mask(r, anchor(rng), coeffs), "fuzz", ""};
        std::map<int, Rational> rebuilt;
        for (const Stencil& st : stencils(s))
            for (std::size_t k = 0; k < st.offsets.size(); ++k) {
                int index = st.phase - r * st.offsets[k];
                CHECK(rebuilt.emplace(index, st.weights[k]).second);  // no overlap
            }
        for (int d = s.mask.first_index(); d <= s.mask.last_index(); ++d) {
            auto it = rebuilt.find(d);
            REQUIRE(it != rebuilt.end());
            CHECK(it->second == s.mask.at(d));
        }
    }
}

TEST_CASE("convergence condition") {
    for (const auto& name : catalog_names()) {
        ConvergenceReport rep = check_convergence_condition(catalog_get(name));
        CAPTURE(name);
        CHECK(rep.satisfied);
        for (const auto& s : rep.phase_sums) CHECK(s == Rational(1));
    }
    // arity-4 mask with two empty-summing cosets
    SubdivisionScheme bad{Mask(4, 0, row({"1/2", "1/2"})), "bad", ""};
    ConvergenceReport rep = check_convergence_condition(bad);
    CHECK_FALSE(rep.satisfied);
    std::multiset<std::string> sums;
    for (const auto& s : rep.phase_sums) sums.insert(s.to_string());
    CHECK(sums == std::multiset<std::string>{"0", "0", "1/2", "1/2"});
}

TEST_CASE("catalog") {
    CHECK(catalog_names().size() == 14);
    SubdivisionScheme s = catalog_get("binary-chaikin-2pt");
    CHECK(s.mask.coefficients() == row({"1/4", "3/4", "3/4", "1/4"}));
    SubdivisionScheme s4 = catalog_get("binary-siddiqi-4pt");
    CHECK(s4.mask.width() == 8);
    CHECK(s4.mask.coefficients()[0] == Rational(1, 384));
    CHECK(s4.mask.coefficients()[1] == Rational(27, 384));
    CHECK(s4.mask.coefficients()[2] == Rational(121, 384));
    CHECK(s4.mask.coefficients()[3] == Rational(235, 384));
    CHECK(s4.mask.is_palindromic());
    CHECK_THROWS_AS(catalog_get("nonexistent"), UnknownScheme);
    // every catalog binary is dual: palindromic, even width
    for (const auto& pair : conversion_pairs()) {
        SubdivisionScheme b = catalog_get(pair.binary);
        CHECK(b.mask.arity() == 2);
        CHECK(b.mask.width() % 4 == 0);
        CHECK(b.mask.is_palindromic());
        CHECK(catalog_get(pair.quaternary).mask.arity() == 4);
    }
}

TEST_CASE("palindromic masks pair mirrored stencils") {
    for (const auto& name : catalog_names()) {
        SubdivisionScheme s = catalog_get(name);
        REQUIRE(s.mask.is_palindromic());
        auto sts = stencils(s);
        for (const Stencil& st : sts) {
            std::vector<Rational> rev = st.weights;
            std::reverse(rev.begin(), rev.end());
            bool found = false;
            for (const Stencil& other : sts) found = found || other.weights == rev;
            CAPTURE(name);
            CAPTURE(st.phase);
            CHECK(found);
        }
    }
}
