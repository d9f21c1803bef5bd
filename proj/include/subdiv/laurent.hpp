#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subdiv/rational.hpp"

namespace subdiv {

/// Laurent polynomial over exact rationals. Stored trimmed: the first and
/// last coefficients are nonzero. The zero polynomial has an empty
/// coefficient list.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;  // zero polynomial
    LaurentPolynomial(int lowest_degree, std::vector<Rational> coefficients);

    static LaurentPolynomial constant(const Rational& c) { return {0, {c}}; }
    static LaurentPolynomial monomial(const Rational& c, int degree) { return {degree, {c}}; }

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree of the first stored coefficient. Meaningless for zero (returns 0).
    int lowest_degree() const { return lowest_; }
    int highest_degree() const { return lowest_ + static_cast<int>(coeffs_.size()) - 1; }

    /// coefficients.size() - 1; -1 for the zero polynomial.
    int degree_span() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational coefficient(int degree) const {
        int i = degree - lowest_;
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
        return coeffs_[static_cast<std::size_t>(i)];
    }

    /// Multiplies by c^delta.
    LaurentPolynomial shifted(int delta) const;

    /// Same coefficients with lowest degree moved to 0.
    LaurentPolynomial normalized() const;

    Rational evaluate(const Rational& x) const;

    std::string to_string() const;  // e.g. "1/4 + 3/4 c + ... " for diagnostics

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return (a.is_zero() && b.is_zero()) ||
               (a.lowest_ == b.lowest_ && a.coeffs_ == b.coeffs_);
    }
    friend bool operator!=(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return !(a == b);
    }

private:
    int lowest_ = 0;
    std::vector<Rational> coeffs_;
};

LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b);
LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b);
LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

inline LaurentPolynomial laurent_multiply(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a * b;
}

/// a(c) -> a(c^k), k >= 1.
LaurentPolynomial substitute_power(const LaurentPolynomial& a, int k);

/// Exact Laurent quotient q with q*b == a, or nullopt when none exists.
/// b must be nonzero.
std::optional<LaurentPolynomial> try_divide(const LaurentPolynomial& a,
                                            const LaurentPolynomial& b);

/// (1 + c + ... + c^(s-1)) / s, the smoothing factor for arity s.
LaurentPolynomial smoothing_factor(int arity);

}  // namespace subdiv
