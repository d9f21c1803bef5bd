#pragma once

#include <string>
#include <vector>

#include "subdiv/laurent.hpp"
#include "subdiv/rational.hpp"

namespace subdiv {

/// Refinement mask of a stationary r-ary subdivision scheme. A scheme maps a
/// polygon level k to level k+1 by
///
///     g'[i] = sum_j mask[i - r j] g[j].
///
/// Stored trimmed: the first and last coefficients are nonzero; interior
/// zeros are allowed.
class Mask {
public:
    Mask(int arity, int first_index, std::vector<Rational> coefficients);

    int arity() const { return arity_; }
    int first_index() const { return first_; }
    int last_index() const { return first_ + static_cast<int>(coeffs_.size()) - 1; }
    int width() const { return static_cast<int>(coeffs_.size()); }

    const std::vector<Rational>& coefficients() const { return coeffs_; }

    /// Coefficient at absolute index; zero outside the support.
    Rational at(int index) const {
        int i = index - first_;
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
        return coeffs_[static_cast<std::size_t>(i)];
    }

    bool is_palindromic() const;

    Mask shifted(int delta) const { return Mask(arity_, first_ + delta, coeffs_); }

    /// The symbol sum_d mask[d] c^d.
    LaurentPolynomial symbol() const { return LaurentPolynomial(first_, coeffs_); }

    static Mask from_symbol(int arity, const LaurentPolynomial& symbol);

    friend bool operator==(const Mask& a, const Mask& b) {
        return a.arity_ == b.arity_ && a.first_ == b.first_ && a.coeffs_ == b.coeffs_;
    }

private:
    int arity_;
    int first_;
    std::vector<Rational> coeffs_;
};

/// One coset of a mask: the rule producing refined points of a fixed phase.
/// Phases use the balanced labels {-1,0} for arity 2 and {-2,-1,0,1} for
/// arity 4. The refined point g'[r*phi + phase] combines the source points
/// g[phi + offsets[k]] with the matching weights.
struct Stencil {
    int phase = 0;
    std::vector<int> offsets;
    std::vector<Rational> weights;

    Rational weight_sum() const {
        Rational s(0);
        for (const auto& w : weights) s += w;
        return s;
    }
};

struct SubdivisionScheme {
    Mask mask;
    std::string name;
    std::string provenance;
};

/// Balanced phase labels for an arity: r=2 -> {-1,0}, r=4 -> {-2,-1,0,1}.
std::vector<int> phase_labels(int arity);

/// Coset decomposition: one stencil per phase; together they partition the
/// mask coefficients exactly. Empty cosets yield empty stencils.
std::vector<Stencil> stencils(const SubdivisionScheme& scheme);

struct ConvergenceReport {
    bool satisfied = false;
    std::vector<int> phases;
    std::vector<Rational> phase_sums;  // aligned with phases
};

/// Necessary condition for convergence: each coset of the mask sums to 1.
ConvergenceReport check_convergence_condition(const SubdivisionScheme& scheme);

}  // namespace subdiv
