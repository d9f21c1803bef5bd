#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "subdiv/conversion.hpp"
#include "subdiv/matrix.hpp"
#include "subdiv/scheme.hpp"

namespace subdiv {

struct NotConvergent : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotAnalyzable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SmoothingFactorization {
    int order = 0;                // maximal power p of the smoothing factor
    LaurentPolynomial remainder;  // exact quotient, keeps its monomial shift
};

/// symbol = ((1 + c + ... + c^(s-1)) / s)^p * remainder, with p maximal.
SmoothingFactorization smoothing_factorization(const SubdivisionScheme& s);

/// Matrices (E_q)[i][j] = e[t + i - s*j + q] for i,j = 1..t, q = 0..t, where
/// e is the remainder coefficient list normalized to lowest degree 0 and
/// t its degree span (>= 1; the constant case never reaches here).
/// Out-of-range e indices read as zero.
std::vector<SmallMatrix> transfer_matrices(const LaurentPolynomial& remainder, int arity);

struct RegularityReport {
    std::string scheme_name;
    int arity = 0;
    int smoothing_order = 0;
    LaurentPolynomial remainder;
    std::vector<Rational> remainder_coeffs;  // e_0 .. e_t
    std::vector<SmallMatrix> matrices;       // empty when t = 0
    std::vector<double> spectral_radii;
    std::vector<Rational> infinity_norms;  // exact, informational
    std::vector<double> two_norms;         // the operative upper bounds
    double xi_lower = 0, xi_upper = 0, xi_mid = 0;
    Rational xi_infinity_exact;  // max infinity norm, exact
    double r_lower = 0, r_mid = 0, r_upper = 0;
    /// Regularity value reported in the literature for this scheme, when one
    /// is on record, with the deviation of the computed midpoint from it.
    std::optional<double> published;
    std::optional<double> published_delta;
    bool disagrees_with_published = false;  // |delta| > 1e-6
};

/// Full Hoelder regularity report: r = p - log_s(xi) with xi sandwiched
/// between the max spectral radius and the max spectral 2-norm of the
/// transfer matrices (both submultiplicative bounds on the joint spectral
/// radius); the mid estimate uses the midpoint of the two bounds, which is
/// the convention behind the values on record for the catalog schemes. The
/// exact infinity norms are carried alongside for reference.
///
/// depth > 1 tightens both bounds over all matrix products of that length:
/// max rho(prod)^(1/L) and max ||prod||_2^(1/L). The per-matrix report
/// fields always describe the depth-1 matrices; published-value comparison
/// is only attached at depth 1.
RegularityReport holder_regularity(const SubdivisionScheme& s, int depth = 1);

/// Largest polynomial degree the scheme can generate: smoothing order - 1.
int degree_of_generation(const SubdivisionScheme& s);

struct PrecisionReport {
    int degree_of_precision = -1;
    int degree_of_generation = -1;
    /// Parameter shift tau with refined samples at (i + tau)/s; absent when
    /// linear data is not reproduced.
    std::optional<Rational> parameter_shift;
};

/// Exact polynomial-reproduction test: detects tau from linear data, then
/// checks degree d data against ((i + tau)/s)^d on a window wide enough to
/// separate degree-d polynomials. Requires the convergence condition.
PrecisionReport degree_of_precision(const SubdivisionScheme& s, int max_degree = 16);

struct RegularityPair {
    RegularityReport binary;
    RegularityReport quaternary;
    double r_mid_delta = 0;  // binary minus quaternary
};

/// Converts the even-point binary scheme and analyzes both sides.
RegularityPair regularity_pair_report(const SubdivisionScheme& binary);

}  // namespace subdiv
