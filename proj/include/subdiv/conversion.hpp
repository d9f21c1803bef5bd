#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include "subdiv/scheme.hpp"

namespace subdiv {

struct WrongArity : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct WrongParity : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
/// The explicit conversion formulas require the dual layout: the even coset
/// read forwards must equal the odd coset read backwards (equivalently, the
/// full coefficient list is a palindrome of even length).
struct NotDualLayout : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class RuleParity {
    even_half,  // per-rule width 4m   (n = 2m)
    odd_half,   // per-rule width 4m+2 (n = 2m+1)
};

struct ConversionResult {
    SubdivisionScheme quaternary;
    RuleParity parity;
    int m = 0;
    /// Post-trim stencil widths, ordered by phase -2,-1,0,1.
    std::array<int, 4> rule_widths{};
};

/// Binary-to-quaternary conversion via the explicit coefficient-product
/// double sums. The binary scheme must be dual with per-rule width 4m
/// (full mask width 8m).
ConversionResult convert_even(const SubdivisionScheme& binary,
                              std::optional<int> m = std::nullopt);

/// Same for per-rule width 4m+2 (full mask width 8m+4). m may be 0.
ConversionResult convert_odd(const SubdivisionScheme& binary,
                             std::optional<int> m = std::nullopt);

/// Parity inferred from the mask width.
ConversionResult convert(const SubdivisionScheme& binary);

/// Oracle: the quaternary scheme with symbol A(c) * A(c^2). One step of the
/// result equals two steps of the input, point for point, index for index.
/// Accepts any binary mask, dual or not.
SubdivisionScheme convert_via_symbol(const SubdivisionScheme& binary);

/// Renders the per-phase rules with exact fractions and source offsets.
std::string expand_rule_text(const SubdivisionScheme& scheme);
std::string expand_rule_text(const ConversionResult& result);

}  // namespace subdiv
