#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "subdiv/analysis.hpp"
#include "subdiv/polygon.hpp"
#include "subdiv/scheme.hpp"

namespace subdiv {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Strict rational token: "p", "p/q", or a plain decimal ("1.25", "-0.5").
/// Decimals become exact scaled rationals. Whitespace anywhere rejects.
Rational parse_rational_token(const std::string& token);

/// Mask file schema:
///   {"name": str, "arity": int, "first_index": int, "coefficients": ["p/q", ...]}
/// plus an optional "provenance" string.
nlohmann::json mask_to_json(const SubdivisionScheme& scheme);
SubdivisionScheme mask_from_json(const nlohmann::json& j);

SubdivisionScheme read_mask_file(const std::filesystem::path& path);
void write_mask_file(const std::filesystem::path& path, const SubdivisionScheme& scheme);

/// Polygon CSV: header line "closed" or "open", then one point per line,
/// comma-separated rational or decimal coordinate tokens.
Polygon read_polygon_csv(std::istream& in);
Polygon read_polygon_file(const std::filesystem::path& path);
void write_polygon_csv(std::ostream& out, const Polygon& polygon);

/// Decimal with the given number of significant digits.
std::string format_real(double value, int significant_digits);

nlohmann::json to_json(const RegularityReport& report);
nlohmann::json to_json(const PrecisionReport& report);
nlohmann::json to_json(const RegularityPair& pair);
nlohmann::json to_json(const ConversionResult& result);
nlohmann::json to_json(const ConvergenceReport& report);

}  // namespace subdiv
