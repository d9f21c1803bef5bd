#include "subdiv/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace subdiv {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

}  // namespace

Rational parse_rational_token(const std::string& token) {
    for (char ch : token)
        if (std::isspace(static_cast<unsigned char>(ch)))
            throw ParseError("rational token contains whitespace: '" + token + "'");
    auto dot = token.find('.');
    if (dot == std::string::npos) {
        try {
            return Rational::from_string(token);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    // decimal: [-]digits.digits (either side of the dot may be empty, not both)
    std::string_view sv(token);
    bool negative = !sv.empty() && sv[0] == '-';
    if (negative) sv.remove_prefix(1);
    std::string_view ip = sv.substr(0, dot - (negative ? 1 : 0));
    std::string_view fp = sv.substr(dot - (negative ? 1 : 0) + 1);
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) ||
        (ip.empty() && fp.empty()))
        throw ParseError("bad decimal token: '" + token + "'");
    mpz_class num(std::string(ip.empty() ? "0" : ip) + std::string(fp), 10);
    mpz_class den(1);
    for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
    if (negative) num = -num;
    return Rational(mpq_class(num, den));
}

nlohmann::json mask_to_json(const SubdivisionScheme& scheme) {
    nlohmann::json j;
    j["name"] = scheme.name;
    j["arity"] = scheme.mask.arity();
    j["first_index"] = scheme.mask.first_index();
    auto coeffs = nlohmann::json::array();
    for (const auto& c : scheme.mask.coefficients()) coeffs.push_back(c.to_string());
    j["coefficients"] = std::move(coeffs);
    if (!scheme.provenance.empty()) j["provenance"] = scheme.provenance;
    return j;
}

SubdivisionScheme mask_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("mask file: top level must be an object");
    for (const char* key : {"name", "arity", "first_index", "coefficients"})
        if (!j.contains(key)) throw ParseError(std::string("mask file: missing '") + key + "'");
    if (!j["name"].is_string() || !j["arity"].is_number_integer() ||
        !j["first_index"].is_number_integer() || !j["coefficients"].is_array())
        throw ParseError("mask file: field types are wrong");
    try {
        std::vector<Rational> coeffs;
        for (const auto& tok : j["coefficients"]) {
            if (!tok.is_string()) throw ParseError("mask file: coefficients must be strings");
            coeffs.push_back(parse_rational_token(tok.get<std::string>()));
        }
        if (coeffs.empty()) throw ParseError("mask file: empty coefficient list");
        int arity = j["arity"].get<int>();
        if (arity < 2) throw ParseError("mask file: arity must be >= 2");
        return {Mask(arity, j["first_index"].get<int>(), std::move(coeffs)),
                j["name"].get<std::string>(), j.value("provenance", std::string{})};
    } catch (const ParseError&) {
        throw;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("mask file: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

SubdivisionScheme read_mask_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open mask file: " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("mask file " + path.string() + ": " + e.what());
    }
    return mask_from_json(j);
}

void write_mask_file(const std::filesystem::path& path, const SubdivisionScheme& scheme) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write mask file: " + path.string());
    out << mask_to_json(scheme).dump(2) << "\n";
}

Polygon read_polygon_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("polygon: empty input");
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    Topology topo;
    if (line == "closed")
        topo = Topology::closed;
    else if (line == "open")
        topo = Topology::open;
    else
        throw ParseError("polygon: header must be 'closed' or 'open', got '" + line + "'");

    std::vector<std::vector<Rational>> pts;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty()) continue;
        std::vector<Rational> p;
        std::stringstream ss(line);
        std::string tok;
        while (std::getline(ss, tok, ',')) p.push_back(parse_rational_token(tok));
        pts.push_back(std::move(p));
    }
    try {
        return Polygon(topo, std::move(pts));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

Polygon read_polygon_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open polygon file: " + path.string());
    return read_polygon_csv(in);
}

void write_polygon_csv(std::ostream& out, const Polygon& polygon) {
    out << (polygon.topology() == Topology::closed ? "closed" : "open") << "\n";
    for (const auto& p : polygon.points()) {
        for (std::size_t d = 0; d < p.size(); ++d) {
            if (d) out << ",";
            out << p[d].to_string();
        }
        out << "\n";
    }
}

std::string format_real(double value, int significant_digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, value);
    return buf;
}

namespace {

nlohmann::json rational_array(const std::vector<Rational>& xs) {
    auto arr = nlohmann::json::array();
    for (const auto& x : xs) arr.push_back(x.to_string());
    return arr;
}

nlohmann::json laurent_json(const LaurentPolynomial& p) {
    nlohmann::json j;
    j["lowest_degree"] = p.is_zero() ? 0 : p.lowest_degree();
    j["coefficients"] = rational_array(p.coefficients());
    return j;
}

nlohmann::json real_array(const std::vector<double>& xs) {
    auto arr = nlohmann::json::array();
    for (double x : xs) arr.push_back(format_real(x, 12));
    return arr;
}

}  // namespace

nlohmann::json to_json(const RegularityReport& rep) {
    nlohmann::json j;
    j["scheme"] = rep.scheme_name;
    j["arity"] = rep.arity;
    j["smoothing_order"] = rep.smoothing_order;
    j["remainder"] = laurent_json(rep.remainder);
    j["remainder_coefficients"] = rational_array(rep.remainder_coeffs);
    auto mats = nlohmann::json::array();
    for (const auto& m : rep.matrices) {
        auto rows = nlohmann::json::array();
        for (int i = 1; i <= m.size(); ++i) {
            auto row = nlohmann::json::array();
            for (int k = 1; k <= m.size(); ++k) row.push_back(m.at(i, k).to_string());
            rows.push_back(std::move(row));
        }
        mats.push_back(std::move(rows));
    }
    j["matrices"] = std::move(mats);
    j["spectral_radii"] = real_array(rep.spectral_radii);
    j["infinity_norms"] = rational_array(rep.infinity_norms);
    j["two_norms"] = real_array(rep.two_norms);
    j["xi_lower"] = format_real(rep.xi_lower, 12);
    j["xi_upper"] = format_real(rep.xi_upper, 12);
    j["xi_infinity_exact"] = rep.xi_infinity_exact.to_string();
    j["xi_mid"] = format_real(rep.xi_mid, 12);
    j["r_lower"] = format_real(rep.r_lower, 12);
    j["r_mid"] = format_real(rep.r_mid, 12);
    j["r_upper"] = format_real(rep.r_upper, 12);
    if (rep.published) {
        j["published"] = format_real(*rep.published, 12);
        j["published_delta"] = format_real(*rep.published_delta, 12);
        j["disagrees_with_published"] = rep.disagrees_with_published;
    }
    return j;
}

nlohmann::json to_json(const PrecisionReport& rep) {
    nlohmann::json j;
    j["degree_of_precision"] = rep.degree_of_precision;
    j["degree_of_generation"] = rep.degree_of_generation;
    if (rep.parameter_shift)
        j["parameter_shift"] = rep.parameter_shift->to_string();
    else
        j["parameter_shift"] = nullptr;
    return j;
}

nlohmann::json to_json(const RegularityPair& pair) {
    nlohmann::json j;
    j["binary"] = to_json(pair.binary);
    j["quaternary"] = to_json(pair.quaternary);
    j["r_mid_delta"] = format_real(pair.r_mid_delta, 12);
    return j;
}

nlohmann::json to_json(const ConversionResult& result) {
    nlohmann::json j;
    j["mask"] = mask_to_json(result.quaternary);
    j["parity"] = result.parity == RuleParity::even_half ? "even" : "odd";
    j["m"] = result.m;
    j["rule_widths"] = result.rule_widths;
    return j;
}

nlohmann::json to_json(const ConvergenceReport& rep) {
    nlohmann::json j;
    j["satisfied"] = rep.satisfied;
    auto sums = nlohmann::json::object();
    for (std::size_t i = 0; i < rep.phases.size(); ++i)
        sums[std::to_string(rep.phases[i])] = rep.phase_sums[i].to_string();
    j["phase_sums"] = std::move(sums);
    return j;
}

}  // namespace subdiv
