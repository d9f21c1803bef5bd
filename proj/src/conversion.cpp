#include "subdiv/conversion.hpp"

#include <map>
#include <sstream>

namespace subdiv {

namespace {

// Coefficients of the dual form: the full mask shifted to support
// [-2n, 2n-1] reads beta(2u+2) at even index 2u and beta(-2u) at odd index
// 2u+1. Duality makes the two readings consistent.
class BetaView {
public:
    BetaView(const Mask& mask, int n) : n_(n) {
        int shift = mask.first_index() + 2 * n;  // canonical index = stored - shift
        betas_.reserve(static_cast<std::size_t>(2 * n));
        for (int j = 2 - 2 * n; j <= 2 * n; j += 2)
            betas_.push_back(mask.at(j - 2 + shift));
    }

    Rational operator()(int j) const {  // j even, beta_j
        int k = (j - (2 - 2 * n_)) / 2;
        if (j % 2 != 0 || k < 0 || k >= static_cast<int>(betas_.size())) return Rational(0);
        return betas_[static_cast<std::size_t>(k)];
    }

private:
    int n_;
    std::vector<Rational> betas_;
};

struct Accumulator {
    std::map<int, Rational> q;
    void add(int idx, Rational v) { q[idx] += std::move(v); }

    LaurentPolynomial poly() const {
        if (q.empty()) return {};
        int lo = q.begin()->first, hi = q.rbegin()->first;
        std::vector<Rational> c(static_cast<std::size_t>(hi - lo + 1));
        for (const auto& [k, v] : q) c[static_cast<std::size_t>(k - lo)] = v;
        return {lo, std::move(c)};
    }
};

void require_dual_binary(const SubdivisionScheme& s) {
    if (s.mask.arity() != 2)
        throw WrongArity("conversion: binary scheme required (arity 2), got arity " +
                         std::to_string(s.mask.arity()));
    if (s.mask.width() % 2 != 0 || !s.mask.is_palindromic())
        throw NotDualLayout("conversion: mask of scheme '" + s.name +
                            "' is not in the dual layout");
}

ConversionResult finish(const SubdivisionScheme& binary, LaurentPolynomial canonical,
                        RuleParity parity, int m, int n) {
    // The double sums were evaluated on the canonical support [-2n, 2n-1];
    // shift back so the result sits where A(c) A(c^2) of the stored mask does.
    int shift = binary.mask.first_index() + 2 * n;
    LaurentPolynomial symbol = canonical.shifted(3 * shift);
    ConversionResult res{
        SubdivisionScheme{
            Mask::from_symbol(4, symbol),
            binary.name.empty() ? std::string("quaternary") : binary.name + "-quaternary",
            "derived from " +
                (binary.name.empty() ? std::string("binary scheme") : binary.name)},
        parity, m, {}};
    auto sts = stencils(res.quaternary);
    for (std::size_t i = 0; i < 4; ++i)
        res.rule_widths[i] = static_cast<int>(sts[i].weights.size());
    return res;
}

}  // namespace

ConversionResult convert_even(const SubdivisionScheme& binary, std::optional<int> m_opt) {
    require_dual_binary(binary);
    int width = binary.mask.width();  // 4n
    if (width % 8 != 0)
        throw WrongParity("convert_even: per-rule width " + std::to_string(width / 2) +
                          " is not of the form 4m");
    int m = width / 8;
    if (m_opt && *m_opt != m)
        throw WrongParity("convert_even: explicit m=" + std::to_string(*m_opt) +
                          " disagrees with mask width (m=" + std::to_string(m) + ")");
    if (m < 1) throw WrongParity("convert_even: m must be >= 1");
    int n = 2 * m;
    BetaView beta(binary.mask, n);

    Accumulator acc;
    for (int lam = -m + 1; lam <= m; ++lam) {
        for (int al = -2 * m; al <= 2 * m - 1; ++al) {
            int u = al + lam;
            acc.add(-2 - 4 * u, beta(4 - 4 * lam) * beta(-2 * al));
            acc.add(-2 - 4 * u, beta(2 - 4 * lam) * beta(2 + 2 * al));
            acc.add(-1 - 4 * u, beta(4 * lam - 2) * beta(-2 * al));
            acc.add(-1 - 4 * u, beta(4 * lam) * beta(2 + 2 * al));
            acc.add(-4 * u, beta(4 - 4 * lam) * beta(2 + 2 * al));
            acc.add(-4 * (u + 1), beta(2 - 4 * lam) * beta(-2 * al));
            acc.add(1 - 4 * u, beta(4 * lam - 2) * beta(2 + 2 * al));
            acc.add(1 - 4 * (u + 1), beta(4 * lam) * beta(-2 * al));
        }
    }
    return finish(binary, acc.poly(), RuleParity::even_half, m, n);
}

ConversionResult convert_odd(const SubdivisionScheme& binary, std::optional<int> m_opt) {
    require_dual_binary(binary);
    int width = binary.mask.width();  // 4n
    if (width % 8 != 4)
        throw WrongParity("convert_odd: per-rule width " + std::to_string(width / 2) +
                          " is not of the form 4m+2");
    int m = (width - 4) / 8;
    if (m_opt && *m_opt != m)
        throw WrongParity("convert_odd: explicit m=" + std::to_string(*m_opt) +
                          " disagrees with mask width (m=" + std::to_string(m) + ")");
    int n = 2 * m + 1;
    BetaView beta(binary.mask, n);

    Accumulator acc;
    for (int lam = -m; lam <= m; ++lam) {
        for (int al = -2 * m; al <= 2 * m + 1; ++al) {
            int u = al + lam;
            acc.add(-2 - 4 * (u - 1), beta(2 - 4 * lam) * beta(2 * al));
            acc.add(-2 - 4 * u, beta(-4 * lam) * beta(2 - 2 * al));
            acc.add(-1 - 4 * (u - 1), beta(4 * lam) * beta(2 * al));
            acc.add(-1 - 4 * u, beta(2 + 4 * lam) * beta(2 - 2 * al));
            acc.add(-4 * u, beta(2 - 4 * lam) * beta(2 - 2 * al));
            acc.add(-4 * u, beta(-4 * lam) * beta(2 * al));
            acc.add(1 - 4 * u, beta(4 * lam) * beta(2 - 2 * al));
            acc.add(1 - 4 * u, beta(2 + 4 * lam) * beta(2 * al));
        }
    }
    return finish(binary, acc.poly(), RuleParity::odd_half, m, n);
}

ConversionResult convert(const SubdivisionScheme& binary) {
    require_dual_binary(binary);
    int width = binary.mask.width();
    if (width % 8 == 0) return convert_even(binary);
    if (width % 8 == 4) return convert_odd(binary);
    throw WrongParity("convert: mask width " + std::to_string(width) +
                      " does not match a dual scheme");
}

SubdivisionScheme convert_via_symbol(const SubdivisionScheme& binary) {
    if (binary.mask.arity() != 2)
        throw WrongArity("convert_via_symbol: binary scheme required (arity 2)");
    LaurentPolynomial a = binary.mask.symbol();
    LaurentPolynomial product = a * substitute_power(a, 2);
    bool dual = binary.mask.width() % 2 == 0 && binary.mask.is_palindromic();
    std::string provenance = dual ? "symbol-product"
                                  : "symbol-product, outside the dual-scheme formulas";
    return SubdivisionScheme{Mask::from_symbol(4, product),
                             binary.name.empty() ? std::string("quaternary")
                                                 : binary.name + "-quaternary",
                             provenance};
}

std::string expand_rule_text(const SubdivisionScheme& scheme) {
    std::ostringstream os;
    int r = scheme.mask.arity();
    for (const Stencil& st : stencils(scheme)) {
        os << "g'[" << r << "p";
        if (st.phase > 0) os << "+" << st.phase;
        if (st.phase < 0) os << st.phase;
        os << "] = ";
        if (st.weights.empty()) {
            os << "0\n";
            continue;
        }
        for (std::size_t k = 0; k < st.weights.size(); ++k) {
            if (k > 0) os << " + ";
            os << "(" << st.weights[k].to_string() << ") g[p";
            if (st.offsets[k] > 0) os << "+" << st.offsets[k];
            if (st.offsets[k] < 0) os << st.offsets[k];
            os << "]";
        }
        os << "\n";
    }
    return os.str();
}

std::string expand_rule_text(const ConversionResult& result) {
    return expand_rule_text(result.quaternary);
}

}  // namespace subdiv
