#include "subdiv/scheme.hpp"

#include <algorithm>
#include <stdexcept>

namespace subdiv {

Mask::Mask(int arity, int first_index, std::vector<Rational> coefficients)
    : arity_(arity), first_(first_index), coeffs_(std::move(coefficients)) {
    if (arity_ < 2) throw std::invalid_argument("Mask: arity must be >= 2");
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
    std::size_t tail = coeffs_.size();
    while (tail > lead && coeffs_[tail - 1].is_zero()) --tail;
    if (lead == tail) throw std::invalid_argument("Mask: all coefficients are zero");
    first_ += static_cast<int>(lead);
    coeffs_ = std::vector<Rational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(lead),
                                    coeffs_.begin() + static_cast<std::ptrdiff_t>(tail));
}

bool Mask::is_palindromic() const {
    std::size_t n = coeffs_.size();
    for (std::size_t i = 0; i < n / 2; ++i)
        if (coeffs_[i] != coeffs_[n - 1 - i]) return false;
    return true;
}

Mask Mask::from_symbol(int arity, const LaurentPolynomial& symbol) {
    if (symbol.is_zero()) throw std::invalid_argument("Mask: zero symbol");
    return Mask(arity, symbol.lowest_degree(), symbol.coefficients());
}

std::vector<int> phase_labels(int arity) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(arity));
    for (int eta = -arity / 2; eta < arity - arity / 2; ++eta) out.push_back(eta);
    return out;
}

namespace {

int floor_div(int a, int b) {
    int q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

int ceil_div(int a, int b) { return -floor_div(-a, b); }

}  // namespace

std::vector<Stencil> stencils(const SubdivisionScheme& scheme) {
    const Mask& m = scheme.mask;
    const int r = m.arity();
    std::vector<Stencil> out;
    for (int eta : phase_labels(r)) {
        Stencil st;
        st.phase = eta;
        // offsets u with eta - r u inside [first, last]
        int u_lo = ceil_div(eta - m.last_index(), r);
        int u_hi = floor_div(eta - m.first_index(), r);
        for (int u = u_lo; u <= u_hi; ++u) {
            st.offsets.push_back(u);
            st.weights.push_back(m.at(eta - r * u));
        }
        out.push_back(std::move(st));
    }
    return out;
}

ConvergenceReport check_convergence_condition(const SubdivisionScheme& scheme) {
    ConvergenceReport rep;
    rep.satisfied = true;
    for (const Stencil& st : stencils(scheme)) {
        rep.phases.push_back(st.phase);
        Rational s = st.weight_sum();
        if (s != Rational(1)) rep.satisfied = false;
        rep.phase_sums.push_back(std::move(s));
    }
    return rep;
}

}  // namespace subdiv
