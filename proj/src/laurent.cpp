#include "subdiv/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace subdiv {

LaurentPolynomial::LaurentPolynomial(int lowest_degree, std::vector<Rational> coefficients)
    : lowest_(lowest_degree), coeffs_(std::move(coefficients)) {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
    std::size_t tail = coeffs_.size();
    while (tail > lead && coeffs_[tail - 1].is_zero()) --tail;
    if (lead == tail) {
        lowest_ = 0;
        coeffs_.clear();
        return;
    }
    lowest_ += static_cast<int>(lead);
    coeffs_ = std::vector<Rational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(lead),
                                    coeffs_.begin() + static_cast<std::ptrdiff_t>(tail));
}

LaurentPolynomial LaurentPolynomial::shifted(int delta) const {
    if (is_zero()) return {};
    return {lowest_ + delta, coeffs_};
}

LaurentPolynomial LaurentPolynomial::normalized() const {
    if (is_zero()) return {};
    return {0, coeffs_};
}

Rational LaurentPolynomial::evaluate(const Rational& x) const {
    if (is_zero()) return Rational(0);
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc * pow(x, lowest_);
}

std::string LaurentPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        int d = lowest_ + static_cast<int>(i);
        if (!first) os << (coeffs_[i].sign() < 0 ? " - " : " + ");
        else if (coeffs_[i].sign() < 0) os << "-";
        first = false;
        Rational a = abs(coeffs_[i]);
        if (d == 0) {
            os << a.to_string();
        } else {
            if (a != Rational(1)) os << a.to_string() << " ";
            os << "c";
            if (d != 1) os << "^" << d;
        }
    }
    return os.str();
}

LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int lo = std::min(a.lowest_degree(), b.lowest_degree());
    int hi = std::max(a.highest_degree(), b.highest_degree());
    std::vector<Rational> out(static_cast<std::size_t>(hi - lo + 1));
    for (int d = lo; d <= hi; ++d)
        out[static_cast<std::size_t>(d - lo)] = a.coefficient(d) + b.coefficient(d);
    return {lo, std::move(out)};
}

LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a + (LaurentPolynomial::constant(Rational(-1)) * b);
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const auto& ca = a.coefficients();
    const auto& cb = b.coefficients();
    std::vector<Rational> out(ca.size() + cb.size() - 1);
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if (ca[i].is_zero()) continue;
        for (std::size_t j = 0; j < cb.size(); ++j) out[i + j] += ca[i] * cb[j];
    }
    return {a.lowest_degree() + b.lowest_degree(), std::move(out)};
}

LaurentPolynomial substitute_power(const LaurentPolynomial& a, int k) {
    if (k < 1) throw std::invalid_argument("substitute_power: k must be >= 1");
    if (a.is_zero() || k == 1) return a;
    const auto& c = a.coefficients();
    std::vector<Rational> out(static_cast<std::size_t>((c.size() - 1) * static_cast<std::size_t>(k) + 1));
    for (std::size_t i = 0; i < c.size(); ++i) out[i * static_cast<std::size_t>(k)] = c[i];
    return {a.lowest_degree() * k, std::move(out)};
}

std::optional<LaurentPolynomial> try_divide(const LaurentPolynomial& a,
                                            const LaurentPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("try_divide: division by the zero polynomial");
    if (a.is_zero()) return LaurentPolynomial{};
    const auto& ca = a.coefficients();
    const auto& cb = b.coefficients();
    if (ca.size() < cb.size()) return std::nullopt;

    std::vector<Rational> rem = ca;
    std::vector<Rational> q(ca.size() - cb.size() + 1);
    const Rational& lead = cb.back();
    for (std::size_t k = q.size(); k-- > 0;) {
        Rational f = rem[k + cb.size() - 1] / lead;
        q[k] = f;
        if (!f.is_zero())
            for (std::size_t j = 0; j < cb.size(); ++j) rem[k + j] -= f * cb[j];
    }
    for (const auto& r : rem)
        if (!r.is_zero()) return std::nullopt;
    return LaurentPolynomial{a.lowest_degree() - b.lowest_degree(), std::move(q)};
}

LaurentPolynomial smoothing_factor(int arity) {
    if (arity < 2) throw std::invalid_argument("smoothing_factor: arity must be >= 2");
    return {0, std::vector<Rational>(static_cast<std::size_t>(arity), Rational(1, arity))};
}

}  // namespace subdiv
