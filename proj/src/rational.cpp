#include "subdiv/rational.hpp"

#include <cctype>
#include <ostream>

namespace subdiv {

namespace {

bool valid_integer_token(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational Rational::from_string(std::string_view s) {
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    if (!valid_integer_token(num))
        throw std::invalid_argument("Rational: bad token '" + std::string(s) + "'");
    if (slash == std::string_view::npos) {
        return Rational(mpq_class(mpz_class(std::string(num), 10), 1));
    }
    std::string_view den = s.substr(slash + 1);
    if (!valid_integer_token(den) || den[0] == '-')
        throw std::invalid_argument("Rational: bad token '" + std::string(s) + "'");
    mpz_class d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("Rational: zero denominator in '" + std::string(s) + "'");
    return Rational(mpq_class(mpz_class(std::string(num), 10), d));
}

std::string Rational::to_string() const {
    if (is_integer()) return numerator().get_str();
    return numerator().get_str() + "/" + denominator().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

Rational pow(const Rational& base, int exponent) {
    if (exponent < 0) {
        if (base.is_zero()) throw std::domain_error("Rational: 0 to negative power");
        return Rational(1) / pow(base, -exponent);
    }
    Rational acc(1), b = base;
    int e = exponent;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

mpz_class round_nearest(const Rational& r) {
    // floor(r + 1/2)
    mpq_class shifted(r.numerator() * 2 + r.denominator(), r.denominator() * 2);
    shifted.canonicalize();
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), shifted.get_num().get_mpz_t(), shifted.get_den().get_mpz_t());
    return q;
}

}  // namespace subdiv
