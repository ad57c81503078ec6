#include "cktweb/rational.hpp"

#include <cctype>

#include "cktweb/errors.hpp"

namespace cktweb {

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '+' || s[0] == '-')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto s = trim(text);
    auto slash = s.find('/');
    auto num = s.substr(0, slash);
    auto den = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
    if (!valid_integer(num, true) || !valid_integer(den, false))
        throw ParseError("not a rational literal: '" + std::string(text) + "'");
    std::string n(num);
    if (n[0] == '+') n.erase(0, 1);
    Integer d{std::string(den)};
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational q(Integer(n), d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational ratio(const Integer& n, const Integer& d) {
    if (d == 0) throw DomainError("zero denominator");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

Rational pow(const Rational& base, int exponent) {
    if (exponent < 0) {
        if (base == 0) throw DomainError("zero to a negative power");
        return pow(Rational(1) / base, -exponent);
    }
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(n, d);
}

Rational simplest_between(const Rational& a, const Rational& b) {
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
    if (a == Rational(fl)) return Rational(fl);
    if (Rational(fl + 1) <= b) return Rational(fl + 1);
    Rational r = Rational(fl) + 1 / simplest_between(1 / (b - fl), 1 / (a - fl));
    r.canonicalize();
    return r;
}

}  // namespace cktweb
