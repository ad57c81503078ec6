#include "cktweb/binary_form.hpp"

#include <algorithm>
#include <sstream>

#include "cktweb/errors.hpp"

namespace cktweb {

BinaryForm::BinaryForm(int degree, std::vector<Rational> coeffs) : degree_(degree), c_(std::move(coeffs)) {
    if (degree < 0 || c_.size() != static_cast<std::size_t>(degree) + 1)
        throw DomainError("binary form needs degree + 1 coefficients");
}

bool BinaryForm::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

BinaryForm BinaryForm::dX() const {
    if (degree_ == 0) return zero(0);
    std::vector<Rational> out(static_cast<std::size_t>(degree_));
    for (int i = 0; i < degree_; ++i) out[i] = c_[i] * (degree_ - i);
    return BinaryForm(degree_ - 1, std::move(out));
}

BinaryForm BinaryForm::dY() const {
    if (degree_ == 0) return zero(0);
    std::vector<Rational> out(static_cast<std::size_t>(degree_));
    for (int i = 1; i <= degree_; ++i) out[i - 1] = c_[i] * i;
    return BinaryForm(degree_ - 1, std::move(out));
}

UniPoly BinaryForm::dehomogenize() const {
    std::vector<Rational> v(c_.size());
    for (int i = 0; i <= degree_; ++i) v[degree_ - i] = c_[i];
    return UniPoly(std::move(v));
}

Rational BinaryForm::evaluate(const Rational& x, const Rational& y) const {
    Rational s = 0;
    for (int i = 0; i <= degree_; ++i) s += c_[i] * pow(x, degree_ - i) * pow(y, i);
    return s;
}

BinaryForm& BinaryForm::operator+=(const BinaryForm& o) {
    if (o.degree_ != degree_) {
        if (o.is_zero()) return *this;
        if (is_zero()) return *this = o;
        throw DomainError("adding binary forms of different degree");
    }
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

BinaryForm& BinaryForm::operator-=(const BinaryForm& o) { return *this += (Rational(-1) * o); }

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    std::vector<Rational> out(static_cast<std::size_t>(a.degree_ + b.degree_) + 1);
    for (int i = 0; i <= a.degree_; ++i)
        for (int j = 0; j <= b.degree_; ++j) out[i + j] += a.c_[i] * b.c_[j];
    return BinaryForm(a.degree_ + b.degree_, std::move(out));
}

BinaryForm operator*(const Rational& s, BinaryForm a) {
    for (auto& c : a.c_) c *= s;
    return a;
}

std::string BinaryForm::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= degree_; ++i) {
        Rational c = c_[i];
        if (c == 0) continue;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        c = abs(c);
        int ex = degree_ - i, ey = i;
        bool wrote = false;
        if (c != 1 || (ex == 0 && ey == 0)) os << c.get_str(), wrote = true;
        if (ex) os << (wrote ? "*" : "") << "X" << (ex > 1 ? "^" + std::to_string(ex) : ""), wrote = true;
        if (ey) os << (wrote ? "*" : "") << "Y" << (ey > 1 ? "^" + std::to_string(ey) : "");
    }
    return first ? "0" : os.str();
}

}  // namespace cktweb
