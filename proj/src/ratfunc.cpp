#include "cktweb/ratfunc.hpp"

#include "cktweb/errors.hpp"

namespace cktweb {

RationalFunction::RationalFunction(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = MultiPoly(1);
        return;
    }
    // Make the denominator primitive with positive leading coefficient.
    Rational c = den_.content();
    if (den_.leading_coefficient() < 0) c = -c;
    if (c != 1) {
        Rational inv = Rational(1) / c;
        den_ *= inv;
        num_ *= inv;
    }
    if (den_.is_constant()) return;
    // Cheap exact cancellation when one side divides the other by a constant.
    if (num_.primitive_part() == den_.primitive_part()) {
        Rational ratio = num_.leading_coefficient() / den_.leading_coefficient();
        num_ = MultiPoly(ratio);
        den_ = MultiPoly(1);
    }
}

RationalFunction RationalFunction::derivative(int index) const {
    if (den_.is_constant()) return {num_.derivative(index), den_};
    return {num_.derivative(index) * den_ - num_ * den_.derivative(index), den_ * den_};
}

Rational RationalFunction::evaluate(std::span<const Rational> point) const {
    Rational d = den_.evaluate(point);
    if (d == 0) throw DomainError("rational function evaluated at a pole");
    return num_.evaluate(point) / d;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero()) throw DomainError("division by the zero rational function");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

RationalFunction RationalFunction::pow(int e) const {
    if (e < 0) return RationalFunction(1) / pow(-e);
    return {num_.pow(e), den_.pow(e)};
}

std::string RationalFunction::to_string(std::span<const std::string> names) const {
    if (den_.is_constant()) return num_.to_string(names);
    return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
}

}  // namespace cktweb
