#pragma once

#include <string>

#include "cktweb/multipoly.hpp"

namespace cktweb {

// num/den with den != 0. Only rational content is cancelled; no multivariate gcd.
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(MultiPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT
    RationalFunction(long c) : RationalFunction(MultiPoly(c)) {}   // NOLINT
    RationalFunction(MultiPoly num, MultiPoly den);

    const MultiPoly& numerator() const { return num_; }
    const MultiPoly& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RationalFunction derivative(int index) const;
    Rational evaluate(std::span<const Rational> point) const;  // DomainError at a pole

    RationalFunction operator-() const { return {-num_, den_}; }
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o) { return *this += -o; }
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    RationalFunction pow(int e) const;

    // Cross-multiplication equality.
    bool operator==(const RationalFunction& o) const { return num_ * o.den_ == o.num_ * den_; }

    std::string to_string(std::span<const std::string> names = MultiPoly::default_names()) const;

private:
    void normalize();
    MultiPoly num_, den_;
};

}  // namespace cktweb
