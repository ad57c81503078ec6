#pragma once

#include <array>
#include <string>
#include <vector>

#include "cktweb/rational.hpp"
#include "cktweb/rotational.hpp"
#include "cktweb/unipoly.hpp"

namespace cktweb {

// Homogeneous form sum_i c[i] X^(d-i) Y^i.
class BinaryForm {
public:
    BinaryForm() = default;
    BinaryForm(int degree, std::vector<Rational> coeffs);
    static BinaryForm zero(int degree) { return BinaryForm(degree, std::vector<Rational>(static_cast<std::size_t>(degree) + 1)); }

    int degree() const { return degree_; }
    const std::vector<Rational>& coefficients() const { return c_; }
    const Rational& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    bool is_zero() const;

    BinaryForm dX() const;
    BinaryForm dY() const;
    UniPoly dehomogenize() const;  // F(z, 1)
    Rational evaluate(const Rational& x, const Rational& y) const;

    BinaryForm& operator+=(const BinaryForm& o);
    BinaryForm& operator-=(const BinaryForm& o);
    friend BinaryForm operator+(BinaryForm a, const BinaryForm& b) { return a += b; }
    friend BinaryForm operator-(BinaryForm a, const BinaryForm& b) { return a -= b; }
    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
    friend BinaryForm operator*(const Rational& s, BinaryForm a);
    bool operator==(const BinaryForm&) const = default;

    std::string to_string() const;

private:
    int degree_ = 0;
    std::vector<Rational> c_{Rational(0)};
};

// M33 X^4 + L3 X^3 Y + H X^2 Y^2 + D3 X Y^3 + A33 Y^4
struct BinaryQuartic {
    Rational M33 = 0, L3 = 0, H = 0, D3 = 0, A33 = 0;

    static BinaryQuartic from(const RotParams& p) { return {p.M33, p.L3, p.H, p.D3, p.A33}; }
    static BinaryQuartic from_array(const std::array<Rational, 5>& v) { return {v[0], v[1], v[2], v[3], v[4]}; }
    std::array<Rational, 5> as_array() const { return {M33, L3, H, D3, A33}; }
    BinaryForm form() const { return BinaryForm(4, {M33, L3, H, D3, A33}); }
    UniPoly dehomogenized() const { return form().dehomogenize(); }
    bool is_zero() const { return M33 == 0 && L3 == 0 && H == 0 && D3 == 0 && A33 == 0; }
    bool operator==(const BinaryQuartic&) const = default;
};

}  // namespace cktweb
