#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cktweb/rational.hpp"

namespace cktweb {

// Dense univariate polynomial, coefficient i multiplies z^i. Always trimmed.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> low_first);
    UniPoly(std::initializer_list<Rational> low_first) : UniPoly(std::vector<Rational>(low_first)) {}
    static UniPoly monomial(const Rational& c, int degree);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<Rational>& coefficients() const { return c_; }
    Rational operator[](int i) const { return i >= 0 && i <= degree() ? c_[i] : Rational(0); }
    const Rational& leading() const;

    Rational evaluate(const Rational& z) const;
    double evaluate(double z) const;
    int sign_at(const Rational& z) const { return sgn(evaluate(z)); }
    UniPoly derivative() const;
    UniPoly monic() const;
    UniPoly reversed(int as_degree) const;  // z^d p(1/z)

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const Rational& c, const UniPoly& a);
    UniPoly pow(int e) const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    std::string to_string(const std::string& var = "z") const;

private:
    void trim();
    std::vector<Rational> c_;
};

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);  // b nonzero
UniPoly poly_gcd(const UniPoly& p, const UniPoly& q);                    // monic

struct SquarefreeFactor {
    UniPoly factor;  // monic, square-free, nonconstant
    int multiplicity;
};
// Yun's algorithm; factors sorted by multiplicity.
std::vector<SquarefreeFactor> squarefree_decomposition(const UniPoly& p);

std::vector<UniPoly> sturm_sequence(const UniPoly& p);
// Distinct real roots over the whole line. Non-square-free input is reduced by gcd(p, p') first.
int real_root_count(const UniPoly& p);
// Distinct real roots in the half-open interval (lo, hi].
int real_root_count(const UniPoly& p, const Rational& lo, const Rational& hi);

std::vector<Rational> rational_roots(const UniPoly& p);  // distinct, ascending
Rational root_bound(const UniPoly& p);                   // every real root lies in [-B, B]

struct RootInterval {
    Rational lo, hi;  // root in (lo, hi], or lo == hi for an exact rational root
};
// Disjoint isolating intervals for the distinct real roots, ascending, each of width <= width.
std::vector<RootInterval> isolate_real_roots(const UniPoly& p, const Rational& width);

}  // namespace cktweb
