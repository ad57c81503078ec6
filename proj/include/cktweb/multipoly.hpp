#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "cktweb/rational.hpp"

namespace cktweb {

// Sparse polynomial with rational coefficients in up to eight variables.
// Variables 0, 1, 2 are x, y, z; the rest are free for auxiliary parameters.
// A monomial packs one byte of exponent per variable, variable 0 in the high byte,
// so integer order on monomials is lexicographic order with x > y > z > ...
class MultiPoly {
public:
    static constexpr int kVars = 8;
    static constexpr int kMaxExponent = 127;
    using Monomial = std::uint64_t;

    struct Term {
        Monomial mono;
        Rational coeff;
        bool operator==(const Term&) const = default;
    };

    MultiPoly() = default;
    MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT: implicit constants read naturally
    MultiPoly(const Rational& c);                   // NOLINT

    static MultiPoly var(int index);
    static MultiPoly term(const Rational& c, std::initializer_list<int> exponents);
    static MultiPoly x() { return var(0); }
    static MultiPoly y() { return var(1); }
    static MultiPoly z() { return var(2); }

    static Monomial pack(std::initializer_list<int> exponents);
    static Monomial pack(std::span<const int> exponents);
    static int exponent(Monomial m, int index) {
        return static_cast<int>((m >> (8 * (kVars - 1 - index))) & 0xffu);
    }
    static int total_degree(Monomial m);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const { return coefficient(0); }
    int degree() const;                  // total degree; -1 for the zero polynomial
    int degree_in(int index) const;      // -1 for the zero polynomial
    std::size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    Rational coefficient(Monomial m) const;
    Rational coefficient(std::initializer_list<int> exponents) const { return coefficient(pack(exponents)); }

    MultiPoly derivative(int index) const;
    MultiPoly coefficient_of(int index, int power) const;  // coefficient of var^power, as a polynomial in the rest
    MultiPoly substitute(int index, const MultiPoly& value) const;
    MultiPoly substitute(int index, const Rational& value) const;
    Rational evaluate(std::span<const Rational> point) const;  // point[i] for variable i; missing variables are an error
    double evaluate(std::span<const double> point) const;

    // lcm of coefficient denominators, and the gcd of the numerators scaled by it.
    Integer denominator_lcm() const;
    Rational content() const;  // positive; the primitive part has integer, coprime coefficients
    MultiPoly primitive_part() const;  // divided by content, with positive leading coefficient
    const Rational& leading_coefficient() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
    friend MultiPoly operator*(long c, MultiPoly a) { return a *= Rational(c); }
    friend MultiPoly operator*(MultiPoly a, long c) { return a *= Rational(c); }
    MultiPoly pow(int exponent) const;
    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

    std::string to_string(std::span<const std::string> names = default_names()) const;
    static std::span<const std::string> default_names();

private:
    explicit MultiPoly(std::vector<Term> sorted) : terms_(std::move(sorted)) {}
    std::vector<Term> terms_;  // strictly decreasing monomials, nonzero coefficients
};

}  // namespace cktweb
