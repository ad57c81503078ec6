#pragma once

#include <array>
#include <string>

#include "cktweb/multipoly.hpp"
#include "cktweb/ratfunc.hpp"

namespace cktweb {

struct VectorField {
    std::array<MultiPoly, 3> c;

    MultiPoly& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
    const MultiPoly& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
    bool is_zero() const { return c[0].is_zero() && c[1].is_zero() && c[2].is_zero(); }
    bool operator==(const VectorField&) const = default;

    VectorField& operator+=(const VectorField& o);
    VectorField& operator-=(const VectorField& o);
    friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
    friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
    friend VectorField operator*(const MultiPoly& f, VectorField v);
};

// Symmetric contravariant 2-tensor on flat 3-space; six stored components.
class SymTensorField {
public:
    SymTensorField() = default;
    static SymTensorField metric();
    static SymTensorField scalar(const MultiPoly& f);  // f * metric

    MultiPoly& operator()(int i, int j) { return c_[slot(i, j)]; }
    const MultiPoly& operator()(int i, int j) const { return c_[slot(i, j)]; }
    MultiPoly trace() const { return c_[0] + c_[3] + c_[5]; }
    bool is_zero() const;
    int degree() const;

    SymTensorField& operator+=(const SymTensorField& o);
    SymTensorField& operator-=(const SymTensorField& o);
    SymTensorField& operator*=(const MultiPoly& f);
    friend SymTensorField operator+(SymTensorField a, const SymTensorField& b) { return a += b; }
    friend SymTensorField operator-(SymTensorField a, const SymTensorField& b) { return a -= b; }
    friend SymTensorField operator*(const MultiPoly& f, SymTensorField a) { return a *= f; }
    bool operator==(const SymTensorField&) const = default;

    VectorField contract(const VectorField& v) const;  // (K v)^i = K^ij v_j
    SymTensorField square() const;                     // K K

private:
    static std::size_t slot(int i, int j) {
        static constexpr std::size_t table[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
        return table[i][j];
    }
    std::array<MultiPoly, 6> c_;
};

using OneForm = std::array<RationalFunction, 3>;
// Components (23, 31, 12) of a two-form on 3-space.
using TwoForm = std::array<RationalFunction, 3>;

TwoForm exterior_derivative(const OneForm& w);
bool is_zero(const TwoForm& w);

}  // namespace cktweb
