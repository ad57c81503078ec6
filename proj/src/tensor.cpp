#include "cktweb/tensor.hpp"

#include <algorithm>

namespace cktweb {

VectorField& VectorField::operator+=(const VectorField& o) {
    for (int i = 0; i < 3; ++i) c[i] += o.c[i];
    return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
    for (int i = 0; i < 3; ++i) c[i] -= o.c[i];
    return *this;
}

VectorField operator*(const MultiPoly& f, VectorField v) {
    for (auto& x : v.c) x *= f;
    return v;
}

SymTensorField SymTensorField::metric() { return scalar(MultiPoly(1)); }

SymTensorField SymTensorField::scalar(const MultiPoly& f) {
    SymTensorField g;
    for (int i = 0; i < 3; ++i) g(i, i) = f;
    return g;
}

bool SymTensorField::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const MultiPoly& p) { return p.is_zero(); });
}

int SymTensorField::degree() const {
    int d = -1;
    for (const auto& p : c_) d = std::max(d, p.degree());
    return d;
}

SymTensorField& SymTensorField::operator+=(const SymTensorField& o) {
    for (std::size_t i = 0; i < 6; ++i) c_[i] += o.c_[i];
    return *this;
}

SymTensorField& SymTensorField::operator-=(const SymTensorField& o) {
    for (std::size_t i = 0; i < 6; ++i) c_[i] -= o.c_[i];
    return *this;
}

SymTensorField& SymTensorField::operator*=(const MultiPoly& f) {
    for (auto& p : c_) p *= f;
    return *this;
}

VectorField SymTensorField::contract(const VectorField& v) const {
    VectorField out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
}

SymTensorField SymTensorField::square() const {
    SymTensorField out;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j)
            for (int l = 0; l < 3; ++l) out(i, j) += (*this)(i, l) * (*this)(l, j);
    return out;
}

TwoForm exterior_derivative(const OneForm& w) {
    return {w[2].derivative(1) - w[1].derivative(2),
            w[0].derivative(2) - w[2].derivative(0),
            w[1].derivative(0) - w[0].derivative(1)};
}

bool is_zero(const TwoForm& w) {
    return std::all_of(w.begin(), w.end(), [](const RationalFunction& f) { return f.is_zero(); });
}

}  // namespace cktweb
