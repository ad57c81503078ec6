#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <type_traits>

#include "cktweb/binary_form.hpp"
#include "cktweb/errors.hpp"
#include "cktweb/rotational.hpp"

namespace cktweb {

// a0 continuous inversion along the axis, a1 translation, a2 dilation, a3 tensor scale,
// a4 shift by R3.R3; `discrete` applies the unit-sphere inversion first.
template <class T>
struct BasicGroupElement {
    T a0{0}, a1{0}, a2{1}, a3{1}, a4{0};
    bool discrete = false;

    static BasicGroupElement identity() { return {}; }
    void validate() const {
        if (a2 == T(0)) throw DomainError("group element: a2 must be nonzero");
        if (a3 == T(0)) throw DomainError("group element: a3 must be nonzero");
    }
    bool operator==(const BasicGroupElement&) const = default;
};
using GroupElement = BasicGroupElement<Rational>;
// Witness mode; long double keeps the round trip through root matching well inside 1e-9.
using Real = long double;
using GroupElementF = BasicGroupElement<Real>;

template <class T>
struct BasicMat2 {
    T alpha{1}, beta{0}, gamma{0}, delta{1};

    T det() const { return alpha * delta - beta * gamma; }
    friend BasicMat2 operator*(const BasicMat2& m, const BasicMat2& n) {
        return {m.alpha * n.alpha + m.beta * n.gamma, m.alpha * n.beta + m.beta * n.delta,
                m.gamma * n.alpha + m.delta * n.gamma, m.gamma * n.beta + m.delta * n.delta};
    }
    bool operator==(const BasicMat2&) const = default;
};
using Mat2 = BasicMat2<Rational>;
using Mat2F = BasicMat2<Real>;

template <class T>
BasicMat2<T> swap_matrix() { return {T(0), T(1), T(1), T(0)}; }

// Q -> a3/a2^2 * Q(N (X, Y)^T); this is N.
template <class T>
BasicMat2<T> substitution_matrix(const BasicGroupElement<T>& g) {
    BasicMat2<T> n{T(1), -g.a1, -g.a0, g.a1 * g.a0 + g.a2};
    return g.discrete ? swap_matrix<T>() * n : n;
}

// Q(m (X, Y)^T), coefficients in (M33, L3, H, D3, A33) order.
template <class T>
std::array<T, 5> substitute_quartic(const std::array<T, 5>& q, const BasicMat2<T>& m) {
    // (alpha X + beta Y)^(4-i) (gamma X + delta Y)^i expanded by repeated multiplication.
    std::array<T, 5> out{};
    for (int i = 0; i <= 4; ++i) {
        std::array<T, 5> p{};
        p[0] = T(1);
        int deg = 0;
        auto mul = [&](const T& a, const T& b) {
            std::array<T, 5> r{};
            for (int k = 0; k <= deg; ++k) {
                r[k] += a * p[k];
                r[k + 1] += b * p[k];
            }
            p = r;
            ++deg;
        };
        for (int k = 0; k < 4 - i; ++k) mul(m.alpha, m.beta);
        for (int k = 0; k < i; ++k) mul(m.gamma, m.delta);
        for (int k = 0; k <= 4; ++k) out[k] += q[i] * p[k];
    }
    return out;
}

// The printed action: P(a0) = A33 a0^4 - D3 a0^3 + H a0^2 - L3 a0 + M33 and its Taylor coefficients.
template <class T>
std::array<T, 5> act_on_quartic(const BasicGroupElement<T>& g, std::array<T, 5> q) {
    g.validate();
    if (g.discrete) q = {q[4], q[3], q[2], q[1], q[0]};
    const std::array<T, 5> pc{q[0], -q[1], q[2], -q[3], q[4]};  // coefficient of a0^k
    static constexpr int binom[5][5] = {{1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {1, 2, 1, 0, 0}, {1, 3, 3, 1, 0}, {1, 4, 6, 4, 1}};
    std::array<T, 5> taylor{};  // P^(h)(a0)
    for (int h = 0; h <= 4; ++h) {
        T s(0), pw(1);
        for (int k = h; k <= 4; ++k) {
            s += T(binom[k][h]) * pc[k] * pw;
            pw *= g.a0;
        }
        taylor[h] = s;
    }
    const T scale = g.a3 / (g.a2 * g.a2);
    std::array<T, 5> out{};
    for (int i = 0; i <= 4; ++i) {
        T s(0);
        for (int h = 0; h <= i; ++h) {
            T term = T(binom[4 - h][i - h]) * taylor[h];
            for (int k = 0; k < i - h; ++k) term *= g.a1;
            for (int k = 0; k < h; ++k) term *= g.a2;
            s += term;
        }
        out[i] = i % 2 ? T(-scale * s) : T(scale * s);
    }
    return out;
}

RotParams apply(const GroupElement& g, const RotParams& p);
BinaryQuartic apply(const GroupElement& g, const BinaryQuartic& q);

// Normal form (discrete?, a0, a1, a2) of an invertible substitution matrix with overall factor lambda.
template <class T>
BasicGroupElement<T> element_from_substitution(const BasicMat2<T>& n, const std::type_identity_t<T>& lambda) {
    if (n.det() == T(0)) throw DomainError("singular matrix");
    BasicMat2<T> m = n;
    bool discrete = false;
    bool use_swap;
    if constexpr (std::is_floating_point_v<T>) use_swap = std::abs(m.alpha) < std::abs(m.gamma);
    else use_swap = m.alpha == T(0);
    if (use_swap) {
        m = swap_matrix<T>() * m;
        discrete = true;
    }
    BasicGroupElement<T> g;
    g.discrete = discrete;
    g.a0 = -m.gamma / m.alpha;
    g.a1 = -m.beta / m.alpha;
    g.a2 = m.det() / (m.alpha * m.alpha);
    // Q o n = alpha^4 Q o N_g, so lambda Q o n = (lambda alpha^4) Q o N_g.
    T a4p = m.alpha * m.alpha;
    g.a3 = lambda * a4p * a4p * g.a2 * g.a2;
    return g;
}

template <class T>
BasicGroupElement<T> from_gl2(const BasicMat2<T>& m) {
    return element_from_substitution(m, T(1));
}

Mat2F to_gl2(const GroupElement& g);  // requires a3 > 0

GroupElement compose(const GroupElement& g1, const GroupElement& g2);  // g1 after g2
GroupElement inverse(const GroupElement& g);

// Point of the projective line; `infinite` overrides value.
struct ProjectivePoint {
    Rational value = 0;
    bool infinite = false;
    static ProjectivePoint at_infinity() { return {Rational(0), true}; }
    bool operator==(const ProjectivePoint&) const = default;
};
ProjectivePoint axis_action(const GroupElement& g, const ProjectivePoint& z);

// (n11 - n21 z)^4 q~(z~) - a3 a2^2 q(z); identically zero. DomainError if z~ is infinite.
Rational covariance_residual(const GroupElement& g, const RotParams& p, const Rational& z);

}  // namespace cktweb
