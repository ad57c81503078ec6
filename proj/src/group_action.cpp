#include "cktweb/group_action.hpp"

namespace cktweb {

namespace {

std::array<Rational, 5> quartic_part(const RotParams& p) { return {p.M33, p.L3, p.H, p.D3, p.A33}; }

Rational lambda_of(const GroupElement& g) { return g.a3 / (g.a2 * g.a2); }

}  // namespace

RotParams apply(const GroupElement& g, const RotParams& p) {
    auto q = act_on_quartic(g, quartic_part(p));
    RotParams r;
    r.M33 = q[0];
    r.L3 = q[1];
    r.H = q[2];
    r.D3 = q[3];
    r.A33 = q[4];
    // C33 - H/3 is shifted by a4 and scaled by a3; the inversion leaves both C33 and H alone.
    r.C33 = g.a4 + g.a3 * p.C33 + (r.H - g.a3 * p.H) / 3;
    return r;
}

BinaryQuartic apply(const GroupElement& g, const BinaryQuartic& q) {
    return BinaryQuartic::from_array(act_on_quartic(g, q.as_array()));
}

Mat2F to_gl2(const GroupElement& g) {
    g.validate();
    if (sign(g.a3) <= 0) throw DomainError("to_gl2: requires a3 > 0");
    const Real s = std::pow(static_cast<Real>(to_double(lambda_of(g))), Real(0.25));
    auto n = substitution_matrix(g);
    auto r = [](const Rational& q) { return static_cast<Real>(to_double(q)); };
    return {s * r(n.alpha), s * r(n.beta), s * r(n.gamma), s * r(n.delta)};
}

GroupElement compose(const GroupElement& g1, const GroupElement& g2) {
    g1.validate();
    g2.validate();
    Mat2 n = substitution_matrix(g2) * substitution_matrix(g1);
    GroupElement g = element_from_substitution(n, lambda_of(g1) * lambda_of(g2));
    if (g.a3 != g1.a3 * g2.a3) throw InternalError("compose: tensor scale mismatch");
    g.a4 = g1.a3 * g2.a4 + g1.a4;
    return g;
}

GroupElement inverse(const GroupElement& g) {
    g.validate();
    Mat2 n = substitution_matrix(g);
    const Rational d = n.det();
    Mat2 inv{n.delta / d, -n.beta / d, -n.gamma / d, n.alpha / d};
    GroupElement r = element_from_substitution(inv, 1 / lambda_of(g));
    if (r.a3 != 1 / g.a3) throw InternalError("inverse: tensor scale mismatch");
    r.a4 = -g.a4 / g.a3;
    return r;
}

ProjectivePoint axis_action(const GroupElement& g, const ProjectivePoint& z) {
    g.validate();
    Mat2 n = substitution_matrix(g);
    // roots move by adj(N)
    Rational num, den;
    if (z.infinite) {
        num = n.delta;
        den = -n.gamma;
    } else {
        num = n.delta * z.value - n.beta;
        den = -n.gamma * z.value + n.alpha;
    }
    if (den == 0) return ProjectivePoint::at_infinity();
    return {num / den, false};
}

Rational covariance_residual(const GroupElement& g, const RotParams& p, const Rational& z) {
    Mat2 n = substitution_matrix(g);
    const Rational w = n.alpha - n.gamma * z;
    if (w == 0) throw DomainError("covariance_residual: z is a pole of the axis map");
    const Rational zt = (n.delta * z - n.beta) / w;
    const UniPoly q = BinaryQuartic::from(p).dehomogenized();
    const UniPoly qt = BinaryQuartic::from(apply(g, p)).dehomogenized();
    return pow(w, 4) * qt.evaluate(zt) - g.a3 * g.a2 * g.a2 * q.evaluate(z);
}

}  // namespace cktweb
