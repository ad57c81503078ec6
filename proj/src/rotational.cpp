#include "cktweb/rotational.hpp"

#include "cktweb/errors.hpp"

namespace cktweb {

namespace {

const MultiPoly& X() { static const MultiPoly v = MultiPoly::x(); return v; }
const MultiPoly& Y() { static const MultiPoly v = MultiPoly::y(); return v; }
const MultiPoly& Z() { static const MultiPoly v = MultiPoly::z(); return v; }

bool is_metric_multiple(const SymTensorField& t) {
    return t(0, 1).is_zero() && t(0, 2).is_zero() && t(1, 2).is_zero() && t(0, 0) == t(1, 1) && t(1, 1) == t(2, 2);
}

}  // namespace

SymTensorField assemble_rotational(const RotParams& p) {
    CktCoefficients c;
    c.M[2][2] = p.M33;
    c.L[2] = p.L3;
    c.H = p.H;
    c.C[2][2] = p.C33;
    c.D[2] = p.D3;
    c.A[2][2] = p.A33;
    return assemble_ckt(c);
}

RotParams extract_parameters(const SymTensorField& k) {
    // Everything here is read modulo f g: R3 is Killing, so L_R3 (f g) = (R3 f) g.
    if (!is_metric_multiple(lie_derivative(ckv(Ckv::R3), k)))
        throw ValidationError("extract_parameters: tensor is not invariant under R3 modulo f g");
    if (!tsn_check(k)) throw ValidationError("extract_parameters: TSN normality conditions fail");
    RotParams p;
    p.M33 = k(0, 1).coefficient({1, 1, 2}) / 4;
    p.L3 = k(0, 1).coefficient({1, 1, 1}) / 2;
    p.H = k(0, 2).coefficient({1, 0, 1});
    p.C33 = p.H - k(0, 1).coefficient({1, 1, 0});
    p.D3 = 2 * k(0, 2).coefficient({1, 0, 0});
    p.A33 = (k(2, 2) - k(1, 1)).constant_term();
    if (!is_metric_multiple(k - assemble_rotational(p)))
        throw ValidationError("extract_parameters: tensor is not in the rotational family modulo f g");
    return p;
}

UniPoly singular_polynomial(const RotParams& p) { return UniPoly{p.A33, p.D3, p.H, p.L3, p.M33}; }

RationalFunction eigen_trace_part(const RotParams& p) {
    MultiPoly r2 = X() * X() + Y() * Y() + Z() * Z();
    return RationalFunction(p.M33 * r2 * r2 + p.L3 * Z() * r2 + p.H * r2 + p.D3 * Z() + MultiPoly(p.A33));
}

RationalFunction eigen_discriminant(const RotParams& p) {
    MultiPoly r2 = X() * X() + Y() * Y() + Z() * Z(), rho2 = X() * X() + Y() * Y();
    MultiPoly z = Z(), z2 = Z() * Z();
    RationalFunction R2(r2), R4(r2 * r2);
    RationalFunction first = RationalFunction(p.L3 * r2 + 2 * p.H * z) +
                             RationalFunction(p.D3 * (4 * z2 - r2), r2) +
                             RationalFunction(p.A33 * 4 * z * (2 * z2 - r2), r2 * r2);
    RationalFunction second = RationalFunction(p.M33 * r2 * r2 + p.L3 * z * r2 + p.H * (2 * z2 - r2)) +
                              RationalFunction(p.D3 * z * (4 * z2 - 3 * r2), r2) +
                              RationalFunction(p.A33 * (r2 * r2 - 8 * z2 * (r2 - z2)), r2 * r2);
    return RationalFunction(rho2) * first * first + second * second;
}

RotEigenvalues eigenvalues_at(const RotParams& p, const Point3& pt) {
    const Rational &x = pt[0], &y = pt[1], &z = pt[2];
    Rational rho2 = x * x + y * y;
    RotEigenvalues e;
    e.lambda1 = p.C33 * rho2;
    if (rho2 == 0) {
        // On the axis lambda1 = 0 and lambda2,3 = (q +- |q|) / 2.
        Rational q = singular_polynomial(p).evaluate(z);
        e.lambda1 = 0;
        e.A = q;
        e.B = q * q;
        return e;
    }
    Rational r2 = rho2 + z * z, r4 = r2 * r2;
    e.A = r4 * p.M33 + z * r2 * p.L3 + r2 * p.H + z * p.D3 + p.A33;
    Rational first = r2 * p.L3 + 2 * z * p.H + (4 * z * z - r2) / r2 * p.D3 + 4 * z * (2 * z * z - r2) / r4 * p.A33;
    Rational second = r4 * p.M33 + z * r2 * p.L3 + (2 * z * z - r2) * p.H + z * (4 * z * z - 3 * r2) / r2 * p.D3 +
                      (r4 - 8 * z * z * (r2 - z * z)) / r4 * p.A33;
    e.B = rho2 * first * first + second * second;
    if (e.B < 0) throw InternalError("eigenvalues_at: negative discriminant off the axis");
    return e;
}

MultiPoly cyclide_polynomial(const RotParams& p) {
    const MultiPoly h = MultiPoly::var(3);
    MultiPoly r2 = X() * X() + Y() * Y() + Z() * Z(), rho2 = X() * X() + Y() * Y();
    MultiPoly s = MultiPoly(p.C33) - h;  // C33 - h
    MultiPoly t = MultiPoly(p.H) - s;    // H - C33 + h
    MultiPoly out;
    out += (4 * t * p.M33 - MultiPoly(p.L3 * p.L3)) * r2 * r2;
    out += (MultiPoly(8 * p.M33 * p.D3) - 4 * s * p.L3) * r2 * Z();
    out += (MultiPoly(2 * p.L3 * p.D3) - 4 * s * p.H) * r2;
    out += MultiPoly(16 * p.M33 * p.A33) * Z() * Z();
    out += 4 * s * s * rho2;
    out += (MultiPoly(8 * p.L3 * p.A33) - 4 * s * p.D3) * Z();
    out += MultiPoly(-p.D3 * p.D3) + 4 * t * p.A33;
    return out;
}

Rational cyclide_surface_residual(const RotParams& p, const Rational& h, const Point3& pt) {
    std::array<Rational, 4> at{pt[0], pt[1], pt[2], h};
    return cyclide_polynomial(p).evaluate(at);
}

bool rotational_eigencondition(const SymTensorField& k) {
    const auto& r = ckv(Ckv::R3);
    VectorField kr = k.contract(r);
    return (kr[1] * r[2] - kr[2] * r[1]).is_zero() && (kr[2] * r[0] - kr[0] * r[2]).is_zero() &&
           (kr[0] * r[1] - kr[1] * r[0]).is_zero();
}

}  // namespace cktweb
