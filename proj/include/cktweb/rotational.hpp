#pragma once

#include <array>
#include <string>

#include "cktweb/ckt.hpp"
#include "cktweb/unipoly.hpp"

namespace cktweb {

// M33 I3.I3 + L3 D.I3 + H D.D + C33 R3.R3 + D3 D.X3 + A33 X3.X3
struct RotParams {
    Rational M33 = 0, L3 = 0, H = 0, C33 = 0, D3 = 0, A33 = 0;

    bool operator==(const RotParams&) const = default;
    std::array<Rational, 6> as_array() const { return {M33, L3, H, C33, D3, A33}; }
    static RotParams from_array(const std::array<Rational, 6>& v) { return {v[0], v[1], v[2], v[3], v[4], v[5]}; }
    bool quartic_is_zero() const { return M33 == 0 && L3 == 0 && H == 0 && D3 == 0 && A33 == 0; }
};

using Point3 = std::array<Rational, 3>;

SymTensorField assemble_rotational(const RotParams& p);

// Reads the six parameters off Cartesian components; the tensor may differ from the family by f g.
// ValidationError naming the failed precondition if K is not R3-invariant or not normal.
RotParams extract_parameters(const SymTensorField& k);

UniPoly singular_polynomial(const RotParams& p);  // M33 z^4 + L3 z^3 + H z^2 + D3 z + A33

// lambda1 exactly; lambda2,3 = (A +- sqrt(B)) / 2 kept as the pair (A, B).
struct RotEigenvalues {
    Rational lambda1, A, B;
};
RotEigenvalues eigenvalues_at(const RotParams& p, const Point3& point);

// Symbolic A and B in (x, y, z). B has r^2, r^4 denominators that cancel.
RationalFunction eigen_trace_part(const RotParams& p);
RationalFunction eigen_discriminant(const RotParams& p);

// The expanded quartic surface equation, a polynomial in x, y, z and h (variable 3).
// It equals ([2(h - C33)(x^2+y^2) + A]^2 - B) / (x^2+y^2).
MultiPoly cyclide_polynomial(const RotParams& p);
Rational cyclide_surface_residual(const RotParams& p, const Rational& h, const Point3& point);

bool rotational_eigencondition(const SymTensorField& k);  // (K R3) x R3 == 0

}  // namespace cktweb
