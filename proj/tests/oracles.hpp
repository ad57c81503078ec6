#pragma once

// Floating-point reference computations, independent of the library's exact machinery.

#include <array>
#include <complex>
#include <vector>

namespace oracle {

// Roots of sum c[i] z^i (c.back() != 0) from companion-matrix eigenvalues, Newton-polished.
std::vector<std::complex<double>> polynomial_roots(const std::vector<double>& low_first);

// Number of roots with |Im| < tol after polishing.
int real_root_count(const std::vector<double>& low_first, double tol = 1e-9);

// Real roots on the projective line of M X^4 + L X^3 Y + H X^2 Y^2 + D X Y^3 + A Y^4,
// counting the root at infinity. Assumes the roots are simple.
int projective_real_roots(const std::array<double, 5>& q);

// Ascending eigenvalues of a symmetric 3x3 matrix.
std::array<double, 3> symmetric_eigenvalues(const std::array<std::array<double, 3>, 3>& m);

}  // namespace oracle
