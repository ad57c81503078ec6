#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cktweb/ckt.hpp"
#include "cktweb/linalg.hpp"

namespace cktweb {

// Coordinates of a trace-free CKT in tck_basis(); ValidationError if K is not in that space.
RationalVector tck_coordinates(const SymTensorField& k);
CktCoefficients tck_combine(const RationalVector& coords);

// Matrix of K -> L_V K on the 35-dimensional trace-free space, columns = images of tck_basis().
RationalMatrix lie_matrix(const VectorField& v);

enum class SymmetryMode { HZero, HConstant };

struct SymmetryEigenspace {
    Rational h;
    std::vector<CktCoefficients> basis;
};

struct SymmetryScan {
    std::vector<SymmetryEigenspace> spaces;  // ascending h; HZero gives the single h = 0 entry
    UniPoly characteristic_polynomial;       // HConstant only
    int irrational_real_eigenvalues = 0;     // real eigenvalues that are not rational (not listed)
    int nonreal_eigenvalues = 0;
};

// Solutions of L_V K = h K with h constant.
SymmetryScan symmetry_subspace(const VectorField& v, SymmetryMode mode);

// Part of span(basis) with normal eigenvectors. If the conditions hold on the whole span the
// answer is the span; otherwise the linear candidate {K : (K V) x V = 0} is tried and certified
// as a full component by a tangent-space rank computation at a random point.
struct TsnFilter {
    int dimension = 0;
    bool whole_space = false;
    bool certified = false;  // the reported subspace is a component of the normality locus
    std::vector<CktCoefficients> basis;
};
TsnFilter tsn_filter(const std::vector<CktCoefficients>& basis, const VectorField& symmetry, std::uint64_t seed = 1);

}  // namespace cktweb
