#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cktweb/tensor.hpp"

namespace cktweb {

// Order of ckv_basis(): X1 X2 X3 R1 R2 R3 D I1 I2 I3. Levi-Civita sign: eps_123 = +1.
enum class Ckv { X1, X2, X3, R1, R2, R3, D, I1, I2, I3 };
constexpr int kCkvCount = 10;

std::vector<VectorField> ckv_basis();
const VectorField& ckv(Ckv which);
std::string ckv_name(Ckv which);
std::optional<Ckv> ckv_from_name(const std::string& name);

VectorField commutator(const VectorField& v, const VectorField& w);
SymTensorField symmetric_product(const VectorField& v, const VectorField& w);
// f with L_V g = f g, or nullopt if V is not conformal Killing.
std::optional<MultiPoly> conformal_factor(const VectorField& v);

using Vec3 = std::array<Rational, 3>;
using Mat3 = std::array<Vec3, 3>;

// Coefficients of the expansion in symmetric products of the conformal Killing vectors:
//   A_ij Xi.Xj + B_ij Xi.Rj + C_ij Ri.Rj + D_i Xi.D + E_ij Xi.Ij
//   + F_i Ri.D + G_ij Ri.Ij + H D.D + L_i D.Ii + M_ij Ii.Ij
struct CktCoefficients {
    Mat3 A{}, B{}, C{};
    Vec3 D{};
    Mat3 E{};
    Vec3 F{};
    Mat3 G{};
    Rational H = 0;
    Vec3 L{};
    Mat3 M{};

    bool operator==(const CktCoefficients&) const = default;
    CktCoefficients& operator+=(const CktCoefficients& o);
    CktCoefficients& operator*=(const Rational& s);
    friend CktCoefficients operator+(CktCoefficients a, const CktCoefficients& b) { return a += b; }
    friend CktCoefficients operator*(const Rational& s, CktCoefficients a) { return a *= s; }

    static constexpr int kSlots = 55;
    // Flat view over the 55 raw slots in declaration order (9+9+9+3+9+3+9+1+3+9).
    Rational& slot(int i);
    const Rational& slot(int i) const;
};

SymTensorField assemble_ckt(const CktCoefficients& c);  // ValidationError on asymmetric A, C or M

struct CktVerdict {
    bool holds;
    VectorField k;  // sym(dK) = sym(k g) with k_i = (d_i tr K + 2 d_j K_ji) / 5
};
CktVerdict verify_ckt(const SymTensorField& k);

// Folds the metric-dependent and dependent products away and returns coefficients whose
// assembled tensor is the trace-free part; D, L, C come out of B, G, E.
CktCoefficients trace_free_reduce(const CktCoefficients& c);

// The 35 free coordinates of a trace-free coefficient set, and back.
constexpr int kTckDimension = 35;
std::vector<CktCoefficients> tck_basis();

TwoForm killing_obstruction(const SymTensorField& k);  // d k, DomainError for non-CKT input
bool is_killing_representable(const SymTensorField& k);

struct NijenhuisTensor {
    std::array<MultiPoly, 27> c;  // N^i_jk at 9 i + 3 j + k
    const MultiPoly& operator()(int i, int j, int k) const { return c[static_cast<std::size_t>(9 * i + 3 * j + k)]; }
    bool is_zero() const;
};
NijenhuisTensor nijenhuis(const SymTensorField& k);

// Antisymmetrised S_il N^l_jk for S = g, K, K^2 (up to a fixed factor).
std::array<MultiPoly, 3> tsn_residuals(const SymTensorField& k);
bool tsn_check(const SymTensorField& k);

SymTensorField lie_derivative(const VectorField& v, const SymTensorField& k);

// Binomial-product formula for dimension of conformal Killing tensors of valence p on flat R^n.
Integer ckt_dimension(int n, int p);

}  // namespace cktweb
