#include "cktweb/ckt.hpp"

#include <algorithm>

#include "cktweb/errors.hpp"

namespace cktweb {

namespace {

int eps(int i, int j, int k) {
    if (i == j || j == k || i == k) return 0;
    return ((j - i + 3) % 3 == 1) ? 1 : -1;  // cyclic permutations of (0,1,2) are even
}

std::vector<VectorField> build_basis() {
    const MultiPoly x[3] = {MultiPoly::x(), MultiPoly::y(), MultiPoly::z()};
    const MultiPoly r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
    std::vector<VectorField> b(kCkvCount);
    for (int i = 0; i < 3; ++i) {
        b[i][i] = 1;
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                if (int e = eps(i, j, k)) b[3 + i][k] += Rational(e) * x[j];
        for (int k = 0; k < 3; ++k) b[7 + i][k] = 2 * x[i] * x[k] - (i == k ? r2 : MultiPoly());
        b[6][i] = x[i];
    }
    return b;
}

const std::vector<VectorField>& basis() {
    static const std::vector<VectorField> b = build_basis();
    return b;
}

// Products P[a][b] of the basis, built once.
const std::vector<SymTensorField>& products() {
    static const std::vector<SymTensorField> p = [] {
        std::vector<SymTensorField> out(kCkvCount * kCkvCount);
        const auto& b = basis();
        for (int i = 0; i < kCkvCount; ++i)
            for (int j = i; j < kCkvCount; ++j)
                out[i * kCkvCount + j] = out[j * kCkvCount + i] = symmetric_product(b[i], b[j]);
        return out;
    }();
    return p;
}

const SymTensorField& product(int a, int b) { return products()[static_cast<std::size_t>(a * kCkvCount + b)]; }

constexpr int X = 0, R = 3, Dil = 6, I = 7;

void check_symmetric(const Mat3& m, const char* name) {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (m[i][j] != m[j][i]) throw ValidationError(std::string("coefficient block ") + name + " is not symmetric");
}

Rational trace(const Mat3& m) { return m[0][0] + m[1][1] + m[2][2]; }

// 2 N^i_jk = K^i_l (d_k K^l_j - d_j K^l_k) + K^l_j d_l K^i_k - K^l_k d_l K^i_j
MultiPoly twice_nijenhuis(const SymTensorField& k, const std::array<SymTensorField, 3>& dk, int i, int j, int kk) {
    MultiPoly s;
    for (int l = 0; l < 3; ++l) {
        s += k(i, l) * (dk[kk](l, j) - dk[j](l, kk));
        s += k(l, j) * dk[l](i, kk) - k(l, kk) * dk[l](i, j);
    }
    return s;
}

std::array<SymTensorField, 3> gradient(const SymTensorField& k) {
    std::array<SymTensorField, 3> dk;
    for (int l = 0; l < 3; ++l)
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j) dk[l](i, j) = k(i, j).derivative(l);
    return dk;
}

Integer factorial(int n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

}  // namespace

std::vector<VectorField> ckv_basis() { return basis(); }

const VectorField& ckv(Ckv which) { return basis()[static_cast<std::size_t>(which)]; }

std::string ckv_name(Ckv which) {
    static const char* names[] = {"X1", "X2", "X3", "R1", "R2", "R3", "D", "I1", "I2", "I3"};
    return names[static_cast<int>(which)];
}

std::optional<Ckv> ckv_from_name(const std::string& name) {
    for (int i = 0; i < kCkvCount; ++i)
        if (ckv_name(static_cast<Ckv>(i)) == name) return static_cast<Ckv>(i);
    return std::nullopt;
}

VectorField commutator(const VectorField& v, const VectorField& w) {
    VectorField out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[i] += v[j] * w[i].derivative(j) - w[j] * v[i].derivative(j);
    return out;
}

SymTensorField symmetric_product(const VectorField& v, const VectorField& w) {
    SymTensorField out;
    const Rational half(1, 2);
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) out(i, j) = half * (v[i] * w[j] + v[j] * w[i]);
    return out;
}

std::optional<MultiPoly> conformal_factor(const VectorField& v) {
    MultiPoly f = 2 * v[0].derivative(0);
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            MultiPoly lg = v[j].derivative(i) + v[i].derivative(j);
            if (lg != (i == j ? f : MultiPoly())) return std::nullopt;
        }
    return f;
}

CktCoefficients& CktCoefficients::operator+=(const CktCoefficients& o) {
    for (int i = 0; i < kSlots; ++i) slot(i) += o.slot(i);
    return *this;
}

CktCoefficients& CktCoefficients::operator*=(const Rational& s) {
    for (int i = 0; i < kSlots; ++i) slot(i) *= s;
    return *this;
}

const Rational& CktCoefficients::slot(int i) const { return const_cast<CktCoefficients*>(this)->slot(i); }

Rational& CktCoefficients::slot(int i) {
    auto mat = [](Mat3& m, int k) -> Rational& { return m[k / 3][k % 3]; };
    if (i < 0 || i >= kSlots) throw DomainError("coefficient slot out of range");
    if (i < 9) return mat(A, i);
    if ((i -= 9) < 9) return mat(B, i);
    if ((i -= 9) < 9) return mat(C, i);
    if ((i -= 9) < 3) return D[i];
    if ((i -= 3) < 9) return mat(E, i);
    if ((i -= 9) < 3) return F[i];
    if ((i -= 3) < 9) return mat(G, i);
    if ((i -= 9) < 1) return H;
    if ((i -= 1) < 3) return L[i];
    return mat(M, i - 3);
}

SymTensorField assemble_ckt(const CktCoefficients& c) {
    check_symmetric(c.A, "A");
    check_symmetric(c.C, "C");
    check_symmetric(c.M, "M");
    // Accumulate a coefficient per product pair, then expand once.
    Rational w[kCkvCount][kCkvCount];
    auto add = [&](int a, int b, const Rational& v) {
        if (v == 0) return;
        if (a > b) std::swap(a, b);
        w[a][b] += v;
    };
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            add(X + i, X + j, c.A[i][j]);
            add(X + i, R + j, c.B[i][j]);
            add(R + i, R + j, c.C[i][j]);
            add(X + i, I + j, c.E[i][j]);
            add(R + i, I + j, c.G[i][j]);
            add(I + i, I + j, c.M[i][j]);
        }
        add(X + i, Dil, c.D[i]);
        add(R + i, Dil, c.F[i]);
        add(Dil, I + i, c.L[i]);
    }
    add(Dil, Dil, c.H);
    SymTensorField k;
    for (int a = 0; a < kCkvCount; ++a)
        for (int b = a; b < kCkvCount; ++b)
            if (w[a][b] != 0) {
                SymTensorField t = product(a, b);
                t *= MultiPoly(w[a][b]);
                k += t;
            }
    return k;
}

CktVerdict verify_ckt(const SymTensorField& k) {
    MultiPoly tr = k.trace();
    VectorField kv;
    for (int i = 0; i < 3; ++i) {
        MultiPoly s = tr.derivative(i);
        for (int j = 0; j < 3; ++j) s += 2 * k(j, i).derivative(j);
        kv[i] = Rational(1, 5) * s;
    }
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j)
            for (int l = j; l < 3; ++l) {
                MultiPoly lhs = k(j, l).derivative(i) + k(l, i).derivative(j) + k(i, j).derivative(l);
                MultiPoly rhs;
                if (j == l) rhs += kv[i];
                if (l == i) rhs += kv[j];
                if (i == j) rhs += kv[l];
                if (lhs != rhs) return {false, kv};
            }
    return {true, kv};
}

CktCoefficients trace_free_reduce(const CktCoefficients& in) {
    check_symmetric(in.A, "A");
    check_symmetric(in.C, "C");
    check_symmetric(in.M, "M");
    if (trace(in.A) != 0) throw ValidationError("trace-free reduction: tr A = " + to_string(trace(in.A)) + " must vanish");
    if (trace(in.M) != 0) throw ValidationError("trace-free reduction: tr M = " + to_string(trace(in.M)) + " must vanish");
    CktCoefficients c = in;
    // D.D = Xi.Ii + Ri.Ri and 2 Ri.D = -eps_ikl Xk.Il move H and F into E (and C).
    for (int i = 0; i < 3; ++i) {
        c.E[i][i] += c.H;
        c.C[i][i] += c.H;
        for (int k = 0; k < 3; ++k)
            for (int l = 0; l < 3; ++l)
                if (int e = eps(i, k, l)) c.E[k][l] -= Rational(e, 2) * c.F[i];
    }
    c.H = 0;
    c.F = {};
    // Xi.Ri = 0 and Ii.Ri = 0 remove the traces of B and G.
    Rational tb = trace(c.B) / 3, tg = trace(c.G) / 3;
    for (int i = 0; i < 3; ++i) c.B[i][i] -= tb, c.G[i][i] -= tg;
    // D_i = B_jk eps_kji, L_i = G_lm eps_mli, C_ij = 2 E_(ij) - E_kk delta_ij / 2.
    Rational te = trace(c.E);
    for (int i = 0; i < 3; ++i) {
        c.D[i] = 0;
        c.L[i] = 0;
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                if (int e = eps(k, j, i)) {
                    c.D[i] += Rational(e) * c.B[j][k];
                    c.L[i] += Rational(e) * c.G[j][k];
                }
        for (int j = 0; j < 3; ++j) c.C[i][j] = c.E[i][j] + c.E[j][i] - (i == j ? te / 2 : Rational(0));
    }
    return c;
}

std::vector<CktCoefficients> tck_basis() {
    static const std::vector<CktCoefficients> cached = [] {
        std::vector<CktCoefficients> out;
        auto sym_tracefree = [&](Mat3 CktCoefficients::*block) {
            for (int d = 0; d < 2; ++d) {
                CktCoefficients c;
                (c.*block)[d][d] = 1;
                (c.*block)[2][2] = -1;
                out.push_back(c);
            }
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j) {
                    CktCoefficients c;
                    (c.*block)[i][j] = (c.*block)[j][i] = 1;
                    out.push_back(c);
                }
        };
        auto tracefree = [&](Mat3 CktCoefficients::*block) {
            for (int d = 0; d < 2; ++d) {
                CktCoefficients c;
                (c.*block)[d][d] = 1;
                (c.*block)[2][2] = -1;
                out.push_back(c);
            }
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    if (i != j) {
                        CktCoefficients c;
                        (c.*block)[i][j] = 1;
                        out.push_back(c);
                    }
        };
        sym_tracefree(&CktCoefficients::A);
        tracefree(&CktCoefficients::B);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                CktCoefficients c;
                c.E[i][j] = 1;
                out.push_back(c);
            }
        tracefree(&CktCoefficients::G);
        sym_tracefree(&CktCoefficients::M);
        for (auto& c : out) c = trace_free_reduce(c);
        return out;
    }();
    return cached;
}

TwoForm killing_obstruction(const SymTensorField& k) {
    auto v = verify_ckt(k);
    if (!v.holds) throw DomainError("killing_obstruction: tensor is not a conformal Killing tensor");
    const auto& f = v.k;
    return {RationalFunction(f[2].derivative(1) - f[1].derivative(2)),
            RationalFunction(f[0].derivative(2) - f[2].derivative(0)),
            RationalFunction(f[1].derivative(0) - f[0].derivative(1))};
}

bool is_killing_representable(const SymTensorField& k) { return is_zero(killing_obstruction(k)); }

bool NijenhuisTensor::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](const MultiPoly& p) { return p.is_zero(); });
}

NijenhuisTensor nijenhuis(const SymTensorField& k) {
    auto dk = gradient(k);
    NijenhuisTensor n;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int l = j + 1; l < 3; ++l) {
                MultiPoly v = Rational(1, 2) * twice_nijenhuis(k, dk, i, j, l);
                n.c[static_cast<std::size_t>(9 * i + 3 * l + j)] = -v;
                n.c[static_cast<std::size_t>(9 * i + 3 * j + l)] = std::move(v);
            }
    return n;
}

std::array<MultiPoly, 3> tsn_residuals(const SymTensorField& k) {
    auto dk = gradient(k);
    // Cyclic triples (i; j, k) with j < k ordering folded into the sign of the pair.
    static constexpr int cyc[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    // n[c][l] = 2 N^l_{j k} for the c-th cyclic triple.
    std::array<std::array<MultiPoly, 3>, 3> n;
    for (int c = 0; c < 3; ++c)
        for (int l = 0; l < 3; ++l) n[c][l] = twice_nijenhuis(k, dk, l, cyc[c][1], cyc[c][2]);
    // w[c][m] = K_ml N^l_jk
    std::array<std::array<MultiPoly, 3>, 3> w;
    for (int c = 0; c < 3; ++c)
        for (int m = 0; m < 3; ++m)
            for (int l = 0; l < 3; ++l) w[c][m] += k(m, l) * n[c][l];
    std::array<MultiPoly, 3> out;
    for (int c = 0; c < 3; ++c) {
        int i = cyc[c][0];
        out[0] += n[c][i];
        out[1] += w[c][i];
        for (int m = 0; m < 3; ++m) out[2] += k(i, m) * w[c][m];
    }
    return out;
}

bool tsn_check(const SymTensorField& k) {
    auto r = tsn_residuals(k);
    return std::all_of(r.begin(), r.end(), [](const MultiPoly& p) { return p.is_zero(); });
}

SymTensorField lie_derivative(const VectorField& v, const SymTensorField& k) {
    SymTensorField out;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            MultiPoly s;
            for (int l = 0; l < 3; ++l) {
                s += v[l] * k(i, j).derivative(l);
                s -= k(l, j) * v[i].derivative(l) + k(i, l) * v[j].derivative(l);
            }
            out(i, j) = std::move(s);
        }
    return out;
}

Integer ckt_dimension(int n, int p) {
    if (n < 3 || p < 1) throw DomainError("ckt_dimension requires n >= 3 and p >= 1");
    Integer num = factorial(n + p - 3) * factorial(n + p - 2) * (n + 2 * p - 2) * (n + 2 * p - 1) * (n + 2 * p);
    Integer den = factorial(p) * factorial(p + 1) * factorial(n - 2) * factorial(n);
    if (num % den != 0) throw InternalError("dimension formula is not integral");
    return num / den;
}

}  // namespace cktweb
