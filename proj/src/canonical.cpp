#include <algorithm>
#include <cmath>
#include <limits>

#include "cktweb/numeric_roots.hpp"
#include "cktweb/quartic.hpp"

namespace cktweb {

namespace {

using Cx = Complex;

// A point of the complex projective line with a root multiplicity (0 marks an auxiliary point).
struct Point {
    Cx z;
    bool inf = false;
    int mult = 0;
};

struct CMat {
    Cx a, b, c, d;
    friend CMat operator*(const CMat& m, const CMat& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
    }
    CMat adj() const { return {d, -b, -c, a}; }
};

std::pair<Cx, Cx> map_point(const CMat& m, const Point& p) {
    if (p.inf) return {m.a, m.c};
    return {m.a * p.z + m.b, m.c * p.z + m.d};
}

// chordal distance between a homogeneous pair and a point
long double distance(std::pair<Cx, Cx> u, const Point& p) {
    Cx x2 = p.inf ? Cx(1) : p.z, y2 = p.inf ? Cx(0) : Cx(1);
    long double n1 = std::sqrt(std::norm(u.first) + std::norm(u.second));
    long double n2 = std::sqrt(std::norm(x2) + std::norm(y2));
    return std::abs(u.first * y2 - u.second * x2) / (n1 * n2);
}

// Sends p1 -> 0, p2 -> infinity, p3 -> 1.
CMat to_standard(const Point& p1, const Point& p2, const Point& p3) {
    if (p1.inf) return {0, p3.z - p2.z, 1, -p2.z};
    if (p2.inf) return {1, -p1.z, 0, p3.z - p1.z};
    if (p3.inf) return {1, -p1.z, 1, -p2.z};
    return {p3.z - p2.z, -p1.z * (p3.z - p2.z), p3.z - p1.z, -p2.z * (p3.z - p1.z)};
}

Point real_point(long double x) { return {Cx(x, 0), false, 0}; }

std::vector<Point> quartic_roots(const RootStructure& rs) {
    std::vector<Point> out;
    if (rs.infinity_multiplicity > 0) out.push_back({Cx(0), true, rs.infinity_multiplicity});
    for (const auto& f : rs.factors)
        for (const Cx& z : complex_roots(f.factor)) out.push_back({z, false, f.multiplicity});
    return out;
}

std::vector<Point> representative_roots(const CanonicalForm& f) {
    const Real p = f.parameter.value_or(0);
    switch (f.id) {
        case CanonicalId::I:
        case CanonicalId::II: {
            const long double s = f.id == CanonicalId::I ? 1 : -1;  // z^4 + p z^2 + s
            if (f.id == CanonicalId::I && (p == 2 || p == -2)) {
                Cx r = p == 2 ? Cx(0, 1) : Cx(1, 0);
                return {{r, false, 2}, {-r, false, 2}};
            }
            const Cx disc = std::sqrt(Cx(p * p - 4 * s));
            std::vector<Point> out;
            for (Cx w : {(-p + disc) / 2.0L, (-p - disc) / 2.0L}) {
                Cx r = std::sqrt(w);
                out.push_back({r, false, 1});
                out.push_back({-r, false, 1});
            }
            return out;
        }
        case CanonicalId::III: {
            const Cx r = std::sqrt(Cx(-p));
            return {{0, false, 2}, {r, false, 1}, {-r, false, 1}};
        }
        case CanonicalId::IV: return {{0, false, 3}, {0, true, 1}};
        case CanonicalId::V: return {{0, false, 4}};
    }
    throw InternalError("unknown canonical form");
}

// Pads configurations with fewer than three distinct points by auxiliary points that a real
// map between the two configurations can be required to respect.
void add_auxiliary(std::vector<Point>& pts) {
    const auto finite_real = [](const Point& p) { return !p.inf && std::abs(p.z.imag()) < 1e-12L * std::max<long double>(1, std::abs(p.z)); };
    if (pts.size() == 2 && !finite_real(pts[0]) && !pts[0].inf) {
        // a conjugate pair: its real part is respected by the real maps sending the pair to (i, -i)
        pts.push_back(real_point(pts[0].z.real()));
        return;
    }
    long double base = 0;
    for (const auto& p : pts)
        if (!p.inf) base = std::max(base, p.z.real());
    for (long double off = 1; pts.size() < 3; off += 1) pts.push_back(real_point(base + off));
}

struct Candidate {
    GroupElement g;
    Real residual;
};

using Coeffs = std::array<Real, 5>;

Real to_real(const Rational& q) {
    long exp_n = 0, exp_d = 0;
    const double n = mpz_get_d_2exp(&exp_n, q.get_num_mpz_t());
    const double d = mpz_get_d_2exp(&exp_d, q.get_den_mpz_t());
    return std::ldexp(static_cast<Real>(n) / d, static_cast<int>(exp_n - exp_d));
}

Coeffs to_reals(const BinaryQuartic& q) {
    auto a = q.as_array();
    return {to_real(a[0]), to_real(a[1]), to_real(a[2]), to_real(a[3]), to_real(a[4])};
}

Rational exact_rational(Real x) {
    const double hi = static_cast<double>(x);
    const double lo = static_cast<double>(x - hi);
    return Rational(hi) + Rational(lo);
}

Mat2 exact_matrix(const Mat2F& m) {
    return {exact_rational(m.alpha), exact_rational(m.beta), exact_rational(m.gamma), exact_rational(m.delta)};
}

Real exact_deviation(const GroupElement& g, const BinaryQuartic& q, const Coeffs& target) {
    const auto got = act_on_quartic(g, q.as_array());
    Real r = 0;
    for (std::size_t c = 0; c < 5; ++c) r = std::max(r, std::abs(to_real(got[c]) - target[c]));
    return r;
}

Coeffs scaled(Coeffs v, int s) {
    for (auto& x : v) x *= s;
    return v;
}

Real max_deviation(const Coeffs& a, const Coeffs& b) {
    Real r = 0;
    for (std::size_t c = 0; c < 5; ++c) r = std::max(r, std::abs(a[c] - b[c]));
    return r;
}

// Gauss-Newton on s Q(m) = target over the four matrix entries.
Mat2F polish(const Coeffs& q, Mat2F m, Real s, const Coeffs& target) {
    auto residual = [&](const Mat2F& x) {
        Coeffs v = substitute_quartic(q, x);
        for (std::size_t c = 0; c < 5; ++c) v[c] = s * v[c] - target[c];
        return v;
    };
    auto entry = [](Mat2F& x, int i) -> Real& { return i == 0 ? x.alpha : i == 1 ? x.beta : i == 2 ? x.gamma : x.delta; };
    Real best = max_deviation(residual(m), Coeffs{});
    for (int iter = 0; iter < 10 && best > 0; ++iter) {
        const Coeffs r0 = residual(m);
        Real size = 0;
        for (int i = 0; i < 4; ++i) size = std::max(size, std::abs(entry(m, i)));
        const Real h = 1e-8L * size;
        Real jac[5][4];
        for (int i = 0; i < 4; ++i) {
            Mat2F up = m, down = m;
            entry(up, i) += h;
            entry(down, i) -= h;
            const Coeffs a = residual(up), b = residual(down);
            for (int c = 0; c < 5; ++c) jac[c][i] = (a[c] - b[c]) / (2 * h);
        }
        Real n[4][5] = {};  // normal equations, augmented
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j)
                for (int c = 0; c < 5; ++c) n[i][j] += jac[c][i] * jac[c][j];
            for (int c = 0; c < 5; ++c) n[i][4] -= jac[c][i] * r0[c];
        }
        bool singular = false;
        for (int col = 0; col < 4 && !singular; ++col) {
            int piv = col;
            for (int row = col + 1; row < 4; ++row)
                if (std::abs(n[row][col]) > std::abs(n[piv][col])) piv = row;
            if (n[piv][col] == 0) singular = true;
            else {
                std::swap(n[piv], n[col]);
                for (int row = 0; row < 4; ++row) {
                    if (row == col) continue;
                    const Real f = n[row][col] / n[col][col];
                    for (int k = col; k < 5; ++k) n[row][k] -= f * n[col][k];
                }
            }
        }
        if (singular) break;
        Mat2F next = m;
        for (int i = 0; i < 4; ++i) entry(next, i) += n[i][4] / n[i][i];
        const Real dev = max_deviation(residual(next), Coeffs{});
        if (!(dev < best)) break;
        best = dev;
        m = next;
    }
    return m;
}

std::optional<Candidate> witness_for(const BinaryQuartic& q, const RootStructure& rs, const CanonicalForm& form) {
    std::vector<Point> src = quartic_roots(rs), dst = representative_roots(form);
    if (src.size() != dst.size()) return std::nullopt;
    add_auxiliary(src);
    add_auxiliary(dst);
    const auto target = form.quartic();
    const Coeffs qd = to_reals(q);
    Real scale = 0;
    for (Real t : target) scale = std::max(scale, std::abs(t));

    std::optional<Candidate> best;
    const std::size_t n = dst.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (i == j || j == k || i == k) continue;
                if (dst[i].mult != src[0].mult || dst[j].mult != src[1].mult || dst[k].mult != src[2].mult) continue;
                const CMat a = to_standard(src[0], src[1], src[2]);
                const CMat b = to_standard(dst[i], dst[j], dst[k]);
                const CMat phi = b.adj() * a;  // sends src to dst
                bool ok = true;
                for (const auto& s : src) {
                    auto img = map_point(phi, s);
                    bool hit = false;
                    for (const auto& d : dst)
                        if (d.mult == s.mult && distance(img, d) < 1e-6L) hit = true;
                    if (!hit) ok = false;
                }
                if (!ok) continue;
                // the substitution matrix is phi^-1, up to a complex factor
                CMat nm = phi.adj();
                Cx piv = nm.a;
                for (Cx e : {nm.b, nm.c, nm.d})
                    if (std::abs(e) > std::abs(piv)) piv = e;
                const Cx phase = std::conj(piv) / std::abs(piv);
                nm = {nm.a * phase, nm.b * phase, nm.c * phase, nm.d * phase};
                const long double big = std::abs(piv);
                bool real = true;
                for (Cx e : {nm.a, nm.b, nm.c, nm.d})
                    if (std::abs(e.imag()) > 1e-7L * big) real = false;
                if (!real) continue;
                Mat2F m{nm.a.real() / big, nm.b.real() / big, nm.c.real() / big, nm.d.real() / big};
                if (std::abs(m.det()) < 1e-14L) continue;
                std::size_t at = 0;
                for (std::size_t c = 1; c < 5; ++c)
                    if (std::abs(target[c]) > std::abs(target[at])) at = c;
                const Real got = substitute_quartic(qd, m)[at];
                if (got == 0) continue;
                const Real ratio = target[at] / got;
                const int s = ratio > 0 ? 1 : -1;
                const Real t = std::pow(std::abs(ratio), Real(0.25));
                m = {m.alpha * t, m.beta * t, m.gamma * t, m.delta * t};
                // Refine in stages: freeze the current matrix exactly, move Q there exactly, and correct
                // the remainder (which is close to the identity and well conditioned) in floating point.
                Mat2 total = exact_matrix(m);
                Real res = 0;
                for (int stage = 0; stage < 3; ++stage) {
                    const auto moved = substitute_quartic(q.as_array(), total);
                    Coeffs md;
                    for (std::size_t c = 0; c < 5; ++c) md[c] = to_real(moved[c]);
                    res = max_deviation(scaled(md, s), target) / scale;
                    if (res < 1e-14L) break;
                    const Mat2F step = polish(md, {1, 0, 0, 1}, s, target);
                    total = total * exact_matrix(step);
                }
                const GroupElement g = element_from_substitution(total, Rational(s));
                res = exact_deviation(g, q, target) / scale;
                if (!std::isfinite(res)) continue;
                if (!best || res < best->residual) best = Candidate{g, res};
            }
    return best;
}

std::optional<std::array<Rational, 5>> exact_target(const CanonicalForm& f) {
    const Rational one = 1, zero = 0;
    switch (f.id) {
        case CanonicalId::IV: return std::array{zero, one, zero, zero, zero};
        case CanonicalId::V: return std::array{one, zero, zero, zero, zero};
        default: break;
    }
    if (!f.exact_parameter) return std::nullopt;
    const Rational last = f.id == CanonicalId::I ? one : f.id == CanonicalId::II ? Rational(-1) : zero;
    return std::array{one, zero, *f.exact_parameter, zero, last};
}

// Most witnesses for exact targets have small rational entries; the refined one is within
// rounding of them. Keep the snapped element only if it hits the target exactly.
std::optional<GroupElement> snapped(const GroupElement& g, const BinaryQuartic& q, const std::array<Rational, 5>& target) {
    auto snap = [](const Rational& x) {
        const Rational unit(1, 1000000000000L);
        const Rational tol = abs(x) > 1 ? Rational(abs(x) * unit) : unit;
        return simplest_between(x - tol, x + tol);
    };
    GroupElement s = g;
    s.a0 = snap(g.a0);
    s.a1 = snap(g.a1);
    s.a2 = snap(g.a2);
    s.a3 = snap(g.a3);
    s.a4 = snap(g.a4);
    if (s.a2 == 0 || s.a3 == 0) return std::nullopt;
    if (act_on_quartic(s, q.as_array()) != target) return std::nullopt;
    return s;
}

struct Range {
    CanonicalId id;
    std::optional<long double> fixed;  // exact parameter for the one-point families
    long double lo, hi;                // open range otherwise
    std::optional<long double> excluded;
};

Range range_of(WebType t) {
    constexpr long double inf = std::numeric_limits<long double>::infinity();
    switch (t) {
        case WebType::BiCyclide: return {CanonicalId::I, std::nullopt, -inf, -2, std::nullopt};
        case WebType::FlatRingCyclide: return {CanonicalId::I, std::nullopt, -2, inf, 2.0L};
        case WebType::DiskCyclide: return {CanonicalId::II, std::nullopt, -inf, inf, std::nullopt};
        case WebType::InverseProlateSpheroidal: return {CanonicalId::III, -1.0L, 0, 0, std::nullopt};
        case WebType::InverseOblateSpheroidal: return {CanonicalId::III, 1.0L, 0, 0, std::nullopt};
        case WebType::Toroidal: return {CanonicalId::I, 2.0L, 0, 0, std::nullopt};
        case WebType::Bispherical: return {CanonicalId::I, -2.0L, 0, 0, std::nullopt};
        case WebType::Cardioid: return {CanonicalId::IV, std::nullopt, 0, 0, std::nullopt};
        case WebType::TangentSphere: return {CanonicalId::V, std::nullopt, 0, 0, std::nullopt};
    }
    throw InternalError("unknown web type");
}

// Candidate parameters in range: rational roots first, then refined irrational ones.
std::vector<CanonicalForm> parameter_candidates(const BinaryQuartic& q, const Range& r) {
    std::vector<CanonicalForm> out;
    const UniPoly eq = mu_equation(q, r.id);
    if (eq.is_zero()) throw InternalError("canonical parameter equation vanishes identically");
    auto in_range = [&](long double x) { return x > r.lo && x < r.hi && (!r.excluded || x != *r.excluded); };
    UniPoly rest = eq;
    for (const Rational& root : rational_roots(eq)) {
        const UniPoly lin{-root, Rational(1)};
        while (divmod(rest, lin).second.is_zero()) rest = divmod(rest, lin).first;
        if (in_range(to_real(root))) out.push_back({r.id, root, to_real(root)});
    }
    if (rest.degree() > 0) {
        const Rational width(1, Integer(1) << 60);
        for (const auto& iv : isolate_real_roots(rest, width)) {
            const Rational mid = (iv.lo + iv.hi) / 2;
            // the interval is narrow enough that it cannot straddle a range endpoint unless the root is that endpoint
            if (in_range(to_real(mid))) out.push_back({r.id, std::nullopt, to_real(mid)});
        }
    }
    return out;
}

}  // namespace

std::string to_string(CanonicalId id) {
    switch (id) {
        case CanonicalId::I: return "I";
        case CanonicalId::II: return "II";
        case CanonicalId::III: return "III";
        case CanonicalId::IV: return "IV";
        case CanonicalId::V: return "V";
    }
    throw InternalError("unknown canonical id");
}

std::array<Real, 5> CanonicalForm::quartic() const {
    const Real p = parameter.value_or(0);
    switch (id) {
        case CanonicalId::I: return {1, 0, p, 0, 1};
        case CanonicalId::II: return {1, 0, p, 0, -1};
        case CanonicalId::III: return {1, 0, p, 0, 0};
        case CanonicalId::IV: return {0, 1, 0, 0, 0};
        case CanonicalId::V: return {1, 0, 0, 0, 0};
    }
    throw InternalError("unknown canonical id");
}

UniPoly mu_equation(const BinaryQuartic& q, CanonicalId id) {
    if (id != CanonicalId::I && id != CanonicalId::II) throw DomainError("mu_equation: forms I and II only");
    const Invariants inv = invariants(q);
    const bool one = id == CanonicalId::I;
    // invariants of z^4 + mu z^2 +- 1 as polynomials in mu
    const UniPoly ic{Rational(one ? 12 : -12), 0, 1};
    const UniPoly jc{0, Rational(one ? 72 : -72), 0, -2};
    return pow(inv.I, 3) * (jc * jc) - (inv.J * inv.J) * ic.pow(3);
}

CanonicalResult canonical_form(const BinaryQuartic& q) {
    const RootStructure rs = root_structure(q);
    const WebType type = web_type_of(rs.partition);
    const Range r = range_of(type);
    std::vector<CanonicalForm> candidates;
    if (r.id == CanonicalId::IV || r.id == CanonicalId::V) {
        candidates.push_back({r.id, std::nullopt, std::nullopt});
    } else if (r.fixed) {
        candidates.push_back({r.id, Rational(static_cast<long>(*r.fixed)), *r.fixed});
    } else {
        candidates = parameter_candidates(q, r);
    }
    std::optional<CanonicalResult> best;
    for (const auto& c : candidates) {
        auto w = witness_for(q, rs, c);
        if (w && (!best || w->residual < best->residual)) best = CanonicalResult{c, w->g, static_cast<double>(w->residual)};
        if (best && best->residual <= 1e-9) break;
    }
    if (!best) throw InternalError("canonical form: no " + to_string(type) + " representative could be matched (" +
                                   std::to_string(candidates.size()) + " parameter candidates)");
    if (best->residual > 1e-9)
        throw InternalError("canonical form: witness residual " + std::to_string(best->residual) + " exceeds 1e-9");
    if (const auto t = exact_target(best->form))
        if (const auto s = snapped(best->witness, q, *t)) {
            best->witness = *s;
            best->residual = 0;
        }
    return *best;
}

}  // namespace cktweb
