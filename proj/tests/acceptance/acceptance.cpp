// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "cktweb/catalog.hpp"
#include "cktweb/expr.hpp"
#include "cktweb/linalg.hpp"
#include "cktweb/sampling.hpp"
#include "cktweb/separability.hpp"
#include "cktweb/symmetry.hpp"
#include "oracles.hpp"

using namespace cktweb;

namespace {

constexpr double kEigenTolerance = 1e-10;

struct Outcome {
    bool ok = true;
    std::string detail;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) detail = "failed: " + what;
        ok = ok && cond;
    }
};

int failures = 0;

void criterion(int number, double limit_seconds, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.ok = false;
        o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream timing;
    timing.precision(3);
    timing << std::fixed << secs << " s";
    if (limit_seconds > 0) {
        timing << " (limit " << limit_seconds << " s)";
        if (secs >= limit_seconds) {
            o.ok = false;
            o.detail += " [over time]";
        }
    }
    std::printf("criterion %d: %s  %s  %s\n", number, o.ok ? "PASS" : "FAIL", o.detail.c_str(), timing.str().c_str());
    std::fflush(stdout);
    if (!o.ok) ++failures;
}

const MultiPoly x = MultiPoly::x(), y = MultiPoly::y(), z = MultiPoly::z();

int eps(int i, int j, int k) {
    if (i == j || j == k || i == k) return 0;
    return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

// Structure constants of the conformal algebra, typed in from the bracket relations.
VectorField expected_bracket(int a, int b) {
    auto kind = [](int n) { return n < 3 ? 0 : n < 6 ? 1 : n == 6 ? 2 : 3; };
    auto index = [](int n) { return n < 6 ? n % 3 : n == 6 ? -1 : n - 7; };
    const auto X = [](int i) { return ckv(static_cast<Ckv>(i)); };
    const auto R = [](int i) { return ckv(static_cast<Ckv>(3 + i)); };
    const auto I = [](int i) { return ckv(static_cast<Ckv>(7 + i)); };
    const VectorField& D = ckv(Ckv::D);
    VectorField out;
    auto add = [&](int s, const VectorField& v) { out += MultiPoly(s) * v; };
    auto bracket = [&](int t1, int i1, int t2, int i2, int sign) {
        if (t1 == 0 && t2 == 1)
            for (int k = 0; k < 3; ++k) add(-sign * eps(i1, i2, k), X(k));
        if (t1 == 1 && t2 == 1)
            for (int k = 0; k < 3; ++k) add(-sign * eps(i1, i2, k), R(k));
        if (t1 == 0 && t2 == 2) add(sign, X(i1));
        if (t1 == 0 && t2 == 3) {
            if (i1 == i2) add(2 * sign, D);
            for (int k = 0; k < 3; ++k) add(-2 * sign * eps(i1, i2, k), R(k));
        }
        if (t1 == 1 && t2 == 3)
            for (int k = 0; k < 3; ++k) add(-sign * eps(i1, i2, k), I(k));
        if (t1 == 2 && t2 == 3) add(sign, I(i2));
    };
    if (kind(a) <= kind(b)) bracket(kind(a), index(a), kind(b), index(b), 1);
    else bracket(kind(b), index(b), kind(a), index(a), -1);
    return out;
}

Outcome dimensions() {
    Outcome o;
    o.require(ckt_dimension(3, 2) == 35, "ckt_dimension(3,2) = 35");
    const auto basis = ckv_basis();
    o.require(basis.size() == 10, "10 conformal Killing vectors");
    int conformal = 0, matches = 0;
    for (const auto& v : basis)
        if (conformal_factor(v)) ++conformal;
    for (int a = 0; a < 10; ++a)
        for (int b = 0; b < 10; ++b)
            if (commutator(basis[a], basis[b]) == expected_bracket(a, b)) ++matches;
    o.require(conformal == 10, "L_V g = f g for every basis field");
    o.require(matches == 100, "commutator table");
    o.detail = "dim 35, " + std::to_string(conformal) + "/10 conformal, " + std::to_string(matches) + "/100 brackets" +
               (o.ok ? "" : "; " + o.detail);
    return o;
}

Outcome rotational_family() {
    Outcome o;
    Rng rng(2024);
    std::uniform_int_distribution<int> c(-9, 9);
    int passed = 0;
    for (int t = 0; t < 1000; ++t) {
        const RotParams p = random_params(rng, 9);
        const SymTensorField k = assemble_rotational(p);
        MultiPoly f;
        const MultiPoly monomials[] = {1, x, y, z, x * x, y * y, z * z, x * y, x * z, y * z};
        for (const auto& m : monomials) f += c(rng) * m;
        const bool ok = lie_derivative(ckv(Ckv::R3), k).is_zero() && tsn_check(k) && rotational_eigencondition(k) &&
                        extract_parameters(k) == p && extract_parameters(k + SymTensorField::scalar(f)) == p;
        if (ok) ++passed;
    }
    o.require(passed == 1000, "all 1000 random parameter sets");
    o.detail = std::to_string(passed) + "/1000 invariant, normal, eigen-condition, round trip" + (o.ok ? "" : "; " + o.detail);
    return o;
}

Outcome tables() {
    Outcome o;
    int rows = 0, equivalences = 0, witnessed = 0;
    for (const auto& [a, k] : {std::pair{Rational(1), Rational(1, 2)}, std::pair{Rational(2), Rational(1, 3)}}) {
        const Catalog cat = catalog(a, k);
        for (const auto& r : cat.rows) {
            const WebType t = classify_by_roots(BinaryQuartic::from(r.params));
            o.require(t == r.expected_type, r.name + " at a=" + to_string(a) + ", k=" + to_string(k));
            if (t == r.expected_type) ++rows;
        }
        o.require(classify_by_roots(BinaryQuartic::from(cat.row("Cap cyclide").params)) == WebType::FlatRingCyclide,
                  "Cap cyclide is flat-ring");
        for (const auto& e : cat.equivalences) {
            const auto& from = cat.row(e.web);
            const auto& to = cat.row(e.equivalent_to);
            const bool type_ok = classify_by_roots(BinaryQuartic::from(from.params)) ==
                                 classify_by_roots(BinaryQuartic::from(to.params));
            o.require(type_ok, e.web + " ~ " + e.equivalent_to);
            if (type_ok) ++equivalences;
            if (e.transformation.find("discrete") != std::string::npos) {
                o.require(e.witness.has_value(), "witness for " + e.web);
                if (e.witness && apply(*e.witness, from.params) == to.params) ++witnessed;
                else o.require(false, "witness maps " + e.web + " onto " + e.equivalent_to);
            }
        }
    }
    o.require(rows == 30 && equivalences == 12, "counts");
    o.detail = std::to_string(rows) + "/30 rows, " + std::to_string(equivalences) + "/12 equivalences, " +
               std::to_string(witnessed) + " discrete-inversion witnesses exact" + (o.ok ? "" : "; " + o.detail);
    return o;
}

Outcome worked_potential() {
    Outcome o;
    const Potential pot{parse_expression("-4/((x^2+y^2+z^2-1)^2+4*z^2)"), 0};
    const ParamSolution s = solve_compatible(pot);
    o.require(s.dimension() == 2, "two-parameter family");
    bool in_family = true;
    for (const auto& b : s.basis)
        in_family = in_family && b.M33 == b.H / 2 && b.A33 == b.H / 2 && b.L3 == 0 && b.D3 == 0;
    o.require(in_family, "every solution has the form (H/2, 0, H, C33, 0, H/2)");
    // The family must contain both generators.
    RationalMatrix m(0, 6);
    for (const auto& b : s.basis) {
        const auto a = b.as_array();
        m.append_row(RationalVector(a.begin(), a.end()));
    }
    m.append_row({Rational(1, 2), 0, 1, 0, 0, Rational(1, 2)});
    m.append_row({0, 0, 0, 1, 0, 0});
    o.require(rank(m) == 2, "family spans H and C33 directions");

    const BinaryQuartic q{Rational(1, 2), 0, 1, 0, Rational(1, 2)};
    const Invariants inv = invariants(q);
    o.require(inv.I == 4 && inv.J == 16 && inv.Delta == 0, "I = 4, J = 16, Delta = 0");
    o.require(covariant_L(q).is_zero(), "L vanishes");
    const BinaryForm h = hessian(q.form());
    o.require(h == BinaryForm(4, {12, 0, 24, 0, 12}), "Hessian = 12(X^2+Y^2)^2");
    o.require(form_sign(h) == FormSign::PsdNonzero, "Hessian psd");
    o.require(classify_by_roots(q) == WebType::Toroidal && classify_by_invariants(q).type == WebType::Toroidal,
              "Toroidal");
    const auto cls = classify_potential(pot);
    o.require(cls.type == WebType::Toroidal, "classify_potential gives Toroidal");
    if (o.ok) o.detail = "family dim 2, I=4 J=16 Delta=0, L=0, H=12(X^2+Y^2)^2 psd, Toroidal";
    return o;
}

Outcome group_laws() {
    Outcome o;
    Rng rng(77);
    int residual = 0, scaling = 0, absolute = 0, partition = 0, discrete = 0, with_j = 0;
    GroupElement inversion;
    inversion.discrete = true;
    for (int t = 0; t < 1000; ++t) {
        const GroupElement g = random_group_element(rng);
        const RotParams p = random_params(rng);
        const BinaryQuartic q = BinaryQuartic::from(p);
        Rational zz = random_rational(rng);
        while (axis_action(g, {zz}).infinite) zz += 1;
        if (covariance_residual(g, p, zz) == 0) ++residual;
        const Invariants a = invariants(q), b = invariants(apply(g, q));
        if (b.I == g.a3 * g.a3 * a.I && b.J == g.a3 * g.a3 * g.a3 * a.J) ++scaling;
        if (a.J != 0) {
            ++with_j;
            if (a.F == b.F) ++absolute;
        }
        if (!q.is_zero() && root_structure(q).partition == root_structure(apply(g, q)).partition) ++partition;
        if (q.is_zero()) ++partition;
        const Invariants c = invariants(apply(inversion, q));
        if (c.I == a.I && c.J == a.J) ++discrete;
    }
    o.require(residual == 1000, "covariance residual");
    o.require(scaling == 1000, "I, J scaling");
    o.require(absolute == with_j, "F invariant");
    o.require(partition == 1000, "root partition invariant");
    o.require(discrete == 1000, "discrete inversion fixes I, J");
    std::ostringstream d;
    d << "residual 0: " << residual << "/1000, I~a3^2 J~a3^3: " << scaling << "/1000, F: " << absolute << "/" << with_j
      << ", partition: " << partition << "/1000, inversion: " << discrete << "/1000";
    o.detail = d.str() + (o.ok ? "" : "; " + o.detail);
    return o;
}

Outcome cross_validation() {
    Outcome o;
    const CrosscheckSummary s = crosscheck(20240601, 100);
    int disagreements = 0;
    for (const auto& t : s.tally) disagreements += t.generated - t.invariants_agree;
    o.require(s.total() == 900, "900 generated");
    o.require(s.roots_recovered() == 900, "roots recover every generator type");
    // Disagreements are allowed only as reported findings.
    int reported = 0;
    for (const auto& f : s.findings)
        if (f.by_invariants != f.by_roots) ++reported;
    o.require(reported == disagreements, "no silent disagreement");

    Rng rng(99);
    int compared = 0, agree = 0;
    while (compared < 1000) {
        const BinaryQuartic q = random_quartic(rng, 9);
        if (invariants(q).Delta == 0) continue;
        ++compared;
        const auto qa = q.as_array();
        const int real = oracle::projective_real_roots(
            {to_double(qa[0]), to_double(qa[1]), to_double(qa[2]), to_double(qa[3]), to_double(qa[4])});
        const WebType want = real == 4 ? WebType::BiCyclide : real == 2 ? WebType::DiskCyclide : WebType::FlatRingCyclide;
        if (real % 2 == 0 && classify_by_roots(q) == want) ++agree;
    }
    o.require(agree == 1000, "companion-matrix oracle agreement");
    std::ostringstream d;
    d << "roots " << s.roots_recovered() << "/900, invariants " << s.invariants_agree() << "/900, findings "
      << reported << " (all disagreements), oracle " << agree << "/1000";
    o.detail = d.str() + (o.ok ? "" : "; " + o.detail);
    return o;
}

// The translational pattern, typed with the symmetry along the third axis: the printed
// components depend on the two transverse coordinates only.
std::vector<SymTensorField> translational_pattern() {
    std::vector<SymTensorField> out;
    auto make = [&](std::array<MultiPoly, 4> k) {  // K33, K11, K22, K12
        SymTensorField t;
        t(2, 2) = k[0];
        t(0, 0) = k[1];
        t(1, 1) = k[2];
        t(0, 1) = k[3];
        out.push_back(t);
    };
    const Rational h(1, 2), q(3, 4);
    make({-1, 1, 0, 0});                                                          // A22
    make({-1, 0, 1, 0});                                                          // A33
    make({0, 0, 0, 1});                                                           // A23
    make({h * y, -1 * y, h * y, q * x});                                          // B21
    make({-h * x, -h * x, x, -q * y});                                            // B31
    make({x * x + y * y, x * x - 2 * y * y, y * y - 2 * x * x, 3 * x * y});       // C33
    return out;
}

Outcome symmetry_scans() {
    Outcome o;
    const auto rot = symmetry_subspace(ckv(Ckv::R3), SymmetryMode::HZero);
    const std::size_t rot_dim = rot.spaces.at(0).basis.size();
    const auto filtered = tsn_filter(rot.spaces[0].basis, ckv(Ckv::R3));
    o.require(rot_dim == 9, "R3 invariant space has dimension 9");
    o.require(filtered.dimension == 6 && filtered.certified, "TSN-filtered dimension 6");

    const auto tr = symmetry_subspace(ckv(Ckv::X3), SymmetryMode::HZero);
    const auto& basis = tr.spaces.at(0).basis;
    bool shape = true, killing = true;
    for (const auto& c : basis) {
        const auto k = assemble_ckt(c);
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j) shape = shape && k(i, j).degree_in(2) <= 0 && k(i, j).degree() <= 2;
        killing = killing && is_zero(killing_obstruction(k));
    }
    int pattern_in_space = 0;
    RationalMatrix coords(0, 35);
    for (const auto& c : basis) coords.append_row(tck_coordinates(assemble_ckt(c)));
    const std::size_t base_rank = rank(coords);
    for (const auto& k : translational_pattern()) {
        RationalMatrix extended = coords;
        extended.append_row(tck_coordinates(k));
        if (lie_derivative(ckv(Ckv::X3), k).is_zero() && rank(extended) == base_rank) ++pattern_in_space;
    }
    o.require(shape, "translation-invariant, quadratic components");
    o.require(killing, "Killing obstruction vanishes on the translational space");
    o.require(pattern_in_space == 6, "printed component pattern lies in the translational space");

    const auto dil = symmetry_subspace(ckv(Ckv::D), SymmetryMode::HConstant);
    int integer_eigenvalues = 0;
    std::string values;
    for (const auto& s : dil.spaces)
        if (is_integer(s.h)) {
            ++integer_eigenvalues;
            values += (values.empty() ? "" : ",") + to_string(s.h);
        }
    o.require(integer_eigenvalues == 5 && dil.irrational_real_eigenvalues == 0 && dil.nonreal_eigenvalues == 0,
              "five integer eigenvalues for D");
    std::ostringstream d;
    d << "R3: dim " << rot_dim << ", TSN " << filtered.dimension << "; X3: dim " << basis.size() << ", pattern "
      << pattern_in_space << "/6, Killing " << (killing ? "yes" : "no") << "; D: h in {" << values << "}";
    o.detail = d.str() + (o.ok ? "" : "; " + o.detail);
    return o;
}

Outcome eigenvalues() {
    Outcome o;
    Rng rng(8);
    double worst = 0;
    int off_axis = 0, on_axis = 0;
    while (off_axis < 100) {
        const RotParams p = random_params(rng);
        const Point3 pt{random_rational(rng, 9, 5), random_rational(rng, 9, 5), random_rational(rng, 9, 5)};
        if (pt[0] == 0 && pt[1] == 0) continue;
        ++off_axis;
        const auto e = eigenvalues_at(p, pt);
        const double s = std::sqrt(to_double(e.B));
        std::array<double, 3> exact{to_double(e.lambda1), (to_double(e.A) + s) / 2, (to_double(e.A) - s) / 2};
        std::sort(exact.begin(), exact.end());
        const SymTensorField k = assemble_rotational(p);
        std::array<std::array<double, 3>, 3> m{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m[i][j] = to_double(k(i, j).evaluate(pt));
        const auto num = oracle::symmetric_eigenvalues(m);
        const double scale = std::max({std::abs(num[0]), std::abs(num[2]), 1e-300});
        for (int i = 0; i < 3; ++i) worst = std::max(worst, std::abs(exact[i] - num[i]) / scale);
    }
    o.require(worst <= kEigenTolerance, "off-axis relative error");
    for (int t = 0; t < 100; ++t) {
        const RotParams p = random_params(rng);
        const Rational z0 = random_rational(rng, 9, 5);
        const auto e = eigenvalues_at(p, {0, 0, z0});
        const Rational q = singular_polynomial(p).evaluate(z0);
        // (A +- sqrt B)/2 = (q +- |q|)/2
        if (e.lambda1 == 0 && e.A == q && e.B == q * q) ++on_axis;
    }
    o.require(on_axis == 100, "on-axis values");
    std::ostringstream d;
    d.precision(2);
    d << std::scientific << "max relative error " << worst << " (tol " << kEigenTolerance << ") over 100 points; on-axis "
      << on_axis << "/100";
    o.detail = d.str() + (o.ok ? "" : "; " + o.detail);
    return o;
}

}  // namespace

int main() {
    criterion(1, 1, dimensions);
    criterion(2, 60, rotational_family);
    criterion(3, 10, tables);
    criterion(4, 5, worked_potential);
    criterion(5, 60, group_laws);
    criterion(6, 0, cross_validation);
    criterion(7, 120, symmetry_scans);
    criterion(8, 0, eigenvalues);
    std::printf("%d of 8 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
