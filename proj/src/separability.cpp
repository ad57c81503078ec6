#include "cktweb/separability.hpp"

#include <map>

#include "cktweb/ckt.hpp"
#include "cktweb/linalg.hpp"

namespace cktweb {

namespace {

VectorField gradient(const MultiPoly& f) { return {{f.derivative(0), f.derivative(1), f.derivative(2)}}; }

VectorField curl(const VectorField& w) {
    return {{w[2].derivative(1) - w[1].derivative(2), w[0].derivative(2) - w[2].derivative(0),
             w[1].derivative(0) - w[0].derivative(1)}};
}

VectorField cross(const VectorField& a, const VectorField& b) {
    return {{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]}};
}

RotParams unit_params(int i) {
    std::array<Rational, 6> v{};
    v[static_cast<std::size_t>(i)] = 1;
    return RotParams::from_array(v);
}

// With V = n/d, d^2 times the compatibility form, as a polynomial vector.
VectorField cleared_form(const SymTensorField& k, const MultiPoly& n, const MultiPoly& d, const Rational& e) {
    const VectorField conformal = verify_ckt(k).k;
    const VectorField dv = d * gradient(n) - n * gradient(d);  // d^2 grad V
    VectorField w = ((e * d - n) * d * MultiPoly(-2)) * conformal;
    return w + MultiPoly(2) * k.contract(dv);
}

// Radial antiderivative: f with grad f = k for a closed polynomial field k.
MultiPoly radial_potential(const VectorField& k) {
    MultiPoly f;
    for (int i = 0; i < 3; ++i) {
        const MultiPoly xk = MultiPoly::var(i) * k[i];
        for (const auto& t : xk.terms())
            f += MultiPoly::term(t.coeff / MultiPoly::total_degree(t.mono),
                                 {MultiPoly::exponent(t.mono, 0), MultiPoly::exponent(t.mono, 1), MultiPoly::exponent(t.mono, 2)});
    }
    return f;
}

}  // namespace

RotParams ParamSolution::member(const std::vector<Rational>& weights) const {
    if (weights.size() != basis.size()) throw DomainError("member: wrong number of weights");
    auto v = particular.as_array();
    for (std::size_t b = 0; b < basis.size(); ++b) {
        const auto u = basis[b].as_array();
        for (std::size_t i = 0; i < 6; ++i) v[i] += weights[b] * u[i];
    }
    return RotParams::from_array(v);
}

OneForm compatibility_form(const RotParams& p, const Potential& pot) {
    const SymTensorField k = assemble_rotational(p);
    const VectorField conformal = verify_ckt(k).k;
    const RationalFunction factor = RationalFunction(MultiPoly(-2) * (RationalFunction(MultiPoly(pot.E)) - pot.V).numerator()) /
                                    RationalFunction((RationalFunction(MultiPoly(pot.E)) - pot.V).denominator());
    OneForm grad{pot.V.derivative(0), pot.V.derivative(1), pot.V.derivative(2)};
    OneForm w;
    for (int i = 0; i < 3; ++i) {
        RationalFunction kdv;
        for (int j = 0; j < 3; ++j) kdv += RationalFunction(k(i, j)) * grad[static_cast<std::size_t>(j)];
        w[static_cast<std::size_t>(i)] = factor * RationalFunction(conformal[i]) + RationalFunction(MultiPoly(2)) * kdv;
    }
    return w;
}

bool is_closed(const OneForm& w) { return is_zero(exterior_derivative(w)); }

ParamSolution solve_compatible(const Potential& pot) {
    const MultiPoly& n = pot.V.numerator();
    const MultiPoly& d = pot.V.denominator();
    const VectorField grad_d = gradient(d);
    // d^3 d(omega) = d curl W - 2 grad d x W, linear in the parameters.
    std::map<std::pair<int, MultiPoly::Monomial>, RationalVector> rows;
    for (int i = 0; i < 6; ++i) {
        const VectorField w = cleared_form(assemble_rotational(unit_params(i)), n, d, pot.E);
        const VectorField c = d * curl(w) - MultiPoly(2) * cross(grad_d, w);
        for (int comp = 0; comp < 3; ++comp)
            for (const auto& t : c[comp].terms()) {
                auto& row = rows[{comp, t.mono}];
                if (row.empty()) row.assign(6, Rational(0));
                row[static_cast<std::size_t>(i)] = t.coeff;
            }
    }
    RationalMatrix m(0, 6);
    for (const auto& [key, row] : rows) m.append_row(row);
    ParamSolution s;
    for (const auto& v : kernel(m)) {
        std::array<Rational, 6> a;
        std::copy(v.begin(), v.end(), a.begin());
        s.basis.push_back(RotParams::from_array(a));
    }
    return s;
}

bool dkdv_check(const SymTensorField& k, const RationalFunction& v) {
    const CktVerdict verdict = verify_ckt(k);
    if (!verdict.holds) throw ValidationError("dkdv_check: not a conformal Killing tensor");
    if (!is_killing_representable(k))
        throw ValidationError("dkdv_check: tensor is not Killing-representable; use the full compatibility condition");
    const SymTensorField killing = k - SymTensorField::scalar(radial_potential(verdict.k));
    OneForm w;
    for (int i = 0; i < 3; ++i) {
        RationalFunction s;
        for (int j = 0; j < 3; ++j) s += RationalFunction(killing(i, j)) * v.derivative(j);
        w[static_cast<std::size_t>(i)] = s;
    }
    return is_closed(w);
}

PotentialClassification classify_potential(const Potential& pot) {
    PotentialClassification out;
    out.solution = solve_compatible(pot);
    RationalMatrix quartics(0, 5);
    for (const auto& b : out.solution.basis) {
        const auto q = BinaryQuartic::from(b).as_array();
        quartics.append_row(RationalVector(q.begin(), q.end()));
    }
    const auto reduced = row_reduce(quartics);
    const std::size_t r = reduced.pivots.size();
    if (r == 0) {
        out.diagnostics = out.solution.basis.empty() ? "no compatible tensor"
                                                     : "compatible tensors have zero quartic part; no web defined";
        return out;
    }
    if (r > 1) {
        out.diagnostics = "underdetermined: " + std::to_string(r) + " independent characteristic quartics";
        return out;
    }
    const auto row = reduced.reduced.row(0);
    const BinaryQuartic q{row[0], row[1], row[2], row[3], row[4]};
    out.quartic = q;
    out.type = classify_by_roots(q);
    return out;
}

}  // namespace cktweb
