#include "cktweb/quartic.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace cktweb {

namespace {

struct WebName {
    WebType type;
    const char* name;
};
constexpr WebName web_names[] = {
    {WebType::BiCyclide, "BiCyclide"},
    {WebType::FlatRingCyclide, "FlatRingCyclide"},
    {WebType::DiskCyclide, "DiskCyclide"},
    {WebType::InverseProlateSpheroidal, "InverseProlateSpheroidal"},
    {WebType::InverseOblateSpheroidal, "InverseOblateSpheroidal"},
    {WebType::Toroidal, "Toroidal"},
    {WebType::Bispherical, "Bispherical"},
    {WebType::Cardioid, "Cardioid"},
    {WebType::TangentSphere, "TangentSphere"},
};

}  // namespace

std::string to_string(WebType t) {
    for (const auto& w : web_names)
        if (w.type == t) return w.name;
    throw InternalError("unknown web type");
}

WebType parse_web_type(const std::string& s) {
    for (const auto& w : web_names)
        if (s == w.name) return w.type;
    throw ParseError("unknown web type '" + s + "'");
}

Invariants invariants(const BinaryQuartic& q) {
    Invariants r;
    r.I = 12 * q.A33 * q.M33 - 3 * q.L3 * q.D3 + q.H * q.H;
    r.J = 72 * q.A33 * q.M33 * q.H - 27 * q.A33 * q.L3 * q.L3 - 27 * q.D3 * q.D3 * q.M33 + 9 * q.D3 * q.L3 * q.H -
          2 * q.H * q.H * q.H;
    r.Delta = 4 * r.I * r.I * r.I - r.J * r.J;
    if (r.J != 0) r.F = r.I * r.I * r.I / (r.J * r.J);
    return r;
}

BinaryForm hessian(const BinaryForm& f) {
    const BinaryForm fxy = f.dX().dY();
    return f.dX().dX() * f.dY().dY() - fxy * fxy;
}

BinaryQuartic hessian(const BinaryQuartic& q) {
    const BinaryForm h = hessian(q.form());
    return {h[0], h[1], h[2], h[3], h[4]};
}

BinaryForm covariant_L(const BinaryQuartic& q) {
    const Invariants inv = invariants(q);
    return inv.I * hessian(q.form()) - Rational(6 * inv.J) * q.form();
}

BinaryForm covariant_M(const BinaryQuartic& q) {
    const Invariants inv = invariants(q);
    const BinaryForm h = hessian(q.form());
    const BinaryForm f = q.form();
    return Rational(12) * (h * h) - inv.I * (f * f);
}

std::string to_string(FormSign s) {
    switch (s) {
        case FormSign::IdenticallyZero: return "identically_zero";
        case FormSign::PsdNonzero: return "psd_nonzero";
        case FormSign::NsdNonzero: return "nsd_nonzero";
        case FormSign::Indefinite: return "indefinite";
    }
    throw InternalError("unknown form sign");
}

FormSign form_sign(const BinaryForm& f) {
    if (f.degree() % 2 != 0) throw DomainError("form_sign: odd degree form");
    if (f.is_zero()) return FormSign::IdenticallyZero;
    const UniPoly p = f.dehomogenize();
    if ((f.degree() - p.degree()) % 2 != 0) return FormSign::Indefinite;
    if (p.degree() > 0)
        for (const auto& sf : squarefree_decomposition(p))
            if (sf.multiplicity % 2 != 0 && real_root_count(sf.factor) > 0) return FormSign::Indefinite;
    return sign(p.leading()) > 0 ? FormSign::PsdNonzero : FormSign::NsdNonzero;
}

std::string RootStructure::to_string() const {
    std::ostringstream os;
    auto list = [&](const std::vector<int>& v) {
        os << '{';
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
        os << '}';
    };
    os << "real";
    list(partition.real);
    os << " cc";
    list(partition.complex_pairs);
    os << " inf=" << infinity_multiplicity;
    return os.str();
}

RootStructure root_structure(const BinaryQuartic& q) {
    if (q.is_zero()) throw DomainError("root structure of the zero quartic");
    const UniPoly p = q.dehomogenized();
    RootStructure rs;
    rs.infinity_multiplicity = 4 - p.degree();
    if (rs.infinity_multiplicity > 0) rs.partition.real.push_back(rs.infinity_multiplicity);
    if (p.degree() > 0) {
        for (auto& sf : squarefree_decomposition(p)) {
            const int real = real_root_count(sf.factor);
            const int pairs = (sf.factor.degree() - real) / 2;
            for (int i = 0; i < real; ++i) rs.partition.real.push_back(sf.multiplicity);
            for (int i = 0; i < pairs; ++i) rs.partition.complex_pairs.push_back(sf.multiplicity);
            rs.factors.push_back({std::move(sf.factor), sf.multiplicity, real});
        }
    }
    std::sort(rs.partition.real.rbegin(), rs.partition.real.rend());
    std::sort(rs.partition.complex_pairs.rbegin(), rs.partition.complex_pairs.rend());
    return rs;
}

WebType web_type_of(const RootPartition& p) {
    using V = std::vector<int>;
    struct Row {
        V real, cc;
        WebType type;
    };
    static const Row rows[] = {
        {{1, 1, 1, 1}, {}, WebType::BiCyclide},
        {{}, {1, 1}, WebType::FlatRingCyclide},
        {{1, 1}, {1}, WebType::DiskCyclide},
        {{2, 1, 1}, {}, WebType::InverseProlateSpheroidal},
        {{2}, {1}, WebType::InverseOblateSpheroidal},
        {{}, {2}, WebType::Toroidal},
        {{2, 2}, {}, WebType::Bispherical},
        {{3, 1}, {}, WebType::Cardioid},
        {{4}, {}, WebType::TangentSphere},
    };
    for (const auto& r : rows)
        if (r.real == p.real && r.cc == p.complex_pairs) return r.type;
    throw InternalError("root partition matches no web type");
}

WebType classify_by_roots(const BinaryQuartic& q) { return web_type_of(root_structure(q).partition); }

InvariantClassification classify_by_invariants(const BinaryQuartic& q) {
    if (q.is_zero()) throw DomainError("classification of the zero quartic");
    const Invariants inv = invariants(q);
    const int delta = sign(inv.Delta);
    const FormSign h = form_sign(hessian(q.form()));
    const FormSign l = form_sign(covariant_L(q));
    const FormSign m = form_sign(covariant_M(q));
    const bool ij_zero = inv.I == 0 && inv.J == 0;

    auto pos = [](FormSign s) { return s == FormSign::PsdNonzero; };
    auto neg = [](FormSign s) { return s == FormSign::NsdNonzero; };
    auto zero = [](FormSign s) { return s == FormSign::IdenticallyZero; };

    struct Row {
        const char* condition;
        bool satisfied;
        WebType type;
    };
    const Row rows[] = {
        {"Delta<0", delta < 0, WebType::DiskCyclide},
        {"Delta>0 and H<0 and M>0", delta > 0 && neg(h) && pos(m), WebType::BiCyclide},
        {"Delta>0 and (H>0 or M>0)", delta > 0 && (pos(h) || pos(m)), WebType::FlatRingCyclide},
        {"Delta=0 and L<0", delta == 0 && neg(l), WebType::InverseProlateSpheroidal},
        {"Delta=0 and L>0", delta == 0 && pos(l), WebType::InverseOblateSpheroidal},
        {"L=0 and H>0", zero(l) && pos(h), WebType::Toroidal},
        {"L=0 and H<0", zero(l) && neg(h), WebType::Bispherical},
        {"I=J=0 and H!=0", ij_zero && !zero(h), WebType::Cardioid},
        {"H=0", zero(h), WebType::TangentSphere},
    };

    std::ostringstream detail;
    detail << "Delta sign " << delta << ", H " << to_string(h) << ", L " << to_string(l) << ", M " << to_string(m)
           << ", I=J=0 " << (ij_zero ? "true" : "false");

    InvariantClassification out{};
    for (const auto& r : rows) out.audit.push_back({r.condition, r.satisfied, to_string(r.type)});
    out.audit.push_back({"evaluated", true, detail.str()});
    for (const auto& r : rows)
        if (r.satisfied) {
            out.strict_order_type = r.type;
            break;
        }
    // The two degenerate rows come first: a triple root has L = 0 and a semidefinite H,
    // which would otherwise be captured by the L = 0 rows.
    const int order[] = {8, 7, 0, 1, 2, 3, 4, 5, 6};
    for (int i : order)
        if (rows[i].satisfied) {
            out.type = rows[i].type;
            return out;
        }
    throw ClassificationError("no row of the invariant decision list applies (" + detail.str() + ")", out.audit);
}

}  // namespace cktweb
