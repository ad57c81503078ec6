#include "cktweb/json_io.hpp"

#include <sstream>

namespace cktweb {

namespace {

const char* const param_names[] = {"M33", "L3", "H", "C33", "D3", "A33"};

double approx(Real x) { return static_cast<double>(x); }

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const RotParams& p) {
    Json j = Json::object();
    const auto v = p.as_array();
    for (std::size_t i = 0; i < 6; ++i) j[param_names[i]] = to_json(v[i]);
    return j;
}

Json to_json(const BinaryQuartic& q) {
    return {{"M33", to_json(q.M33)}, {"L3", to_json(q.L3)}, {"H", to_json(q.H)}, {"D3", to_json(q.D3)}, {"A33", to_json(q.A33)}};
}

Json to_json(const BinaryForm& f) {
    Json c = Json::array();
    for (const auto& x : f.coefficients()) c.push_back(to_json(x));
    return {{"degree", f.degree()}, {"coefficients", c}, {"text", f.to_string()}};
}

Json to_json(const GroupElement& g) {
    return {{"a0", to_json(g.a0)}, {"a1", to_json(g.a1)}, {"a2", to_json(g.a2)},
            {"a3", to_json(g.a3)}, {"a4", to_json(g.a4)}, {"discrete", g.discrete}};
}

Json to_json(const Invariants& inv) {
    return {{"I", to_json(inv.I)}, {"J", to_json(inv.J)}, {"Delta", to_json(inv.Delta)},
            {"F", inv.F ? to_json(*inv.F) : Json(nullptr)}};
}

Json to_json(const RootStructure& rs) {
    Json factors = Json::array();
    for (const auto& f : rs.factors)
        factors.push_back({{"factor", f.factor.to_string()}, {"multiplicity", f.multiplicity}, {"real_roots", f.real_roots}});
    return {{"infinity_multiplicity", rs.infinity_multiplicity},
            {"factors", factors},
            {"partition", {{"real", rs.partition.real}, {"complex_pairs", rs.partition.complex_pairs}}}};
}

Json to_json(const std::vector<AuditEntry>& audit) {
    Json a = Json::array();
    for (const auto& e : audit) a.push_back({{"condition", e.condition}, {"satisfied", e.satisfied}, {"detail", e.detail}});
    return a;
}

Json to_json(const CanonicalResult& c) {
    Json j{{"form", to_string(c.form.id)}};
    if (c.form.exact_parameter) j["parameter"] = to_json(*c.form.exact_parameter);
    else if (c.form.parameter) j["parameter"] = approx(*c.form.parameter);
    else j["parameter"] = nullptr;
    j["parameter_exact"] = c.form.exact_parameter.has_value();
    j["witness"] = to_json(c.witness);
    j["witness_approx"] = {{"a0", to_double(c.witness.a0)}, {"a1", to_double(c.witness.a1)}, {"a2", to_double(c.witness.a2)},
                           {"a3", to_double(c.witness.a3)}, {"a4", to_double(c.witness.a4)}, {"discrete", c.witness.discrete}};
    std::ostringstream r;
    r.precision(3);
    r << std::scientific << c.residual;
    j["residual"] = r.str();
    return j;
}

std::string coefficient_slot_name(int slot) {
    struct Block {
        char name;
        int size;
    };
    static constexpr Block blocks[] = {{'A', 9}, {'B', 9}, {'C', 9}, {'D', 3}, {'E', 9}, {'F', 3}, {'G', 9}, {'H', 1}, {'L', 3}, {'M', 9}};
    int at = slot;
    for (const auto& b : blocks) {
        if (at < b.size) {
            std::string s(1, b.name);
            if (b.size == 9) s += std::to_string(at / 3 + 1) + std::to_string(at % 3 + 1);
            else if (b.size == 3) s += std::to_string(at + 1);
            return s;
        }
        at -= b.size;
    }
    throw DomainError("coefficient slot out of range");
}

Json to_json(const CktCoefficients& c) {
    Json j = Json::object();
    for (int i = 0; i < CktCoefficients::kSlots; ++i)
        if (c.slot(i) != 0) j[coefficient_slot_name(i)] = to_json(c.slot(i));
    return j;
}

Json to_json(const ParamSolution& s) {
    Json basis = Json::array();
    for (const auto& b : s.basis) basis.push_back(to_json(b));
    return {{"particular", to_json(s.particular)}, {"dimension", s.dimension()}, {"basis", basis}};
}

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw ParseError("expected a rational string, got " + j.dump());
}

GroupElement group_element_from_json(const Json& j) {
    try {
        GroupElement g{rational_from_json(j.at("a0")), rational_from_json(j.at("a1")), rational_from_json(j.at("a2")),
                       rational_from_json(j.at("a3")), rational_from_json(j.at("a4")), j.at("discrete").get<bool>()};
        g.validate();
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("group element: ") + e.what());
    }
}

RotParams params_from_json(const Json& j) {
    try {
        std::array<Rational, 6> v;
        for (std::size_t i = 0; i < 6; ++i) v[i] = rational_from_json(j.at(param_names[i]));
        return RotParams::from_array(v);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("parameters: ") + e.what());
    }
}

}  // namespace cktweb
