#pragma once

#include <string>

#include <json.hpp>

#include "cktweb/catalog.hpp"
#include "cktweb/ckt.hpp"
#include "cktweb/group_action.hpp"
#include "cktweb/quartic.hpp"
#include "cktweb/rotational.hpp"
#include "cktweb/separability.hpp"

namespace cktweb {

using Json = nlohmann::ordered_json;

// Rationals travel as "p/q" strings so that nothing is lost.
Json to_json(const Rational& q);
Json to_json(const RotParams& p);
Json to_json(const BinaryQuartic& q);
Json to_json(const BinaryForm& f);
Json to_json(const GroupElement& g);
Json to_json(const Invariants& inv);
Json to_json(const RootStructure& rs);
Json to_json(const std::vector<AuditEntry>& audit);
Json to_json(const CanonicalResult& c);
Json to_json(const CktCoefficients& c);  // nonzero slots only, named A11 .. M33
Json to_json(const ParamSolution& s);

std::string coefficient_slot_name(int slot);

Rational rational_from_json(const Json& j);  // ParseError
GroupElement group_element_from_json(const Json& j);
RotParams params_from_json(const Json& j);

}  // namespace cktweb
