#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cktweb/binary_form.hpp"
#include "cktweb/errors.hpp"
#include "cktweb/group_action.hpp"

namespace cktweb {

enum class WebType {
    BiCyclide,
    FlatRingCyclide,
    DiskCyclide,
    InverseProlateSpheroidal,
    InverseOblateSpheroidal,
    Toroidal,
    Bispherical,
    Cardioid,
    TangentSphere,
};
inline constexpr WebType all_web_types[] = {
    WebType::BiCyclide,  WebType::FlatRingCyclide, WebType::DiskCyclide,
    WebType::InverseProlateSpheroidal, WebType::InverseOblateSpheroidal, WebType::Toroidal,
    WebType::Bispherical, WebType::Cardioid, WebType::TangentSphere,
};
std::string to_string(WebType t);
WebType parse_web_type(const std::string& s);  // ParseError

struct Invariants {
    Rational I, J;
    Rational Delta;              // 4 I^3 - J^2
    std::optional<Rational> F;   // I^3 / J^2 when J != 0
};
Invariants invariants(const BinaryQuartic& q);

BinaryForm hessian(const BinaryForm& f);  // f_XX f_YY - f_XY^2
BinaryQuartic hessian(const BinaryQuartic& q);
BinaryForm covariant_L(const BinaryQuartic& q);  // I H - 6 J Q
BinaryForm covariant_M(const BinaryQuartic& q);  // 12 H^2 - I Q^2

enum class FormSign { IdenticallyZero, PsdNonzero, NsdNonzero, Indefinite };
std::string to_string(FormSign s);
FormSign form_sign(const BinaryForm& f);  // DomainError for odd degree

struct RootFactor {
    UniPoly factor;  // square-free
    int multiplicity;
    int real_roots;
};
// Multiset of real and of complex-conjugate-pair multiplicities, each sorted descending.
struct RootPartition {
    std::vector<int> real;
    std::vector<int> complex_pairs;
    bool operator==(const RootPartition&) const = default;
};
struct RootStructure {
    int infinity_multiplicity = 0;
    std::vector<RootFactor> factors;
    RootPartition partition;
    std::string to_string() const;
};
RootStructure root_structure(const BinaryQuartic& q);  // DomainError for zero
WebType web_type_of(const RootPartition& p);             // InternalError if not one of the nine
WebType classify_by_roots(const BinaryQuartic& q);

struct AuditEntry {
    std::string condition;
    bool satisfied;
    std::string detail;
};

struct ClassificationError : DomainError {
    ClassificationError(const std::string& what, std::vector<AuditEntry> audit)
        : DomainError(what), audit(std::move(audit)) {}
    std::vector<AuditEntry> audit;
};

struct InvariantClassification {
    WebType type;
    std::vector<AuditEntry> audit;
    // Result of reading the decision list strictly in printed order, when one row fires.
    std::optional<WebType> strict_order_type;
};
// Decision list on the sign classes of Delta, H, L, M and the vanishing of I, J.
// The degenerate rows (H = 0, then I = J = 0) are tested first; see README.
InvariantClassification classify_by_invariants(const BinaryQuartic& q);

enum class CanonicalId { I, II, III, IV, V };
std::string to_string(CanonicalId id);

struct CanonicalForm {
    CanonicalId id;
    std::optional<Rational> exact_parameter;  // mu or nu when rational
    std::optional<Real> parameter;            // mu or nu numerically; absent for IV and V
    // (M33, L3, H, D3, A33) of the representative, in floating point.
    std::array<Real, 5> quartic() const;
};

struct CanonicalResult {
    CanonicalForm form;
    // Approximate: apply(witness, Q) matches form.quartic() to the stated residual. The entries are
    // binary fractions from a floating-point construction, evaluated exactly for the residual.
    // When the representative is exact and a nearby small-denominator element reaches it exactly,
    // that element is returned instead and the residual is 0.
    GroupElement witness;
    double residual;        // max coefficient deviation, relative to the largest representative coefficient
};
CanonicalResult canonical_form(const BinaryQuartic& q);

// Real roots in P^1 of the representative family members used by canonical_form.
UniPoly mu_equation(const BinaryQuartic& q, CanonicalId id);

}  // namespace cktweb
