#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cktweb/quartic.hpp"
#include "cktweb/rotational.hpp"
#include "cktweb/tensor.hpp"

namespace cktweb {

struct Potential {
    RationalFunction V;
    Rational E = 0;  // fixed energy
};

// The compatible parameters form a linear space (the condition is homogeneous in K),
// so the particular solution is always zero when the system is consistent.
struct ParamSolution {
    RotParams particular;
    std::vector<RotParams> basis;
    std::size_t dimension() const { return basis.size(); }
    RotParams member(const std::vector<Rational>& weights) const;
};

// (E - V) k_S + 2 K dV, where k_S = -2 k is the conformal factor of [g, K] = k_S . g
// and k is the field returned by verify_ckt.
OneForm compatibility_form(const RotParams& p, const Potential& pot);
bool is_closed(const OneForm& w);
ParamSolution solve_compatible(const Potential& pot);

// d(K dV) = 0 for a Killing-representable K (made Killing by subtracting the potential of its
// conformal factor times the metric). ValidationError if K is not Killing-representable.
bool dkdv_check(const SymTensorField& k, const RationalFunction& v);

struct PotentialClassification {
    ParamSolution solution;
    std::optional<WebType> type;
    std::optional<BinaryQuartic> quartic;  // the characteristic quartic, normalized
    std::string diagnostics;
};
PotentialClassification classify_potential(const Potential& pot);

}  // namespace cktweb
