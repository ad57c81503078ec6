#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cktweb/group_action.hpp"
#include "cktweb/quartic.hpp"
#include "cktweb/rotational.hpp"

namespace cktweb {

using Rng = std::mt19937_64;

// p/q with |p| <= num_bound, 1 <= q <= den_bound.
Rational random_rational(Rng& rng, int num_bound = 5, int den_bound = 4);
Rational random_nonzero_rational(Rng& rng, int num_bound = 5, int den_bound = 4);
GroupElement random_group_element(Rng& rng, bool allow_discrete = true);
RotParams random_params(Rng& rng, int bound = 9);         // integer entries in [-bound, bound]
BinaryQuartic random_quartic(Rng& rng, int bound = 9);    // integer coefficients, not all zero

// A representative of the type: one of the canonical forms, with a random admissible parameter
// for the one-parameter families.
BinaryQuartic representative(WebType t, Rng& rng);

struct CrosscheckFinding {
    WebType generated;
    BinaryQuartic quartic;
    GroupElement element;
    std::optional<WebType> by_roots, by_invariants;
    std::vector<AuditEntry> audit;
    std::string message;
};

struct CrosscheckTally {
    int generated = 0;
    int roots_recovered = 0;
    int invariants_agree = 0;
    int strict_order_agree = 0;  // the decision list read strictly in printed order
};

struct CrosscheckSummary {
    std::uint64_t seed = 0;
    int per_type = 0;
    std::array<CrosscheckTally, 9> tally{};  // indexed like all_web_types
    std::vector<CrosscheckFinding> findings;
    int total() const;
    int roots_recovered() const;
    int invariants_agree() const;
};

// per_type random group elements applied to representatives of each of the nine types.
CrosscheckSummary crosscheck(std::uint64_t seed, int per_type);

}  // namespace cktweb
