#include "cktweb/sampling.hpp"

namespace cktweb {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::size_t type_index(WebType t) {
    for (std::size_t i = 0; i < 9; ++i)
        if (all_web_types[i] == t) return i;
    throw InternalError("unknown web type");
}

}  // namespace

Rational random_rational(Rng& rng, int num_bound, int den_bound) {
    return ratio(uniform(rng, -num_bound, num_bound), uniform(rng, 1, den_bound));
}

Rational random_nonzero_rational(Rng& rng, int num_bound, int den_bound) {
    for (;;) {
        Rational r = random_rational(rng, num_bound, den_bound);
        if (r != 0) return r;
    }
}

GroupElement random_group_element(Rng& rng, bool allow_discrete) {
    GroupElement g;
    g.a0 = random_rational(rng);
    g.a1 = random_rational(rng);
    g.a2 = random_nonzero_rational(rng);
    g.a3 = random_nonzero_rational(rng);
    g.a4 = random_rational(rng);
    g.discrete = allow_discrete && uniform(rng, 0, 1) == 1;
    return g;
}

RotParams random_params(Rng& rng, int bound) {
    std::array<Rational, 6> v;
    for (auto& x : v) x = uniform(rng, -bound, bound);
    return RotParams::from_array(v);
}

BinaryQuartic random_quartic(Rng& rng, int bound) {
    for (;;) {
        BinaryQuartic q{uniform(rng, -bound, bound), uniform(rng, -bound, bound), uniform(rng, -bound, bound),
                        uniform(rng, -bound, bound), uniform(rng, -bound, bound)};
        if (!q.is_zero()) return q;
    }
}

BinaryQuartic representative(WebType t, Rng& rng) {
    const Rational positive = ratio(uniform(rng, 1, 40), uniform(rng, 1, 8));
    switch (t) {
        case WebType::BiCyclide: return {1, 0, Rational(-2) - positive, 0, 1};
        case WebType::FlatRingCyclide: {
            Rational mu = Rational(-2) + positive;
            if (mu == 2) mu = 3;
            return {1, 0, mu, 0, 1};
        }
        case WebType::DiskCyclide: return {1, 0, random_rational(rng, 20, 6), 0, -1};
        case WebType::InverseProlateSpheroidal: return {1, 0, -1, 0, 0};
        case WebType::InverseOblateSpheroidal: return {1, 0, 1, 0, 0};
        case WebType::Toroidal: return {1, 0, 2, 0, 1};
        case WebType::Bispherical: return {1, 0, -2, 0, 1};
        case WebType::Cardioid: return {0, 1, 0, 0, 0};
        case WebType::TangentSphere: return {1, 0, 0, 0, 0};
    }
    throw InternalError("unknown web type");
}

int CrosscheckSummary::total() const {
    int n = 0;
    for (const auto& t : tally) n += t.generated;
    return n;
}

int CrosscheckSummary::roots_recovered() const {
    int n = 0;
    for (const auto& t : tally) n += t.roots_recovered;
    return n;
}

int CrosscheckSummary::invariants_agree() const {
    int n = 0;
    for (const auto& t : tally) n += t.invariants_agree;
    return n;
}

CrosscheckSummary crosscheck(std::uint64_t seed, int per_type) {
    CrosscheckSummary s;
    s.seed = seed;
    s.per_type = per_type;
    Rng rng(seed);
    for (WebType t : all_web_types) {
        auto& tally = s.tally[type_index(t)];
        for (int i = 0; i < per_type; ++i) {
            const BinaryQuartic base = representative(t, rng);
            const GroupElement g = random_group_element(rng);
            const BinaryQuartic q = apply(g, base);
            ++tally.generated;
            CrosscheckFinding f{t, q, g, std::nullopt, std::nullopt, {}, {}};
            f.by_roots = classify_by_roots(q);
            if (*f.by_roots == t) ++tally.roots_recovered;
            else f.message = "root structure gives " + to_string(*f.by_roots);
            try {
                const auto inv = classify_by_invariants(q);
                f.by_invariants = inv.type;
                f.audit = inv.audit;
                if (inv.type == *f.by_roots) ++tally.invariants_agree;
                else f.message += (f.message.empty() ? "" : "; ") + std::string("invariants give ") + to_string(inv.type);
                if (inv.strict_order_type == *f.by_roots) ++tally.strict_order_agree;
            } catch (const ClassificationError& e) {
                f.audit = e.audit;
                f.message += (f.message.empty() ? "" : "; ") + std::string(e.what());
            }
            if (!f.message.empty()) s.findings.push_back(std::move(f));
        }
    }
    return s;
}

}  // namespace cktweb
