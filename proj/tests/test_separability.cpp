#include <doctest.h>

#include "cktweb/expr.hpp"
#include "cktweb/linalg.hpp"
#include "cktweb/sampling.hpp"
#include "cktweb/separability.hpp"

using namespace cktweb;

namespace {

const MultiPoly x = MultiPoly::x(), y = MultiPoly::y(), z = MultiPoly::z();
const char* const toroidal_potential = "-4/((x^2+y^2+z^2-1)^2+4*z^2)";

Potential potential(const std::string& v, Rational e) { return {parse_expression(v), e}; }

RotParams unit(int i) {
    std::array<Rational, 6> a{};
    a[static_cast<std::size_t>(i)] = 1;
    return RotParams::from_array(a);
}

// Dimension of span(a) and whether span(a) == span(b).
std::size_t span_rank(const std::vector<RotParams>& v) {
    RationalMatrix m(0, 6);
    for (const auto& p : v) {
        const auto a = p.as_array();
        m.append_row(RationalVector(a.begin(), a.end()));
    }
    return rank(m);
}

bool same_span(const std::vector<RotParams>& a, const std::vector<RotParams>& b) {
    std::vector<RotParams> both = a;
    both.insert(both.end(), b.begin(), b.end());
    return span_rank(a) == a.size() && span_rank(b) == b.size() && span_rank(both) == a.size() && a.size() == b.size();
}

}  // namespace

TEST_CASE("compatibility one-form") {
    const RotParams p{1, 2, 3, 4, 5, 6};
    const auto k = verify_ckt(assemble_rotational(p));
    REQUIRE(k.holds);
    const OneForm w = compatibility_form(p, potential("0", 1));
    for (int i = 0; i < 3; ++i) CHECK(w[static_cast<std::size_t>(i)] == RationalFunction(MultiPoly(-2) * k.k[i]));

    const OneForm r = compatibility_form(unit(3), potential("x^2+y^2", 5));
    for (const auto& c : r) CHECK(c.is_zero());
}

TEST_CASE("closedness") {
    CHECK(is_closed({RationalFunction(2 * x), RationalFunction(2 * y), RationalFunction(2 * z)}));
    CHECK_FALSE(is_closed({RationalFunction(-y), RationalFunction(x), RationalFunction(0)}));
    const RationalFunction r2 = x * x + y * y + z * z;
    CHECK(is_closed({RationalFunction(x) / r2, RationalFunction(y) / r2, RationalFunction(z) / r2}));
}

TEST_CASE("the worked potential selects the toroidal family") {
    const Potential pot = potential(toroidal_potential, 0);
    const ParamSolution s = solve_compatible(pot);
    CHECK(s.particular == RotParams{});
    REQUIRE(s.dimension() == 2);
    for (const auto& b : s.basis) {
        CHECK(b.M33 == b.H / 2);
        CHECK(b.A33 == b.H / 2);
        CHECK(b.L3 == 0);
        CHECK(b.D3 == 0);
        CHECK(is_closed(compatibility_form(b, pot)));
    }
    CHECK(same_span(s.basis, {unit(3), RotParams{Rational(1, 2), 0, 1, 0, 0, Rational(1, 2)}}));
    CHECK(is_closed(compatibility_form(s.member({3, -7}), pot)));

    const auto cls = classify_potential(pot);
    REQUIRE(cls.type);
    CHECK(*cls.type == WebType::Toroidal);
    REQUIRE(cls.quartic);
    CHECK(classify_by_roots(*cls.quartic) == WebType::Toroidal);
}

TEST_CASE("free and constant potentials") {
    // Without a potential the condition is the closedness of k: the Killing-representable members.
    const ParamSolution free = solve_compatible(potential("0", 1));
    CHECK(same_span(free.basis, {unit(2), unit(3), unit(4), unit(5)}));
    for (const auto& b : free.basis) CHECK(is_killing_representable(assemble_rotational(b)));
    CHECK_FALSE(is_killing_representable(assemble_rotational(unit(0))));
    CHECK_FALSE(is_killing_representable(assemble_rotational(unit(1))));

    CHECK(same_span(solve_compatible(potential("3", 1)).basis, free.basis));
    CHECK(solve_compatible(potential("0", 0)).dimension() == 6);

    const auto cls = classify_potential(potential("0", 0));
    CHECK_FALSE(cls.type);
    CHECK(cls.diagnostics.find("underdetermined") != std::string::npos);
}

TEST_CASE("harmonic potential") {
    const Potential pot = potential("x^2+y^2+z^2", 0);
    const ParamSolution s = solve_compatible(pot);
    CHECK(same_span(s.basis, {unit(2), unit(3), unit(5)}));
    for (const auto& b : s.basis) CHECK(is_closed(compatibility_form(b, pot)));
}

TEST_CASE("solution space ignores how the potential is written") {
    const RationalFunction v = parse_expression(toroidal_potential);
    const MultiPoly f = x * x + 2 * z + 1;
    const Potential rewritten{RationalFunction(v.numerator() * f, v.denominator() * f), 0};
    CHECK(same_span(solve_compatible(rewritten).basis, solve_compatible({v, 0}).basis));
}

TEST_CASE("Killing case") {
    CHECK(dkdv_check(assemble_rotational(unit(3)), parse_expression("x^2+y^2")));
    CHECK(dkdv_check(SymTensorField::metric(), parse_expression("x*y^3 - 1/(1+z^2)")));
    CHECK_THROWS_AS(dkdv_check(assemble_rotational(unit(0)), parse_expression("x")), ValidationError);

    // No Killing-representable member beyond R3.R3 is compatible with the worked potential.
    const RationalFunction v = parse_expression(toroidal_potential);
    Rng rng(61);
    for (int t = 0; t < 30; ++t) {
        RotParams p{0, 0, random_rational(rng), random_rational(rng), random_rational(rng), random_rational(rng)};
        if (p.H == 0 && p.D3 == 0 && p.A33 == 0) p.H = 1;
        REQUIRE_FALSE(dkdv_check(assemble_rotational(p), v));
    }
}

TEST_CASE("for Killing-representable tensors the two conditions coincide") {
    Rng rng(62);
    const std::vector<std::string> potentials{"x^2+y^2", toroidal_potential, "x*z", "1/(1+z^2)", "z^3 + x^2*z", "1/(x^2+y^2+z^2)"};
    for (const auto& text : potentials)
        for (int t = 0; t < 6; ++t) {
            RotParams p{0, 0, random_rational(rng), random_rational(rng), random_rational(rng), random_rational(rng)};
            if (t == 0) p = unit(3);
            const Potential pot{parse_expression(text), random_rational(rng)};
            CAPTURE(text);
            REQUIRE(is_closed(compatibility_form(p, pot)) == dkdv_check(assemble_rotational(p), pot.V));
        }
}
