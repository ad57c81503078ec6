#include <doctest.h>

#include <random>

#include "cktweb/errors.hpp"
#include "cktweb/expr.hpp"
#include "cktweb/linalg.hpp"
#include "cktweb/multipoly.hpp"
#include "cktweb/ratfunc.hpp"
#include "cktweb/unipoly.hpp"
#include "oracles.hpp"

using namespace cktweb;

namespace {

UniPoly z_pow(int n) { return UniPoly::monomial(1, n); }

UniPoly random_poly(std::mt19937_64& rng, int degree, int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    std::vector<Rational> c;
    for (int i = 0; i <= degree; ++i) c.emplace_back(d(rng));
    if (c.back() == 0) c.back() = 1;
    return UniPoly(c);
}

bool divides(const UniPoly& d, const UniPoly& p) { return divmod(p, d).second.is_zero(); }

}  // namespace

TEST_CASE("rationals are canonical and round-trip through text") {
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK_THROWS_AS(parse_rational("6/-4"), ParseError);
    CHECK(to_string(parse_rational("-10/4")) == "-5/2");
    CHECK(to_string(Rational(7)) == "7");
    CHECK(parse_rational(" +3 ") == 3);
    CHECK_THROWS_AS(parse_rational("0.5"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
}

TEST_CASE("simplest fraction in an interval") {
    CHECK(simplest_between(Rational(3, 10), Rational(2, 5)) == Rational(1, 3));
    CHECK(simplest_between(Rational(-7, 4), Rational(-5, 4)) == Rational(-3, 2));
    CHECK(simplest_between(Rational(5, 2), Rational(5, 2)) == Rational(5, 2));
}

TEST_CASE("gcd") {
    CHECK(poly_gcd({-1, 0, 1}, {-1, 1}) == UniPoly{-1, 1});
    CHECK(poly_gcd({1, 0, 2, 0, 1}, {0, 4, 0, 4}) == UniPoly{1, 0, 1});
    CHECK(poly_gcd(z_pow(3), z_pow(2)) == z_pow(2));
    CHECK_THROWS_AS(poly_gcd(UniPoly{}, UniPoly{}), DomainError);

    std::mt19937_64 rng(11);
    for (int t = 0; t < 300; ++t) {
        const UniPoly common = random_poly(rng, 1 + t % 2, 5);
        const UniPoly p = common * random_poly(rng, t % 4, 6), q = common * random_poly(rng, (t / 4) % 4, 6);
        const UniPoly g = poly_gcd(p, q);
        REQUIRE(divides(g, p));
        REQUIRE(divides(g, q));
        REQUIRE(divides(common.monic(), g));
        REQUIRE(g.degree() <= std::min(p.degree(), q.degree()));
    }
}

TEST_CASE("square-free decomposition") {
    auto sf = squarefree_decomposition({1, 0, 2, 0, 1});
    REQUIRE(sf.size() == 1);
    CHECK(sf[0].factor == UniPoly{1, 0, 1});
    CHECK(sf[0].multiplicity == 2);

    sf = squarefree_decomposition({0, 0, 0, -1, 1});  // z^3 (z - 1)
    REQUIRE(sf.size() == 2);
    CHECK(sf[0].factor == UniPoly{-1, 1});
    CHECK(sf[0].multiplicity == 1);
    CHECK(sf[1].factor == z_pow(1));
    CHECK(sf[1].multiplicity == 3);

    sf = squarefree_decomposition({0, 0, 1, 2, 1});  // z^2 (z + 1)^2
    REQUIRE(sf.size() == 1);
    CHECK(sf[0].factor == UniPoly{0, 1, 1});
    CHECK(sf[0].multiplicity == 2);

    CHECK_THROWS_AS(squarefree_decomposition(UniPoly{}), DomainError);
}

TEST_CASE("square-free decomposition reassembles random products") {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<int> count(1, 4), mult(1, 3);
    for (int t = 0; t < 1000; ++t) {
        UniPoly p{Rational(1 + t % 3, 1 + t % 2)};
        const int n = count(rng);
        for (int i = 0; i < n; ++i) p = p * random_poly(rng, 1 + i % 2, 4).pow(mult(rng));
        const auto sf = squarefree_decomposition(p);
        UniPoly back{1};
        for (const auto& f : sf) {
            REQUIRE(f.factor.degree() >= 1);
            REQUIRE(poly_gcd(f.factor, f.factor.derivative()).degree() == 0);
            back = back * f.factor.pow(f.multiplicity);
        }
        for (std::size_t i = 0; i < sf.size(); ++i)
            for (std::size_t j = i + 1; j < sf.size(); ++j) REQUIRE(poly_gcd(sf[i].factor, sf[j].factor).degree() == 0);
        REQUIRE(back == p.monic());
    }
}

TEST_CASE("real root counting") {
    CHECK(real_root_count({-2, 0, 1}) == 2);
    CHECK(real_root_count({1, 0, 1}) == 0);
    CHECK(real_root_count({4, 0, -5, 0, 1}) == 4);
    CHECK(real_root_count({1, 2, 1}) == 1);  // non-square-free input counts distinct roots
    CHECK(real_root_count({4, 0, -5, 0, 1}, Rational(-2), Rational(1)) == 2);  // -1 and 1; -2 is outside (-2, 1]
    CHECK(real_root_count({4, 0, -5, 0, 1}, Rational(-3), Rational(-2)) == 1);
}

TEST_CASE("real root count agrees with the companion-matrix oracle") {
    std::mt19937_64 rng(13);
    int checked = 0;
    while (checked < 1000) {
        const UniPoly p = random_poly(rng, 4, 20);
        if (poly_gcd(p, p.derivative()).degree() > 0) continue;
        std::vector<double> c;
        for (const auto& x : p.coefficients()) c.push_back(to_double(x));
        REQUIRE(real_root_count(p) == oracle::real_root_count(c));
        ++checked;
    }
}

TEST_CASE("rational roots and isolation") {
    // (2z - 1)(3z + 2)(z^2 - 2)
    const UniPoly p = UniPoly{-1, 2} * UniPoly{2, 3} * UniPoly{-2, 0, 1};
    CHECK(rational_roots(p) == std::vector<Rational>{Rational(-2, 3), Rational(1, 2)});
    const auto iv = isolate_real_roots(p, Rational(1, 1000));
    REQUIRE(iv.size() == 4);
    for (const auto& r : iv) CHECK(r.hi - r.lo <= Rational(1, 1000));
    CHECK(iv[0].lo < -Rational(14142, 10000));
    CHECK(iv[0].hi > -Rational(14143, 10000));
    CHECK(rational_roots({1, 0, 1}).empty());
    CHECK(rational_roots(UniPoly{Rational(-9, 4), 0, 1}) == std::vector<Rational>{Rational(-3, 2), Rational(3, 2)});
}

TEST_CASE("multivariate polynomials") {
    const MultiPoly x = MultiPoly::x(), y = MultiPoly::y(), z = MultiPoly::z();
    const MultiPoly p = x * x * y + Rational(1, 2) * z - 3;
    CHECK(p.degree() == 3);
    CHECK(p.derivative(0) == 2 * x * y);
    CHECK(p.coefficient({2, 1, 0}) == 1);
    CHECK(p.substitute(1, Rational(2)) == 2 * x * x + Rational(1, 2) * z - 3);
    CHECK((x + y).pow(2) == x * x + 2 * x * y + y * y);
    CHECK((p - p).is_zero());
    const std::array<Rational, 3> pt{1, 2, 4};
    CHECK(p.evaluate(pt) == 1);
    CHECK((Rational(2, 3) * x + Rational(4, 9) * y).content() == Rational(2, 9));
}

TEST_CASE("rational functions") {
    const MultiPoly x = MultiPoly::x(), y = MultiPoly::y();
    const RationalFunction f(x, x + y), g(2 * x * x, 2 * x * x + 2 * x * y);
    CHECK(f == g);
    CHECK(f.derivative(0) == RationalFunction(y, (x + y).pow(2)));
    const std::array<Rational, 3> pole{1, -1, 0};
    CHECK_THROWS_AS(f.evaluate(pole), DomainError);
    CHECK_THROWS_AS(RationalFunction(x, MultiPoly()), DomainError);
}

TEST_CASE("expression parsing") {
    const MultiPoly x = MultiPoly::x(), y = MultiPoly::y(), z = MultiPoly::z();
    CHECK(parse_expression("x^2 + 2*x*y + y**2") == RationalFunction((x + y).pow(2)));
    CHECK(parse_expression("-4/((x^2+y^2+z^2-1)^2+4*z^2)") ==
          RationalFunction(MultiPoly(-4), (x * x + y * y + z * z - 1).pow(2) + 4 * z * z));
    CHECK(parse_expression("x^-1") == RationalFunction(1, x));
    CHECK(parse_constant("(4*k-(k-1)^2)/2", {"k"}, {Rational(1, 2)}) == Rational(7, 8));
    CHECK_THROWS_AS(parse_expression("x +"), ParseError);
    CHECK_THROWS_AS(parse_expression("0.5*x"), ParseError);
    CHECK_THROWS_AS(parse_expression("w"), ParseError);
    CHECK_THROWS_AS(parse_expression("1/(x-x)"), ParseError);
}

TEST_CASE("exact linear algebra") {
    RationalMatrix m(3, 3);
    const int entries[3][3] = {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m(i, j) = entries[i][j];
    CHECK(rank(m) == 2);
    const auto ker = kernel(m);
    REQUIRE(ker.size() == 1);
    for (const auto& v : m * ker[0]) CHECK(v == 0);
    CHECK_THROWS_AS(inverse(m), DomainError);

    RationalMatrix a(2, 2);
    a(0, 0) = 2;
    a(0, 1) = 1;
    a(1, 0) = 1;
    a(1, 1) = 2;
    CHECK(characteristic_polynomial(a) == UniPoly{3, -4, 1});
    CHECK(inverse(a) * a == RationalMatrix::identity(2));
    const auto s = solve(a, {3, 3});
    REQUIRE(s);
    CHECK(*s == RationalVector{1, 1});
    CHECK_FALSE(solve(m, {0, 1, 0}));
}
