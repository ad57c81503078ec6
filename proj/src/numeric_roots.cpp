#include "cktweb/numeric_roots.hpp"

#include <algorithm>
#include <cmath>

#include "cktweb/errors.hpp"

namespace cktweb {

namespace {

long double to_ld(const Rational& q) {
    // mpq get_d loses range for huge numerators; go through the ratio of doubles scaled by exponents.
    long exp_n = 0, exp_d = 0;
    double n = mpz_get_d_2exp(&exp_n, q.get_num_mpz_t());
    double d = mpz_get_d_2exp(&exp_d, q.get_den_mpz_t());
    return std::ldexp(static_cast<long double>(n) / d, static_cast<int>(exp_n - exp_d));
}

Complex horner(const std::vector<Complex>& c, Complex z) {
    Complex r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * z + *it;
    return r;
}

}  // namespace

std::vector<Complex> complex_roots(const UniPoly& p) {
    if (p.is_zero()) throw DomainError("roots of the zero polynomial");
    const int n = p.degree();
    if (n == 0) return {};
    std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
    const long double lead = to_ld(p.leading());
    for (int i = 0; i <= n; ++i) c[i] = to_ld(p[i]) / lead;
    if (n == 1) return {-c[0]};

    std::vector<Complex> dc(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) dc[i - 1] = c[i] * static_cast<long double>(i);

    long double bound = 0;
    for (int i = 0; i < n; ++i) bound = std::max(bound, std::abs(c[i]));
    bound = 1 + bound;
    std::vector<Complex> z(static_cast<std::size_t>(n));
    const Complex seed(0.4L, 0.9L);
    for (int i = 0; i < n; ++i) z[i] = std::pow(seed, static_cast<long double>(i)) * (bound / 2);

    for (int iter = 0; iter < 2000; ++iter) {
        long double change = 0;
        for (int i = 0; i < n; ++i) {
            Complex den = 1;
            for (int j = 0; j < n; ++j)
                if (j != i) den *= z[i] - z[j];
            if (den == Complex(0)) den = Complex(1e-30L, 0);
            Complex step = horner(c, z[i]) / den;
            z[i] -= step;
            change = std::max(change, std::abs(step) / std::max<long double>(1, std::abs(z[i])));
        }
        if (change < 1e-19L) break;
    }
    for (auto& r : z) {
        for (int k = 0; k < 5; ++k) {
            Complex d = horner(dc, r);
            if (d == Complex(0)) break;
            Complex step = horner(c, r) / d;
            r -= step;
            if (std::abs(step) <= 1e-19L * std::max<long double>(1, std::abs(r))) break;
        }
    }
    return z;
}

}  // namespace cktweb
