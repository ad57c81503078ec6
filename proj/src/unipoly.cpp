#include "cktweb/unipoly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cktweb/errors.hpp"

namespace cktweb {

UniPoly::UniPoly(std::vector<Rational> low_first) : c_(std::move(low_first)) { trim(); }

UniPoly UniPoly::monomial(const Rational& c, int degree) {
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& UniPoly::leading() const {
    if (c_.empty()) throw DomainError("zero polynomial has no leading coefficient");
    return c_.back();
}

Rational UniPoly::evaluate(const Rational& z) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

double UniPoly::evaluate(double z) const {
    double acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + it->get_d();
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
    if (c_.empty()) return {};
    return (Rational(1) / c_.back()) * *this;
}

UniPoly UniPoly::reversed(int as_degree) const {
    if (as_degree < degree()) throw DomainError("reversal degree below polynomial degree");
    std::vector<Rational> v(static_cast<std::size_t>(as_degree) + 1);
    for (int i = 0; i <= degree(); ++i) v[as_degree - i] = c_[i];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-() const {
    UniPoly out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) { return *this += -o; }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(v));
}

UniPoly operator*(const Rational& c, const UniPoly& a) {
    std::vector<Rational> v = a.c_;
    for (auto& x : v) x *= c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::pow(int e) const {
    UniPoly r{Rational(1)};
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

std::string UniPoly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rational c = c_[i];
        if (c == 0) continue;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        c = abs(c);
        if (c != 1 || i == 0) os << c.get_str() << (i ? "*" : "");
        if (i) os << var << (i > 1 ? "^" + std::to_string(i) : "");
    }
    return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw DomainError("division by the zero polynomial");
    std::vector<Rational> r = a.coefficients();
    int db = b.degree();
    if (a.degree() < db) return {UniPoly{}, a};
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db) + 1);
    Rational inv = Rational(1) / b.leading();
    for (int i = a.degree(); i >= db; --i) {
        if (r[i] == 0) continue;
        Rational f = r[i] * inv;
        q[i - db] = f;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b[j];
    }
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly poly_gcd(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() && q.is_zero()) throw DomainError("gcd of two zero polynomials");
    UniPoly a = p, b = q;
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).second;
        a = std::move(b);
        b = r.monic();  // keep coefficient growth in check
    }
    return a.monic();
}

std::vector<SquarefreeFactor> squarefree_decomposition(const UniPoly& p) {
    if (p.is_zero()) throw DomainError("square-free decomposition of the zero polynomial");
    std::vector<SquarefreeFactor> out;
    if (p.degree() == 0) return out;
    UniPoly f = p.monic(), d = f.derivative();
    UniPoly a = poly_gcd(f, d);
    UniPoly b = divmod(f, a).first;
    UniPoly c = divmod(d, a).first;
    UniPoly e = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        UniPoly g = e.is_zero() ? b.monic() : poly_gcd(b, e);
        if (g.degree() > 0) out.push_back({g, i});
        b = divmod(b, g).first;
        c = divmod(e, g).first;
        e = c - b.derivative();
    }
    return out;
}

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
    std::vector<UniPoly> seq;
    if (p.is_zero()) return seq;
    seq.push_back(p);
    seq.push_back(p.derivative());
    while (!seq.back().is_zero()) {
        UniPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
        // Positive rescaling keeps signs; normalise to keep numbers small.
        if (!r.is_zero()) r = (Rational(1) / abs(r.leading())) * r;
        seq.push_back(-r);
    }
    seq.pop_back();
    return seq;
}

namespace {

UniPoly squarefree_part(const UniPoly& p) {
    if (p.degree() <= 0) return p;
    return divmod(p, poly_gcd(p, p.derivative())).first;
}

int changes(const std::vector<int>& signs) {
    int n = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++n;
        last = s;
    }
    return n;
}

int changes_at(const std::vector<UniPoly>& seq, const Rational& x) {
    std::vector<int> s;
    for (const auto& p : seq) s.push_back(p.sign_at(x));
    return changes(s);
}

int changes_at_infinity(const std::vector<UniPoly>& seq, bool positive) {
    std::vector<int> s;
    for (const auto& p : seq) {
        int sg = sgn(p.leading());
        if (!positive && p.degree() % 2 == 1) sg = -sg;
        s.push_back(sg);
    }
    return changes(s);
}

}  // namespace

int real_root_count(const UniPoly& p) {
    if (p.is_zero()) throw DomainError("root count of the zero polynomial");
    auto seq = sturm_sequence(squarefree_part(p));
    return changes_at_infinity(seq, false) - changes_at_infinity(seq, true);
}

int real_root_count(const UniPoly& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw DomainError("root count of the zero polynomial");
    auto seq = sturm_sequence(squarefree_part(p));
    return changes_at(seq, lo) - changes_at(seq, hi);
}

Rational root_bound(const UniPoly& p) {
    if (p.degree() <= 0) return 1;
    Rational m = 0;
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p[i] / p.leading())));
    return m + 1;  // Cauchy
}

// A rational root p/q of an integer polynomial has q dividing the leading coefficient L, and two such
// fractions are at least 1/L^2 apart; so each isolating interval narrower than that holds at most one
// candidate, the simplest fraction inside it.
std::vector<Rational> rational_roots(const UniPoly& p) {
    if (p.is_zero()) throw DomainError("rational roots of the zero polynomial");
    std::vector<Rational> roots;
    const UniPoly f = squarefree_part(p);
    if (f.degree() <= 0) return roots;
    Integer l = 1;
    for (const auto& x : f.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    Integer lead = abs(f.leading().get_num() * (l / f.leading().get_den()));
    const Rational width(1, lead * lead * 2);
    for (const auto& iv : isolate_real_roots(f, width)) {
        const Rational c = iv.lo == iv.hi ? iv.lo : simplest_between(iv.lo, iv.hi);
        if (c.get_den() <= lead && f.evaluate(c) == 0) roots.push_back(c);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<RootInterval> isolate_real_roots(const UniPoly& p, const Rational& width) {
    if (p.is_zero()) throw DomainError("root isolation of the zero polynomial");
    std::vector<RootInterval> out;
    UniPoly f = squarefree_part(p);
    if (f.degree() <= 0) return out;
    auto seq = sturm_sequence(f);
    auto count = [&](const Rational& lo, const Rational& hi) { return changes_at(seq, lo) - changes_at(seq, hi); };
    Rational b = root_bound(f);
    std::vector<RootInterval> work{{-b, b}};
    while (!work.empty()) {
        auto iv = work.back();
        work.pop_back();
        int n = count(iv.lo, iv.hi);
        if (n == 0) continue;
        if (n == 1 && iv.hi - iv.lo <= width) {
            out.push_back(iv);
            continue;
        }
        Rational mid = (iv.lo + iv.hi) / 2;
        if (n == 1 && f.evaluate(mid) == 0) {
            out.push_back({mid, mid});
            continue;
        }
        work.push_back({iv.lo, mid});
        work.push_back({mid, iv.hi});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b2) { return a.hi < b2.hi; });
    return out;
}

}  // namespace cktweb
