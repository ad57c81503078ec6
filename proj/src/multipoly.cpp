#include "cktweb/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "cktweb/errors.hpp"

namespace cktweb {

namespace {

using Monomial = MultiPoly::Monomial;
using Term = MultiPoly::Term;

std::array<int, MultiPoly::kVars> max_exponents(const std::vector<Term>& terms) {
    std::array<int, MultiPoly::kVars> out{};
    for (const auto& t : terms)
        for (int i = 0; i < MultiPoly::kVars; ++i) out[i] = std::max(out[i], MultiPoly::exponent(t.mono, i));
    return out;
}

void check_product_exponents(const std::vector<Term>& a, const std::vector<Term>& b) {
    auto ea = max_exponents(a), eb = max_exponents(b);
    for (int i = 0; i < MultiPoly::kVars; ++i)
        if (ea[i] + eb[i] > MultiPoly::kMaxExponent)
            throw DomainError("polynomial exponent overflow in variable " + std::to_string(i));
}

Monomial unit(int index) { return Monomial{1} << (8 * (MultiPoly::kVars - 1 - index)); }

}  // namespace

MultiPoly::MultiPoly(const Rational& c) {
    if (c != 0) terms_.push_back({0, c});
}

MultiPoly MultiPoly::var(int index) {
    if (index < 0 || index >= kVars) throw DomainError("variable index out of range");
    return MultiPoly(std::vector<Term>{{unit(index), Rational(1)}});
}

MultiPoly MultiPoly::term(const Rational& c, std::initializer_list<int> exponents) {
    if (c == 0) return {};
    return MultiPoly(std::vector<Term>{{pack(exponents), c}});
}

MultiPoly::Monomial MultiPoly::pack(std::initializer_list<int> exponents) {
    return pack(std::span<const int>(exponents.begin(), exponents.size()));
}

MultiPoly::Monomial MultiPoly::pack(std::span<const int> exponents) {
    if (exponents.size() > static_cast<std::size_t>(kVars)) throw DomainError("too many exponents");
    Monomial m = 0;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] < 0 || exponents[i] > kMaxExponent) throw DomainError("exponent out of range");
        m += static_cast<Monomial>(exponents[i]) * unit(static_cast<int>(i));
    }
    return m;
}

int MultiPoly::total_degree(Monomial m) {
    int d = 0;
    for (int i = 0; i < kVars; ++i) d += exponent(m, i);
    return d;
}

bool MultiPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono == 0); }

int MultiPoly::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, total_degree(t.mono));
    return d;
}

int MultiPoly::degree_in(int index) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, exponent(t.mono, index));
    return d;
}

Rational MultiPoly::coefficient(Monomial m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, Monomial key) { return t.mono > key; });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return 0;
}

MultiPoly MultiPoly::derivative(int index) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    Monomial u = unit(index);
    for (const auto& t : terms_) {
        int e = exponent(t.mono, index);
        if (e == 0) continue;
        out.push_back({t.mono - u, t.coeff * e});
    }
    // Lowering one exponent keeps strict order among terms that all contain the variable.
    return MultiPoly(std::move(out));
}

MultiPoly MultiPoly::coefficient_of(int index, int power) const {
    std::vector<Term> out;
    Monomial shift = static_cast<Monomial>(power) * unit(index);
    for (const auto& t : terms_)
        if (exponent(t.mono, index) == power) out.push_back({t.mono - shift, t.coeff});
    return MultiPoly(std::move(out));
}

MultiPoly MultiPoly::substitute(int index, const MultiPoly& value) const {
    int d = degree_in(index);
    if (d <= 0) return *this;
    // Split by power of the variable, then Horner.
    std::vector<std::vector<Term>> parts(static_cast<std::size_t>(d) + 1);
    for (const auto& t : terms_) {
        int e = exponent(t.mono, index);
        parts[static_cast<std::size_t>(e)].push_back({t.mono - static_cast<Monomial>(e) * unit(index), t.coeff});
    }
    MultiPoly acc;
    for (int e = d; e >= 0; --e) {
        auto& p = parts[static_cast<std::size_t>(e)];
        std::sort(p.begin(), p.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
        acc = acc * value + MultiPoly(std::move(p));
    }
    return acc;
}

MultiPoly MultiPoly::substitute(int index, const Rational& value) const { return substitute(index, MultiPoly(value)); }

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
    auto maxe = max_exponents(terms_);
    std::array<std::vector<Rational>, kVars> powers;
    for (int i = 0; i < kVars; ++i) {
        if (maxe[i] == 0) continue;
        if (static_cast<std::size_t>(i) >= point.size()) throw DomainError("evaluation point lacks a variable");
        auto& pw = powers[i];
        pw.resize(static_cast<std::size_t>(maxe[i]) + 1);
        pw[0] = 1;
        for (int e = 1; e <= maxe[i]; ++e) pw[e] = pw[e - 1] * point[i];
    }
    Rational sum = 0, prod;
    for (const auto& t : terms_) {
        prod = t.coeff;
        for (int i = 0; i < kVars; ++i) {
            int e = exponent(t.mono, i);
            if (e) prod *= powers[i][e];
        }
        sum += prod;
    }
    return sum;
}

double MultiPoly::evaluate(std::span<const double> point) const {
    double sum = 0;
    for (const auto& t : terms_) {
        double prod = t.coeff.get_d();
        for (int i = 0; i < kVars; ++i) {
            int e = exponent(t.mono, i);
            if (!e) continue;
            if (static_cast<std::size_t>(i) >= point.size()) throw DomainError("evaluation point lacks a variable");
            for (int k = 0; k < e; ++k) prod *= point[i];
        }
        sum += prod;
    }
    return sum;
}

Integer MultiPoly::denominator_lcm() const {
    Integer l = 1;
    for (const auto& t : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
    return l;
}

Rational MultiPoly::content() const {
    if (terms_.empty()) return 0;
    Integer l = denominator_lcm(), g = 0;
    for (const auto& t : terms_) {
        Integer n = t.coeff.get_num() * (l / t.coeff.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    return ratio(g, l);
}

MultiPoly MultiPoly::primitive_part() const {
    if (terms_.empty()) return {};
    Rational c = content();
    if (terms_.front().coeff < 0) c = -c;
    MultiPoly out = *this;
    out *= Rational(1) / c;
    return out;
}

const Rational& MultiPoly::leading_coefficient() const {
    if (terms_.empty()) throw DomainError("zero polynomial has no leading coefficient");
    return terms_.front().coeff;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (o.terms_.empty()) return *this;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() || j != o.terms_.end()) {
        if (j == o.terms_.end() || (i != terms_.end() && i->mono > j->mono)) {
            out.push_back(std::move(*i++));
        } else if (i == terms_.end() || j->mono > i->mono) {
            out.push_back(*j++);
        } else {
            Rational s = i->coeff + j->coeff;
            if (s != 0) out.push_back({i->mono, std::move(s)});
            ++i, ++j;
        }
    }
    terms_ = std::move(out);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    check_product_exponents(a.terms_, b.terms_);
    if (b.terms_.size() == 1 || a.terms_.size() == 1) {
        const auto& single = a.terms_.size() == 1 ? a.terms_[0] : b.terms_[0];
        const auto& many = a.terms_.size() == 1 ? b : a;
        std::vector<Term> out;
        out.reserve(many.terms_.size());
        for (const auto& t : many.terms_) out.push_back({t.mono + single.mono, t.coeff * single.coeff});
        return MultiPoly(std::move(out));
    }
    // Clear denominators so the inner loop is integer multiply-add (no gcds).
    Integer da = a.denominator_lcm(), db = b.denominator_lcm();
    auto scaled = [](const std::vector<Term>& ts, const Integer& d) {
        std::vector<Integer> out;
        out.reserve(ts.size());
        for (const auto& t : ts) out.push_back(t.coeff.get_num() * (d / t.coeff.get_den()));
        return out;
    };
    auto ia = scaled(a.terms_, da), ib = scaled(b.terms_, db);
    std::unordered_map<Monomial, std::size_t> slot;
    slot.reserve(a.terms_.size() * b.terms_.size());
    std::vector<std::pair<Monomial, Integer>> acc;
    for (std::size_t i = 0; i < ia.size(); ++i) {
        for (std::size_t j = 0; j < ib.size(); ++j) {
            Monomial m = a.terms_[i].mono + b.terms_[j].mono;
            auto [it, fresh] = slot.try_emplace(m, acc.size());
            if (fresh) acc.emplace_back(m, Integer(0));
            mpz_addmul(acc[it->second].second.get_mpz_t(), ia[i].get_mpz_t(), ib[j].get_mpz_t());
        }
    }
    std::sort(acc.begin(), acc.end(), [](const auto& l, const auto& r) { return l.first > r.first; });
    Integer dd = da * db;
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, n] : acc) {
        if (n == 0) continue;
        Rational c(n, dd);
        c.canonicalize();
        out.push_back({m, std::move(c)});
    }
    return MultiPoly(std::move(out));
}

MultiPoly MultiPoly::pow(int exponent) const {
    if (exponent < 0) throw DomainError("negative polynomial power");
    MultiPoly result(1), base = *this;
    while (exponent) {
        if (exponent & 1) result *= base;
        exponent >>= 1;
        if (exponent) base *= base;
    }
    return result;
}

std::span<const std::string> MultiPoly::default_names() {
    static const std::array<std::string, kVars> names{"x", "y", "z", "t3", "t4", "t5", "t6", "t7"};
    return names;
}

std::string MultiPoly::to_string(std::span<const std::string> names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        c = abs(c);
        bool wrote = false;
        if (c != 1 || t.mono == 0) {
            os << c.get_str();
            wrote = true;
        }
        for (int i = 0; i < kVars; ++i) {
            int e = exponent(t.mono, i);
            if (!e) continue;
            if (wrote) os << "*";
            os << (static_cast<std::size_t>(i) < names.size() ? names[i] : "v" + std::to_string(i));
            if (e > 1) os << "^" << e;
            wrote = true;
        }
    }
    return os.str();
}

}  // namespace cktweb
