#include "cktweb/expr.hpp"

#include <cctype>

#include "cktweb/errors.hpp"

namespace cktweb {

namespace {

class Parser {
public:
    Parser(std::string_view s, const std::vector<std::string>& names) : s_(s), names_(names) {}

    RationalFunction parse() {
        auto v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("expression: " + what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(std::string_view tok) {
        skip();
        if (s_.substr(pos_, tok.size()) == tok) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    RationalFunction expr() {
        auto v = term();
        for (;;) {
            if (eat("+")) v += term();
            else if (eat("-")) v -= term();
            else return v;
        }
    }

    RationalFunction term() {
        auto v = unary();
        for (;;) {
            skip();
            if (s_.substr(pos_, 2) == "**") return v;  // handled in power()
            if (eat("*")) v *= unary();
            else if (eat("/")) {
                auto d = unary();
                if (d.is_zero()) fail("division by zero");
                v /= d;
            } else return v;
        }
    }

    RationalFunction unary() {
        if (eat("-")) return -unary();
        if (eat("+")) return unary();
        return power();
    }

    RationalFunction power() {
        auto base = atom();
        if (eat("**") || eat("^")) {
            bool neg = eat("-");
            skip();
            auto n = integer();
            if (n > 64) fail("exponent too large");
            int e = static_cast<int>(n.get_si());
            if (neg && base.is_zero()) fail("zero to a negative power");
            return base.pow(neg ? -e : e);
        }
        return base;
    }

    Integer integer() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == 'e' || s_[pos_] == 'E'))
            fail("decimal literals are not accepted; use p/q");
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }

    RationalFunction atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            auto v = expr();
            if (!eat(")")) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return MultiPoly(Rational(integer()));
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            for (std::size_t i = 0; i < names_.size(); ++i)
                if (names_[i] == name) return MultiPoly::var(static_cast<int>(i));
            pos_ = start;
            fail("unknown name '" + name + "'");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    const std::vector<std::string>& names_;
    std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_expression(std::string_view text, const std::vector<std::string>& names) {
    if (names.size() > static_cast<std::size_t>(MultiPoly::kVars)) throw DomainError("too many variable names");
    return Parser(text, names).parse();
}

Rational parse_constant(std::string_view text, const std::vector<std::string>& names, const std::vector<Rational>& values) {
    auto f = parse_expression(text, names);
    return f.evaluate(values);
}

}  // namespace cktweb
