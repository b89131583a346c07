#pragma once

#include <cctype>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"

namespace ringtower {

/// Recursive-descent evaluator for ring expressions.
///
/// Grammar (whitespace anywhere):
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/') unary)*
///   unary  := ('-' | '+') unary | power
///   power  := atom ('^' digits)?
///   atom   := digits | identifier | '(' expr ')'
///
/// `Ops` supplies the ring: from_integer(mpz_class), lookup(name) -> optional<E>,
/// and exact division div(a, b).
template <class E>
struct ExprOps {
    std::function<E(const mpz_class&)> from_integer;
    std::function<std::optional<E>(std::string_view)> lookup;
    std::function<E(const E&, const E&)> div;
    std::function<E(const E&, unsigned long)> pow;
};

template <class E>
class ExprParser {
public:
    ExprParser(std::string_view src, const ExprOps<E>& ops) : s_(src), ops_(ops) {}

    E parse() {
        E v = expr();
        skip();
        if (i_ != s_.size()) fail("trailing characters");
        return v;
    }

private:
    std::string_view s_;
    std::size_t i_ = 0;
    const ExprOps<E>& ops_;

    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError(why + " at offset " + std::to_string(i_) + " in '" + std::string(s_) + "'");
    }

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    E expr() {
        E acc = term();
        for (;;) {
            if (eat('+')) acc = acc + term();
            else if (eat('-')) acc = acc - term();
            else return acc;
        }
    }

    E term() {
        E acc = unary();
        for (;;) {
            if (eat('*')) acc = acc * unary();
            else if (eat('/')) acc = ops_.div(acc, unary());
            else return acc;
        }
    }

    E unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    E power() {
        E base = atom();
        if (eat('^')) {
            skip();
            std::size_t st = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            if (st == i_) fail("expected exponent");
            return ops_.pow(base, std::stoul(std::string(s_.substr(st, i_ - st))));
        }
        return base;
    }

    E atom() {
        skip();
        if (i_ >= s_.size()) fail("unexpected end of input");
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            E v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t st = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            return ops_.from_integer(mpz_class(std::string(s_.substr(st, i_ - st))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t st = i_;
            while (i_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
                ++i_;
            auto name = s_.substr(st, i_ - st);
            auto v = ops_.lookup ? ops_.lookup(name) : std::nullopt;
            if (!v) fail("unknown identifier '" + std::string(name) + "'");
            return *v;
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

template <class E>
E parse_expression(std::string_view src, const ExprOps<E>& ops) {
    return ExprParser<E>(src, ops).parse();
}

/// Render "c*m" for a coefficient string c and monomial string m (m may be
/// empty). Unit coefficients are elided; sums are parenthesised.
inline std::string format_term(const std::string& c, const std::string& m) {
    if (m.empty()) return c;
    if (c == "1") return m;
    if (c == "-1") return "-" + m;
    if (c.find(' ') != std::string::npos) return "(" + c + ")*" + m;
    return c + "*" + m;
}

/// Join terms with " + "; the empty sum prints as "0".
inline std::string join_terms(const std::vector<std::string>& terms) {
    if (terms.empty()) return "0";
    std::string out = terms[0];
    for (std::size_t i = 1; i < terms.size(); ++i) out += " + " + terms[i];
    return out;
}

} // namespace ringtower
