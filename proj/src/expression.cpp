#include "qalg/expression.hpp"

#include <cctype>
#include <string>

#include "qalg/errors.hpp"

namespace qalg {

namespace {

// expr   := term (('+'|'-') term)*
// term   := unary (('*'|'/') unary)*
// unary  := ('+'|'-') unary | power
// power  := atom ('^' integer)?
// atom   := integer | name | '(' expr ')'
class Parser {
public:
    Parser(std::string_view text, const Bindings& bindings) : text_(text), bindings_(bindings) {}

    ParamPoly parse() {
        ParamPoly v = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("expression '" + std::string(text_) + "': " + why);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    ParamPoly expr() {
        ParamPoly v = term();
        for (;;) {
            if (accept('+')) v += term();
            else if (accept('-')) v -= term();
            else return v;
        }
    }

    ParamPoly term() {
        ParamPoly v = unary();
        for (;;) {
            if (accept('*')) {
                v *= unary();
            } else if (accept('/')) {
                ParamPoly d = unary();
                if (!d.is_constant()) fail("division by a non-constant expression");
                Rational q = d.constant_value();
                if (q == 0) throw DomainError("expression '" + std::string(text_) + "': division by zero");
                v *= Rational(1 / q);
            } else {
                return v;
            }
        }
    }

    ParamPoly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    ParamPoly power() {
        ParamPoly base = atom();
        if (accept('^')) {
            skip_space();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("exponent must be a nonnegative integer");
            return base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
        }
        return base;
    }

    ParamPoly atom() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            ParamPoly v = expr();
            if (!accept(')')) fail("missing ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return ParamPoly(Rational(mpz_class(std::string(text_.substr(start, pos_ - start)), 10)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            std::string_view name = text_.substr(start, pos_ - start);
            auto p = param_from_name(name);
            if (!p) fail("unknown parameter '" + std::string(name) + "'");
            if (auto it = bindings_.find(*p); it != bindings_.end()) return ParamPoly(it->second);
            return ParamPoly::variable(*p);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    const Bindings& bindings_;
    std::size_t pos_ = 0;
};

}  // namespace

ParamPoly parse_expression(std::string_view text, const Bindings& bindings) {
    return Parser(text, bindings).parse();
}

}  // namespace qalg
