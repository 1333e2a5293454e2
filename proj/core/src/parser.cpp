#include <cctype>
#include <sstream>

#include "painleq/ast.hpp"

namespace painleq {

ExprPtr Expr::constant(Rational v) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Constant;
    e->value = std::move(v);
    return e;
}

ExprPtr Expr::variable(std::size_t index) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Variable;
    e->var = index;
    return e;
}

ExprPtr Expr::binary(Kind k, ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
}

ExprPtr Expr::neg(ExprPtr a) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Neg;
    e->lhs = std::move(a);
    return e;
}

ExprPtr Expr::pow(ExprPtr a, long exp) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Pow;
    e->lhs = std::move(a);
    e->exponent = exp;
    return e;
}

namespace {

// expr   := term (('+'|'-') term)*
// term   := factor (('*'|'/') factor)*
// factor := base ('^' integer)?
// base   := number | identifier | '(' expr ')' | '-' base
class Parser {
public:
    Parser(const std::string& text, const VarSetPtr& vars) : text_(text), vars_(vars) {}

    ExprPtr run() {
        ExprPtr e = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    ExprPtr expr() {
        ExprPtr e = term();
        while (true) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                e = Expr::binary(Expr::Kind::Add, e, term());
            } else if (peek() == '-') {
                ++pos_;
                e = Expr::binary(Expr::Kind::Sub, e, term());
            } else {
                return e;
            }
        }
    }

    ExprPtr term() {
        ExprPtr e = factor();
        while (true) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                e = Expr::binary(Expr::Kind::Mul, e, factor());
            } else if (peek() == '/') {
                ++pos_;
                e = Expr::binary(Expr::Kind::Div, e, factor());
            } else {
                return e;
            }
        }
    }

    ExprPtr factor() {
        ExprPtr b = base();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            bool negexp = false;
            if (peek() == '-') {
                negexp = true;
                ++pos_;
            }
            if (!std::isdigit(peek())) fail("expected integer exponent");
            long e = 0;
            while (std::isdigit(peek())) {
                e = e * 10 + (text_[pos_] - '0');
                if (e > 1'000'000) fail("exponent too large");
                ++pos_;
            }
            return Expr::pow(b, negexp ? -e : e);
        }
        return b;
    }

    ExprPtr base() {
        skip_ws();
        char c = peek();
        if (c == '-') {
            ++pos_;
            return Expr::neg(base());
        }
        if (c == '(') {
            ++pos_;
            ExprPtr e = expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return e;
        }
        if (std::isdigit(c)) return number();
        if (std::isalpha(c)) return identifier();
        fail(c ? std::string("unexpected character '") + c + "'" : "unexpected end of input");
        return nullptr;  // unreachable
    }

    ExprPtr number() {
        std::size_t start = pos_;
        while (std::isdigit(peek())) ++pos_;
        return Expr::constant(rational_from_string(text_.substr(start, pos_ - start)));
    }

    ExprPtr identifier() {
        std::size_t start = pos_;
        while (std::isalnum(peek()) || peek() == '_') ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        auto idx = vars_->index(name);
        if (!idx) throw ParseError("undeclared identifier '" + name + "'", start);
        return Expr::variable(*idx);
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    const std::string& text_;
    const VarSetPtr& vars_;
    std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse(const std::string& text, const VarSetPtr& vars) { return Parser(text, vars).run(); }

RationalFunction to_rational(const ExprPtr& ast, const VarSetPtr& vars) {
    switch (ast->kind) {
        case Expr::Kind::Constant:
            return RationalFunction::constant(vars, ast->value);
        case Expr::Kind::Variable:
            return RationalFunction::variable(vars, ast->var);
        case Expr::Kind::Add:
            return to_rational(ast->lhs, vars) + to_rational(ast->rhs, vars);
        case Expr::Kind::Sub:
            return to_rational(ast->lhs, vars) - to_rational(ast->rhs, vars);
        case Expr::Kind::Mul:
            return to_rational(ast->lhs, vars) * to_rational(ast->rhs, vars);
        case Expr::Kind::Div: {
            RationalFunction d = to_rational(ast->rhs, vars);
            if (d.is_zero()) throw DivisionByZero("division by zero expression");
            return to_rational(ast->lhs, vars) / d;
        }
        case Expr::Kind::Neg:
            return -to_rational(ast->lhs, vars);
        case Expr::Kind::Pow:
            return to_rational(ast->lhs, vars).pow(ast->exponent);
    }
    throw Error("corrupt expression tree");
}

RationalFunction parse_rational(const std::string& text, const VarSetPtr& vars) {
    return to_rational(parse(text, vars), vars);
}

namespace {

void ast_write(std::ostringstream& os, const ExprPtr& e, const VarSetPtr& vars) {
    switch (e->kind) {
        case Expr::Kind::Constant:
            os << to_string(e->value);
            return;
        case Expr::Kind::Variable:
            os << vars->name(e->var);
            return;
        case Expr::Kind::Add:
        case Expr::Kind::Sub:
            os << '(';
            ast_write(os, e->lhs, vars);
            os << (e->kind == Expr::Kind::Add ? " + " : " - ");
            ast_write(os, e->rhs, vars);
            os << ')';
            return;
        case Expr::Kind::Mul:
        case Expr::Kind::Div:
            os << '(';
            ast_write(os, e->lhs, vars);
            os << (e->kind == Expr::Kind::Mul ? "*" : "/");
            ast_write(os, e->rhs, vars);
            os << ')';
            return;
        case Expr::Kind::Neg:
            os << "(-";
            ast_write(os, e->lhs, vars);
            os << ')';
            return;
        case Expr::Kind::Pow:
            ast_write(os, e->lhs, vars);
            os << '^' << e->exponent;
            return;
    }
}

}  // namespace

std::string ast_str(const ExprPtr& ast, const VarSetPtr& vars) {
    std::ostringstream os;
    ast_write(os, ast, vars);
    return os.str();
}

}  // namespace painleq
