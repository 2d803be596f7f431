#include "ttw/expr.hpp"

#include <cctype>
#include <sstream>

namespace ttw {

namespace {

struct Token {
    enum class Kind { Number, Symbol, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };
    Kind kind;
    std::string text;
    int line;
    int column;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) {}

    Token next() {
        skip_ws();
        int line = line_, col = col_;
        if (pos_ >= src_.size()) return {Token::Kind::End, "", line, col};
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                num.push_back(advance());
            return {Token::Kind::Number, num, line, col};
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string id;
            while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_])))
                id.push_back(advance());
            if (id != "t" && id != "u" && id != "a" && id != "b" && id != "w" &&
                id != "Dt" && id != "Du")
                throw SyntaxError("unknown symbol '" + id + "'", line, col);
            return {Token::Kind::Symbol, id, line, col};
        }
        advance();
        switch (c) {
            case '+': return {Token::Kind::Plus, "+", line, col};
            case '-': return {Token::Kind::Minus, "-", line, col};
            case '*': return {Token::Kind::Star, "*", line, col};
            case '^': return {Token::Kind::Caret, "^", line, col};
            case '/': return {Token::Kind::Slash, "/", line, col};
            case '(': return {Token::Kind::LParen, "(", line, col};
            case ')': return {Token::Kind::RParen, ")", line, col};
            default:
                throw SyntaxError(std::string("unexpected character '") + c + "'", line, col);
        }
    }

private:
    char advance() {
        char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }
    void skip_ws() {
        while (pos_ < src_.size() &&
               std::isspace(static_cast<unsigned char>(src_[pos_])))
            advance();
    }
    const std::string& src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

using NodePtr = std::unique_ptr<OperatorExpr>;

class Parser {
public:
    explicit Parser(const std::string& src) : lexer_(src) { look_ = lexer_.next(); }

    NodePtr parse() {
        NodePtr e = expr();
        if (look_.kind != Token::Kind::End)
            throw SyntaxError("unexpected token '" + look_.text + "'", look_.line,
                              look_.column);
        return e;
    }

private:
    NodePtr node(OperatorExpr::Kind k) {
        auto n = std::make_unique<OperatorExpr>();
        n->kind = k;
        return n;
    }

    void eat() { look_ = lexer_.next(); }

    NodePtr expr() {
        NodePtr left = term();
        while (look_.kind == Token::Kind::Plus || look_.kind == Token::Kind::Minus) {
            auto op = node(look_.kind == Token::Kind::Plus ? OperatorExpr::Kind::Add
                                                           : OperatorExpr::Kind::Sub);
            eat();
            op->children.push_back(std::move(left));
            op->children.push_back(term());
            left = std::move(op);
        }
        return left;
    }

    NodePtr term() {
        bool negate = false;
        if (look_.kind == Token::Kind::Minus) {
            negate = true;
            eat();
        }
        NodePtr left = factor();
        while (look_.kind == Token::Kind::Star) {
            eat();
            auto op = node(OperatorExpr::Kind::Mul);
            op->children.push_back(std::move(left));
            op->children.push_back(factor());
            left = std::move(op);
        }
        if (negate) {
            auto op = node(OperatorExpr::Kind::Neg);
            op->children.push_back(std::move(left));
            left = std::move(op);
        }
        return left;
    }

    NodePtr factor() {
        NodePtr base = atom();
        if (look_.kind == Token::Kind::Caret) {
            eat();
            if (look_.kind != Token::Kind::Number)
                throw SyntaxError("exponent must be a non-negative integer", look_.line,
                                  look_.column);
            unsigned long e = 0;
            try {
                e = std::stoul(look_.text);
            } catch (const std::exception&) {
                throw SyntaxError("exponent overflow", look_.line, look_.column);
            }
            if (e >= kExponentCap)
                throw SyntaxError("exponent overflow", look_.line, look_.column);
            eat();
            auto op = node(OperatorExpr::Kind::Pow);
            op->exponent = static_cast<unsigned>(e);
            op->children.push_back(std::move(base));
            base = std::move(op);
        }
        return base;
    }

    NodePtr atom() {
        switch (look_.kind) {
            case Token::Kind::Number: {
                std::string num = look_.text;
                eat();
                std::string den = "1";
                if (look_.kind == Token::Kind::Slash) {
                    eat();
                    if (look_.kind != Token::Kind::Number)
                        throw SyntaxError("expected denominator", look_.line, look_.column);
                    den = look_.text;
                    eat();
                }
                auto n = node(OperatorExpr::Kind::Rational);
                n->value = rat_from_strings(num, den);
                return n;
            }
            case Token::Kind::Symbol: {
                auto n = node(OperatorExpr::Kind::Symbol);
                n->symbol = look_.text;
                eat();
                return n;
            }
            case Token::Kind::LParen: {
                eat();
                NodePtr e = expr();
                if (look_.kind != Token::Kind::RParen)
                    throw SyntaxError("expected ')'", look_.line, look_.column);
                eat();
                return e;
            }
            default:
                throw SyntaxError("unexpected token '" + look_.text + "'", look_.line,
                                  look_.column);
        }
    }

    Lexer lexer_;
    Token look_;
};

DiffOp symbol_op(const std::string& s) {
    if (s == "Dt") return op_dt();
    if (s == "Du") return op_du();
    if (s == "t") return op_t();
    if (s == "u") return op_u();
    if (s == "a") return DiffOp::mult(ParamPoly::variable(Var::A));
    if (s == "b") return DiffOp::mult(ParamPoly::variable(Var::B));
    return DiffOp::mult(ParamPoly::variable(Var::W));
}

DiffOp pow_op(const DiffOp& base, unsigned e) {
    DiffOp r = DiffOp::identity();
    for (unsigned i = 0; i < e; ++i) r = r * base;
    return r;
}

}  // namespace

std::unique_ptr<OperatorExpr> parse_expression(const std::string& src) {
    return Parser(src).parse();
}

DiffOp eval_expression(const OperatorExpr& e) {
    switch (e.kind) {
        case OperatorExpr::Kind::Rational:
            return DiffOp::mult(ParamPoly(e.value));
        case OperatorExpr::Kind::Symbol:
            return symbol_op(e.symbol);
        case OperatorExpr::Kind::Add:
            return eval_expression(*e.children[0]) + eval_expression(*e.children[1]);
        case OperatorExpr::Kind::Sub:
            return eval_expression(*e.children[0]) - eval_expression(*e.children[1]);
        case OperatorExpr::Kind::Neg:
            return -eval_expression(*e.children[0]);
        case OperatorExpr::Kind::Mul:
            return eval_expression(*e.children[0]) * eval_expression(*e.children[1]);
        case OperatorExpr::Kind::Pow:
            return pow_op(eval_expression(*e.children[0]), e.exponent);
    }
    throw Error("unreachable expression kind");
}

DiffOp parse_operator(const std::string& src) {
    return eval_expression(*parse_expression(src));
}

namespace {

// Commutative evaluation used for large coefficient tables; rejects Dt/Du.
ParamPoly eval_poly(const OperatorExpr& e) {
    switch (e.kind) {
        case OperatorExpr::Kind::Rational:
            return ParamPoly(e.value);
        case OperatorExpr::Kind::Symbol: {
            if (e.symbol == "Dt" || e.symbol == "Du")
                throw Error("derivative symbol in polynomial context");
            if (e.symbol == "t") return ParamPoly::variable(Var::T);
            if (e.symbol == "u") return ParamPoly::variable(Var::U);
            if (e.symbol == "a") return ParamPoly::variable(Var::A);
            if (e.symbol == "b") return ParamPoly::variable(Var::B);
            return ParamPoly::variable(Var::W);
        }
        case OperatorExpr::Kind::Add:
            return eval_poly(*e.children[0]) + eval_poly(*e.children[1]);
        case OperatorExpr::Kind::Sub:
            return eval_poly(*e.children[0]) - eval_poly(*e.children[1]);
        case OperatorExpr::Kind::Neg:
            return -eval_poly(*e.children[0]);
        case OperatorExpr::Kind::Mul:
            return eval_poly(*e.children[0]) * eval_poly(*e.children[1]);
        case OperatorExpr::Kind::Pow: {
            ParamPoly base = eval_poly(*e.children[0]);
            ParamPoly r = ParamPoly::one();
            for (unsigned i = 0; i < e.exponent; ++i) r *= base;
            return r;
        }
    }
    throw Error("unreachable expression kind");
}

}  // namespace

ParamPoly parse_poly(const std::string& src) {
    return eval_poly(*parse_expression(src));
}

std::string print_operator(const DiffOp& op) {
    if (op.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, coeff] : op.terms()) {
        std::string body;
        bool negative = false;
        if (coeff.term_count() == 1) {
            const auto& t = coeff.terms()[0];
            Rat c = t.coeff;
            if (c < 0) {
                negative = true;
                c = -c;
            }
            ParamPoly mono(c, t.exp);
            body = mono.to_string();
        } else {
            body = "(" + coeff.to_string() + ")";
        }
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        bool unit = (body == "1" && (d.dt > 0 || d.du > 0));
        if (!unit) os << body;
        if (d.dt > 0) {
            os << (unit ? "Dt" : "*Dt");
            unit = false;
            if (d.dt > 1) os << "^" << d.dt;
        }
        if (d.du > 0) {
            os << (unit ? "Du" : "*Du");
            if (d.du > 1) os << "^" << d.du;
        }
    }
    return os.str();
}

}  // namespace ttw
