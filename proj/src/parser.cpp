#include "lierf/parser.hpp"

#include <cctype>
#include <sstream>

namespace lierf {

namespace {

struct Token {
    enum Kind { Ident, Int, Sym, End };
    Kind kind = End;
    std::string text;
    int line = 1, col = 1;
};

class Lexer {
  public:
    explicit Lexer(const std::string& text) : s_(text) { advance(); }

    const Token& peek() const { return cur_; }

    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) bump();
        cur_ = Token{Token::End, "", line_, col_};
        if (pos_ >= s_.size()) return;
        char c = s_[pos_];
        if (std::isdigit((unsigned char)c)) {
            cur_.kind = Token::Int;
            while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) {
                cur_.text += s_[pos_];
                bump();
            }
            return;
        }
        if (std::isalpha((unsigned char)c) || c == '_') {
            cur_.kind = Token::Ident;
            while (pos_ < s_.size() &&
                   (std::isalnum((unsigned char)s_[pos_]) || s_[pos_] == '_')) {
                cur_.text += s_[pos_];
                bump();
            }
            // dagger alias: "a†" reads as "adag"
            if (cur_.text == "a" && s_.compare(pos_, 3, "\xe2\x80\xa0") == 0) {
                cur_.text = "adag";
                bump();
                bump();
                bump();
            }
            return;
        }
        if (std::string("+-*/^()[];,").find(c) != std::string::npos) {
            cur_.kind = Token::Sym;
            cur_.text = c;
            bump();
            return;
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "'", line_, col_);
    }

    void bump() {
        if (s_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& s_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token cur_;
};

class Parser {
  public:
    explicit Parser(const std::string& text) : lex_(text) {}

    AstPtr parse() {
        AstPtr e = expr();
        expect_end();
        return e;
    }

    XiTree parse_lone_index() {
        XiTree t = index();
        expect_end();
        return t;
    }

  private:
    [[noreturn]] void fail(const std::string& msg, std::vector<std::string> expected = {}) {
        const Token& t = lex_.peek();
        std::string got = t.kind == Token::End ? "end of input" : "'" + t.text + "'";
        throw ParseError(msg + " (got " + got + ")", t.line, t.col, std::move(expected));
    }

    bool at_sym(const std::string& s) {
        return lex_.peek().kind == Token::Sym && lex_.peek().text == s;
    }

    bool eat_sym(const std::string& s) {
        if (!at_sym(s)) return false;
        lex_.take();
        return true;
    }

    void expect_sym(const std::string& s) {
        if (!eat_sym(s)) fail("expected '" + s + "'", {s});
    }

    void expect_end() {
        if (lex_.peek().kind != Token::End) fail("expected end of input", {"end"});
    }

    long long integer() {
        if (lex_.peek().kind != Token::Int) fail("expected an integer", {"integer"});
        return std::stoll(lex_.take().text);
    }

    Name name() {
        if (lex_.peek().kind != Token::Ident) fail("expected a name", {"name"});
        return lex_.take().text;
    }

    bool starts_primary() {
        const Token& t = lex_.peek();
        return t.kind == Token::Int || t.kind == Token::Ident || at_sym("(");
    }

    AstPtr expr() {
        auto sum = std::make_shared<ExprAst>();
        sum->kind = ExprAst::Sum;
        bool neg = eat_sym("-");
        sum->kids.push_back(term());
        sum->signs.push_back(neg);
        while (at_sym("+") || at_sym("-")) {
            bool minus = lex_.take().text == "-";
            sum->kids.push_back(term());
            sum->signs.push_back(minus);
        }
        if (sum->kids.size() == 1 && !sum->signs[0]) return sum->kids[0];
        return sum;
    }

    AstPtr term() {
        AstPtr first = factor();
        if (!at_sym("*") && !starts_primary()) return first;
        auto prod = std::make_shared<ExprAst>();
        prod->kind = ExprAst::Prod;
        prod->kids.push_back(first);
        while (true) {
            if (eat_sym("*")) {
                prod->kids.push_back(factor());
            } else if (starts_primary()) {
                prod->kids.push_back(factor());
            } else {
                break;
            }
        }
        return prod;
    }

    AstPtr factor() {
        AstPtr base = primary();
        if (!eat_sym("^")) return base;
        auto pw = std::make_shared<ExprAst>();
        pw->kind = ExprAst::Pow;
        pw->kids.push_back(base);
        pw->exponent = integer();
        return pw;
    }

    AstPtr primary() {
        if (lex_.peek().kind == Token::Int) {
            auto n = std::make_shared<ExprAst>();
            n->kind = ExprAst::Number;
            long long num = integer();
            long long den = 1;
            if (eat_sym("/")) den = integer();
            n->value = Rational(num, den);
            return n;
        }
        if (eat_sym("(")) {
            AstPtr e = expr();
            expect_sym(")");
            return e;
        }
        if (lex_.peek().kind != Token::Ident)
            fail("expected a factor", {"number", "name", "("});

        std::string id = lex_.take().text;
        auto node = std::make_shared<ExprAst>();
        if (id == "i") {
            node->kind = ExprAst::ImagUnit;
            return node;
        }
        if ((id == "a" || id == "adag") && at_sym("[")) {
            lex_.take();
            node->kind = id == "a" ? ExprAst::AOp : ExprAst::AdagOp;
            node->index = index();
            expect_sym("]");
            return node;
        }
        if (id == "phi" && at_sym("[")) {
            lex_.take();
            node->kind = ExprAst::PhiOp;
            node->name = name();
            expect_sym("]");
            return node;
        }
        if (id == "vev") {
            expect_sym("(");
            node->kind = ExprAst::VevExpr;
            node->kids.push_back(expr());
            expect_sym(")");
            return node;
        }
        if (id == "ket") {
            expect_sym("(");
            node->kind = ExprAst::KetExpr;
            if (!at_sym(")")) {
                node->indices.push_back(index());
                while (eat_sym(",")) node->indices.push_back(index());
            }
            expect_sym(")");
            return node;
        }
        if (id == "ip") {
            expect_sym("(");
            node->kind = ExprAst::IpExpr;
            node->ip_anti.push_back(name());
            while (eat_sym(",")) node->ip_anti.push_back(name());
            expect_sym(";");
            node->ip_lin.push_back(name());
            while (eat_sym(",")) node->ip_lin.push_back(name());
            expect_sym(")");
            return node;
        }
        if (id == "xi") {
            node->kind = ExprAst::XiVal;
            node->index = xi_body();
            return node;
        }
        // a bare generator name is an index literal
        node->kind = ExprAst::XiVal;
        node->index = XiTree::make_leaf(id);
        return node;
    }

    XiTree index() {
        if (lex_.peek().kind != Token::Ident) fail("expected an index", {"name", "xi"});
        std::string id = lex_.take().text;
        if (id == "xi") return xi_body();
        return XiTree::make_leaf(id);
    }

    XiTree xi_body() {  // after the "xi" keyword
        expect_sym("(");
        std::vector<XiTree> anti, lin;
        if (!at_sym(";")) {
            anti.push_back(index());
            while (eat_sym(",")) anti.push_back(index());
        }
        expect_sym(";");
        if (!at_sym(")")) {
            lin.push_back(index());
            while (eat_sym(",")) lin.push_back(index());
        }
        expect_sym(")");
        return XiTree::make_node(std::move(anti), std::move(lin));
    }

    Lexer lex_;
};

std::string index_str(const XiTree& t) {
    if (t.leaf) return *t.leaf;
    std::string s = "xi(";
    for (size_t i = 0; i < t.anti.size(); ++i) s += (i ? ", " : "") + index_str(t.anti[i]);
    s += ";";
    for (size_t i = 0; i < t.lin.size(); ++i) s += (i ? ", " : " ") + index_str(t.lin[i]);
    s += ")";
    return s;
}

bool atomic(const ExprAst& a) {
    switch (a.kind) {
        case ExprAst::Sum:
        case ExprAst::Prod:
        case ExprAst::Pow:
        case ExprAst::Neg: return false;
        default: return true;
    }
}

std::string paren_unless_atomic(const ExprAst& a) {
    std::string s = print_expr(a);
    return atomic(a) ? s : "(" + s + ")";
}

Ket apply_poly(const OpPoly& p, const Ket& k) {
    Ket r;
    for (const auto& [w, c] : p.terms()) r += c * apply_word(w, k);
    return r;
}

ExprValue scale(const Coefficient& c, ExprValue v) {
    if (std::holds_alternative<OpPoly>(v)) return OpPoly(c) * std::get<OpPoly>(v);
    return c * std::get<Ket>(v);
}

}  // namespace

AstPtr parse_expr(const std::string& text) { return Parser(text).parse(); }

std::string print_expr(const ExprAst& ast) {
    switch (ast.kind) {
        case ExprAst::Number: return ast.value.str();
        case ExprAst::ImagUnit: return "i";
        case ExprAst::Sum: {
            std::string s;
            for (size_t k = 0; k < ast.kids.size(); ++k) {
                std::string piece = ast.kids[k]->kind == ExprAst::Sum
                                        ? "(" + print_expr(*ast.kids[k]) + ")"
                                        : print_expr(*ast.kids[k]);
                if (k == 0)
                    s = (ast.signs[0] ? "-" : "") + piece;
                else
                    s += (ast.signs[k] ? " - " : " + ") + piece;
            }
            return s;
        }
        case ExprAst::Prod: {
            std::string s;
            for (size_t k = 0; k < ast.kids.size(); ++k) {
                const ExprAst& kid = *ast.kids[k];
                std::string piece =
                    atomic(kid) || kid.kind == ExprAst::Pow ? print_expr(kid)
                                                            : "(" + print_expr(kid) + ")";
                s += (k ? "*" : "") + piece;
            }
            return s;
        }
        case ExprAst::Pow:
            return paren_unless_atomic(*ast.kids[0]) + "^" + std::to_string(ast.exponent);
        case ExprAst::Neg: return "-" + paren_unless_atomic(*ast.kids[0]);
        case ExprAst::AOp: return "a[" + index_str(ast.index) + "]";
        case ExprAst::AdagOp: return "adag[" + index_str(ast.index) + "]";
        case ExprAst::PhiOp: return "phi[" + ast.name + "]";
        case ExprAst::VevExpr: return "vev(" + print_expr(*ast.kids[0]) + ")";
        case ExprAst::KetExpr: {
            std::string s = "ket(";
            for (size_t k = 0; k < ast.indices.size(); ++k)
                s += (k ? ", " : "") + index_str(ast.indices[k]);
            return s + ")";
        }
        case ExprAst::IpExpr: {
            std::string s = "ip(";
            for (size_t k = 0; k < ast.ip_anti.size(); ++k) s += (k ? ", " : "") + ast.ip_anti[k];
            s += ";";
            for (size_t k = 0; k < ast.ip_lin.size(); ++k) s += (k ? ", " : " ") + ast.ip_lin[k];
            return s + ")";
        }
        case ExprAst::XiVal: return index_str(ast.index);
    }
    return "";
}

ExprValue eval_expr(const ExprAst& ast) {
    switch (ast.kind) {
        case ExprAst::Number: return OpPoly(Coefficient(GRat(ast.value)));
        case ExprAst::ImagUnit: return OpPoly(Coefficient(GRat::i()));
        case ExprAst::Sum: {
            ExprValue acc = eval_expr(*ast.kids[0]);
            if (ast.signs[0]) acc = scale(Coefficient(-1), std::move(acc));
            for (size_t k = 1; k < ast.kids.size(); ++k) {
                ExprValue next = eval_expr(*ast.kids[k]);
                if (ast.signs[k]) next = scale(Coefficient(-1), std::move(next));
                if (acc.index() != next.index())
                    throw std::invalid_argument("cannot add an operator and a ket");
                if (std::holds_alternative<OpPoly>(acc))
                    acc = std::get<OpPoly>(acc) + std::get<OpPoly>(next);
                else
                    acc = std::get<Ket>(acc) + std::get<Ket>(next);
            }
            return acc;
        }
        case ExprAst::Prod: {
            // right-to-left so operator strings can act on a trailing ket
            ExprValue acc = eval_expr(*ast.kids.back());
            for (size_t k = ast.kids.size() - 1; k-- > 0;) {
                ExprValue lhs = eval_expr(*ast.kids[k]);
                if (std::holds_alternative<Ket>(lhs))
                    throw std::invalid_argument("cannot multiply to the right of a ket");
                if (std::holds_alternative<OpPoly>(acc))
                    acc = std::get<OpPoly>(lhs) * std::get<OpPoly>(acc);
                else
                    acc = apply_poly(std::get<OpPoly>(lhs), std::get<Ket>(acc));
            }
            return acc;
        }
        case ExprAst::Pow: {
            ExprValue base = eval_expr(*ast.kids[0]);
            if (!std::holds_alternative<OpPoly>(base))
                throw std::invalid_argument("powers apply to operator expressions only");
            if (ast.exponent < 0) throw std::invalid_argument("negative powers not supported");
            OpPoly r(Coefficient(1));
            for (long long k = 0; k < ast.exponent; ++k) r = r * std::get<OpPoly>(base);
            return r;
        }
        case ExprAst::Neg: return scale(Coefficient(-1), eval_expr(*ast.kids[0]));
        case ExprAst::AOp: return OpPoly(annihilator(flatten_xi(ast.index)));
        case ExprAst::AdagOp: return OpPoly(creator(flatten_xi(ast.index)));
        case ExprAst::PhiOp: return phi(ast.name);
        case ExprAst::VevExpr: {
            ExprValue inner = eval_expr(*ast.kids[0]);
            if (!std::holds_alternative<OpPoly>(inner))
                throw std::invalid_argument("vev applies to operator expressions only");
            return OpPoly(vev(std::get<OpPoly>(inner)));
        }
        case ExprAst::KetExpr: {
            std::vector<XiIndex> args;
            for (const XiTree& t : ast.indices) args.push_back(flatten_xi(t));
            return ket_n(args);
        }
        case ExprAst::IpExpr:
            return OpPoly(Coefficient(IPSymbol(ast.ip_anti, ast.ip_lin)));
        case ExprAst::XiVal:
            throw std::invalid_argument("an index literal is not an operator expression");
    }
    throw std::logic_error("eval_expr: unreachable");
}

OpPoly eval_op(const std::string& text) {
    ExprValue v = eval_expr(*parse_expr(text));
    if (!std::holds_alternative<OpPoly>(v))
        throw std::invalid_argument("expression evaluates to a ket, not an operator");
    return std::get<OpPoly>(v);
}

Ket eval_ket(const std::string& text) {
    ExprValue v = eval_expr(*parse_expr(text));
    if (!std::holds_alternative<Ket>(v))
        throw std::invalid_argument("expression evaluates to an operator, not a ket");
    return std::get<Ket>(v);
}

XiIndex parse_index(const std::string& text) {
    return flatten_xi(Parser(text).parse_lone_index());
}

}  // namespace lierf
