#pragma once

#include <memory>
#include <stdexcept>
#include <variant>

#include "lierf/fock.hpp"

namespace lierf {

// Syntax error with position and the token set the parser would have accepted.
struct ParseError : std::runtime_error {
    int line, col;
    std::vector<std::string> expected;

    ParseError(std::string msg, int l, int c, std::vector<std::string> exp = {})
        : std::runtime_error(std::move(msg)), line(l), col(c), expected(std::move(exp)) {}
};

// Grammar (EBNF); `*` is optional between juxtaposed factors, `adag` may be
// written with a dagger, products are left-associative:
//   expr    = ["-"] term { ("+" | "-") term } ;
//   term    = factor { ["*"] factor } ;
//   factor  = primary [ "^" integer ] ;
//   primary = number | "i" | "(" expr ")"
//           | "a" "[" index "]" | "adag" "[" index "]"
//           | "phi" "[" name "]" | "vev" "(" expr ")"
//           | "ket" "(" [ index { "," index } ] ")"
//           | "ip" "(" names ";" names ")" | index ;
//   index   = name | "xi" "(" [ indices ] ";" indices ")" ;
//   number  = integer [ "/" integer ] ;
struct ExprAst;
using AstPtr = std::shared_ptr<ExprAst>;

struct ExprAst {
    enum Kind {
        Number,   // value
        ImagUnit,
        Sum,      // kids + signs (true = minus)
        Prod,     // kids
        Pow,      // kids[0] ^ exponent
        Neg,      // kids[0]
        AOp,      // index
        AdagOp,   // index
        PhiOp,    // name
        VevExpr,  // kids[0]
        KetExpr,  // indices
        IpExpr,   // ip_anti ; ip_lin
        XiVal,    // index (an index literal, not an operator)
    };

    Kind kind = Number;
    Rational value;
    Name name;
    XiTree index;
    std::vector<XiTree> indices;
    std::vector<Name> ip_anti, ip_lin;
    std::vector<AstPtr> kids;
    std::vector<bool> signs;  // for Sum, parallel to kids
    long long exponent = 1;   // for Pow
};

AstPtr parse_expr(const std::string& text);
std::string print_expr(const ExprAst& ast);

// Operator expressions evaluate to OpPoly (scalars are the empty word);
// ket(...) and operator-applied kets evaluate to Ket.
using ExprValue = std::variant<OpPoly, Ket>;
ExprValue eval_expr(const ExprAst& ast);

// Conveniences; throw ParseError / invalid_argument on the wrong kind.
OpPoly eval_op(const std::string& text);
Ket eval_ket(const std::string& text);
XiIndex parse_index(const std::string& text);

}  // namespace lierf
