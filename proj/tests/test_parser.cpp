#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lierf/parser.hpp"

using namespace lierf;

namespace {

std::string canon(const std::string& s) { return print_expr(*parse_expr(s)); }

}  // namespace

TEST_CASE("spec examples") {
    AstPtr v = parse_expr("vev(a[X] adag[Y])");
    CHECK(v->kind == ExprAst::VevExpr);
    CHECK(v->kids[0]->kind == ExprAst::Prod);
    CHECK(v->kids[0]->kids.size() == 2);
    CHECK(eval_op("vev(a[X] adag[Y])") == OpPoly(Coefficient(IPSymbol({"X"}, {"Y"}))));

    OpPoly p4 = eval_op("phi[f]^4");
    OpPoly f = phi("f");
    CHECK(p4 == f * f * f * f);

    CHECK(parse_index("xi(X1; xi(X2; Y1))") == XiIndex({"X1", "X2"}, {"Y1"}));
}

TEST_CASE("literals and precedence") {
    CHECK(eval_op("3/4 + 2 i") == OpPoly(Coefficient(GRat(Rational(3, 4), Rational(2)))));
    CHECK(eval_op("-a[X]") == -OpPoly(annihilator("X")));
    // ^ binds tighter than juxtaposition
    OpPoly ax(annihilator("X"));
    CHECK(eval_op("2 a[X]^2") == OpPoly(Coefficient(2)) * ax * ax);
    // products are left-associative and order-preserving
    CHECK(eval_op("a[X] adag[Y]") != eval_op("adag[Y] a[X]"));
    CHECK(eval_op("a[X]*adag[Y]") == eval_op("a[X] adag[Y]"));
    CHECK(eval_op("(a[X] + a[Y]) adag[Z]") ==
          (OpPoly(annihilator("X")) + OpPoly(annihilator("Y"))) * OpPoly(creator("Z")));
}

TEST_CASE("dagger alias") {
    CHECK(eval_op("a\xe2\x80\xa0[X]") == OpPoly(creator("X")));
    CHECK(canon("a\xe2\x80\xa0[xi(A; B)]") == "adag[xi(A; B)]");
}

TEST_CASE("kets and application") {
    CHECK(eval_ket("ket()") == Ket::vacuum());
    CHECK(eval_ket("ket(X, Y)") == ket_n({XiIndex::gen("X"), XiIndex::gen("Y")}));
    CHECK(eval_ket("adag[Z] ket()") == Ket::monomial({XiIndex::gen("Z")}));
    CHECK(eval_ket("a[Z] ket()").is_zero());
    // scalar times ket, and sums of kets
    CHECK(eval_ket("2 ket(X) - ket(X)") == ket_n({XiIndex::gen("X")}));

    CHECK_THROWS_AS(eval_op("ket(X)"), std::invalid_argument);
    CHECK_THROWS_AS(eval_ket("a[X]"), std::invalid_argument);
    CHECK_THROWS_AS(eval_expr(*parse_expr("ket(X) + a[X]")), std::invalid_argument);
    CHECK_THROWS_AS(eval_expr(*parse_expr("ket(X) a[X]")), std::invalid_argument);
    CHECK_THROWS_AS(eval_expr(*parse_expr("ket(X)^2")), std::invalid_argument);
    CHECK_THROWS_AS(eval_expr(*parse_expr("X")), std::invalid_argument);
}

TEST_CASE("ip literals") {
    CHECK(eval_op("ip(A, B; C)") == OpPoly(Coefficient(IPSymbol({"A", "B"}, {"C"}))));
    CHECK(eval_op("3 ip(A; B) - ip(A; B)") ==
          OpPoly(Coefficient(2)) * OpPoly(Coefficient(IPSymbol({"A"}, {"B"}))));
}

TEST_CASE("vev through the parser matches the algebra") {
    // the deformed pair contraction: vev(a a adag adag) picks up the arity-4 term
    Coefficient c = vev(OpPoly(annihilator("X1")) * OpPoly(annihilator("X2")) *
                        OpPoly(creator("Y1")) * OpPoly(creator("Y2")));
    CHECK(eval_op("vev(a[X1] a[X2] adag[Y1] adag[Y2])") == OpPoly(c));
}

TEST_CASE("round-trip on fixtures") {
    std::vector<std::string> fixtures = {
        "vev(a[X] adag[Y])",
        "phi[f]^4",
        "xi(X1; xi(X2; Y1))",
        "a[xi(U, V; W)] adag[Z] - 2/3 ip(U; V)",
        "-ket(X, xi(; Y, Z))",
        "(a[X] + i adag[Y])^2",
        "2*a[X]^3 + 1/2 - i",
        "vev(phi[f]^4) - 3 ip(f; f)^2",
    };
    for (const std::string& s : fixtures) {
        std::string once = canon(s);
        CHECK(canon(once) == once);
    }
}

TEST_CASE("syntax errors carry position and expectations") {
    try {
        parse_expr("a[X] +\n  adag[");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.col == 8);
        CHECK(!e.expected.empty());
    }

    CHECK_THROWS_AS(parse_expr(""), ParseError);
    CHECK_THROWS_AS(parse_expr("vev(a[X]"), ParseError);
    CHECK_THROWS_AS(parse_expr("a[X] @"), ParseError);
    CHECK_THROWS_AS(parse_expr("ip(A B)"), ParseError);
    CHECK_THROWS_AS(parse_expr("1 + "), ParseError);
    CHECK_THROWS_AS(parse_index("a[X]"), ParseError);
}
