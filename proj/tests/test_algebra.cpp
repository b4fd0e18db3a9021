#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lierf/algebra.hpp"
#include "lierf/testrand.hpp"

using namespace lierf;

namespace {

XiIndex idx(std::vector<Name> anti, std::vector<Name> lin) {
    return XiIndex(std::move(anti), std::move(lin));
}

Coefficient ip(std::vector<Name> anti, std::vector<Name> lin) {
    return Coefficient(IPSymbol(std::move(anti), std::move(lin)));
}

}  // namespace

TEST_CASE("flatten_xi: nested trees reduce to the flat index") {
    // xi(X1; xi(X2; Y1)) -> (X1,X2; Y1)
    auto t = XiTree::make_node({XiTree::make_leaf("X1")},
                               {XiTree::make_node({XiTree::make_leaf("X2")}, {XiTree::make_leaf("Y1")})});
    CHECK(flatten_xi(t) == idx({"X1", "X2"}, {"Y1"}));

    // xi(;Y) -> (;Y)
    auto base = XiTree::make_node({}, {XiTree::make_leaf("Y")});
    CHECK(flatten_xi(base) == XiIndex::gen("Y"));

    // xi(xi(X1;Y1); X2) -> (Y1; X1,X2)
    auto t2 = XiTree::make_node({XiTree::make_node({XiTree::make_leaf("X1")}, {XiTree::make_leaf("Y1")})},
                                {XiTree::make_leaf("X2")});
    CHECK(flatten_xi(t2) == idx({"Y1"}, {"X1", "X2"}));

    auto empty = XiTree::make_node({}, {});
    CHECK_THROWS_AS(flatten_xi(empty), std::invalid_argument);
}

TEST_CASE("flatten_xi: confluence on random trees") {
    // Flattening is applied on construction; rebuilding any subtree from its
    // flat form must give the same result as flattening the whole tree.
    TestRand rng(7);
    std::vector<Name> pool = {"X1", "X2", "Y1", "Y2"};
    for (int iter = 0; iter < 50; ++iter) {
        // random tree of depth <= 3
        std::function<XiTree(int)> gen = [&](int depth) -> XiTree {
            if (depth == 0 || rng.index(3) == 0) return XiTree::make_leaf(pool[rng.index(pool.size())]);
            std::vector<XiTree> a, l;
            size_t na = rng.index(2), nl = rng.index(3);
            if (na + nl == 0) nl = 1;
            for (size_t i = 0; i < na; ++i) a.push_back(gen(depth - 1));
            for (size_t i = 0; i < nl; ++i) l.push_back(gen(depth - 1));
            return XiTree::make_node(std::move(a), std::move(l));
        };
        XiTree t = gen(3);
        XiIndex whole = flatten_xi(t);
        if (t.leaf) continue;
        // flatten children first (inner-first order), then the root
        std::vector<XiIndex> anti_args, lin_args;
        for (auto& c : t.anti) anti_args.push_back(flatten_xi(c));
        for (auto& c : t.lin) lin_args.push_back(flatten_xi(c));
        CHECK(xi_of(anti_args, lin_args) == whole);
    }
}

TEST_CASE("IPSymbol rejects empty slots") {
    CHECK_THROWS_AS(IPSymbol({}, {}), std::invalid_argument);
    CHECK_THROWS_AS(IPSymbol({}, {"X"}), std::invalid_argument);
    CHECK_THROWS_AS(IPSymbol({"X"}, {}), std::invalid_argument);
}

TEST_CASE("star: involution and basic images") {
    OpPoly ax{annihilator("X")};
    CHECK(star(ax) == OpPoly(creator("X")));
    CHECK(star(Coefficient(ip({"X"}, {"Y"}))) == OpPoly(Coefficient(ip({"Y"}, {"X"}))));
    OpPoly w = OpPoly(annihilator("X")) * OpPoly(creator("Y"));
    CHECK(star(w) == OpPoly(annihilator("Y")) * OpPoly(creator("X")));

    TestRand rng(11);
    for (int iter = 0; iter < 30; ++iter) {
        OpPoly p = random_op_poly(rng, 3);
        CHECK(star(star(p)) == p);
    }
}

TEST_CASE("star is an anti-homomorphism") {
    TestRand rng(13);
    for (int iter = 0; iter < 20; ++iter) {
        OpPoly p = random_op_poly(rng, 2);
        OpPoly q = random_op_poly(rng, 2);
        CHECK(star(p * q) == star(q) * star(p));
    }
}

TEST_CASE("commutator_step matches the deformed relation") {
    // [a_X, adag_Y] = (X;Y) + a_(Y;X) + adag_(X;Y)
    OpPoly c = commutator_step(annihilator("X"), creator("Y"));
    OpPoly expect(Coefficient(ip({"X"}, {"Y"})));
    expect += OpPoly(annihilator(idx({"Y"}, {"X"})));
    expect += OpPoly(creator(idx({"X"}, {"Y"})));
    CHECK(c == expect);

    // [a_(;X), adag_(;Y1,Y2)] = (X;Y1,Y2) + a_(Y1,Y2;X) + adag_(X;Y1,Y2)
    OpPoly c2 = commutator_step(annihilator("X"), creator(idx({}, {"Y1", "Y2"})));
    OpPoly e2(Coefficient(ip({"X"}, {"Y1", "Y2"})));
    e2 += OpPoly(annihilator(idx({"Y1", "Y2"}, {"X"})));
    e2 += OpPoly(creator(idx({"X"}, {"Y1", "Y2"})));
    CHECK(c2 == e2);

    // [a_(Y;X), adag_(X';Y')] = (X,X';Y,Y') + a_(Y,Y';X,X') + adag_(X,X';Y,Y')
    OpPoly c3 = commutator_step(annihilator(idx({"Y"}, {"X"})), creator(idx({"Xp"}, {"Yp"})));
    OpPoly e3(Coefficient(ip({"X", "Xp"}, {"Y", "Yp"})));
    e3 += OpPoly(annihilator(idx({"Y", "Yp"}, {"X", "Xp"})));
    e3 += OpPoly(creator(idx({"X", "Xp"}, {"Y", "Yp"})));
    CHECK(c3 == e3);
}

TEST_CASE("normal_order: base relation and idempotence") {
    OpPoly p = OpPoly(annihilator("X")) * OpPoly(creator("Y"));
    OpPoly n = normal_order(p);
    OpPoly expect = OpPoly(creator("Y")) * OpPoly(annihilator("X"));
    expect += Coefficient(ip({"X"}, {"Y"}));
    expect += OpPoly(annihilator(idx({"Y"}, {"X"})));
    expect += OpPoly(creator(idx({"X"}, {"Y"})));
    CHECK(n == expect);
    CHECK(normal_order(n) == n);

    OpPoly already = OpPoly(creator("Y")) * OpPoly(annihilator("X"));
    CHECK(normal_order(already) == already);
}

TEST_CASE("annihilators and creators commute among themselves") {
    OpPoly p = OpPoly(annihilator("X")) * OpPoly(annihilator("Y")) -
               OpPoly(annihilator("Y")) * OpPoly(annihilator("X"));
    CHECK(normal_order(p).is_zero());

    TestRand rng(3);
    for (int iter = 0; iter < 20; ++iter) {
        XiIndex a = random_index(rng), b = random_index(rng);
        CHECK(commutator(OpPoly(annihilator(a)), OpPoly(annihilator(b))).is_zero());
        CHECK(commutator(OpPoly(creator(a)), OpPoly(creator(b))).is_zero());
    }
}

TEST_CASE("normal_order is linear and compatible with star") {
    TestRand rng(17);
    for (int iter = 0; iter < 15; ++iter) {
        OpPoly p = random_op_poly(rng, 3);
        OpPoly q = random_op_poly(rng, 3);
        CHECK(normal_order(p + q) == normal_order(p) + normal_order(q));
        // star(normal_order(p)) and normal_order(star(p)) agree as algebra
        // elements, so their normal forms coincide
        CHECK(normal_order(star(normal_order(p))) == normal_order(star(p)));
    }
}

TEST_CASE("vev examples") {
    CHECK(vev(OpPoly(annihilator("X")) * OpPoly(creator("Y"))) == ip({"X"}, {"Y"}));
    CHECK(vev(OpPoly(creator("X"))).is_zero());

    // <0| phi_f^4 |0> = (f;f,f,f) + 4(f,f;f,f) + (f,f,f;f) + 3(f;f)^2
    OpPoly pf = phi("f");
    OpPoly p4 = pf * pf * pf * pf;
    Coefficient m4 = vev(p4);
    Coefficient expect = ip({"f"}, {"f", "f", "f"});
    expect += Coefficient(4) * ip({"f", "f"}, {"f", "f"});
    expect += ip({"f", "f", "f"}, {"f"});
    expect += Coefficient(3) * ip({"f"}, {"f"}) * ip({"f"}, {"f"});
    CHECK(m4 == expect);

    // free-field truncation leaves the Gaussian part
    CHECK(m4.free_field_limit() == Coefficient(3) * ip({"f"}, {"f"}) * ip({"f"}, {"f"}));

    // vev o normal_order == vev
    TestRand rng(23);
    for (int iter = 0; iter < 10; ++iter) {
        OpPoly p = random_op_poly(rng, 3);
        CHECK(vev(normal_order(p)) == vev(p));
    }
}

TEST_CASE("Jacobi identity vanishes") {
    CHECK(check_jacobi(XiIndex::gen("X"), XiIndex::gen("Y"), XiIndex::gen("Z")).is_zero());
    CHECK(check_jacobi(XiIndex::gen("X"), XiIndex::gen("X"), XiIndex::gen("X")).is_zero());

    TestRand rng(29);
    for (int iter = 0; iter < 25; ++iter) {
        CHECK(check_jacobi(random_index(rng), random_index(rng), random_index(rng)).is_zero());
    }
}

TEST_CASE("closed form for a_Y through a creator monomial") {
    // a_Y adag_X1..adag_Xn |0> = sum over non-empty subsets S of
    // (adag_xi(Y;S) + (Y;S)) applied to the remaining creators.
    TestRand rng(31);
    std::vector<Name> pool = {"X1", "X2", "X3", "X4"};
    for (int n = 1; n <= 4; ++n) {
        Word w{annihilator("Y")};
        for (int i = 0; i < n; ++i) w.push_back(creator(pool[i]));
        OpPoly no = normal_order(OpPoly::word(w));
        // keep creator-only words (the part surviving against the vacuum)
        OpPoly applied;
        for (const auto& [ww, c] : no.terms()) {
            bool creators_only = true;
            for (const auto& op : ww)
                if (op.kind == DressedOp::Annihilator) creators_only = false;
            if (creators_only) applied.add(ww, c);
        }
        OpPoly expect;
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            std::vector<XiIndex> s{XiIndex::gen("Y")};
            std::vector<XiIndex> sub;
            Word rest;
            for (int i = 0; i < n; ++i) {
                if (mask & (1u << i))
                    sub.push_back(XiIndex::gen(pool[i]));
                else
                    rest.push_back(creator(pool[i]));
            }
            // scalar branch
            expect += OpPoly::word(rest, Coefficient(ip_of(std::span(s), std::span(sub))));
            // creator branch
            Word withcre{creator(xi_of(std::span(s), std::span(sub)))};
            withcre.insert(withcre.end(), rest.begin(), rest.end());
            expect += OpPoly::word(withcre);
        }
        CHECK(normal_order(applied) == normal_order(expect));
    }
}

TEST_CASE("printing is stable and readable") {
    OpPoly p = commutator_step(annihilator("X"), creator("Y"));
    CHECK(p.str() == "(X;Y) + a[xi(Y;X)] + adag[xi(X;Y)]");
    Coefficient c = Coefficient(3) * ip({"f"}, {"f"}) * ip({"f"}, {"f"});
    CHECK(c.str() == "3*(f;f)^2");
}
