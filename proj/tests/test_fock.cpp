#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lierf/fock.hpp"
#include "lierf/testrand.hpp"

using namespace lierf;

namespace {

XiIndex g(const Name& n) { return XiIndex::gen(n); }

XiIndex pair_xi(const Name& a, const Name& b) {
    std::array<XiIndex, 2> p{g(a), g(b)};
    return xi_of({}, std::span<const XiIndex>(p));
}

Coefficient ip(std::vector<Name> anti, std::vector<Name> lin) {
    return Coefficient(IPSymbol(std::move(anti), std::move(lin)));
}

std::vector<XiIndex> random_args(TestRand& rng, size_t n) {
    std::vector<XiIndex> v;
    for (size_t i = 0; i < n; ++i) v.push_back(random_index(rng));
    return v;
}

}  // namespace

TEST_CASE("ket_n base cases") {
    CHECK(ket_n({}) == Ket::vacuum());
    CHECK(ket_n({g("X")}) == Ket::monomial({g("X")}));

    // |X1,X2>_2 = adag adag |0> - adag_{xi(;X1,X2)} |0>
    Ket k2 = ket_n({g("X1"), g("X2")});
    Ket expect = Ket::monomial({g("X1"), g("X2")});
    expect -= Ket::monomial({pair_xi("X1", "X2")});
    CHECK(k2 == expect);

    // three-object recursion
    Ket k3 = ket_n({g("X1"), g("X2"), g("X3")});
    Ket alt = apply_creator_op(g("X3"), ket_n({g("X1"), g("X2")}));
    alt -= ket_n({g("X1"), pair_xi("X3", "X2")});
    alt -= ket_n({g("X2"), pair_xi("X3", "X1")});
    CHECK(k3 == alt);
}

TEST_CASE("ket_n is symmetric under permutations") {
    TestRand rng(41);
    for (int iter = 0; iter < 10; ++iter) {
        auto args = random_args(rng, 3);
        Ket base = ket_n(args);
        std::sort(args.begin(), args.end());
        do {
            CHECK(ket_n(args) == base);
        } while (std::next_permutation(args.begin(), args.end()));
    }
}

TEST_CASE("apply_creator: examples and monomial-representation oracle") {
    CHECK(expand(apply_creator(g("Y"), NKet::basis({}))) == ket_n({g("Y")}));

    // adag_Y |X>_1 = |X,Y>_2 + |xi(;Y,X)>_1
    NKet got = apply_creator(g("Y"), NKet::basis({g("X")}));
    NKet expect = NKet::basis({g("X"), g("Y")});
    expect += NKet::basis({pair_xi("Y", "X")});
    CHECK(got == expect);

    // adag_Y |X1,X2>_2 = |X1,X2,Y>_3 + |X2,xi(;Y,X1)>_2 + |X1,xi(;Y,X2)>_2
    NKet got2 = apply_creator(g("Y"), NKet::basis({g("X1"), g("X2")}));
    NKet e2 = NKet::basis({g("X1"), g("X2"), g("Y")});
    e2 += NKet::basis({g("X2"), pair_xi("Y", "X1")});
    e2 += NKet::basis({g("X1"), pair_xi("Y", "X2")});
    CHECK(got2 == e2);

    // commuting diagram with the monomial representation
    TestRand rng(43);
    for (int iter = 0; iter < 12; ++iter) {
        auto args = random_args(rng, 1 + rng.index(3));
        XiIndex y = random_index(rng);
        CHECK(expand(apply_creator(y, NKet::basis(args))) == apply_creator_op(y, ket_n(args)));
    }
}

TEST_CASE("apply_annihilator: examples and oracle") {
    // a_Y |X>_1 = (Y;X)|0> + |xi(Y;X)>_1
    NKet got = apply_annihilator(g("Y"), NKet::basis({g("X")}));
    std::array<XiIndex, 1> ya{g("Y")}, xa{g("X")};
    NKet expect = NKet::basis({}, ip({"Y"}, {"X"}));
    expect += NKet::basis({xi_of(std::span<const XiIndex>(ya), std::span<const XiIndex>(xa))});
    CHECK(got == expect);

    CHECK(apply_annihilator(g("Y"), NKet::basis({})).is_zero());
    CHECK(apply_annihilator_op(g("Y"), Ket::vacuum()).is_zero());

    TestRand rng(47);
    for (int iter = 0; iter < 12; ++iter) {
        auto args = random_args(rng, 1 + rng.index(3));
        XiIndex y = random_index(rng);
        CHECK(expand(apply_annihilator(y, NKet::basis(args))) == apply_annihilator_op(y, ket_n(args)));
    }
}

TEST_CASE("monomial application agrees with normal ordering") {
    TestRand rng(53);
    for (int iter = 0; iter < 10; ++iter) {
        OpPoly p = random_op_poly(rng, 3);
        // apply to vacuum two ways
        Ket direct;
        for (const auto& [w, c] : p.terms()) direct += c * apply_word(w, Ket::vacuum());
        Ket via_no;
        OpPoly no = normal_order(p);
        for (const auto& [w, c] : no.terms()) via_no += c * apply_word(w, Ket::vacuum());
        CHECK(direct == via_no);
    }
}

TEST_CASE("inner_bruteforce lowest levels") {
    CHECK(inner_bruteforce(Ket::monomial({g("Y")}), Ket::monomial({g("X")})) == ip({"Y"}, {"X"}));

    Coefficient free2 = ip({"Y1"}, {"X1"}) * ip({"Y2"}, {"X2"}) + ip({"Y1"}, {"X2"}) * ip({"Y2"}, {"X1"});
    Coefficient full2 = ip({"Y1", "Y2"}, {"X1", "X2"});

    CHECK(inner_bruteforce(ket_n({g("Y1"), g("Y2")}), Ket::monomial({g("X1"), g("X2")})) ==
          free2 + Coefficient(2) * full2);
    CHECK(inner_bruteforce(ket_n({g("Y1"), g("Y2")}), Ket::monomial({pair_xi("X1", "X2")})).is_zero());
}

TEST_CASE("table1 matches the published table entry by entry") {
    auto t = table1();
    Coefficient free2 = ip({"Y1"}, {"X1"}) * ip({"Y2"}, {"X2"}) + ip({"Y1"}, {"X2"}) * ip({"Y2"}, {"X1"});
    Coefficient full2 = ip({"Y1", "Y2"}, {"X1", "X2"});
    Coefficient y_x12 = ip({"Y1"}, {"X1", "X2"});
    Coefficient y12_x = ip({"Y1", "Y2"}, {"X1"});

    // row |Y1>_1
    CHECK(t[0][0] == ip({"Y1"}, {"X1"}));
    CHECK(t[0][1] == y_x12);
    CHECK(t[0][2] == y_x12);
    CHECK(t[0][3].is_zero());
    // row adag_Y1 adag_Y2 |0>
    CHECK(t[1][0] == y12_x);
    CHECK(t[1][1] == free2 + Coefficient(3) * full2);
    CHECK(t[1][2] == full2);
    CHECK(t[1][3] == free2 + Coefficient(2) * full2);
    // row |xi(;Y1,Y2)>_1
    CHECK(t[2][0] == y12_x);
    CHECK(t[2][1] == full2);
    CHECK(t[2][2] == full2);
    CHECK(t[2][3].is_zero());
    // row |Y1,Y2>_2
    CHECK(t[3][0].is_zero());
    CHECK(t[3][1] == free2 + Coefficient(2) * full2);
    CHECK(t[3][2].is_zero());
    CHECK(t[3][3] == free2 + Coefficient(2) * full2);
}

TEST_CASE("cross-level orthogonality, including dressed arguments") {
    TestRand rng(59);
    for (int m = 0; m <= 3; ++m) {
        for (int n = 0; n <= 3; ++n) {
            if (m == n) continue;
            auto bra = random_args(rng, m);
            auto ket = random_args(rng, n);
            CHECK(inner_bruteforce(ket_n(bra), ket_n(ket)).is_zero());
        }
    }
}

TEST_CASE("inner_recursive equals inner_bruteforce") {
    // Table I cases
    CHECK(inner_recursive({g("Y")}, {g("X")}) == ip({"Y"}, {"X"}));
    Coefficient free2 = ip({"Y1"}, {"X1"}) * ip({"Y2"}, {"X2"}) + ip({"Y1"}, {"X2"}) * ip({"Y2"}, {"X1"});
    CHECK(inner_recursive({g("Y1"), g("Y2")}, {g("X1"), g("X2")}) ==
          free2 + Coefficient(2) * ip({"Y1", "Y2"}, {"X1", "X2"}));

    TestRand rng(61);
    for (int iter = 0; iter < 8; ++iter) {
        size_t n = 1 + rng.index(3);
        auto bra = random_args(rng, n);
        auto ket = random_args(rng, n);
        CHECK(inner_recursive(bra, ket) == inner_bruteforce(ket_n(bra), ket_n(ket)));
    }
    CHECK_THROWS_AS(inner_recursive({g("Y")}, {g("X1"), g("X2")}), std::invalid_argument);
}

TEST_CASE("n=3 multiplicities from the recursion") {
    std::vector<XiIndex> ys = {g("Y1"), g("Y2"), g("Y3")};
    std::vector<XiIndex> xs = {g("X1"), g("X2"), g("X3")};
    Coefficient c = inner_recursive(ys, xs);
    CHECK(c.coeff({IPSymbol({"Y1", "Y2", "Y3"}, {"X1", "X2", "X3"})}) == GRat(12));
    CHECK(c.coeff({IPSymbol({"Y1"}, {"X1"}), IPSymbol({"Y2", "Y3"}, {"X2", "X3"})}) == GRat(2));
    CHECK(c.coeff({IPSymbol({"Y1"}, {"X1"}), IPSymbol({"Y2"}, {"X2"}), IPSymbol({"Y3"}, {"X3"})}) ==
          GRat(1));
}

TEST_CASE("multiplicity combinatorics") {
    CHECK(multiplicity({}) == 1);
    CHECK(multiplicity({1}) == 1);
    CHECK(multiplicity({2}) == 2);
    CHECK(multiplicity({3}) == 12);
    CHECK(multiplicity({4}) == 144);
    CHECK(multiplicity({1, 1, 1, 1}) == 1);
    CHECK(multiplicity({2, 1}) == 2);
    CHECK(multiplicity({2, 2}) == 4);
    CHECK(multiplicity({3, 1}) == 12);
    CHECK_THROWS_AS(multiplicity({0}), std::invalid_argument);
}

TEST_CASE("full-product coefficient of <n|n> equals n!(n-1)!") {
    for (int n = 1; n <= 4; ++n) {
        std::vector<XiIndex> ys, xs;
        std::vector<Name> ynames, xnames;
        for (int i = 1; i <= n; ++i) {
            ys.push_back(g("Y" + std::to_string(i)));
            xs.push_back(g("X" + std::to_string(i)));
            ynames.push_back("Y" + std::to_string(i));
            xnames.push_back("X" + std::to_string(i));
        }
        Coefficient c = inner_recursive(ys, xs);
        CHECK(c.coeff({IPSymbol(ynames, xnames)}) == GRat(multiplicity({n})));
    }
}
