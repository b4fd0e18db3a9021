#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lierf/numeric.hpp"

namespace lierf {

using Name = std::string;

// Flattened structure-function index xi(anti; lin). Both slots are multisets
// of generator names, stored sorted; at least one slot must be non-empty.
// A base generator X appears as (; X) on creators and annihilators alike.
struct XiIndex {
    std::vector<Name> anti;
    std::vector<Name> lin;

    XiIndex() = default;
    XiIndex(std::vector<Name> a, std::vector<Name> l);

    static XiIndex gen(Name x) { return XiIndex({}, {std::move(x)}); }

    XiIndex conjugate() const { return XiIndex(lin, anti); }
    size_t arity() const { return anti.size() + lin.size(); }
    bool is_base() const { return anti.empty() && lin.size() == 1; }

    friend bool operator==(const XiIndex&, const XiIndex&) = default;
    friend std::strong_ordering operator<=>(const XiIndex& a, const XiIndex& b);

    std::string str() const;  // "X" for a base index, else "xi(A;L)"
};

// Formal inner-product indeterminate (anti; lin); both slots non-empty.
struct IPSymbol {
    std::vector<Name> anti;
    std::vector<Name> lin;

    IPSymbol() = default;
    IPSymbol(std::vector<Name> a, std::vector<Name> l);

    IPSymbol conjugate() const { return IPSymbol(lin, anti); }
    size_t arity() const { return anti.size() + lin.size(); }

    friend bool operator==(const IPSymbol&, const IPSymbol&) = default;
    friend std::strong_ordering operator<=>(const IPSymbol& a, const IPSymbol& b);

    std::string str() const;  // "(A1,A2;L1)"
};

// Flattening of mixed argument lists whose entries are themselves flat
// indices. An entry in the anti slot contributes its lin part to anti and
// its anti part to lin (slot swap); an entry in the lin slot contributes
// without swapping.
XiIndex xi_of(std::span<const XiIndex> anti_args, std::span<const XiIndex> lin_args);
IPSymbol ip_of(std::span<const XiIndex> anti_args, std::span<const XiIndex> lin_args);

// Unflattened xi expression tree, as written in input syntax.
struct XiTree {
    std::optional<Name> leaf;
    std::vector<XiTree> anti;
    std::vector<XiTree> lin;

    static XiTree make_leaf(Name n) {
        XiTree t;
        t.leaf = std::move(n);
        return t;
    }
    static XiTree make_node(std::vector<XiTree> a, std::vector<XiTree> l) {
        XiTree t;
        t.anti = std::move(a);
        t.lin = std::move(l);
        return t;
    }
};

XiIndex flatten_xi(const XiTree& tree);

// Commutative monomial in IPSymbols, stored sorted.
using Monomial = std::vector<IPSymbol>;

// Exact polynomial in IPSymbols over the Gaussian rationals.
class Coefficient {
  public:
    Coefficient() = default;
    Coefficient(GRat scalar);
    Coefficient(long long n) : Coefficient(GRat(n)) {}
    Coefficient(const IPSymbol& s);

    static Coefficient term(Monomial m, GRat c);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, GRat>& terms() const { return terms_; }
    GRat coeff(const Monomial& m) const;

    Coefficient conjugate() const;

    // Drops every monomial containing an IPSymbol of total arity >= 3
    // (the symbolic free-field limit).
    Coefficient free_field_limit() const;

    Coefficient& operator+=(const Coefficient& o);
    Coefficient& operator-=(const Coefficient& o);
    friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
    friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
    friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
    Coefficient operator-() const;
    friend bool operator==(const Coefficient&, const Coefficient&) = default;

    std::string str() const;

  private:
    void add_term(const Monomial& m, const GRat& c);
    std::map<Monomial, GRat> terms_;  // zero coefficients absent
};

struct DressedOp {
    enum Kind { Annihilator, Creator };
    Kind kind = Annihilator;
    XiIndex index;

    friend bool operator==(const DressedOp&, const DressedOp&) = default;
    friend std::strong_ordering operator<=>(const DressedOp& a, const DressedOp& b);

    std::string str() const;  // "a[...]" / "adag[...]"
};

DressedOp annihilator(XiIndex idx);
DressedOp creator(XiIndex idx);
DressedOp annihilator(Name base);
DressedOp creator(Name base);

using Word = std::vector<DressedOp>;

struct WordLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                            [](const DressedOp& x, const DressedOp& y) { return x < y; });
    }
};

// Linear combination of operator words with Coefficient coefficients.
class OpPoly {
  public:
    OpPoly() = default;
    OpPoly(Coefficient scalar);                 // scalar times the empty word
    OpPoly(const DressedOp& op);                // single length-1 word
    static OpPoly word(Word w, Coefficient c = Coefficient(1));

    bool is_zero() const { return terms_.empty(); }
    const std::map<Word, Coefficient, WordLess>& terms() const { return terms_; }
    Coefficient scalar_part() const;  // coefficient of the empty word
    size_t term_count() const { return terms_.size(); }

    void add(const Word& w, const Coefficient& c);

    OpPoly& operator+=(const OpPoly& o);
    OpPoly& operator-=(const OpPoly& o);
    friend OpPoly operator+(OpPoly a, const OpPoly& b) { return a += b; }
    friend OpPoly operator-(OpPoly a, const OpPoly& b) { return a -= b; }
    friend OpPoly operator*(const OpPoly& a, const OpPoly& b);
    OpPoly operator-() const;
    friend bool operator==(const OpPoly&, const OpPoly&) = default;

    std::string str() const;

  private:
    std::map<Word, Coefficient, WordLess> terms_;
};

// The deformed commutator [a_(A;L), adag_(A';L')] as a polynomial:
// a scalar (L+A'; A+L'), an annihilator xi(A+L'; L+A'), and a creator
// xi(L+A'; A+L'), with multiset unions throughout.
OpPoly commutator_step(const DressedOp& ann, const DressedOp& cre);

// Adjoint: reverses words, swaps creator/annihilator with slot swap in
// each index, conjugates coefficients. An involution.
OpPoly star(const OpPoly& p);

// Rewrites every word so creators precede annihilators, then sorts the
// creator and annihilator blocks (creators commute, annihilators commute).
// Each rewrite either shortens a word or reduces its inversion count with
// the operator count fixed, so the worklist terminates. The normal form
// is a canonical representative of the algebra element.
OpPoly normal_order(const OpPoly& p);

OpPoly commutator(const OpPoly& a, const OpPoly& b);  // normal_order(ab - ba)

Coefficient vev(const OpPoly& p);

// [aX,[aY,adagZ]] + [aY,[adagZ,aX]] + [adagZ,[aX,aY]] with dressed indices
// allowed; must come back identically zero.
OpPoly check_jacobi(const XiIndex& x, const XiIndex& y, const XiIndex& z);

// phi_f = a_f + adag_f for a real test object f.
OpPoly phi(const Name& f);

}  // namespace lierf
