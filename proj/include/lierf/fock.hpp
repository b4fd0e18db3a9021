#pragma once

#include "lierf/algebra.hpp"

namespace lierf {

// Multiset of creator indices applied to the vacuum, stored sorted.
using CreMonomial = std::vector<XiIndex>;

// Linear combination of creator-monomials; the canonical home of all
// vectors in the vacuum sector.
class Ket {
  public:
    Ket() = default;
    static Ket vacuum() {
        Ket k;
        k.terms_[{}] = Coefficient(1);
        return k;
    }
    static Ket monomial(CreMonomial m, Coefficient c = Coefficient(1));

    bool is_zero() const { return terms_.empty(); }
    const std::map<CreMonomial, Coefficient>& terms() const { return terms_; }
    void add(const CreMonomial& m, const Coefficient& c);

    Ket& operator+=(const Ket& o);
    Ket& operator-=(const Ket& o);
    friend Ket operator+(Ket a, const Ket& b) { return a += b; }
    friend Ket operator-(Ket a, const Ket& b) { return a -= b; }
    friend Ket operator*(const Coefficient& c, const Ket& k);
    friend bool operator==(const Ket&, const Ket&) = default;

    std::string str() const;

  private:
    std::map<CreMonomial, Coefficient> terms_;
};

// adag_Y k, in the monomial representation.
Ket apply_creator_op(const XiIndex& y, const Ket& k);

// a_Y k, by recursive application of the commutation relations
// (memoized on the canonical creator multiset).
Ket apply_annihilator_op(const XiIndex& y, const Ket& k);

// Applies an operator word right-to-left to a ket.
Ket apply_word(const Word& w, const Ket& k);

// <bra|ket> through the vacuum expectation of the monomial expansion.
Coefficient inner_bruteforce(const Ket& bra, const Ket& ket);

// ---- the orthogonal n-object hierarchy ----

// Formal combination of orthogonal basis labels |X1..Xn>_n.
class NKet {
  public:
    NKet() = default;
    static NKet basis(std::vector<XiIndex> args, Coefficient c = Coefficient(1));

    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<XiIndex>, Coefficient>& terms() const { return terms_; }
    void add(const std::vector<XiIndex>& args, const Coefficient& c);

    NKet& operator+=(const NKet& o);
    friend NKet operator+(NKet a, const NKet& b) { return a += b; }
    friend bool operator==(const NKet&, const NKet&) = default;

  private:
    std::map<std::vector<XiIndex>, Coefficient> terms_;  // sorted label lists
};

// |X1,...,Xn>_n expanded into creator-monomials via the recursion
// |..>_n = adag_{Xn}|..>_{n-1} - sum_k |...,no Xk,..., xi(;Xn,Xk)>_{n-1}.
// n = 0 gives the vacuum.
Ket ket_n(const std::vector<XiIndex>& args);
Ket expand(const NKet& k);

// adag_Y |X1..Xn>_n = |X1..Xn,Y>_{n+1} + sum_k |..no Xk.., xi(;Y,Xk)>_n,
// extended linearly.
NKet apply_creator(const XiIndex& y, const NKet& k);

// a_Y |X1..Xn>_n re-expressed in the orthogonal basis.
NKet apply_annihilator(const XiIndex& y, const NKet& k);

// <Y1..Yn|X1..Xn>_n by the inner-product recursion; throws on length
// mismatch (cross-level products are handled by inner_bruteforce).
Coefficient inner_recursive(const std::vector<XiIndex>& bra, const std::vector<XiIndex>& ket);

// prod_j nj! (nj-1)! for a partition (all parts >= 1); empty partition -> 1.
long long multiplicity(const std::vector<int>& partition);

// The 4x4 table of inner products among
//   {|Y>_1, adag adag|0>, |xi(;Y1,Y2)>_1, |Y1,Y2>_2}  x  {X versions},
// computed by inner_bruteforce.
std::array<std::array<Coefficient, 4>, 4> table1();

}  // namespace lierf
