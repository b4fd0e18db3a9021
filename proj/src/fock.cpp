#include "lierf/fock.hpp"

#include <array>
#include <mutex>
#include <sstream>

namespace lierf {

namespace {

std::mutex g_cache_mutex;

std::vector<XiIndex> sorted(std::vector<XiIndex> v) {
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<XiIndex> without(const std::vector<XiIndex>& v, size_t k) {
    std::vector<XiIndex> r;
    r.reserve(v.size() - 1);
    for (size_t i = 0; i < v.size(); ++i)
        if (i != k) r.push_back(v[i]);
    return r;
}

}  // namespace

Ket Ket::monomial(CreMonomial m, Coefficient c) {
    Ket k;
    if (!c.is_zero()) {
        std::sort(m.begin(), m.end());
        k.terms_[std::move(m)] = std::move(c);
    }
    return k;
}

void Ket::add(const CreMonomial& m, const Coefficient& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = c;
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Ket& Ket::operator+=(const Ket& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

Ket& Ket::operator-=(const Ket& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

Ket operator*(const Coefficient& c, const Ket& k) {
    Ket r;
    for (const auto& [m, cc] : k.terms()) r.add(m, c * cc);
    return r;
}

std::string Ket::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string cs = c.str();
        bool paren = c.terms().size() > 1;
        if (cs != "1" || m.empty()) os << (paren ? "(" + cs + ")" : cs) << (m.empty() ? "" : "*");
        for (const auto& x : m) os << "adag[" << x.str() << "] ";
        os << "|0>";
    }
    return os.str();
}

Ket apply_creator_op(const XiIndex& y, const Ket& k) {
    Ket r;
    for (const auto& [m, c] : k.terms()) {
        CreMonomial nm = m;
        nm.insert(std::lower_bound(nm.begin(), nm.end(), y), y);
        r.add(nm, c);
    }
    return r;
}

namespace {

// a_Y acting on a single creator monomial, via
// a_Y adag_X W|0> = [a_Y, adag_X] W|0> + adag_X a_Y W|0>.
Ket annihilate_monomial(const XiIndex& y, const CreMonomial& mono) {
    static std::map<std::pair<XiIndex, CreMonomial>, Ket> cache;
    if (mono.empty()) return Ket();  // a_Y |0> = 0
    auto key = std::make_pair(y, mono);
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    const XiIndex x = mono.front();
    CreMonomial rest(mono.begin() + 1, mono.end());
    Ket r;
    OpPoly comm = commutator_step(annihilator(y), creator(x));
    for (const auto& [w, c] : comm.terms()) {
        Ket piece = c * Ket::monomial(rest);
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            piece = it->kind == DressedOp::Creator ? apply_creator_op(it->index, piece)
                                                   : apply_annihilator_op(it->index, piece);
        }
        r += piece;
    }
    r += apply_creator_op(x, annihilate_monomial(y, rest));
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    cache.emplace(std::move(key), r);
    return r;
}

}  // namespace

Ket apply_annihilator_op(const XiIndex& y, const Ket& k) {
    Ket r;
    for (const auto& [m, c] : k.terms()) r += c * annihilate_monomial(y, m);
    return r;
}

Ket apply_word(const Word& w, const Ket& k) {
    Ket r = k;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        r = it->kind == DressedOp::Creator ? apply_creator_op(it->index, r)
                                           : apply_annihilator_op(it->index, r);
    }
    return r;
}

Coefficient inner_bruteforce(const Ket& bra, const Ket& ket) {
    Coefficient r;
    for (const auto& [bm, bc] : bra.terms()) {
        // <0| prod a_{Bi} applied to the ket; only the vacuum component survives
        Ket cur = ket;
        for (auto it = bm.rbegin(); it != bm.rend() && !cur.is_zero(); ++it)
            cur = apply_annihilator_op(*it, cur);
        auto vac = cur.terms().find({});
        if (vac != cur.terms().end()) r += bc.conjugate() * vac->second;
    }
    return r;
}

NKet NKet::basis(std::vector<XiIndex> args, Coefficient c) {
    NKet k;
    if (!c.is_zero()) {
        std::sort(args.begin(), args.end());
        k.terms_[std::move(args)] = std::move(c);
    }
    return k;
}

void NKet::add(const std::vector<XiIndex>& args, const Coefficient& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(args);
    if (it == terms_.end()) {
        terms_[args] = c;
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

NKet& NKet::operator+=(const NKet& o) {
    for (const auto& [a, c] : o.terms_) add(a, c);
    return *this;
}

Ket ket_n(const std::vector<XiIndex>& args) {
    static std::map<std::vector<XiIndex>, Ket> cache;
    if (args.empty()) return Ket::vacuum();
    std::vector<XiIndex> key = sorted(args);
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    const size_t n = key.size();
    const XiIndex xn = key.back();
    std::vector<XiIndex> head(key.begin(), key.end() - 1);
    Ket r = apply_creator_op(xn, ket_n(head));
    for (size_t k = 0; k + 1 < n; ++k) {
        std::vector<XiIndex> rest = without(head, k);
        std::array<XiIndex, 2> pair{xn, head[k]};
        rest.push_back(xi_of({}, std::span<const XiIndex>(pair)));
        r -= ket_n(rest);
    }
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    cache.emplace(std::move(key), r);
    return r;
}

Ket expand(const NKet& k) {
    Ket r;
    for (const auto& [args, c] : k.terms()) r += c * ket_n(args);
    return r;
}

NKet apply_creator(const XiIndex& y, const NKet& k) {
    NKet r;
    for (const auto& [args, c] : k.terms()) {
        std::vector<XiIndex> grown = args;
        grown.push_back(y);
        r += NKet::basis(std::move(grown), c);
        for (size_t i = 0; i < args.size(); ++i) {
            std::vector<XiIndex> rest = without(args, i);
            std::array<XiIndex, 2> pair{y, args[i]};
            rest.push_back(xi_of({}, std::span<const XiIndex>(pair)));
            r += NKet::basis(std::move(rest), c);
        }
    }
    return r;
}

NKet apply_annihilator(const XiIndex& y, const NKet& k) {
    // a_Y |X1..Xn>_n = sum_k (adag_{xi(Y;Xk)} + (Y;Xk)) |..no Xk..>_{n-1},
    // re-expressed through apply_creator.
    NKet r;
    std::array<XiIndex, 1> ya{y};
    for (const auto& [args, c] : k.terms()) {
        for (size_t i = 0; i < args.size(); ++i) {
            std::vector<XiIndex> rest = without(args, i);
            std::array<XiIndex, 1> xa{args[i]};
            NKet lower = NKet::basis(rest, c);
            r += apply_creator(xi_of(std::span<const XiIndex>(ya), std::span<const XiIndex>(xa)), lower);
            r += NKet::basis(rest, c * Coefficient(ip_of(std::span<const XiIndex>(ya),
                                                         std::span<const XiIndex>(xa))));
        }
    }
    return r;
}

Coefficient inner_recursive(const std::vector<XiIndex>& bra, const std::vector<XiIndex>& ket) {
    if (bra.size() != ket.size())
        throw std::invalid_argument("inner_recursive: level mismatch (cross-level products are zero)");
    static std::map<std::pair<std::vector<XiIndex>, std::vector<XiIndex>>, Coefficient> cache;
    if (bra.empty()) return Coefficient(1);
    auto key = std::make_pair(bra, sorted(ket));
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    const size_t n = bra.size();
    const XiIndex yn = bra.back();
    std::vector<XiIndex> ybody(bra.begin(), bra.end() - 1);
    std::array<XiIndex, 1> yna{yn};
    Coefficient r;
    for (size_t j = 0; j < n; ++j) {
        std::vector<XiIndex> xrest = without(key.second, j);
        std::array<XiIndex, 1> xa{key.second[j]};
        r += inner_recursive(ybody, xrest) *
             Coefficient(ip_of(std::span<const XiIndex>(yna), std::span<const XiIndex>(xa)));
        for (size_t k = 0; k + 1 < n; ++k) {
            std::vector<XiIndex> ymod = without(ybody, k);
            std::array<XiIndex, 2> lins{yn, ybody[k]};
            ymod.push_back(xi_of(std::span<const XiIndex>(xa), std::span<const XiIndex>(lins)));
            r += inner_recursive(ymod, xrest);
        }
    }
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    cache.emplace(std::move(key), r);
    return r;
}

long long multiplicity(const std::vector<int>& partition) {
    long long r = 1;
    for (int n : partition) {
        if (n < 1) throw std::invalid_argument("multiplicity: parts must be >= 1");
        for (int j = 2; j <= n; ++j) r *= j;        // n!
        for (int j = 2; j <= n - 1; ++j) r *= j;    // (n-1)!
    }
    return r;
}

std::array<std::array<Coefficient, 4>, 4> table1() {
    auto family = [](const Name& n1, const Name& n2) {
        XiIndex g1 = XiIndex::gen(n1), g2 = XiIndex::gen(n2);
        std::array<XiIndex, 2> pair{g1, g2};
        std::array<Ket, 4> f;
        f[0] = ket_n({g1});                                       // |N1>_1 with N1 = first name
        f[1] = Ket::monomial({g1, g2});                           // adag adag |0>
        f[2] = ket_n({xi_of({}, std::span<const XiIndex>(pair))});// |xi(;N1,N2)>_1
        f[3] = ket_n({g1, g2});                                   // |N1,N2>_2
        return f;
    };
    auto rows = family("Y1", "Y2");
    auto cols = family("X1", "X2");
    std::array<std::array<Coefficient, 4>, 4> t;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) t[i][j] = inner_bruteforce(rows[i], cols[j]);
    return t;
}

}  // namespace lierf
