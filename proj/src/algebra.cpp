#include "lierf/algebra.hpp"

#include <deque>
#include <sstream>

namespace lierf {

namespace {

std::strong_ordering cmp_names(const std::vector<Name>& a, const std::vector<Name>& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a <=> b;
}

std::string join(const std::vector<Name>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i];
    }
    return s;
}

void sorted_insert(std::vector<Name>& dst, const std::vector<Name>& src) {
    dst.insert(dst.end(), src.begin(), src.end());
}

}  // namespace

XiIndex::XiIndex(std::vector<Name> a, std::vector<Name> l) : anti(std::move(a)), lin(std::move(l)) {
    if (anti.empty() && lin.empty()) throw std::invalid_argument("XiIndex: no generators");
    std::sort(anti.begin(), anti.end());
    std::sort(lin.begin(), lin.end());
}

std::strong_ordering operator<=>(const XiIndex& a, const XiIndex& b) {
    if (auto c = cmp_names(a.anti, b.anti); c != 0) return c;
    return cmp_names(a.lin, b.lin);
}

std::string XiIndex::str() const {
    if (is_base()) return lin[0];
    return "xi(" + join(anti) + ";" + join(lin) + ")";
}

IPSymbol::IPSymbol(std::vector<Name> a, std::vector<Name> l) : anti(std::move(a)), lin(std::move(l)) {
    if (anti.empty() || lin.empty())
        throw std::invalid_argument("IPSymbol: inner product is undefined with an empty slot");
    std::sort(anti.begin(), anti.end());
    std::sort(lin.begin(), lin.end());
}

std::strong_ordering operator<=>(const IPSymbol& a, const IPSymbol& b) {
    if (auto c = cmp_names(a.anti, b.anti); c != 0) return c;
    return cmp_names(a.lin, b.lin);
}

std::string IPSymbol::str() const { return "(" + join(anti) + ";" + join(lin) + ")"; }

static void flatten_args(std::span<const XiIndex> anti_args, std::span<const XiIndex> lin_args,
                         std::vector<Name>& anti, std::vector<Name>& lin) {
    for (const XiIndex& e : anti_args) {  // slot swap
        sorted_insert(anti, e.lin);
        sorted_insert(lin, e.anti);
    }
    for (const XiIndex& e : lin_args) {
        sorted_insert(anti, e.anti);
        sorted_insert(lin, e.lin);
    }
}

XiIndex xi_of(std::span<const XiIndex> anti_args, std::span<const XiIndex> lin_args) {
    std::vector<Name> anti, lin;
    flatten_args(anti_args, lin_args, anti, lin);
    return XiIndex(std::move(anti), std::move(lin));
}

IPSymbol ip_of(std::span<const XiIndex> anti_args, std::span<const XiIndex> lin_args) {
    std::vector<Name> anti, lin;
    flatten_args(anti_args, lin_args, anti, lin);
    return IPSymbol(std::move(anti), std::move(lin));
}

XiIndex flatten_xi(const XiTree& tree) {
    if (tree.leaf) return XiIndex::gen(*tree.leaf);
    if (tree.anti.empty() && tree.lin.empty())
        throw std::invalid_argument("flatten_xi: xi() with no generators");
    std::vector<XiIndex> anti_args, lin_args;
    for (const XiTree& t : tree.anti) anti_args.push_back(flatten_xi(t));
    for (const XiTree& t : tree.lin) lin_args.push_back(flatten_xi(t));
    return xi_of(anti_args, lin_args);
}

Coefficient::Coefficient(GRat scalar) {
    if (!scalar.is_zero()) terms_[{}] = scalar;
}

Coefficient::Coefficient(const IPSymbol& s) { terms_[{s}] = GRat(1); }

Coefficient Coefficient::term(Monomial m, GRat c) {
    Coefficient r;
    if (!c.is_zero()) {
        std::sort(m.begin(), m.end());
        r.terms_[std::move(m)] = c;
    }
    return r;
}

GRat Coefficient::coeff(const Monomial& m) const {
    Monomial k = m;
    std::sort(k.begin(), k.end());
    auto it = terms_.find(k);
    return it == terms_.end() ? GRat() : it->second;
}

void Coefficient::add_term(const Monomial& m, const GRat& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_[m] = c;
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
    Coefficient r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            std::sort(m.begin(), m.end());
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

Coefficient Coefficient::operator-() const {
    Coefficient r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

Coefficient Coefficient::conjugate() const {
    Coefficient r;
    for (const auto& [m, c] : terms_) {
        Monomial cm;
        cm.reserve(m.size());
        for (const IPSymbol& s : m) cm.push_back(s.conjugate());
        std::sort(cm.begin(), cm.end());
        r.add_term(cm, c.conj());
    }
    return r;
}

Coefficient Coefficient::free_field_limit() const {
    Coefficient r;
    for (const auto& [m, c] : terms_) {
        bool keep = true;
        for (const IPSymbol& s : m)
            if (s.arity() >= 3) keep = false;
        if (keep) r.add_term(m, c);
    }
    return r;
}

std::string Coefficient::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string cs = c.str();
        bool unit = (c == GRat(1)) && !m.empty();
        if (!unit) os << (cs.find_first_of("+-", 1) != std::string::npos ? "(" + cs + ")" : cs);
        // group repeated symbols into powers
        for (size_t i = 0; i < m.size();) {
            size_t j = i;
            while (j < m.size() && m[j] == m[i]) ++j;
            if (!unit || i > 0) os << "*";
            os << m[i].str();
            if (j - i > 1) os << "^" << (j - i);
            i = j;
        }
    }
    return os.str();
}

std::strong_ordering operator<=>(const DressedOp& a, const DressedOp& b) {
    if (a.kind != b.kind) return a.kind <=> b.kind;
    return a.index <=> b.index;
}

std::string DressedOp::str() const {
    return (kind == Creator ? "adag[" : "a[") + index.str() + "]";
}

DressedOp annihilator(XiIndex idx) { return {DressedOp::Annihilator, std::move(idx)}; }
DressedOp creator(XiIndex idx) { return {DressedOp::Creator, std::move(idx)}; }
DressedOp annihilator(Name base) { return annihilator(XiIndex::gen(std::move(base))); }
DressedOp creator(Name base) { return creator(XiIndex::gen(std::move(base))); }

OpPoly::OpPoly(Coefficient scalar) {
    if (!scalar.is_zero()) terms_[{}] = std::move(scalar);
}

OpPoly::OpPoly(const DressedOp& op) { terms_[{op}] = Coefficient(1); }

OpPoly OpPoly::word(Word w, Coefficient c) {
    OpPoly r;
    if (!c.is_zero()) r.terms_[std::move(w)] = std::move(c);
    return r;
}

Coefficient OpPoly::scalar_part() const {
    auto it = terms_.find({});
    return it == terms_.end() ? Coefficient() : it->second;
}

void OpPoly::add(const Word& w, const Coefficient& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_[w] = c;
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

OpPoly& OpPoly::operator+=(const OpPoly& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

OpPoly& OpPoly::operator-=(const OpPoly& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

OpPoly operator*(const OpPoly& a, const OpPoly& b) {
    OpPoly r;
    for (const auto& [wa, ca] : a.terms_) {
        for (const auto& [wb, cb] : b.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add(w, ca * cb);
        }
    }
    return r;
}

OpPoly OpPoly::operator-() const {
    OpPoly r;
    for (const auto& [w, c] : terms_) r.terms_[w] = -c;
    return r;
}

std::string OpPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string cs = c.str();
        bool paren = c.terms().size() > 1 || cs.find_first_of("+-", 1) != std::string::npos;
        if (w.empty()) {
            os << (paren ? "(" + cs + ")" : cs);
            continue;
        }
        if (cs != "1") os << (paren ? "(" + cs + ")" : cs) << "*";
        for (size_t i = 0; i < w.size(); ++i) {
            if (i) os << " ";
            os << w[i].str();
        }
    }
    return os.str();
}

OpPoly commutator_step(const DressedOp& ann, const DressedOp& cre) {
    if (ann.kind != DressedOp::Annihilator || cre.kind != DressedOp::Creator)
        throw std::invalid_argument("commutator_step: expects (annihilator, creator)");
    const auto& A = ann.index.anti;
    const auto& L = ann.index.lin;
    const auto& Ap = cre.index.anti;
    const auto& Lp = cre.index.lin;
    std::vector<Name> left, right;  // left = L + A', right = A + L'
    sorted_insert(left, L);
    sorted_insert(left, Ap);
    sorted_insert(right, A);
    sorted_insert(right, Lp);
    OpPoly r(Coefficient(IPSymbol(left, right)));
    r += OpPoly(annihilator(XiIndex(right, left)));
    r += OpPoly(creator(XiIndex(left, right)));
    return r;
}

OpPoly star(const OpPoly& p) {
    OpPoly r;
    for (const auto& [w, c] : p.terms()) {
        Word sw;
        sw.reserve(w.size());
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            // adjoint pairs share the same index: (a_Z)^dag = adag_Z
            DressedOp op;
            op.kind = it->kind == DressedOp::Creator ? DressedOp::Annihilator : DressedOp::Creator;
            op.index = it->index;
            sw.push_back(op);
        }
        r.add(sw, c.conjugate());
    }
    return r;
}

OpPoly normal_order(const OpPoly& p) {
    OpPoly result;
    std::deque<std::pair<Word, Coefficient>> work(p.terms().begin(), p.terms().end());
    while (!work.empty()) {
        auto [w, c] = std::move(work.front());
        work.pop_front();
        size_t i = 0;
        bool ordered = true;
        for (; i + 1 < w.size(); ++i) {
            if (w[i].kind == DressedOp::Annihilator && w[i + 1].kind == DressedOp::Creator) {
                ordered = false;
                break;
            }
        }
        if (ordered) {
            // canonical form: sorted creator block, sorted annihilator block
            auto mid = std::partition_point(w.begin(), w.end(), [](const DressedOp& op) {
                return op.kind == DressedOp::Creator;
            });
            std::sort(w.begin(), mid);
            std::sort(mid, w.end());
            result.add(w, c);
            continue;
        }
        Word swapped = w;
        std::swap(swapped[i], swapped[i + 1]);
        work.emplace_back(std::move(swapped), c);
        OpPoly comm = commutator_step(w[i], w[i + 1]);
        Word prefix(w.begin(), w.begin() + i);
        Word suffix(w.begin() + i + 2, w.end());
        for (const auto& [cw, cc] : comm.terms()) {
            Word nw = prefix;
            nw.insert(nw.end(), cw.begin(), cw.end());
            nw.insert(nw.end(), suffix.begin(), suffix.end());
            work.emplace_back(std::move(nw), c * cc);
        }
    }
    return result;
}

OpPoly commutator(const OpPoly& a, const OpPoly& b) { return normal_order(a * b - b * a); }

Coefficient vev(const OpPoly& p) { return normal_order(p).scalar_part(); }

OpPoly check_jacobi(const XiIndex& x, const XiIndex& y, const XiIndex& z) {
    OpPoly ax{annihilator(x)}, ay{annihilator(y)}, cz{creator(z)};
    OpPoly r = commutator(ax, commutator(ay, cz));
    r += commutator(ay, commutator(cz, ax));
    r += commutator(cz, commutator(ax, ay));
    return normal_order(r);
}

OpPoly phi(const Name& f) { return OpPoly(annihilator(f)) + OpPoly(creator(f)); }

}  // namespace lierf
