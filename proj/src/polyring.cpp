#include "ttw/polyring.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace ttw {

namespace {
// Descending graded-lex: leading term first.
bool term_before(const ParamPoly::Term& x, const ParamPoly::Term& y) {
    return y.exp < x.exp;
}

struct PackHash {
    std::size_t operator()(unsigned __int128 k) const {
        std::uint64_t lo = static_cast<std::uint64_t>(k);
        std::uint64_t hi = static_cast<std::uint64_t>(k >> 64);
        std::uint64_t h = hi * 0x9e3779b97f4a7c15ull ^ lo;
        h ^= h >> 29;
        h *= 0xbf58476d1ce4e5b9ull;
        h ^= h >> 32;
        return static_cast<std::size_t>(h);
    }
};
}  // namespace

ParamPoly ParamPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), term_before);
    ParamPoly r;
    r.terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (t.coeff == 0) continue;
        if (!r.terms_.empty() && r.terms_.back().exp == t.exp) {
            r.terms_.back().coeff += t.coeff;
            if (r.terms_.back().coeff == 0) r.terms_.pop_back();
        } else {
            r.terms_.push_back(std::move(t));
        }
    }
    return r;
}

unsigned ParamPoly::degree_in(Var v) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max<unsigned>(d, t.exp[v]);
    return d;
}

unsigned ParamPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.exp.total_degree());
    return d;
}

unsigned ParamPoly::param_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_)
        d = std::max<unsigned>(d, unsigned(t.exp[Var::A]) + t.exp[Var::B] + t.exp[Var::W]);
    return d;
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
    // Merge of two sorted term lists.
    ParamPoly r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].exp == o.terms_[j].exp) {
            Rat c = terms_[i].coeff + o.terms_[j].coeff;
            if (c != 0) r.terms_.push_back({terms_[i].exp, std::move(c)});
            ++i, ++j;
        } else if (o.terms_[j].exp < terms_[i].exp) {
            r.terms_.push_back(terms_[i]);
            ++i;
        } else {
            r.terms_.push_back(o.terms_[j]);
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const { return *this + (-o); }

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) { return *this = *this + o; }
ParamPoly& ParamPoly::operator-=(const ParamPoly& o) { return *this = *this - o; }

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    if (o.terms_.size() == 1) {
        // Common case in operator composition: multiply by a monomial.
        ParamPoly r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_)
            r.terms_.push_back({t.exp.plus(o.terms_[0].exp), t.coeff * o.terms_[0].coeff});
        return r;  // monomial shift preserves the ordering
    }
    std::unordered_map<unsigned __int128, std::pair<Exp, Rat>, PackHash> acc;
    acc.reserve(terms_.size() * o.terms_.size() / 2 + 8);
    for (const auto& x : terms_) {
        for (const auto& y : o.terms_) {
            Exp m = x.exp.plus(y.exp);
            auto [it, fresh] = acc.try_emplace(m.pack(), m, Rat(0));
            it->second.second += x.coeff * y.coeff;
        }
    }
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [k, v] : acc)
        if (v.second != 0) terms.push_back({v.first, std::move(v.second)});
    std::sort(terms.begin(), terms.end(), term_before);
    ParamPoly r;
    r.terms_ = std::move(terms);
    return r;
}

ParamPoly ParamPoly::operator*(const Rat& c) const {
    if (c == 0) return {};
    ParamPoly r(*this);
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

ParamPoly ParamPoly::derivative(Var v) const {
    if (v != Var::T && v != Var::U)
        throw Error("derivative only in t or u; parameters are constants");
    ParamPoly r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        unsigned e = t.exp[v];
        if (e == 0) continue;
        Term d;
        d.exp = t.exp;
        d.exp[v] = static_cast<std::uint16_t>(e - 1);
        d.coeff = t.coeff * Rat(static_cast<long>(e));
        r.terms_.push_back(std::move(d));
    }
    // Dropping one exponent keeps the relative descending order intact
    // except for degree ties, so re-sort to stay canonical.
    std::sort(r.terms_.begin(), r.terms_.end(), term_before);
    return r;
}

ParamPoly ParamPoly::eval_params(const std::map<Var, Rat>& bind) const {
    for (const auto& [v, val] : bind)
        if (v == Var::T || v == Var::U)
            throw Error("eval_params binds parameters a, b, w only");
    return eval(bind);
}

ParamPoly ParamPoly::eval(const std::map<Var, Rat>& bind) const {
    if (bind.empty()) return *this;
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Rat c = t.coeff;
        Exp m = t.exp;
        for (const auto& [v, val] : bind) {
            unsigned e = m[v];
            if (e > 0) {
                Rat pw = 1;
                Rat base = val;
                unsigned n = e;
                while (n) {
                    if (n & 1) pw *= base;
                    base *= base;
                    n >>= 1;
                }
                c *= pw;
                m[v] = 0;
            }
        }
        out.push_back({m, std::move(c)});
    }
    return from_terms(std::move(out));
}

Rat ParamPoly::coefficient(const Exp& m) const {
    for (const auto& t : terms_)
        if (t.exp == m) return t.coeff;
    return Rat(0);
}

std::string ParamPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rat c = t.coeff;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool printed = false;
        if (c != 1 || t.exp.is_constant()) {
            os << rat_to_string(c);
            printed = true;
        }
        for (int i = 0; i < kNumVars; ++i) {
            unsigned e = t.exp.e[i];
            if (e == 0) continue;
            if (printed) os << "*";
            os << kVarNames[i];
            if (e > 1) os << "^" << e;
            printed = true;
        }
    }
    return os.str();
}

ParamPoly poly_const(long num, long den) {
    Rat c(num, den);
    c.canonicalize();
    return ParamPoly(c);
}

ParamPoly poly_mono(const Rat& c, unsigned t, unsigned u, unsigned a, unsigned b,
                    unsigned w) {
    return ParamPoly(c, exp_of(t, u, a, b, w));
}

}  // namespace ttw
