#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ttw/rational.hpp"

namespace ttw {

// The five polynomial variables, in canonical priority order.
enum class Var : int { T = 0, U = 1, A = 2, B = 3, W = 4 };

inline constexpr int kNumVars = 5;
inline constexpr const char* kVarNames[kNumVars] = {"t", "u", "a", "b", "w"};

// Exponents are capped well above anything the operator tables produce;
// products that exceed the cap are an error, not a wrap-around.
inline constexpr std::uint32_t kExponentCap = 1u << 15;

// Exponent vector of a monomial t^e0 u^e1 a^e2 b^e3 w^e4.
struct Exp {
    std::array<std::uint16_t, 5> e{0, 0, 0, 0, 0};

    std::uint16_t operator[](Var v) const { return e[static_cast<int>(v)]; }
    std::uint16_t& operator[](Var v) { return e[static_cast<int>(v)]; }

    unsigned total_degree() const {
        return unsigned(e[0]) + e[1] + e[2] + e[3] + e[4];
    }
    bool is_constant() const { return total_degree() == 0; }

    Exp plus(const Exp& o) const {
        Exp r;
        for (int i = 0; i < 5; ++i) {
            std::uint32_t s = std::uint32_t(e[i]) + o.e[i];
            if (s >= kExponentCap) throw OverflowError("monomial exponent overflow");
            r.e[i] = static_cast<std::uint16_t>(s);
        }
        return r;
    }

    bool operator==(const Exp& o) const { return e == o.e; }

    // Graded-lex with priority t > u > a > b > w. "Less" means smaller
    // total degree, ties broken by lex from t.
    bool operator<(const Exp& o) const {
        unsigned d1 = total_degree(), d2 = o.total_degree();
        if (d1 != d2) return d1 < d2;
        return e < o.e;
    }

    unsigned __int128 pack() const {
        unsigned __int128 k = 0;
        for (int i = 0; i < 5; ++i) k = (k << 16) | e[i];
        return k;
    }
};

inline Exp exp_of(unsigned t, unsigned u = 0, unsigned a = 0, unsigned b = 0,
                  unsigned w = 0) {
    if (t >= kExponentCap || u >= kExponentCap || a >= kExponentCap ||
        b >= kExponentCap || w >= kExponentCap)
        throw OverflowError("monomial exponent overflow");
    Exp r;
    r.e = {std::uint16_t(t), std::uint16_t(u), std::uint16_t(a), std::uint16_t(b),
           std::uint16_t(w)};
    return r;
}

struct ExpHash {
    std::size_t operator()(const Exp& x) const {
        unsigned __int128 k = x.pack();
        std::uint64_t lo = static_cast<std::uint64_t>(k);
        std::uint64_t hi = static_cast<std::uint64_t>(k >> 64);
        std::uint64_t h = hi * 0x9e3779b97f4a7c15ull ^ lo;
        h ^= h >> 29;
        h *= 0xbf58476d1ce4e5b9ull;
        h ^= h >> 32;
        return static_cast<std::size_t>(h);
    }
};

// Exact multivariate polynomial in t, u, a, b, w over the rationals.
// Terms are kept sorted in descending graded-lex order with no zero
// coefficients, so equality is plain term-by-term comparison.
class ParamPoly {
public:
    struct Term {
        Exp exp;
        Rat coeff;
        bool operator==(const Term& o) const {
            return exp == o.exp && coeff == o.coeff;
        }
    };

    ParamPoly() = default;
    explicit ParamPoly(const Rat& c) {
        if (c != 0) terms_.push_back({Exp{}, c});
    }
    ParamPoly(const Rat& c, const Exp& m) {
        if (c != 0) terms_.push_back({m, c});
    }

    static ParamPoly zero() { return ParamPoly(); }
    static ParamPoly one() { return ParamPoly(Rat(1)); }
    static ParamPoly variable(Var v) {
        Exp m;
        m[v] = 1;
        return ParamPoly(Rat(1), m);
    }
    // Canonicalizes an arbitrary term list (sorts, merges, drops zeros).
    static ParamPoly from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].exp.is_constant());
    }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    // Max exponent of one variable; 0 for the zero polynomial.
    unsigned degree_in(Var v) const;
    unsigned total_degree() const;  // 0 for the zero polynomial
    // Max total degree in a, b, w only.
    unsigned param_degree() const;

    bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const ParamPoly& o) const { return !(*this == o); }

    ParamPoly operator-() const;
    ParamPoly operator+(const ParamPoly& o) const;
    ParamPoly operator-(const ParamPoly& o) const;
    ParamPoly operator*(const ParamPoly& o) const;
    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }

    ParamPoly operator*(const Rat& c) const;

    // Exact partial derivative; only t and u are differentiation variables.
    ParamPoly derivative(Var v) const;

    // Substitutes the bound parameters (keys restricted to a, b, w) and
    // returns the polynomial in the remaining variables.
    ParamPoly eval_params(const std::map<Var, Rat>& bind) const;

    // Full evaluation of selected variables (any subset), used by tests
    // and the fast-fail screens.
    ParamPoly eval(const std::map<Var, Rat>& bind) const;

    // Coefficient of a single monomial (zero if absent).
    Rat coefficient(const Exp& m) const;

    // Plain-text rendering in canonical order, parseable by ttw::parse_poly.
    std::string to_string() const;

private:
    std::vector<Term> terms_;
};

inline ParamPoly operator*(const Rat& c, const ParamPoly& p) { return p * c; }

// Convenience constructors used all over the catalog and the tests.
ParamPoly poly_const(long num, long den = 1);
ParamPoly poly_mono(const Rat& c, unsigned t, unsigned u = 0, unsigned a = 0,
                    unsigned b = 0, unsigned w = 0);

}  // namespace ttw
