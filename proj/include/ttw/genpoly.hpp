#pragma once

#include <array>
#include <map>
#include <string>

#include "ttw/polyring.hpp"

namespace ttw {

// Exponents (n, m, p, q) of an ordered monomial H^n I1^m I2^p I12^q.
// The associated operator is the composition in exactly that order.
struct GenMonomial {
    std::array<std::uint8_t, 4> e{0, 0, 0, 0};

    unsigned n() const { return e[0]; }
    unsigned m() const { return e[1]; }
    unsigned p() const { return e[2]; }
    unsigned q() const { return e[3]; }
    unsigned total_degree() const {
        return unsigned(e[0]) + e[1] + e[2] + e[3];
    }

    bool operator==(const GenMonomial& o) const { return e == o.e; }
    // Graded-lex, H highest priority; "less" = smaller degree first.
    bool operator<(const GenMonomial& o) const {
        unsigned d1 = total_degree(), d2 = o.total_degree();
        if (d1 != d2) return d1 < d2;
        return e < o.e;
    }
    std::string to_string() const;
};

inline GenMonomial gen_mono(unsigned n, unsigned m = 0, unsigned p = 0,
                            unsigned q = 0) {
    GenMonomial g;
    g.e = {std::uint8_t(n), std::uint8_t(m), std::uint8_t(p), std::uint8_t(q)};
    return g;
}

// Polynomial in ordered generator monomials with coefficients in Q[a,b,w].
// Stored leading-monomial-first (descending graded-lex); no zero coefficients.
class GenPolynomial {
public:
    GenPolynomial() = default;

    bool is_zero() const { return coeffs_.empty(); }
    std::size_t term_count() const { return coeffs_.size(); }
    unsigned total_degree() const;

    const std::map<GenMonomial, ParamPoly>& coeffs() const { return coeffs_; }
    ParamPoly coefficient(const GenMonomial& g) const;

    void add(const GenMonomial& g, const ParamPoly& c);

    GenPolynomial operator+(const GenPolynomial& o) const;
    GenPolynomial operator-(const GenPolynomial& o) const;
    bool operator==(const GenPolynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const GenPolynomial& o) const { return !(*this == o); }

    // Specialization w -> 0 (or any parameter binding).
    GenPolynomial eval_params(const std::map<Var, Rat>& bind) const;

    // Human-readable rendering, leading monomial first.
    std::string to_string() const;

private:
    std::map<GenMonomial, ParamPoly> coeffs_;
};

}  // namespace ttw
