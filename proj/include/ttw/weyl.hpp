#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ttw/polyring.hpp"

namespace ttw {

// Derivative part of an operator term: d/dt^dt d/du^du.
struct DerivOrd {
    std::uint16_t dt = 0;
    std::uint16_t du = 0;
    unsigned total() const { return unsigned(dt) + du; }
    bool operator==(const DerivOrd& o) const { return dt == o.dt && du == o.du; }
    bool operator<(const DerivOrd& o) const {
        if (dt != o.dt) return dt < o.dt;
        return du < o.du;
    }
};

// Differential operator sum p_ij(t,u;a,b,w) d/dt^i d/du^j in normal form:
// coefficients to the left, derivatives to the right, no zero coefficients.
// The zero operator is the empty term map; its order is std::nullopt.
class DiffOp {
public:
    DiffOp() = default;

    static DiffOp zero() { return {}; }
    static DiffOp identity() { return DiffOp(ParamPoly::one(), {0, 0}); }
    static DiffOp deriv(unsigned dt, unsigned du) {
        return DiffOp(ParamPoly::one(),
                      {static_cast<std::uint16_t>(dt), static_cast<std::uint16_t>(du)});
    }
    // Multiplication operator by a polynomial.
    static DiffOp mult(const ParamPoly& p) { return DiffOp(p, {0, 0}); }

    DiffOp(const ParamPoly& coeff, DerivOrd d) {
        if (!coeff.is_zero()) terms_[d] = coeff;
    }

    bool is_zero() const { return terms_.empty(); }
    std::optional<unsigned> order() const {
        if (terms_.empty()) return std::nullopt;
        unsigned m = 0;
        for (const auto& [d, p] : terms_) m = std::max(m, d.total());
        return m;
    }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<DerivOrd, ParamPoly>& terms() const { return terms_; }
    const ParamPoly* coeff(unsigned dt, unsigned du) const {
        auto it = terms_.find({static_cast<std::uint16_t>(dt),
                               static_cast<std::uint16_t>(du)});
        return it == terms_.end() ? nullptr : &it->second;
    }

    bool operator==(const DiffOp& o) const { return terms_ == o.terms_; }
    bool operator!=(const DiffOp& o) const { return !(*this == o); }

    DiffOp operator-() const;
    DiffOp operator+(const DiffOp& o) const;
    DiffOp operator-(const DiffOp& o) const;
    DiffOp& operator+=(const DiffOp& o);
    DiffOp& operator-=(const DiffOp& o);

    // Operator composition (noncommutative), normal-ordered via Leibniz.
    DiffOp operator*(const DiffOp& o) const;

    // Central scalars: multiply coefficients only.
    DiffOp scaled(const ParamPoly& s) const;
    DiffOp scaled(const Rat& c) const;

    // Exact image of a polynomial under the operator.
    ParamPoly apply(const ParamPoly& p) const;

    // Substitute parameters in every coefficient (a, b, w only).
    DiffOp eval_params(const std::map<Var, Rat>& bind) const;

    // Adds c * p * d/dt^dt d/du^du to the term map. Used by builders.
    void add_term(const ParamPoly& p, unsigned dt, unsigned du);

private:
    std::map<DerivOrd, ParamPoly> terms_;
};

// Sum of scalar-weighted operators in normal form.
DiffOp op_linear(const std::vector<std::pair<ParamPoly, DiffOp>>& parts);

inline DiffOp commutator(const DiffOp& a, const DiffOp& b) { return a * b - b * a; }

// Exact binomial with cached small table.
const Int& binomial(unsigned n, unsigned k);

// t and u as multiplication operators, handy in tests and builders.
inline DiffOp op_t() { return DiffOp::mult(ParamPoly::variable(Var::T)); }
inline DiffOp op_u() { return DiffOp::mult(ParamPoly::variable(Var::U)); }
inline DiffOp op_dt() { return DiffOp::deriv(1, 0); }
inline DiffOp op_du() { return DiffOp::deriv(0, 1); }

}  // namespace ttw
