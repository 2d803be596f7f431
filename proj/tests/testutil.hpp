#pragma once

#include <random>

#include "ttw/expr.hpp"
#include "ttw/polyring.hpp"
#include "ttw/weyl.hpp"

namespace ttw::testutil {

// Deterministic generators for property tests.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(gen_);
    }

    Rat rational(long max_abs = 9, long max_den = 5) {
        Rat r(integer(-max_abs, max_abs), integer(1, max_den));
        r.canonicalize();
        return r;
    }

    Exp exponent(unsigned max_e = 8) {
        return exp_of(unsigned(integer(0, max_e)), unsigned(integer(0, max_e)),
                      unsigned(integer(0, max_e / 2)), unsigned(integer(0, max_e / 2)),
                      unsigned(integer(0, max_e / 2)));
    }

    ParamPoly poly(unsigned max_terms = 30, unsigned max_e = 8) {
        std::vector<ParamPoly::Term> terms;
        unsigned n = unsigned(integer(0, max_terms));
        for (unsigned i = 0; i < n; ++i) terms.push_back({exponent(max_e), rational()});
        return ParamPoly::from_terms(std::move(terms));
    }

    DiffOp op(unsigned max_order = 3, unsigned max_terms = 6, unsigned max_e = 3) {
        DiffOp r;
        unsigned n = unsigned(integer(1, max_terms));
        for (unsigned i = 0; i < n; ++i) {
            unsigned dt = unsigned(integer(0, max_order));
            unsigned du = unsigned(integer(0, max_order - dt));
            ParamPoly c = poly(3, max_e);
            if (c.is_zero()) c = ParamPoly(rational());
            r.add_term(c, dt, du);
        }
        return r;
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace ttw::testutil
