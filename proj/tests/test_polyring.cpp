#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "testutil.hpp"
#include "ttw/polyring.hpp"

using namespace ttw;

namespace {
ParamPoly T() { return ParamPoly::variable(Var::T); }
ParamPoly U() { return ParamPoly::variable(Var::U); }
ParamPoly A() { return ParamPoly::variable(Var::A); }
ParamPoly B() { return ParamPoly::variable(Var::B); }
ParamPoly W() { return ParamPoly::variable(Var::W); }
}  // namespace

TEST_CASE("addition merges and cancels") {
    CHECK((T() + U()) + (T() - U()) == poly_const(2) * T());
    ParamPoly p = A() * T() * T() - B() * U() + poly_const(5, 2);
    CHECK(p + ParamPoly() == p);
    CHECK(A() * T() + B() * T() == (A() + B()) * T());
    CHECK((p - p).is_zero());
}

TEST_CASE("multiplication basics") {
    CHECK((T() + U()) * (T() - U()) == T() * T() - U() * U());
    // (2b+1) t^(k-1) at k=3
    ParamPoly f = (poly_const(2) * B() + poly_const(1)) * T() * T();
    CHECK(f == poly_mono(Rat(2), 2, 0, 0, 1) + poly_mono(Rat(1), 2));
    CHECK((ParamPoly() * f).is_zero());
}

TEST_CASE("derivative") {
    // d/dt (t^3 u) = 3 t^2 u
    CHECK(poly_mono(Rat(1), 3, 1).derivative(Var::T) == poly_mono(Rat(3), 2, 1));
    // d/du (w t^2) = 0
    CHECK(poly_mono(Rat(1), 2, 0, 0, 0, 1).derivative(Var::U).is_zero());
    // d/du (u (t - u)) = t - 2u
    ParamPoly p = U() * (T() - U());
    CHECK(p.derivative(Var::U) == T() - poly_const(2) * U());
    CHECK_THROWS_AS(T().derivative(Var::A), Error);
}

TEST_CASE("derivative cross-checked by evaluation at random points") {
    testutil::Rng rng(2024);
    ParamPoly p = U() * (T() - U());
    ParamPoly d = p.derivative(Var::U);
    for (int i = 0; i < 5; ++i) {
        Rat t0 = rng.rational(), u0 = rng.rational();
        // Difference quotient of a quadratic at step h recovers the exact
        // derivative via central differences.
        Rat h(1, 7);
        std::map<Var, Rat> up{{Var::T, t0}, {Var::U, u0 + h}};
        std::map<Var, Rat> dn{{Var::T, t0}, {Var::U, u0 - h}};
        std::map<Var, Rat> at{{Var::T, t0}, {Var::U, u0}};
        Rat lhs = (p.eval(up).coefficient(Exp{}) - p.eval(dn).coefficient(Exp{})) / (2 * h);
        CHECK(lhs == d.eval(at).coefficient(Exp{}));
    }
}

TEST_CASE("parameter evaluation") {
    // bind w=0 on 4wt - 4(a+b+1)
    ParamPoly p = poly_const(4) * W() * T() - poly_const(4) * (A() + B() + poly_const(1));
    ParamPoly q = p.eval_params({{Var::W, Rat(0)}});
    CHECK(q == -poly_const(4) * (A() + B() + poly_const(1)));

    // the I1 coefficient 16((a+b)^2 - 1) at a=b=0 (w binding irrelevant)
    ParamPoly c = poly_const(16) * ((A() + B()) * (A() + B()) - poly_const(1));
    ParamPoly bound =
        c.eval_params({{Var::A, Rat(0)}, {Var::B, Rat(0)}, {Var::W, Rat(0)}});
    CHECK(bound == poly_const(-16));

    CHECK(p.eval_params({}) == p);
    CHECK_THROWS_AS(p.eval_params({{Var::T, Rat(1)}}), Error);
}

TEST_CASE("ring axioms on random instances") {
    testutil::Rng rng(7);
    for (int i = 0; i < 40; ++i) {
        ParamPoly p = rng.poly(), q = rng.poly(), r = rng.poly();
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
    }
}

TEST_CASE("product rule and linearity of the derivative") {
    testutil::Rng rng(11);
    for (int i = 0; i < 25; ++i) {
        ParamPoly p = rng.poly(12, 5), q = rng.poly(12, 5);
        for (Var v : {Var::T, Var::U}) {
            CHECK((p * q).derivative(v) ==
                  p * q.derivative(v) + q * p.derivative(v));
            CHECK((p + q).derivative(v) == p.derivative(v) + q.derivative(v));
        }
    }
}

TEST_CASE("canonical form is idempotent") {
    testutil::Rng rng(13);
    for (int i = 0; i < 20; ++i) {
        ParamPoly p = rng.poly();
        auto terms = p.terms();
        CHECK(ParamPoly::from_terms({terms.begin(), terms.end()}) == p);
        for (const auto& t : p.terms()) CHECK(t.coeff != 0);
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    testutil::Rng rng(17);
    for (int i = 0; i < 20; ++i) {
        ParamPoly p = rng.poly(10, 4), q = rng.poly(10, 4);
        std::map<Var, Rat> bind{{Var::A, rng.rational()}, {Var::W, rng.rational()}};
        CHECK((p * q).eval_params(bind) ==
              p.eval_params(bind) * q.eval_params(bind));
        CHECK((p + q).eval_params(bind) ==
              p.eval_params(bind) + q.eval_params(bind));
    }
}

TEST_CASE("exponent cap is enforced") {
    ParamPoly big = poly_mono(Rat(1), 30000);
    CHECK_THROWS_AS(big * big, OverflowError);
}

TEST_CASE("canonical term order is graded-lex, t before u before parameters") {
    ParamPoly p = U() + T() + W() + T() * T();
    const auto& terms = p.terms();
    REQUIRE(terms.size() == 4);
    CHECK(terms[0].exp == exp_of(2));
    CHECK(terms[1].exp == exp_of(1));
    CHECK(terms[2].exp == exp_of(0, 1));
    CHECK(terms[3].exp == exp_of(0, 0, 0, 0, 1));
}
