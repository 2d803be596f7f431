#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "testutil.hpp"
#include "ttw/weyl.hpp"

using namespace ttw;

TEST_CASE("canonical commutation") {
    CHECK(op_dt() * op_t() == op_t() * op_dt() + DiffOp::identity());
    CHECK(commutator(op_dt(), op_t()) == DiffOp::identity());
    CHECK(commutator(op_du(), op_u()) == DiffOp::identity());
    CHECK(commutator(op_dt(), op_u()).is_zero());
}

TEST_CASE("composition examples") {
    // (t Dt)^2 = t^2 Dt^2 + t Dt; both sides send t^n to n^2 t^n.
    DiffOp tdt = op_t() * op_dt();
    DiffOp expect;
    expect.add_term(poly_mono(Rat(1), 2), 2, 0);
    expect.add_term(poly_mono(Rat(1), 1), 1, 0);
    CHECK(tdt * tdt == expect);
    for (unsigned n = 0; n <= 5; ++n) {
        ParamPoly tn = poly_mono(Rat(1), n);
        CHECK((tdt * tdt).apply(tn) == poly_mono(Rat(long(n) * long(n)), n));
    }

    // (u Dt^2) o (t Du) = u t Dt^2 Du + 2 u Dt Du
    DiffOp lhs = DiffOp(ParamPoly::variable(Var::U), {2, 0}) *
                 DiffOp(ParamPoly::variable(Var::T), {0, 1});
    DiffOp rhs;
    rhs.add_term(poly_mono(Rat(1), 1, 1), 2, 1);
    rhs.add_term(poly_mono(Rat(2), 0, 1), 1, 1);
    CHECK(lhs == rhs);
}

TEST_CASE("linear combinations with central scalars") {
    testutil::Rng rng(23);
    DiffOp a = rng.op();
    CHECK(op_linear({{ParamPoly::one(), a}, {poly_const(-1), a}}).is_zero());
    DiffOp wdt = op_linear({{ParamPoly::variable(Var::W), op_dt()}});
    REQUIRE(wdt.coeff(1, 0) != nullptr);
    CHECK(*wdt.coeff(1, 0) == ParamPoly::variable(Var::W));
}

TEST_CASE("apply/compose oracle on monomials") {
    // The ground truth for composition: applying A∘B to a monomial must give
    // the same polynomial as applying B then A.
    testutil::Rng rng(31);
    for (int iter = 0; iter < 200; ++iter) {
        DiffOp a = rng.op(), b = rng.op();
        DiffOp ab = a * b;
        unsigned p = unsigned(rng.integer(0, 6));
        unsigned q = unsigned(rng.integer(0, 6));
        ParamPoly mono = poly_mono(Rat(1), p, q);
        CHECK(ab.apply(mono) == a.apply(b.apply(mono)));
    }
    // Exhaustive sweep over all monomials with p+q <= 12 for a few pairs.
    for (int iter = 0; iter < 5; ++iter) {
        DiffOp a = rng.op(), b = rng.op();
        DiffOp ab = a * b;
        for (unsigned p = 0; p <= 12; ++p)
            for (unsigned q = 0; p + q <= 12; ++q) {
                ParamPoly mono = poly_mono(Rat(1), p, q);
                CHECK(ab.apply(mono) == a.apply(b.apply(mono)));
            }
    }
}

TEST_CASE("associativity of composition") {
    testutil::Rng rng(37);
    for (int iter = 0; iter < 60; ++iter) {
        DiffOp a = rng.op(), b = rng.op(), c = rng.op();
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("commutator properties") {
    testutil::Rng rng(41);
    for (int iter = 0; iter < 40; ++iter) {
        DiffOp a = rng.op(2, 4, 2), b = rng.op(2, 4, 2), c = rng.op(2, 4, 2);
        // Antisymmetry and bilinearity
        CHECK(commutator(a, b) == -commutator(b, a));
        CHECK(commutator(a + b, c) == commutator(a, c) + commutator(b, c));
        // Jacobi identity
        DiffOp jacobi = commutator(a, commutator(b, c)) +
                        commutator(b, commutator(c, a)) +
                        commutator(c, commutator(a, b));
        CHECK(jacobi.is_zero());
    }
}

TEST_CASE("order bounds") {
    CHECK(!DiffOp::zero().order().has_value());
    CHECK(DiffOp::identity().order() == 0u);
    testutil::Rng rng(43);
    for (int iter = 0; iter < 60; ++iter) {
        DiffOp a = rng.op(), b = rng.op();
        auto oa = a.order(), ob = b.order();
        DiffOp ab = a * b;
        if (oa && ob) {
            if (auto o = ab.order()) CHECK(*o <= *oa + *ob);
            DiffOp comm = commutator(a, b);
            if (auto o = comm.order()) {
                REQUIRE(*oa + *ob >= 1);
                CHECK(*o <= *oa + *ob - 1);
            }
        } else {
            CHECK(ab.is_zero());
        }
    }
}

TEST_CASE("scaled by zero polynomial is the zero operator") {
    testutil::Rng rng(47);
    DiffOp a = rng.op();
    CHECK(a.scaled(ParamPoly()).is_zero());
    CHECK(a.scaled(Rat(0)).is_zero());
}
