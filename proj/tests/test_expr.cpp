#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "testutil.hpp"
#include "ttw/expr.hpp"

using namespace ttw;

TEST_CASE("basic parses") {
    CHECK(parse_operator("Dt*t - t*Dt") == DiffOp::identity());
    CHECK(parse_operator("0").is_zero());
    CHECK(parse_operator("Dt") == op_dt());
    CHECK(parse_operator("3/4") == DiffOp::mult(poly_const(3, 4)));
    CHECK(parse_operator("t^2*u") == DiffOp::mult(poly_mono(Rat(1), 2, 1)));
    CHECK(parse_operator("-t") == DiffOp::mult(-ParamPoly::variable(Var::T)));
    CHECK(parse_operator("2^3") == DiffOp::mult(poly_const(8)));
}

TEST_CASE("Dt*t normalizes inside the parser") {
    DiffOp expect = op_t() * op_dt() + DiffOp::identity();
    CHECK(parse_operator("Dt*t") == expect);
}

TEST_CASE("whitespace and unary minus") {
    CHECK(parse_operator(" t +\n u ") == parse_operator("t+u"));
    CHECK(parse_operator("-t + u") == parse_operator("u - t"));
    CHECK(parse_operator("- t*u") == parse_operator("-(t*u)"));
    CHECK(parse_operator("1/2*t") == DiffOp::mult(poly_mono(Rat(1, 2), 1)));
}

TEST_CASE("precedence: caret over star over plus") {
    CHECK(parse_operator("2*t^2") == DiffOp::mult(poly_mono(Rat(2), 2)));
    CHECK(parse_operator("t+u*a") ==
          DiffOp::mult(ParamPoly::variable(Var::T) +
                       ParamPoly::variable(Var::U) * ParamPoly::variable(Var::A)));
}

TEST_CASE("syntax errors carry position") {
    CHECK_THROWS_AS(parse_operator("t +"), SyntaxError);
    CHECK_THROWS_AS(parse_operator("x"), SyntaxError);
    CHECK_THROWS_AS(parse_operator("(t"), SyntaxError);
    CHECK_THROWS_AS(parse_operator("t^a"), SyntaxError);
    try {
        parse_operator("t +\n  q");
    } catch (const SyntaxError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 3);
    }
    CHECK_THROWS_AS(parse_operator("t^99999"), SyntaxError);
}

TEST_CASE("printing basics") {
    CHECK(print_operator(DiffOp::zero()) == "0");
    CHECK(print_operator(op_dt()) == "Dt");
    DiffOp h;
    h.add_term(poly_mono(Rat(-4), 1), 2, 0);
    CHECK(print_operator(h) == "-4*t*Dt^2");
}

TEST_CASE("round-trip: parse after print is the identity") {
    testutil::Rng rng(53);
    for (int iter = 0; iter < 1000; ++iter) {
        DiffOp a = rng.op(4, 5, 4);
        CHECK(parse_operator(print_operator(a)) == a);
    }
}

TEST_CASE("print after parse is idempotent") {
    const char* sources[] = {
        "Dt*t - t*Dt",
        "-4*t*Dt^2 - 8*u*Dt*Du - 4*u*Du^2 + 4*(w*t - a - b - 1)*Dt + "
        "4*(w*u - b - 1/2)*Du",
        "t^2*u - 1/3*a*b*w",
        "0",
    };
    for (const char* src : sources) {
        std::string once = print_operator(parse_operator(src));
        std::string twice = print_operator(parse_operator(once));
        CHECK(once == twice);
    }
}

TEST_CASE("polynomial-only parser rejects derivatives") {
    CHECK(parse_poly("(t+u)^2") ==
          parse_poly("t^2 + 2*t*u + u^2"));
    CHECK_THROWS_AS(parse_poly("Dt"), Error);
}
