#include "ttw/hidden_algebra.hpp"

#include <sstream>

#include "ttw/reduction.hpp"

namespace ttw::hidden {

namespace {

ParamPoly tvar() { return ParamPoly::variable(Var::T); }
ParamPoly uvar() { return ParamPoly::variable(Var::U); }

DiffOp euler_cartan(const AlgebraParams& ap) {
    DiffOp j0;
    j0.add_term(tvar(), 1, 0);
    j0.add_term(poly_const(ap.s) * uvar(), 0, 1);
    j0 += DiffOp::mult(ParamPoly(-ap.N));
    return j0;
}

Int falling_factorial(unsigned s, unsigned i) {
    Int f = 1;
    for (unsigned j = 0; j < i; ++j) f *= long(s) - long(j);
    return f;
}

}  // namespace

DiffOp generator(const GeneratorId& id, const AlgebraParams& ap) {
    if (ap.s < 1) throw Error("generator requires s >= 1");
    switch (id.tag) {
        case Tag::J1:
            return op_dt();
        case Tag::J2: {
            DiffOp op;
            op.add_term(tvar(), 1, 0);
            op += DiffOp::mult(ParamPoly(-ap.N / 3));
            return op;
        }
        case Tag::J3: {
            DiffOp op;
            op.add_term(poly_const(ap.s) * uvar(), 0, 1);
            op += DiffOp::mult(ParamPoly(-ap.N / 3));
            return op;
        }
        case Tag::J4: {
            DiffOp op;
            op.add_term(poly_mono(Rat(1), 2), 1, 0);
            op.add_term(poly_const(ap.s) * tvar() * uvar(), 0, 1);
            op.add_term(ParamPoly(-ap.N) * tvar(), 0, 0);
            return op;
        }
        case Tag::J0:
            return euler_cartan(ap);
        case Tag::R: {
            if (id.i > ap.s)
                throw Error("R(i) requires 0 <= i <= s");
            return DiffOp(poly_mono(Rat(1), id.i), {0, 1});
        }
        case Tag::T: {
            if (id.i > ap.s) return DiffOp::zero();
            DiffOp op(uvar(), {static_cast<std::uint16_t>(ap.s - id.i), 0});
            DiffOp j0 = euler_cartan(ap);
            for (unsigned j = 0; j < id.i; ++j)
                op = op * (j0 + DiffOp::mult(poly_const(j)));
            return op;
        }
    }
    throw Error("unreachable generator tag");
}

std::vector<DiffOp> t_tower_by_commutators(const AlgebraParams& ap) {
    if (ap.s < 1) throw Error("t_tower requires s >= 1");
    DiffOp j4 = generator({Tag::J4}, ap);
    std::vector<DiffOp> tower;
    DiffOp bracket = generator({Tag::T, 0}, ap);
    for (unsigned i = 0; i <= ap.s; ++i) {
        DiffOp closed = generator({Tag::T, i}, ap);
        Rat norm(falling_factorial(ap.s, i));
        if (i % 2 == 1) norm = -norm;
        if (bracket != closed.scaled(norm))
            throw Error("t-tower mismatch between nested commutators and closed "
                        "form at i=" + std::to_string(i));
        tower.push_back(closed);
        bracket = commutator(j4, bracket);
    }
    if (!bracket.is_zero())
        throw Error("t-tower does not terminate: [J4, T_s] != 0");
    return tower;
}

VerificationReport verify_structure(const AlgebraParams& ap) {
    VerificationReport report("hidden-algebra s=" + std::to_string(ap.s) +
                              " N=" + rat_to_string(ap.N));
    if (ap.s < 1 || ap.s > 6) {
        report.add_fail("parameters", "s must be in 1..6 for structure checks");
        return report;
    }

    std::vector<DiffOp> R, T;
    for (unsigned i = 0; i <= ap.s; ++i) {
        R.push_back(generator({Tag::R, i}, ap));
        T.push_back(generator({Tag::T, i}, ap));
    }

    bool ok = true;
    for (unsigned i = 0; i <= ap.s && ok; ++i)
        for (unsigned j = i + 1; j <= ap.s && ok; ++j)
            if (!commutator(R[i], R[j]).is_zero()) {
                report.add_fail("R commutative",
                                "[R" + std::to_string(i) + ", R" + std::to_string(j) +
                                    "] != 0");
                ok = false;
            }
    if (ok) report.add_pass("R commutative");

    ok = true;
    for (unsigned i = 0; i <= ap.s && ok; ++i)
        for (unsigned j = i + 1; j <= ap.s && ok; ++j)
            if (!commutator(T[i], T[j]).is_zero()) {
                report.add_fail("T commutative",
                                "[T" + std::to_string(i) + ", T" + std::to_string(j) +
                                    "] != 0");
                ok = false;
            }
    if (ok) report.add_pass("T commutative");

    try {
        t_tower_by_commutators(ap);
        report.add_pass("T tower consistency");
    } catch (const Error& e) {
        report.add_fail("T tower consistency", e.what());
    }

    if (generator({Tag::T, ap.s + 1}, ap).is_zero() &&
        generator({Tag::T, ap.s + 3}, ap).is_zero())
        report.add_pass("T nilpotency", "T(i) = 0 for i > s");
    else
        report.add_fail("T nilpotency");

    // gl(2) closure: each bracket is a rational combination of J1..J4 and 1.
    std::vector<DiffOp> J{generator({Tag::J1}, ap), generator({Tag::J2}, ap),
                          generator({Tag::J3}, ap), generator({Tag::J4}, ap)};
    std::vector<DiffOp> span = J;
    span.push_back(DiffOp::identity());
    std::ostringstream table;
    bool closed = true;
    for (unsigned i = 0; i < 4 && closed; ++i)
        for (unsigned j = i + 1; j < 4 && closed; ++j) {
            DiffOp br = commutator(J[i], J[j]);
            auto combo = reduction::solve_operator_combination(br, span, 0);
            if (!combo) {
                report.add_fail("gl2 closure", "[J" + std::to_string(i + 1) + ", J" +
                                                   std::to_string(j + 1) +
                                                   "] leaves the span");
                closed = false;
                break;
            }
            table << "[J" << i + 1 << ",J" << j + 1 << "]=";
            bool any = false;
            static const char* names[5] = {"J1", "J2", "J3", "J4", "1"};
            for (unsigned g = 0; g < 5; ++g) {
                if ((*combo)[g].is_zero()) continue;
                table << (any ? "+" : "") << "(" << (*combo)[g].to_string() << ")"
                      << names[g];
                any = true;
            }
            if (!any) table << "0";
            table << " ";
        }
    if (closed) report.add_pass("gl2 closure", table.str());

    unsigned dim = 4 + 2 * (ap.s + 1);
    if (dim == 2 * ap.s + 6)
        report.add_pass("generating set size",
                        std::to_string(dim) + " = 2s+6 generators");
    else
        report.add_fail("generating set size");
    return report;
}

std::optional<GenCombination> express_in_generators(const DiffOp& target,
                                                    const AlgebraParams& ap,
                                                    unsigned max_product_degree) {
    if (max_product_degree < 1) throw Error("max_product_degree must be >= 1");
    GenCombination combo;
    combo.generators = {{Tag::J1}, {Tag::J2}, {Tag::J3}, {Tag::J4}};
    for (unsigned i = 0; i <= ap.s; ++i) combo.generators.push_back({Tag::R, i});
    for (unsigned i = 0; i <= ap.s; ++i) combo.generators.push_back({Tag::T, i});

    std::vector<DiffOp> gen_ops;
    for (const auto& id : combo.generators) gen_ops.push_back(generator(id, ap));

    // Ordered products of at most max_product_degree generators, composed
    // in the fixed generator order.
    std::vector<std::vector<unsigned>> exponents;
    std::vector<unsigned> cur(gen_ops.size(), 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t idx,
                                                         unsigned remaining) {
        if (idx == gen_ops.size()) {
            exponents.push_back(cur);
            return;
        }
        for (unsigned e = 0; e <= remaining; ++e) {
            cur[idx] = e;
            rec(idx + 1, remaining - e);
        }
        cur[idx] = 0;
    };
    rec(0, max_product_degree);

    std::vector<DiffOp> candidates;
    candidates.reserve(exponents.size());
    for (const auto& exps : exponents) {
        DiffOp prod = DiffOp::identity();
        for (std::size_t g = 0; g < exps.size(); ++g)
            for (unsigned e = 0; e < exps[g]; ++e) prod = prod * gen_ops[g];
        candidates.push_back(std::move(prod));
    }

    unsigned param_degree = target.is_zero() ? 0 : 2;
    for (const auto& [d, coeff] : target.terms())
        param_degree = std::max(param_degree, coeff.param_degree() + 2);
    auto coeffs =
        reduction::solve_operator_combination(target, candidates, param_degree);
    if (!coeffs) return std::nullopt;
    for (std::size_t i = 0; i < exponents.size(); ++i)
        if (!(*coeffs)[i].is_zero()) combo.terms.emplace(exponents[i], (*coeffs)[i]);
    return combo;
}

}  // namespace ttw::hidden
