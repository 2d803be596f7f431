#include "ttw/verify.hpp"

#include <chrono>
#include <map>
#include <mutex>
#include <sstream>

#include "ttw/catalog.hpp"
#include "ttw/hidden_algebra.hpp"
#include "ttw/reduction.hpp"
#include "ttw/repspace.hpp"

namespace ttw::verify {

namespace {

using catalog::ClosureKind;
using catalog::I12Source;
using catalog::ModelParams;
using reduction::Bounds;
using reduction::GeneratorSet;

class Timer {
public:
    Timer() : t0_(std::chrono::steady_clock::now()) {}
    long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point t0_;
};

// One generator set per (k, w-binding); expansions are memoized inside.
GeneratorSet& gens_for(unsigned k, bool omega0) {
    static std::map<std::pair<unsigned, bool>, GeneratorSet> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(k, omega0);
    auto it = cache.find(key);
    if (it == cache.end()) {
        ModelParams mp{k, {}, {}, {}};
        if (omega0) mp.w = Rat(0);
        it = cache
                 .emplace(key, GeneratorSet(catalog::hamiltonian(mp),
                                            catalog::integral1(mp),
                                            catalog::integral2(mp),
                                            catalog::integral12(mp)))
                 .first;
    }
    return it->second;
}

constexpr unsigned kParamCeiling = 16;

// Iterative deepening on param_degree in steps of 2 up to the ceiling. A
// failed depth is cheap (few unknowns, fast contradiction), so starting
// low wins over starting at the target's own coefficient degree.
GenPolynomial reduce_deepening(const DiffOp& target, GeneratorSet& gens,
                               unsigned total_degree) {
    for (unsigned pd = 4;; pd += 2) {
        Bounds bounds;
        bounds.total_degree = total_degree;
        bounds.param_degree = std::min(pd, kParamCeiling);
        bool last = bounds.param_degree >= kParamCeiling;
        try {
            return reduction::reduce_to_generators(
                target, gens, bounds,
                last ? reduction::SolveEffort::Exact
                     : reduction::SolveEffort::Fast);
        } catch (const reduction::NoSolutionError&) {
            if (last) throw;
        }
    }
}

GenPolynomial syzygy_deepening(GeneratorSet& gens, unsigned total_degree) {
    for (unsigned pd = 4;; pd += 2) {
        bool last = pd >= kParamCeiling;
        try {
            return reduction::find_syzygy(
                gens,
                Bounds{total_degree, std::min(pd, kParamCeiling), {255, 255, 255, 1}},
                last ? reduction::SolveEffort::Exact
                     : reduction::SolveEffort::Fast);
        } catch (const reduction::NoSolutionError&) {
            if (last) throw;
        }
    }
}

std::string count_terms(const GenPolynomial& g) {
    return std::to_string(g.term_count()) + " monomials";
}

unsigned syzygy_degree(unsigned k) { return std::max(2 * k, k + 2); }

}  // namespace

VerificationReport commutators(unsigned k) {
    VerificationReport report("commutators k=" + std::to_string(k));
    ModelParams mp{k, {}, {}, {}};
    Timer total;
    DiffOp h = catalog::hamiltonian(mp);
    DiffOp i1 = catalog::integral1(mp);
    DiffOp i2 = catalog::integral2(mp);
    DiffOp i12 = catalog::integral12(mp, I12Source::Computed);

    auto check_order = [&](const char* id, const DiffOp& op, unsigned expect) {
        auto o = op.order();
        if (o && *o == expect)
            report.add_pass(std::string("order ") + id,
                            "= " + std::to_string(expect));
        else
            report.add_fail(std::string("order ") + id);
    };
    check_order("H", h, 2);
    check_order("I1", i1, 2);
    check_order("I2", i2, 2 * k);
    check_order("I12", i12, 2 * k + 1);

    auto check_zero = [&](const std::string& id, const DiffOp& op) {
        Timer t;
        if (op.is_zero())
            report.add_pass(id, "exact zero operator", t.ms());
        else
            report.add_fail(id, "nonzero remainder with " +
                                    std::to_string(op.term_count()) +
                                    " derivative keys");
    };
    check_zero("[H, I1] = 0", commutator(h, i1));
    check_zero("[H, I2] = 0", commutator(h, i2));
    check_zero("[H, I12] = 0", commutator(h, i12));

    {
        Timer t;
        DiffOp stored = catalog::integral12(mp, I12Source::Fixture);
        if (i12 == stored)
            report.add_pass("I12 computed = stored reference", "", t.ms());
        else
            report.add_fail("I12 computed = stored reference");
    }
    {
        Timer t;
        if (i2 * i1 == i1 * i2 - i12)
            report.add_pass("I2 I1 = -I12 + I1 I2", "", t.ms());
        else
            report.add_fail("I2 I1 = -I12 + I1 I2");
    }
    report.add_pass("suite wall time", std::to_string(total.ms()) + " ms");
    return report;
}

VerificationReport closures(unsigned k, bool heavy) {
    VerificationReport report("closures k=" + std::to_string(k));
    if (k == 4 && !heavy) {
        report.add_skip("[I1, I12] closure", "k=4 requires the heavy tier");
        report.add_skip("[I2, I12] closure", "k=4 requires the heavy tier");
        report.add_skip("minimal degree", "k=4 requires the heavy tier");
        return report;
    }
    GeneratorSet& gens = gens_for(k, false);
    DiffOp i1 = gens.generator(1), i2 = gens.generator(2), i12 = gens.generator(3);

    {
        Timer t;
        DiffOp target = commutator(i1, i12);
        GenPolynomial got = reduce_deepening(target, gens, k + 1);
        GenPolynomial expect = catalog::expected_closure(k, ClosureKind::DoubleI1);
        if (got == expect)
            report.add_pass("[I1, I12] closure", count_terms(got), t.ms());
        else
            report.add_fail("[I1, I12] closure",
                            "got " + got.to_string().substr(0, 400));
    }
    {
        Timer t;
        DiffOp target = commutator(i2, i12);
        GenPolynomial got = reduce_deepening(target, gens, k + 1);
        GenPolynomial expect = catalog::expected_closure(k, ClosureKind::DoubleI2);
        if (got == expect)
            report.add_pass("[I2, I12] closure", count_terms(got), t.ms());
        else
            report.add_fail("[I2, I12] closure",
                            "got " + got.to_string().substr(0, 400));
    }
    {
        // At total degree k the bounded space has no representation.
        Timer t;
        Bounds bounds;
        bounds.total_degree = k;
        bounds.param_degree = kParamCeiling;
        bool no_solution = false;
        try {
            reduction::reduce_to_generators(commutator(i1, i12), gens, bounds);
        } catch (const reduction::NoSolutionError&) {
            no_solution = true;
        }
        if (no_solution)
            report.add_pass("minimal degree",
                            "no solution at degree " + std::to_string(k) +
                                ", solution at " + std::to_string(k + 1),
                            t.ms());
        else
            report.add_fail("minimal degree",
                            "unexpected representation at degree " +
                                std::to_string(k));
    }
    return report;
}

VerificationReport syzygies(unsigned k, bool heavy) {
    VerificationReport report("syzygies k=" + std::to_string(k));
    if (k == 4 && !heavy) {
        report.add_skip("I12^2 identity", "k=4 requires the heavy tier");
        report.add_skip("syzygy discovery", "k=4 requires the heavy tier");
        report.add_skip("syzygy at w=0", "k=4 requires the heavy tier");
        return report;
    }
    GeneratorSet& gens = gens_for(k, false);

    if (k <= 3) {
        Timer t;
        DiffOp lhs = gens.expand(gen_mono(0, 0, 0, 2));
        GenPolynomial expect = catalog::expected_closure(k, ClosureKind::Syzygy);
        DiffOp rhs = gens.expand(expect);
        if (lhs == rhs)
            report.add_pass("I12^2 identity",
                            "I12^2 - R = 0 with the stored R (" +
                                count_terms(expect) + ")",
                            t.ms());
        else
            report.add_fail("I12^2 identity", "nonzero residual");

        Timer td;
        GenPolynomial found = syzygy_deepening(gens, syzygy_degree(k));
        if (found == expect)
            report.add_pass("syzygy discovery", "matches the stored relation",
                            td.ms());
        else
            report.add_fail("syzygy discovery",
                            "relation differs from the stored one: " +
                                found.to_string().substr(0, 400));
    } else {
        // No printed general-w relation exists at k=4: discovery plus the
        // built-in re-substitution proof is the acceptance itself.
        Timer t;
        GenPolynomial found = syzygy_deepening(gens, syzygy_degree(k));
        report.add_pass("syzygy discovery",
                        "verified relation of total degree " +
                            std::to_string(found.total_degree()) + " with " +
                            count_terms(found),
                        t.ms());
    }

    {
        Timer t;
        GeneratorSet& g0 = gens_for(k, true);
        GenPolynomial expect0 =
            catalog::expected_closure(k, ClosureKind::SyzygyOmega0);
        DiffOp lhs = g0.expand(gen_mono(0, 0, 0, 2));
        DiffOp rhs = g0.expand(expect0);
        if (lhs == rhs)
            report.add_pass("syzygy at w=0",
                            "I12^2 - R = 0 with the stored R (" +
                                count_terms(expect0) + ")",
                            t.ms());
        else
            report.add_fail("syzygy at w=0", "nonzero residual");
    }
    return report;
}

VerificationReport spectrum(unsigned k) {
    VerificationReport report("spectrum k=" + std::to_string(k));
    ModelParams mp{k, {}, {}, {}};
    DiffOp h = catalog::hamiltonian(mp);

    {
        Timer t;
        bool ok = true;
        std::string fail;
        for (unsigned N = 0; N <= 8 && ok; ++N) {
            std::vector<ParamPoly> diag;
            try {
                diag = repspace::spectrum(h, N, k);
            } catch (const Error& e) {
                ok = false;
                fail = e.what();
                break;
            }
            repspace::MonomialBasis basis = repspace::basis(N, k);
            for (std::size_t i = 0; i < basis.size(); ++i) {
                auto [p, q] = basis.elements[i];
                ParamPoly expect =
                    poly_const(4 * (long(p) + long(k) * q)) * ParamPoly::variable(Var::W);
                if (diag[i] != expect) {
                    ok = false;
                    fail = "eigenvalue mismatch at (p,q)=(" + std::to_string(p) +
                           "," + std::to_string(q) + ")";
                }
            }
        }
        if (ok)
            report.add_pass("graded-triangular spectrum",
                            "diagonal = 4w(p+kq), s=k, N<=8", t.ms());
        else
            report.add_fail("graded-triangular spectrum", fail);
    }

    for (unsigned s : {k - 1, k}) {
        if (s < 1) continue;
        Timer t;
        VerificationReport flags = repspace::flag_check(h, s, 6);
        std::string id = "flag s=" + std::to_string(s) + " N<=6";
        if (flags.passed())
            report.add_pass(id, "", t.ms());
        else
            report.add_fail(id, flags.to_text(false));
    }

    if (k >= 3) {
        Timer t;
        bool fired = false;
        std::string detail;
        try {
            repspace::matrix_of(h, 4, k - 2);
        } catch (const repspace::NotInvariantError& e) {
            fired = true;
            detail = e.what();
        }
        if (fired)
            report.add_pass("not-invariant detection s=k-2", detail, t.ms());
        else
            report.add_fail("not-invariant detection s=k-2",
                            "expected the invariance check to fail");
    }
    return report;
}

VerificationReport hidden(unsigned k) {
    VerificationReport report("hidden-algebra k=" + std::to_string(k));
    {
        // Structure checks for the tower at s = k; the full s <= 6 sweep
        // lives in the acceptance suite.
        Timer t;
        bool ok = true;
        for (const Rat& N : {Rat(0), Rat(3), Rat(5, 7)}) {
            VerificationReport r = hidden::verify_structure({k, N});
            if (!r.passed()) {
                ok = false;
                report.add_fail("structure s=" + std::to_string(k) +
                                    " N=" + rat_to_string(N),
                                r.to_text(false));
            }
        }
        if (ok)
            report.add_pass("structure s=" + std::to_string(k),
                            "checked at three rational N", t.ms());
    }

    ModelParams mp{k, {}, {}, {}};
    auto express_check = [&](const std::string& id, const DiffOp& target,
                             unsigned s) {
        Timer t;
        auto combo = hidden::express_in_generators(target, {s, Rat(0)}, 2);
        if (combo)
            report.add_pass(id, std::to_string(combo->terms.size()) + " terms",
                            t.ms());
        else
            report.add_fail(id, "no representation at product degree 2");
    };
    express_check("I1 in generators s=k", catalog::integral1(mp), k);
    express_check("H in generators s=k", catalog::hamiltonian(mp), k);
    if (k >= 2)
        express_check("H in generators s=k-1", catalog::hamiltonian(mp), k - 1);
    return report;
}

VerificationReport conjecture(unsigned k) {
    VerificationReport report("conjecture k=" + std::to_string(k));
    auto [q_lead, r_lead] = catalog::conjecture_forms(k);

    {
        Timer t;
        GeneratorSet& g0 = gens_for(k, true);
        DiffOp target = commutator(g0.generator(2), g0.generator(3));
        GenPolynomial got = reduce_deepening(target, g0, k + 1);
        if (got == q_lead)
            report.add_pass("[I2, I12] at w=0 matches the conjectured form",
                            count_terms(got), t.ms());
        else
            report.add_fail("[I2, I12] at w=0 matches the conjectured form",
                            "got " + got.to_string());
    }
    {
        Timer t;
        GenPolynomial expect0 =
            catalog::expected_closure(k, ClosureKind::SyzygyOmega0);
        if (expect0 == r_lead)
            report.add_pass("w=0 syzygy matches the conjectured leading form",
                            count_terms(expect0), t.ms());
        else
            report.add_fail("w=0 syzygy matches the conjectured leading form");
    }
    return report;
}

VerificationReport all(unsigned k, bool heavy) {
    VerificationReport report("all k=" + std::to_string(k));
    report.merge(commutators(k));
    report.merge(closures(k, heavy));
    report.merge(syzygies(k, heavy));
    report.merge(spectrum(k));
    report.merge(hidden(k));
    report.merge(conjecture(k));
    return report;
}

VerificationReport suite_by_name(const std::string& name, unsigned k, bool heavy) {
    if (name == "commutators") return commutators(k);
    if (name == "closures") return closures(k, heavy);
    if (name == "syzygies") return syzygies(k, heavy);
    if (name == "spectrum") return spectrum(k);
    if (name == "hidden") return hidden(k);
    if (name == "conjecture") return conjecture(k);
    if (name == "all") return all(k, heavy);
    throw Error("unknown suite: " + name);
}

}  // namespace ttw::verify
