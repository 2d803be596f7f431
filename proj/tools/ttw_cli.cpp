#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ttw/catalog.hpp"
#include "ttw/expr.hpp"
#include "ttw/json_io.hpp"
#include "ttw/reduction.hpp"
#include "ttw/repspace.hpp"
#include "ttw/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNoSolution = 3;

#ifndef TTW_SOURCE_FIXTURES
#define TTW_SOURCE_FIXTURES "fixtures"
#endif

std::string fixtures_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("TTW_FIXTURES"); env && *env) return env;
    if (std::filesystem::exists("fixtures")) return "fixtures";
    return TTW_SOURCE_FIXTURES;
}

ttw::DiffOp catalog_op(unsigned k, const std::string& which) {
    ttw::catalog::ModelParams mp{k, {}, {}, {}};
    if (which == "H") return ttw::catalog::hamiltonian(mp);
    if (which == "I1") return ttw::catalog::integral1(mp);
    if (which == "I2") return ttw::catalog::integral2(mp);
    return ttw::catalog::integral12(mp);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-")
        std::cout << text << "\n";
    else
        ttw::write_file(out_path, text + "\n");
}

struct FixtureItem {
    std::string rel;
    std::string content;
};

std::vector<FixtureItem> fixture_documents() {
    using namespace ttw;
    using catalog::ClosureKind;
    std::vector<FixtureItem> items;
    for (unsigned k = 1; k <= 4; ++k) {
        std::string base = "k" + std::to_string(k) + "/";
        catalog::ModelParams mp{k, {}, {}, {}};
        items.push_back({base + "H.json", diffop_to_json(catalog::hamiltonian(mp))});
        items.push_back({base + "I1.json", diffop_to_json(catalog::integral1(mp))});
        items.push_back({base + "I2.json", diffop_to_json(catalog::integral2(mp))});
        items.push_back(
            {base + "I12.json",
             diffop_to_json(catalog::integral12(mp, catalog::I12Source::Fixture))});
        auto closure = [&](ClosureKind kind, const std::string& name) {
            try {
                items.push_back({base + "closures/" + name + ".json",
                                 genpoly_to_json(catalog::expected_closure(k, kind))});
            } catch (const catalog::NotPrintedError&) {
                // no stored form (general-w syzygy at k=4)
            }
        };
        closure(ClosureKind::DoubleI1, "doubleI1");
        closure(ClosureKind::DoubleI2, "doubleI2");
        closure(ClosureKind::Syzygy, "syzygy");
        closure(ClosureKind::SyzygyOmega0, "syzygy_omega0");
    }
    return items;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact symbolic kernel and verification suite for the TTW "
                 "superintegrable system at integer index k"};
    app.require_subcommand(1);
    argv = app.ensure_utf8(argv);

    // ---- catalog ----
    auto* cat = app.add_subcommand("catalog", "Print a catalog operator");
    unsigned cat_k = 1;
    std::string cat_which = "H", cat_format = "json", cat_out;
    cat->add_option("--k", cat_k, "model index (1..4)")->required();
    cat->add_option("--which", cat_which, "H, I1, I2 or I12")
        ->check(CLI::IsMember({"H", "I1", "I2", "I12"}))
        ->required();
    cat->add_option("--format", cat_format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    cat->add_option("--out", cat_out, "output file (default stdout)");

    // ---- commute ----
    auto* com = app.add_subcommand("commute", "Commutator of two operator files");
    std::string com_a, com_b, com_out;
    com->add_option("fileA", com_a, "diffop-v1 JSON")->required();
    com->add_option("fileB", com_b, "diffop-v1 JSON")->required();
    com->add_option("--out", com_out, "output file (default stdout)");

    // ---- verify ----
    auto* ver = app.add_subcommand("verify", "Run a verification suite");
    unsigned ver_k = 1;
    std::string ver_suite = "all", ver_format = "text";
    bool ver_heavy = false, ver_no_timing = false;
    ver->add_option("--k", ver_k, "model index (1..4)")->required();
    ver->add_option("--suite", ver_suite,
                    "commutators, closures, syzygies, spectrum, hidden, "
                    "conjecture or all")
        ->check(CLI::IsMember({"commutators", "closures", "syzygies", "spectrum",
                               "hidden", "conjecture", "all"}));
    ver->add_flag("--heavy", ver_heavy, "run the long k=4 closure/syzygy tier");
    ver->add_flag("--no-timing", ver_no_timing,
                  "omit timing for byte-deterministic reports");
    ver->add_option("--format", ver_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // ---- reduce ----
    auto* red = app.add_subcommand(
        "reduce", "Express a target operator in ordered generator monomials");
    std::string red_target, red_out;
    std::vector<std::string> red_gens;
    unsigned red_k = 0, red_total = 2, red_param = 0, red_i12cap = 1;
    red->add_option("--target", red_target, "diffop-v1 JSON target")->required();
    red->add_option("--k", red_k, "use the catalog generators for this k");
    red->add_option("--gens", red_gens,
                    "four diffop-v1 files: H, I1, I2, I12")
        ->expected(4);
    red->add_option("--total-degree", red_total, "total monomial degree bound")
        ->required();
    red->add_option("--param-degree", red_param,
                    "coefficient degree bound in a,b,w (default: target+2)");
    red->add_option("--cap-i12", red_i12cap, "exponent cap for I12 (default 1)");
    red->add_option("--out", red_out, "output file (default stdout)");

    // ---- spectrum ----
    auto* spec = app.add_subcommand("spectrum",
                                    "Eigenvalues of h_k on the space P_N^(s)");
    unsigned sp_k = 1, sp_N = 0, sp_s = 1;
    std::string sp_omega;
    spec->add_option("--k", sp_k, "model index (any k >= 1)")->required();
    spec->add_option("--N", sp_N, "flag level N >= 0")->required();
    spec->add_option("--s", sp_s, "grading weight s >= 1")->required();
    spec->add_option("--omega", sp_omega, "optional rational binding for w");

    // ---- fixtures ----
    auto* fix = app.add_subcommand("fixtures",
                                   "Write or check the fixture directory");
    std::string fix_dir;
    bool fix_write = false, fix_check = false;
    fix->add_option("--dir", fix_dir,
                    "fixture directory (default: $TTW_FIXTURES or ./fixtures)");
    fix->add_flag("--write", fix_write, "regenerate all fixture files");
    fix->add_flag("--check", fix_check, "verify files match the built-in tables");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*cat) {
            if (cat_k < 1 || cat_k > 4) {
                std::cerr << "no catalog integral for k=" << cat_k << "\n";
                return kExitUsage;
            }
            ttw::DiffOp op = catalog_op(cat_k, cat_which);
            emit(cat_format == "text" ? ttw::print_operator(op)
                                      : ttw::diffop_to_json(op),
                 cat_out);
            return kExitPass;
        }
        if (*com) {
            ttw::DiffOp a = ttw::load_diffop(com_a);
            ttw::DiffOp b = ttw::load_diffop(com_b);
            emit(ttw::diffop_to_json(commutator(a, b)), com_out);
            return kExitPass;
        }
        if (*ver) {
            if (ver_k < 1 || ver_k > 4) {
                std::cerr << "verify requires k in 1..4\n";
                return kExitUsage;
            }
            ttw::VerificationReport report =
                ttw::verify::suite_by_name(ver_suite, ver_k, ver_heavy);
            std::cout << (ver_format == "json" ? report.to_json(!ver_no_timing)
                                               : report.to_text(!ver_no_timing));
            return report.passed() ? kExitPass : kExitFail;
        }
        if (*red) {
            ttw::DiffOp target = ttw::load_diffop(red_target);
            ttw::DiffOp h, i1, i2, i12;
            if (!red_gens.empty()) {
                h = ttw::load_diffop(red_gens[0]);
                i1 = ttw::load_diffop(red_gens[1]);
                i2 = ttw::load_diffop(red_gens[2]);
                i12 = ttw::load_diffop(red_gens[3]);
            } else if (red_k >= 1 && red_k <= 4) {
                h = catalog_op(red_k, "H");
                i1 = catalog_op(red_k, "I1");
                i2 = catalog_op(red_k, "I2");
                i12 = catalog_op(red_k, "I12");
            } else {
                std::cerr << "reduce needs --gens or --k in 1..4\n";
                return kExitUsage;
            }
            ttw::reduction::GeneratorSet gens(h, i1, i2, i12);
            ttw::reduction::Bounds bounds;
            bounds.total_degree = red_total;
            unsigned pd = red_param;
            if (pd == 0) {
                for (const auto& [d, coeff] : target.terms())
                    pd = std::max(pd, coeff.param_degree());
                pd += 2;
            }
            bounds.param_degree = pd;
            bounds.caps[3] = red_i12cap;
            try {
                ttw::GenPolynomial g =
                    ttw::reduction::reduce_to_generators(target, gens, bounds);
                emit(ttw::genpoly_to_json(g), red_out);
                return kExitPass;
            } catch (const ttw::reduction::NoSolutionError& e) {
                std::cerr << "no solution: " << e.what() << "\n";
                return kExitNoSolution;
            }
        }
        if (*spec) {
            ttw::catalog::ModelParams mp{sp_k, {}, {}, {}};
            if (!sp_omega.empty()) {
                auto slash = sp_omega.find('/');
                mp.w = slash == std::string::npos
                           ? ttw::rat_from_strings(sp_omega, "1")
                           : ttw::rat_from_strings(sp_omega.substr(0, slash),
                                                   sp_omega.substr(slash + 1));
            }
            ttw::DiffOp h = ttw::catalog::hamiltonian(mp);
            try {
                auto diag = ttw::repspace::spectrum(h, sp_N, sp_s);
                auto basis = ttw::repspace::basis(sp_N, sp_s);
                std::cout << "p\tq\teigenvalue\n";
                for (std::size_t i = 0; i < basis.size(); ++i)
                    std::cout << basis.elements[i].first << "\t"
                              << basis.elements[i].second << "\t"
                              << diag[i].to_string() << "\n";
                return kExitPass;
            } catch (const ttw::Error& e) {
                std::cerr << e.what() << "\n";
                return kExitFail;
            }
        }
        if (*fix) {
            if (fix_write == fix_check) {
                std::cerr << "fixtures requires exactly one of --write/--check\n";
                return kExitUsage;
            }
            std::string dir = fixtures_dir(fix_dir);
            bool ok = true;
            for (const auto& item : fixture_documents()) {
                std::filesystem::path path = std::filesystem::path(dir) / item.rel;
                if (fix_write) {
                    std::filesystem::create_directories(path.parent_path());
                    ttw::write_file(path.string(), item.content + "\n");
                } else {
                    try {
                        if (ttw::read_file(path.string()) != item.content + "\n") {
                            std::cerr << "stale fixture: " << path.string() << "\n";
                            ok = false;
                        }
                    } catch (const ttw::Error&) {
                        std::cerr << "missing fixture: " << path.string() << "\n";
                        ok = false;
                    }
                }
            }
            if (fix_write) std::cout << "fixtures written to " << dir << "\n";
            else std::cout << (ok ? "fixtures match" : "fixtures differ") << "\n";
            return ok ? kExitPass : kExitFail;
        }
    } catch (const ttw::FormatError& e) {
        std::cerr << "format error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ttw::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
