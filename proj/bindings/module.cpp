#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ttw/catalog.hpp"
#include "ttw/expr.hpp"
#include "ttw/json_io.hpp"
#include "ttw/reduction.hpp"
#include "ttw/repspace.hpp"
#include "ttw/verify.hpp"

namespace py = pybind11;
using namespace ttw;

namespace {

catalog::ModelParams make_params(unsigned k, const std::string& a,
                                 const std::string& b, const std::string& w) {
    catalog::ModelParams mp{k, {}, {}, {}};
    auto parse = [](const std::string& s) -> Rat {
        auto slash = s.find('/');
        if (slash == std::string::npos) return rat_from_strings(s, "1");
        return rat_from_strings(s.substr(0, slash), s.substr(slash + 1));
    };
    if (!a.empty()) mp.a = parse(a);
    if (!b.empty()) mp.b = parse(b);
    if (!w.empty()) mp.w = parse(w);
    return mp;
}

}  // namespace

PYBIND11_MODULE(_ttwcore, m) {
    m.doc() = "Exact Weyl-algebra kernel for the TTW system at integer k";

    py::register_exception<reduction::NoSolutionError>(m, "NoSolutionError");
    py::register_exception<repspace::NotInvariantError>(m, "NotInvariantError");
    py::register_exception<repspace::NotTriangularError>(m, "NotTriangularError");
    py::register_exception<Error>(m, "KernelError");

    py::class_<ParamPoly>(m, "Poly")
        .def(py::init([](const std::string& src) { return parse_poly(src); }))
        .def("__str__", &ParamPoly::to_string)
        .def("__eq__", [](const ParamPoly& a, const ParamPoly& b) { return a == b; })
        .def("__add__", [](const ParamPoly& a, const ParamPoly& b) { return a + b; })
        .def("__sub__", [](const ParamPoly& a, const ParamPoly& b) { return a - b; })
        .def("__mul__", [](const ParamPoly& a, const ParamPoly& b) { return a * b; })
        .def("is_zero", &ParamPoly::is_zero)
        .def("to_json", [](const ParamPoly& p) { return poly_to_json(p); });

    py::class_<DiffOp>(m, "Operator")
        .def(py::init([](const std::string& src) { return parse_operator(src); }))
        .def("__str__", [](const DiffOp& op) { return print_operator(op); })
        .def("__eq__", [](const DiffOp& a, const DiffOp& b) { return a == b; })
        .def("__add__", [](const DiffOp& a, const DiffOp& b) { return a + b; })
        .def("__sub__", [](const DiffOp& a, const DiffOp& b) { return a - b; })
        .def("__mul__", [](const DiffOp& a, const DiffOp& b) { return a * b; })
        .def("__neg__", [](const DiffOp& a) { return -a; })
        .def("is_zero", &DiffOp::is_zero)
        .def("order",
             [](const DiffOp& op) -> py::object {
                 auto o = op.order();
                 if (!o) return py::none();
                 return py::int_(*o);
             })
        .def("apply", [](const DiffOp& op, const ParamPoly& p) { return op.apply(p); })
        .def("to_json", [](const DiffOp& op) { return diffop_to_json(op); })
        .def_static("from_json",
                    [](const std::string& text) { return diffop_from_json(text); });

    py::class_<GenPolynomial>(m, "GenPoly")
        .def("__str__", &GenPolynomial::to_string)
        .def("__eq__",
             [](const GenPolynomial& a, const GenPolynomial& b) { return a == b; })
        .def("is_zero", &GenPolynomial::is_zero)
        .def("term_count", &GenPolynomial::term_count)
        .def("total_degree", &GenPolynomial::total_degree)
        .def("to_json", [](const GenPolynomial& g) { return genpoly_to_json(g); })
        .def_static("from_json",
                    [](const std::string& text) { return genpoly_from_json(text); });

    m.def("commutator",
          [](const DiffOp& a, const DiffOp& b) { return commutator(a, b); });

    m.def(
        "hamiltonian",
        [](unsigned k, const std::string& a, const std::string& b,
           const std::string& w) {
            return catalog::hamiltonian(make_params(k, a, b, w));
        },
        py::arg("k"), py::arg("a") = "", py::arg("b") = "", py::arg("w") = "");
    m.def(
        "integral1",
        [](unsigned k, const std::string& a, const std::string& b,
           const std::string& w) {
            return catalog::integral1(make_params(k, a, b, w));
        },
        py::arg("k"), py::arg("a") = "", py::arg("b") = "", py::arg("w") = "");
    m.def(
        "integral2",
        [](unsigned k, const std::string& a, const std::string& b,
           const std::string& w) {
            return catalog::integral2(make_params(k, a, b, w));
        },
        py::arg("k"), py::arg("a") = "", py::arg("b") = "", py::arg("w") = "");
    m.def(
        "integral12",
        [](unsigned k, bool stored) {
            return catalog::integral12(catalog::ModelParams{k, {}, {}, {}},
                                       stored ? catalog::I12Source::Fixture
                                              : catalog::I12Source::Computed);
        },
        py::arg("k"), py::arg("stored") = false);

    m.def(
        "expected_closure",
        [](unsigned k, const std::string& which) {
            using catalog::ClosureKind;
            ClosureKind kind;
            if (which == "doubleI1") kind = ClosureKind::DoubleI1;
            else if (which == "doubleI2") kind = ClosureKind::DoubleI2;
            else if (which == "syzygy") kind = ClosureKind::Syzygy;
            else if (which == "syzygy_omega0") kind = ClosureKind::SyzygyOmega0;
            else throw Error("unknown closure kind: " + which);
            return catalog::expected_closure(k, kind);
        },
        py::arg("k"), py::arg("which"));

    m.def(
        "reduce",
        [](const DiffOp& target, unsigned k, unsigned total_degree,
           unsigned param_degree) {
            catalog::ModelParams mp{k, {}, {}, {}};
            reduction::GeneratorSet gens(
                catalog::hamiltonian(mp), catalog::integral1(mp),
                catalog::integral2(mp), catalog::integral12(mp));
            reduction::Bounds bounds;
            bounds.total_degree = total_degree;
            bounds.param_degree = param_degree;
            return reduction::reduce_to_generators(target, gens, bounds);
        },
        py::arg("target"), py::arg("k"), py::arg("total_degree"),
        py::arg("param_degree") = 8);

    m.def(
        "spectrum",
        [](unsigned k, unsigned N, unsigned s) {
            catalog::ModelParams mp{k, {}, {}, {}};
            auto diag = repspace::spectrum(catalog::hamiltonian(mp), N, s);
            auto basis = repspace::basis(N, s);
            std::vector<std::tuple<unsigned, unsigned, std::string>> rows;
            for (std::size_t i = 0; i < basis.size(); ++i)
                rows.emplace_back(basis.elements[i].first, basis.elements[i].second,
                                  diag[i].to_string());
            return rows;
        },
        py::arg("k"), py::arg("N"), py::arg("s"));

    m.def(
        "verify",
        [](unsigned k, const std::string& suite, bool heavy) {
            auto report = verify::suite_by_name(suite, k, heavy);
            return py::make_tuple(report.passed(), report.to_text(false));
        },
        py::arg("k"), py::arg("suite") = "all", py::arg("heavy") = false);

    m.def("parse_operator", [](const std::string& s) { return parse_operator(s); });
    m.def("print_operator", [](const DiffOp& op) { return print_operator(op); });
}
