#include "ttw/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ttw {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json poly_terms_json(const ParamPoly& p) {
    ordered_json arr = ordered_json::array();
    for (const auto& t : p.terms()) {
        ordered_json term;
        term["num"] = num_string(t.coeff);
        term["den"] = den_string(t.coeff);
        ordered_json exp;
        exp["t"] = t.exp[Var::T];
        exp["u"] = t.exp[Var::U];
        exp["a"] = t.exp[Var::A];
        exp["b"] = t.exp[Var::B];
        exp["w"] = t.exp[Var::W];
        term["exp"] = exp;
        arr.push_back(std::move(term));
    }
    return arr;
}

ParamPoly poly_from_terms_json(const json& arr) {
    if (!arr.is_array()) throw FormatError("polynomial term list must be an array");
    std::vector<ParamPoly::Term> terms;
    terms.reserve(arr.size());
    for (const auto& term : arr) {
        Rat c = rat_from_strings(term.at("num").get<std::string>(),
                                 term.at("den").get<std::string>());
        const auto& exp = term.at("exp");
        Exp m = exp_of(exp.at("t").get<unsigned>(), exp.at("u").get<unsigned>(),
                       exp.at("a").get<unsigned>(), exp.at("b").get<unsigned>(),
                       exp.at("w").get<unsigned>());
        terms.push_back({m, std::move(c)});
    }
    return ParamPoly::from_terms(std::move(terms));
}

}  // namespace

std::string poly_to_json(const ParamPoly& p) { return poly_terms_json(p).dump(); }

ParamPoly poly_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw FormatError(std::string("bad JSON: ") + e.what());
    }
    return poly_from_terms_json(doc);
}

std::string diffop_to_json(const DiffOp& op) {
    ordered_json doc;
    doc["format"] = "diffop-v1";
    ordered_json terms = ordered_json::array();
    for (const auto& [d, coeff] : op.terms()) {  // map iterates (dt,du) ascending
        ordered_json term;
        term["dt"] = d.dt;
        term["du"] = d.du;
        term["coeff"] = poly_terms_json(coeff);
        terms.push_back(std::move(term));
    }
    doc["terms"] = std::move(terms);
    return doc.dump();
}

DiffOp diffop_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw FormatError(std::string("bad JSON: ") + e.what());
    }
    if (!doc.is_object() || doc.value("format", "") != "diffop-v1")
        throw FormatError("expected a diffop-v1 document");
    DiffOp op;
    for (const auto& term : doc.at("terms")) {
        ParamPoly coeff = poly_from_terms_json(term.at("coeff"));
        op.add_term(coeff, term.at("dt").get<unsigned>(), term.at("du").get<unsigned>());
    }
    return op;
}

std::string genpoly_to_json(const GenPolynomial& g) {
    ordered_json doc;
    doc["format"] = "genpoly-v1";
    ordered_json monos = ordered_json::array();
    // Leading monomial first, matching the printed convention.
    const auto& coeffs = g.coeffs();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        const auto& [mono, coeff] = *it;
        ordered_json m;
        m["H"] = mono.n();
        m["I1"] = mono.m();
        m["I2"] = mono.p();
        m["I12"] = mono.q();
        m["coeff"] = poly_terms_json(coeff);
        monos.push_back(std::move(m));
    }
    doc["monomials"] = std::move(monos);
    return doc.dump();
}

GenPolynomial genpoly_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw FormatError(std::string("bad JSON: ") + e.what());
    }
    if (!doc.is_object() || doc.value("format", "") != "genpoly-v1")
        throw FormatError("expected a genpoly-v1 document");
    GenPolynomial g;
    for (const auto& m : doc.at("monomials")) {
        GenMonomial mono = gen_mono(m.at("H").get<unsigned>(), m.at("I1").get<unsigned>(),
                                    m.at("I2").get<unsigned>(), m.at("I12").get<unsigned>());
        ParamPoly coeff = poly_from_terms_json(m.at("coeff"));
        if (coeff.degree_in(Var::T) > 0 || coeff.degree_in(Var::U) > 0)
            throw FormatError("genpoly coefficients must involve a, b, w only");
        g.add(mono, coeff);
    }
    return g;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << content;
    if (!out) throw Error("write failed: " + path);
}

DiffOp load_diffop(const std::string& path) { return diffop_from_json(read_file(path)); }
void save_diffop(const std::string& path, const DiffOp& op) {
    write_file(path, diffop_to_json(op) + "\n");
}
GenPolynomial load_genpoly(const std::string& path) {
    return genpoly_from_json(read_file(path));
}
void save_genpoly(const std::string& path, const GenPolynomial& g) {
    write_file(path, genpoly_to_json(g) + "\n");
}

}  // namespace ttw
