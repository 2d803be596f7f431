#include "ttw/genpoly.hpp"

#include <sstream>

namespace ttw {

std::string GenMonomial::to_string() const {
    static const char* names[4] = {"H", "I1", "I2", "I12"};
    std::ostringstream os;
    bool printed = false;
    for (int i = 0; i < 4; ++i) {
        if (e[i] == 0) continue;
        if (printed) os << " ";
        os << names[i];
        if (e[i] > 1) os << "^" << unsigned(e[i]);
        printed = true;
    }
    if (!printed) return "1";
    return os.str();
}

unsigned GenPolynomial::total_degree() const {
    unsigned d = 0;
    for (const auto& [g, c] : coeffs_) d = std::max(d, g.total_degree());
    return d;
}

ParamPoly GenPolynomial::coefficient(const GenMonomial& g) const {
    auto it = coeffs_.find(g);
    return it == coeffs_.end() ? ParamPoly() : it->second;
}

void GenPolynomial::add(const GenMonomial& g, const ParamPoly& c) {
    if (c.is_zero()) return;
    auto it = coeffs_.find(g);
    if (it == coeffs_.end()) {
        coeffs_.emplace(g, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

GenPolynomial GenPolynomial::operator+(const GenPolynomial& o) const {
    GenPolynomial r(*this);
    for (const auto& [g, c] : o.coeffs_) r.add(g, c);
    return r;
}

GenPolynomial GenPolynomial::operator-(const GenPolynomial& o) const {
    GenPolynomial r(*this);
    for (const auto& [g, c] : o.coeffs_) r.add(g, -c);
    return r;
}

GenPolynomial GenPolynomial::eval_params(const std::map<Var, Rat>& bind) const {
    GenPolynomial r;
    for (const auto& [g, c] : coeffs_) r.add(g, c.eval_params(bind));
    return r;
}

std::string GenPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Leading (highest) monomial first.
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto& [g, c] = *it;
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        if (g.total_degree() > 0) os << "*" << g.to_string();
    }
    return os.str();
}

}  // namespace ttw
