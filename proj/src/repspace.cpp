#include "ttw/repspace.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "ttw/json_io.hpp"

namespace ttw::repspace {

std::optional<std::size_t> MonomialBasis::index_of(unsigned p, unsigned q) const {
    if (p + s * q > N) return std::nullopt;
    // elements are grade-ordered; scan within the grade block
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (elements[i].first == p && elements[i].second == q) return i;
    return std::nullopt;
}

MonomialBasis basis(unsigned N, unsigned s) {
    if (s < 1) throw Error("basis requires s >= 1");
    MonomialBasis b;
    b.N = N;
    b.s = s;
    for (unsigned g = 0; g <= N; ++g)
        for (unsigned p = 0; p <= g; ++p)
            if ((g - p) % s == 0) {
                unsigned q = (g - p) / s;
                b.elements.emplace_back(p, q);
            }
    // ties within a grade are by p ascending, which the loop already yields
    return b;
}

RepMatrix matrix_of(const DiffOp& op, unsigned N, unsigned s) {
    RepMatrix m;
    m.basis = basis(N, s);
    for (std::size_t c = 0; c < m.basis.size(); ++c) {
        auto [p, q] = m.basis.elements[c];
        ParamPoly image = op.apply(poly_mono(Rat(1), p, q));
        for (const auto& term : image.terms()) {
            unsigned ip = term.exp[Var::T];
            unsigned iq = term.exp[Var::U];
            auto row = m.basis.index_of(ip, iq);
            if (!row) {
                std::ostringstream os;
                os << "operator does not preserve the space: image of t^" << p
                   << " u^" << q << " contains t^" << ip << " u^" << iq
                   << " of grade " << (ip + s * iq) << " > " << N;
                throw NotInvariantError(os.str(), p, q);
            }
            Exp param = term.exp;
            param[Var::T] = 0;
            param[Var::U] = 0;
            ParamPoly contrib(term.coeff, param);
            auto key = std::make_pair(*row, c);
            auto it = m.entries.find(key);
            if (it == m.entries.end()) {
                m.entries.emplace(key, std::move(contrib));
            } else {
                it->second += contrib;
                if (it->second.is_zero()) m.entries.erase(it);
            }
        }
    }
    return m;
}

std::vector<ParamPoly> spectrum(const DiffOp& op, unsigned N, unsigned s) {
    RepMatrix m = matrix_of(op, N, s);
    for (const auto& [rc, coeff] : m.entries) {
        auto [r, c] = rc;
        if (r == c) continue;
        if (m.basis.grade(r) >= m.basis.grade(c)) {
            std::ostringstream os;
            os << "matrix is not strictly graded-triangular: entry ("
               << r << "," << c << ") couples grade " << m.basis.grade(r)
               << " into grade " << m.basis.grade(c);
            throw NotTriangularError(os.str());
        }
    }
    std::vector<ParamPoly> diag;
    diag.reserve(m.basis.size());
    for (std::size_t i = 0; i < m.basis.size(); ++i) {
        const ParamPoly* e = m.entry(i, i);
        diag.push_back(e ? *e : ParamPoly());
    }
    return diag;
}

VerificationReport flag_check(const DiffOp& op, unsigned s, unsigned N_max) {
    VerificationReport report("flag s=" + std::to_string(s));
    std::optional<RepMatrix> prev;
    for (unsigned N = 0; N <= N_max; ++N) {
        std::string id = "invariant N=" + std::to_string(N);
        RepMatrix cur;
        try {
            cur = matrix_of(op, N, s);
            report.add_pass(id);
        } catch (const NotInvariantError& e) {
            report.add_fail(id, e.what());
            prev.reset();
            continue;
        }
        if (prev) {
            // nested ordering makes P_(N-1) the leading block of P_N
            std::string bid = "principal block N=" + std::to_string(N - 1) +
                              " of N=" + std::to_string(N);
            bool ok = true;
            std::size_t dim = prev->basis.size();
            for (const auto& [rc, coeff] : prev->entries) {
                const ParamPoly* e = cur.entry(rc.first, rc.second);
                if (!e || *e != coeff) ok = false;
            }
            for (const auto& [rc, coeff] : cur.entries)
                if (rc.first < dim && rc.second < dim && !prev->entry(rc.first, rc.second))
                    ok = false;
            if (ok)
                report.add_pass(bid);
            else
                report.add_fail(bid, "block mismatch");
        }
        prev = std::move(cur);
    }
    return report;
}

std::string repmat_to_json(const RepMatrix& m) {
    nlohmann::ordered_json doc;
    doc["format"] = "repmat-v1";
    doc["N"] = m.basis.N;
    doc["s"] = m.basis.s;
    nlohmann::ordered_json basis_arr = nlohmann::ordered_json::array();
    for (const auto& [p, q] : m.basis.elements)
        basis_arr.push_back(nlohmann::ordered_json::array({p, q}));
    doc["basis"] = std::move(basis_arr);
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& [rc, coeff] : m.entries) {
        nlohmann::ordered_json e;
        e["r"] = rc.first;
        e["c"] = rc.second;
        e["coeff"] = nlohmann::ordered_json::parse(poly_to_json(coeff));
        entries.push_back(std::move(e));
    }
    doc["entries"] = std::move(entries);
    return doc.dump();
}

}  // namespace ttw::repspace
