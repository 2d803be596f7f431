#include "ttw/weyl.hpp"

#include <mutex>
#include <vector>

namespace ttw {

const Int& binomial(unsigned n, unsigned k) {
    static std::vector<std::vector<Int>> table;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (table.size() <= n) {
        unsigned r = table.size();
        std::vector<Int> row(r + 1, 1);
        for (unsigned c = 1; c < r; ++c) row[c] = table[r - 1][c - 1] + table[r - 1][c];
        table.push_back(std::move(row));
    }
    static const Int zero = 0;
    if (k > n) return zero;
    return table[n][k];
}

void DiffOp::add_term(const ParamPoly& p, unsigned dt, unsigned du) {
    if (p.is_zero()) return;
    if (dt >= kExponentCap || du >= kExponentCap)
        throw OverflowError("derivative order overflow");
    DerivOrd d{static_cast<std::uint16_t>(dt), static_cast<std::uint16_t>(du)};
    auto it = terms_.find(d);
    if (it == terms_.end()) {
        terms_.emplace(d, p);
    } else {
        it->second += p;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DiffOp DiffOp::operator-() const {
    DiffOp r;
    for (const auto& [d, p] : terms_) r.terms_.emplace(d, -p);
    return r;
}

DiffOp DiffOp::operator+(const DiffOp& o) const {
    DiffOp r(*this);
    r += o;
    return r;
}

DiffOp DiffOp::operator-(const DiffOp& o) const {
    DiffOp r(*this);
    r -= o;
    return r;
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
    for (const auto& [d, p] : o.terms_) add_term(p, d.dt, d.du);
    return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
    for (const auto& [d, p] : o.terms_) add_term(-p, d.dt, d.du);
    return *this;
}

DiffOp DiffOp::operator*(const DiffOp& o) const {
    DiffOp result;
    // Composition term by term. For A-term p d^(i,j) and B-term q d^(k,l):
    //   d^(i,j) q = sum_{r<=i, s<=j} C(i,r) C(j,s) (dt^r du^s q) d^(i-r, j-s)
    // after which derivative orders add. Derivatives of q are cached per
    // B-term across all A-terms.
    for (const auto& [db, q] : o.terms_) {
        unsigned max_r = 0, max_s = 0;
        for (const auto& [da, p] : terms_) {
            max_r = std::max<unsigned>(max_r, da.dt);
            max_s = std::max<unsigned>(max_s, da.du);
        }
        max_r = std::min<unsigned>(max_r, q.degree_in(Var::T));
        max_s = std::min<unsigned>(max_s, q.degree_in(Var::U));
        // dq[r][s] = dt^r du^s q, built lazily row by row.
        std::vector<std::vector<ParamPoly>> dq(max_r + 1);
        dq[0].resize(max_s + 1);
        dq[0][0] = q;
        for (unsigned s = 1; s <= max_s; ++s) dq[0][s] = dq[0][s - 1].derivative(Var::U);
        for (unsigned r = 1; r <= max_r; ++r) {
            dq[r].resize(max_s + 1);
            dq[r][0] = dq[r - 1][0].derivative(Var::T);
            for (unsigned s = 1; s <= max_s; ++s)
                dq[r][s] = dq[r][s - 1].derivative(Var::U);
        }
        for (const auto& [da, p] : terms_) {
            for (unsigned r = 0; r <= da.dt; ++r) {
                if (r > max_r) break;
                for (unsigned s = 0; s <= da.du; ++s) {
                    if (s > max_s) break;
                    const ParamPoly& qd = dq[r][s];
                    if (qd.is_zero()) continue;
                    Rat c(binomial(da.dt, r) * binomial(da.du, s));
                    result.add_term(p * qd * c, da.dt - r + db.dt, da.du - s + db.du);
                }
            }
        }
    }
    return result;
}

DiffOp DiffOp::scaled(const ParamPoly& s) const {
    DiffOp r;
    if (s.is_zero()) return r;
    for (const auto& [d, p] : terms_) {
        ParamPoly sp = p * s;
        if (!sp.is_zero()) r.terms_.emplace(d, std::move(sp));
    }
    return r;
}

DiffOp DiffOp::scaled(const Rat& c) const {
    DiffOp r;
    if (c == 0) return r;
    for (const auto& [d, p] : terms_) r.terms_.emplace(d, p * c);
    return r;
}

ParamPoly DiffOp::apply(const ParamPoly& p) const {
    ParamPoly image;
    for (const auto& [d, coeff] : terms_) {
        ParamPoly q = p;
        for (unsigned r = 0; r < d.dt && !q.is_zero(); ++r) q = q.derivative(Var::T);
        for (unsigned s = 0; s < d.du && !q.is_zero(); ++s) q = q.derivative(Var::U);
        if (!q.is_zero()) image += coeff * q;
    }
    return image;
}

DiffOp DiffOp::eval_params(const std::map<Var, Rat>& bind) const {
    DiffOp r;
    for (const auto& [d, p] : terms_) {
        ParamPoly q = p.eval_params(bind);
        if (!q.is_zero()) r.terms_.emplace(d, std::move(q));
    }
    return r;
}

DiffOp op_linear(const std::vector<std::pair<ParamPoly, DiffOp>>& parts) {
    DiffOp sum;
    for (const auto& [scalar, op] : parts) sum += op.scaled(scalar);
    return sum;
}

}  // namespace ttw
