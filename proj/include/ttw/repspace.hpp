#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ttw/report.hpp"
#include "ttw/weyl.hpp"

namespace ttw::repspace {

class NotInvariantError : public Error {
public:
    NotInvariantError(const std::string& msg, unsigned p, unsigned q)
        : Error(msg), p(p), q(q) {}
    unsigned p;  // first basis monomial t^p u^q whose image leaves the space
    unsigned q;
};

class NotTriangularError : public Error {
public:
    using Error::Error;
};

// Monomial basis of P_N^(s) = span(t^p u^q : p + s q <= N), ordered by
// grade g = p + s q ascending, ties by p ascending.
struct MonomialBasis {
    unsigned N = 0;
    unsigned s = 1;
    std::vector<std::pair<unsigned, unsigned>> elements;

    std::size_t size() const { return elements.size(); }
    unsigned grade(std::size_t i) const {
        return elements[i].first + s * elements[i].second;
    }
    std::optional<std::size_t> index_of(unsigned p, unsigned q) const;
};

MonomialBasis basis(unsigned N, unsigned s);

// Exact matrix of an operator on the basis: entry (r, c) is the coefficient
// of basis[r] in op(basis[c]); entries are polynomials in a, b, w only.
struct RepMatrix {
    MonomialBasis basis;
    std::map<std::pair<std::size_t, std::size_t>, ParamPoly> entries;

    const ParamPoly* entry(std::size_t r, std::size_t c) const {
        auto it = entries.find({r, c});
        return it == entries.end() ? nullptr : &it->second;
    }
};

// Throws NotInvariantError if any basis image leaves the space.
RepMatrix matrix_of(const DiffOp& op, unsigned N, unsigned s);

// Eigenvalues read off the diagonal, valid only when the matrix is strictly
// graded-triangular (every off-diagonal entry sits at strictly lower grade).
// Returned in basis order; compare as a multiset.
std::vector<ParamPoly> spectrum(const DiffOp& op, unsigned N, unsigned s);

// Invariance of P_N^(s) for all N <= N_max plus the flag property: the
// matrix on P_N is the leading principal block of the matrix on P_(N+1).
VerificationReport flag_check(const DiffOp& op, unsigned s, unsigned N_max);

// repmat-v1 JSON.
std::string repmat_to_json(const RepMatrix& m);

}  // namespace ttw::repspace
