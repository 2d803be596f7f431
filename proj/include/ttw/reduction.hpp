#pragma once

#include <array>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ttw/genpoly.hpp"
#include "ttw/weyl.hpp"

namespace ttw::reduction {

class NoSolutionError : public Error {
public:
    using Error::Error;
};

// Search bounds for the linear reduction. Coefficients of candidate
// monomials are polynomials in a, b, w of total degree <= param_degree;
// caps bound each generator exponent (I12 is linear by default).
struct Bounds {
    unsigned total_degree = 2;
    unsigned param_degree = 8;
    std::array<unsigned, 4> caps = {255, 255, 255, 1};

    std::string describe() const;
};

// The four generating operators (H, I1, I2, I12) with memoized expansion
// of ordered monomials H^n I1^m I2^p I12^q.
class GeneratorSet {
public:
    GeneratorSet(DiffOp h, DiffOp i1, DiffOp i2, DiffOp i12);

    const DiffOp& generator(unsigned i) const { return gens_[i]; }
    const DiffOp& expand(const GenMonomial& mono);
    DiffOp expand(const GenPolynomial& g);

private:
    std::array<DiffOp, 4> gens_;
    std::unordered_map<std::uint32_t, DiffOp> memo_;
};

DiffOp expand_monomial(GeneratorSet& gens, const GenMonomial& mono);

// Fast lets a prime-field prescreen return the no-solution verdict (used
// inside iterative-deepening loops where a miss self-corrects); Exact
// certifies no-solution by full rational elimination. Either way a
// returned solution has been verified by symbolic re-substitution.
enum class SolveEffort { Fast, Exact };

// Expresses the target exactly as a polynomial in the ordered generator
// monomials within the bounds; the result is verified by symbolic
// re-substitution before it is returned. Throws NoSolutionError when the
// bounded space contains no representation.
GenPolynomial reduce_to_generators(const DiffOp& target, GeneratorSet& gens,
                                   const Bounds& bounds,
                                   SolveEffort effort = SolveEffort::Exact);

// Finds R with I12^2 = R(H, I1, I2, I12), I12 entering linearly.
GenPolynomial find_syzygy(GeneratorSet& gens, Bounds bounds,
                          SolveEffort effort = SolveEffort::Exact);

// --- exact sparse linear algebra over Q ---

// Rows are equations sum_j A[row][j] x_j = rhs[row].
struct SparseSystem {
    std::size_t num_cols = 0;
    std::vector<std::vector<std::pair<std::size_t, Rat>>> rows;
    std::vector<Rat> rhs;
};

// Exact Gaussian elimination with deterministic pivoting: the column with
// the largest support first, breaking ties by lowest column index; pivot
// row is the lowest-index row. Free variables are set to zero. Returns
// nullopt when the system is inconsistent.
std::optional<std::vector<Rat>> solve_sparse(const SparseSystem& system);

// Generalized engine: coefficients q_c in Q[a,b,w] (total degree <=
// param_degree) with sum_c q_c * candidates[c] == target, or nullopt.
// Exactness guarantee: any returned combination re-substitutes to the
// target identically.
std::optional<std::vector<ParamPoly>> solve_operator_combination(
    const DiffOp& target, const std::vector<DiffOp>& candidates,
    unsigned param_degree, SolveEffort effort = SolveEffort::Exact);

}  // namespace ttw::reduction
