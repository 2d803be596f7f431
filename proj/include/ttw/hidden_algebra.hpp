#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ttw/report.hpp"
#include "ttw/weyl.hpp"

namespace ttw::hidden {

// Generators of the algebra acting on P_N^(s):
//   J1 = Dt                      J2 = t Dt - N/3
//   J3 = s u Du - N/3            J4 = t^2 Dt + s t u Du - N t
//   R(i) = t^i Du (0 <= i <= s)  T(i) = u Dt^(s-i) J0 (J0+1)...(J0+i-1)
//   J0 = t Dt + s u Du - N       (T(i) with i > s is the zero operator)
enum class Tag { J1, J2, J3, J4, R, T, J0 };

struct GeneratorId {
    Tag tag;
    unsigned i = 0;  // tower index for R(i), T(i)
};

struct AlgebraParams {
    unsigned s = 1;
    Rat N = 0;  // representation parameter, rational-valued
};

DiffOp generator(const GeneratorId& id, const AlgebraParams& ap);

// T_0..T_s via nested commutators with J4. Each bracket multiplies the
// closed form by -(s-i): [J4, T_i] = -(s-i) T_(i+1), so the iterated
// bracket equals (-1)^i s!/(s-i)! times T_i. The function checks that
// relation exactly (and that the bracket after T_s vanishes) and returns
// the closed-form normalization; a mismatch is a kernel bug.
std::vector<DiffOp> t_tower_by_commutators(const AlgebraParams& ap);

// Pairwise commutativity of the R and T families, closure of the gl(2)
// brackets over {J1..J4, 1}, tower consistency, nilpotency, and the
// generating-set count 2s+6.
VerificationReport verify_structure(const AlgebraParams& ap);

// A linear combination of ordered products of generators. Keys are
// exponent vectors over the generator list J1 J2 J3 J4 R0..Rs T0..Ts; the
// product is composed left to right in that fixed order.
struct GenCombination {
    std::vector<GeneratorId> generators;               // the fixed order
    std::map<std::vector<unsigned>, ParamPoly> terms;  // exponents -> coeff
};

// Expresses the target as such a combination with products of at most
// max_product_degree generators and coefficients in Q[a,b,w]; nullopt when
// the bounded space contains no representation.
std::optional<GenCombination> express_in_generators(const DiffOp& target,
                                                    const AlgebraParams& ap,
                                                    unsigned max_product_degree = 2);

}  // namespace ttw::hidden
