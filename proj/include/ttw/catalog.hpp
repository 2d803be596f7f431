#pragma once

#include <optional>
#include <utility>

#include "ttw/genpoly.hpp"
#include "ttw/weyl.hpp"

namespace ttw::catalog {

class NotPrintedError : public Error {
public:
    using Error::Error;
};

// Model index and optional parameter bindings. Parameters are symbolic by
// default; binding a value specializes every constructed operator.
struct ModelParams {
    unsigned k = 1;
    std::optional<Rat> a;
    std::optional<Rat> b;
    std::optional<Rat> w;

    std::map<Var, Rat> bindings() const;
    // alpha = a(a-1), beta = b(b-1), symbolic unless bound.
    ParamPoly alpha() const;
    ParamPoly beta() const;
};

// Spectral quantities: ground energy 2w((a+b)k + 1), oscillator eigenvalues
// eps(p,q) = 4w(p + kq), and the lowest eigenvalue k^2 (a+b)^2 of the
// second-order integral before gauge rotation.
struct SpectralData {
    unsigned k;
    ParamPoly ground_energy;
    ParamPoly lowest_x_eigenvalue;
    ParamPoly eps(unsigned p, unsigned q) const;
};

// h_k = -4t Dt^2 - 8ku Dt Du - 4k^2 t^(k-1) u Du^2
//       + 4(wt - (a+b)k - 1) Dt + (4wku - 2k^2 (2b+1) t^(k-1)) Du
// Valid for any k >= 1.
DiffOp hamiltonian(const ModelParams& params);

// x_k = -4k^2 u (t^k - u) Du^2 - 4k^2 ((b+1/2) t^k - (a+b+1) u) Du
// Valid for any k >= 1.
DiffOp integral1(const ModelParams& params);

// The second integral of order 2k. Only k = 1..4 have known closed forms;
// k = 3, 4 are assembled from the stored coefficient tables.
DiffOp integral2(const ModelParams& params);

enum class I12Source { Computed, Fixture };

// The integral commutator [I1, I2]: either computed from the catalog
// operators or loaded from the stored reference tables. The two must agree;
// the equality is the transcription audit.
DiffOp integral12(const ModelParams& params, I12Source source = I12Source::Computed);

SpectralData spectral_data(const ModelParams& params);

enum class ClosureKind { DoubleI1, DoubleI2, Syzygy, SyzygyOmega0 };

// The expected right-hand sides of the polynomial-algebra relations:
//   DoubleI1:  [I1, I12] as a degree-(k+1) polynomial in H, I1, I2, I12
//   DoubleI2:  [I2, I12] likewise
//   Syzygy:    R with I12^2 = R
//   SyzygyOmega0: the w = 0 specialization of the syzygy
// Throws NotPrintedError for (k=4, Syzygy): no general-w form is known.
GenPolynomial expected_closure(unsigned k, ClosureKind which);

// Free-motion (w = a = b = 0) specializations at k=1, used as cross-checks.
GenPolynomial free_motion_closure(ClosureKind which);

// Conjectured w-independent parts: Q_lead of [I2, I12] and R_lead of the
// syzygy, valid for any k >= 1.
std::pair<GenPolynomial, GenPolynomial> conjecture_forms(unsigned k);

}  // namespace ttw::catalog
