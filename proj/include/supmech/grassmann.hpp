#pragma once

#include <optional>
#include <vector>

#include "supmech/finite_algebra.hpp"
#include "supmech/ncpoly.hpp"
#include "supmech/presentations.hpp"

namespace supmech {

// Integral over all anticommuting generators: the signed coefficient of the
// full word, calibrated so that integrating th_n ... th_1 gives exactly 1.
// Requires a presentation whose generators are all odd with no relations.
Laurent berezin_integral(const NcPoly& f);

// Expectation of f under the density rho: the integral of f * rho.  Both
// arguments must live in the same presentation.
Laurent berezin_expectation(const NcPoly& f, const NcPoly& rho);

// Exhaustive solution of the state conditions on the 2^n-dimensional
// anticommuting algebra: normalization, hermiticity of all expectations, and
// positivity of the expectation Gram matrix, resolved by exact rational
// elimination.  free_parameters counts the affine dimension of the solution
// set; density is a representative (the unique solution when the set is a
// point).
struct GrassmannStateFamily {
  int n = 0;
  PresPtr pres;
  std::optional<NcPoly> density;
  int free_parameters = 0;
  bool unique() const { return density.has_value() && free_parameters == 0; }
};
GrassmannStateFamily enumerate_states(int n);

// Exact positive-semidefiniteness of a hermitian matrix of Gaussian
// rationals, by rational pivoting on Schur complements.
bool exact_psd(std::vector<std::vector<GaussRat>> G);

// Compatible completeness of an (observables, states) pair: every two
// distinct observables are separated by some state, and every two distinct
// states by some observable.  On failure the witness names the first
// indistinguishable pair.
struct CcWitness {
  bool observables_failed = false;  // else: a state pair failed
  int first = 0;
  int second = 0;
};
struct CcResult {
  bool pass = false;
  std::optional<CcWitness> witness;
};

// Symbolic version: observables are even hermitian polynomials, states are
// densities; everything is compared exactly.
CcResult cc_check(const std::vector<NcPoly>& observables,
                  const std::vector<NcPoly>& densities);

// Finite-algebra version: observables are hermitian coordinate vectors,
// states are functional coordinate vectors; comparisons use sep_tol.
CcResult cc_check(const FiniteAlgebra& A,
                  const std::vector<Eigen::VectorXcd>& observables,
                  const std::vector<Eigen::VectorXcd>& states,
                  double sep_tol = 1e-10);

}  // namespace supmech
