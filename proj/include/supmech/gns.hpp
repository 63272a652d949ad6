#pragma once

#include <optional>
#include <random>

#include "supmech/finite_algebra.hpp"

namespace supmech {

// A state is the coordinate vector of a linear functional: phi(b_i) = phi_i.

struct StateCheck {
  bool unital = false;
  bool hermitian = false;
  bool positive = false;
  double min_gram_eigenvalue = 0;
  bool ok() const { return unital && hermitian && positive; }
};
StateCheck check_state(const FiniteAlgebra& A, const Eigen::VectorXcd& phi,
                       double tol = 1e-10);

// G_{ij} = phi(b_i* b_j)
Eigen::MatrixXcd gram_matrix(const FiniteAlgebra& A, const Eigen::VectorXcd& phi);

// Cyclic representation built from a state: the null ideal (kernel of the
// Gram matrix) is quotiented away and the quotient is orthonormalized, so pi
// acts on C^dim with the standard inner product and <cyclic, pi(x) cyclic>
// equals phi(x).
struct GnsRep {
  int dim = 0;
  std::vector<Eigen::MatrixXcd> pi;  // images of the basis elements
  Eigen::VectorXcd cyclic;
  Eigen::MatrixXcd null_ideal;       // orthonormal coordinate basis of L_phi
  int commutant_dim = 0;
  double rep_error = 0;              // max |pi(b_i)pi(b_j) - pi(b_i b_j)|
  double star_error = 0;             // max |pi(b_i*) - pi(b_i)^H|
  double reconstruction_error = 0;   // max_i |<chi, pi(b_i) chi> - phi_i|
};
GnsRep gns_representation(const FiniteAlgebra& A, const Eigen::VectorXcd& phi,
                          double rank_tol = 1e-10);

// sum_i x_i pi_i
Eigen::MatrixXcd represent(const std::vector<Eigen::MatrixXcd>& pi,
                           const Eigen::VectorXcd& x);

// Dimension of {T : T pi_i = pi_i T for all i}.
int commutant_dimension(const std::vector<Eigen::MatrixXcd>& pi,
                        double rel_tol = 1e-8);
// A state is pure exactly when the commutant of its cyclic representation is
// trivial.
bool is_pure(const FiniteAlgebra& A, const Eigen::VectorXcd& phi,
             double tol = 1e-10);

// phi_B(x) = phi(B* x B)/phi(B* B); normalized compression of a state by an
// algebra element.  Errors when phi(B* B) vanishes (B in the null ideal).
Eigen::VectorXcd state_from_vector(const FiniteAlgebra& A,
                                   const Eigen::VectorXcd& phi,
                                   const Eigen::VectorXcd& B,
                                   double tol = 1e-12);

// Unitary U with U pi1_i U^H = pi2_i for all i, when the representations are
// unitarily equivalent; nullopt otherwise.
std::optional<Eigen::MatrixXcd> find_intertwiner(
    const std::vector<Eigen::MatrixXcd>& pi1,
    const std::vector<Eigen::MatrixXcd>& pi2, double tol = 1e-8);

// Tr(rho1 rho2), plus, when both inputs are pure, an orthonormal measurement
// basis whose first vector is the rho2 ray; the probability of that outcome
// in state rho1 reproduces the trace formula.
struct TransitionResult {
  double probability = 0;
  bool povm_built = false;
  std::vector<Eigen::VectorXcd> basis;  // orthonormal, basis[0] = rho2 ray
  double povm_agreement = 0;            // |probability - <psi1, E_0 psi1>|
};
TransitionResult transition_probability(const Eigen::MatrixXcd& rho1,
                                        const Eigen::MatrixXcd& rho2,
                                        double tol = 1e-8);

// Block-diagonal direct sum of the GNS representations of the given states,
// with a joint-kernel faithfulness check.
struct DirectSumRep {
  std::vector<GnsRep> parts;
  std::vector<Eigen::MatrixXcd> pi;  // block-diagonal images
  bool faithful = false;
};
DirectSumRep direct_sum_rep(const FiniteAlgebra& A,
                            const std::vector<Eigen::VectorXcd>& states,
                            double tol = 1e-10);

// Superselection structure of a representation: minimal projections in the
// center of the image algebra, ordered by descending coherent-subspace
// dimension.  The last projection is identity minus the others so the sum is
// exact.
struct Sector {
  Eigen::MatrixXcd projection;
  int dim = 0;  // dimension of the coherent subspace
};
struct SuperselectionResult {
  std::vector<Sector> sectors;
  bool faithful = false;           // rep separates the algebra
  double commutation_residual = 0; // max |[P_a, pi_i]|
};
SuperselectionResult superselection_decompose(
    const FiniteAlgebra& A, const std::vector<Eigen::MatrixXcd>& pi,
    double tol = 1e-10);

// Defining-representation helpers for full_matrix / direct_sum algebras with
// matrix-unit bases ("matn:..." names).
std::vector<int> block_dims_of(const FiniteAlgebra& A);
// phi(x) = Tr(D rep(x)) with D block diagonal; both directions.
Eigen::MatrixXcd density_of_state(const FiniteAlgebra& A,
                                  const Eigen::VectorXcd& phi);
Eigen::VectorXcd state_of_density(const FiniteAlgebra& A,
                                  const Eigen::MatrixXcd& D);
// Vector state <psi, . psi> for a unit vector on the defining space.
Eigen::VectorXcd vector_state(const FiniteAlgebra& A,
                              const Eigen::VectorXcd& psi);

// Random density-matrix state: a mixture of `rank` random rays (block
// cross terms discarded); rank 1 draws are pure on single-block algebras.
Eigen::VectorXcd random_matrix_state(const FiniteAlgebra& A,
                                     std::mt19937_64& rng, int rank);

// tau(B* x B)/tau(B* B) for a random element B against the reference trace;
// works on any FiniteAlgebra.
Eigen::VectorXcd random_state(const FiniteAlgebra& A, std::mt19937_64& rng);

}  // namespace supmech
