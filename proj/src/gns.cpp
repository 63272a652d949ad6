// Finite-dimensional cyclic representations, commutants, intertwiners, and
// superselection sectors, built from a *-algebra given by structure constants
// and states given by coordinate vectors.

#include "supmech/gns.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "supmech/error.hpp"

namespace supmech {

namespace {

using Cx = std::complex<double>;

// Null space (thin, orthonormal columns) via SVD with a relative cutoff.
Eigen::MatrixXcd nullspace(const Eigen::MatrixXcd& M, double rel_tol) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M, Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  double cut = rel_tol * (sv.size() ? sv(0) : 0.0);
  int rank = 0;
  for (int k = 0; k < sv.size(); ++k)
    if (sv(k) > cut) ++rank;
  return svd.matrixV().rightCols(svd.matrixV().cols() - rank);
}

int matrix_rank(const Eigen::MatrixXcd& M, double rel_tol) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
  const auto& sv = svd.singularValues();
  double cut = rel_tol * (sv.size() ? sv(0) : 0.0);
  int rank = 0;
  for (int k = 0; k < sv.size(); ++k)
    if (sv(k) > cut) ++rank;
  return rank;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B) {
  Eigen::MatrixXcd K(A.rows() * B.rows(), A.cols() * B.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j)
      K.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
  return K;
}

}  // namespace

StateCheck check_state(const FiniteAlgebra& A, const Eigen::VectorXcd& phi,
                       double tol) {
  require(phi.size() == A.dim(), "state vector has wrong dimension");
  StateCheck out;
  Cx unit_val = (phi.transpose() * A.unit()).value();
  out.unital = std::abs(unit_val - Cx(1.0)) <= tol;
  double herm = 0;
  for (int i = 0; i < A.dim(); ++i) {
    // coordinates of b_i* are column i of the star matrix
    Cx phi_star = (phi.transpose() * A.star_map().col(i)).value();
    herm = std::max(herm, std::abs(phi_star - std::conj(phi(i))));
  }
  out.hermitian = herm <= tol;
  Eigen::MatrixXcd G = gram_matrix(A, phi);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (G + G.adjoint()));
  out.min_gram_eigenvalue = es.eigenvalues().minCoeff();
  double scale = std::max(1.0, std::abs(G.trace()));
  out.positive = out.min_gram_eigenvalue >= -tol * scale;
  return out;
}

Eigen::MatrixXcd gram_matrix(const FiniteAlgebra& A,
                             const Eigen::VectorXcd& phi) {
  const int n = A.dim();
  Eigen::MatrixXcd G(n, n);
  for (int i = 0; i < n; ++i) {
    Eigen::MatrixXcd L = A.left_mult_of(A.star_map().col(i));
    for (int j = 0; j < n; ++j) G(i, j) = (phi.transpose() * L.col(j)).value();
  }
  return G;
}

GnsRep gns_representation(const FiniteAlgebra& A, const Eigen::VectorXcd& phi,
                          double rank_tol) {
  const int n = A.dim();
  Eigen::MatrixXcd G = gram_matrix(A, phi);
  G = 0.5 * (G + G.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(G);
  require(es.info() == Eigen::Success, "Gram eigendecomposition failed");
  const Eigen::VectorXd& lam = es.eigenvalues();
  double lam_max = std::max(lam.cwiseAbs().maxCoeff(), 1e-300);
  require(lam.minCoeff() >= -1e-8 * lam_max,
          "Gram matrix is indefinite; not a state");

  std::vector<int> keep, drop;
  for (int k = 0; k < n; ++k)
    (lam(k) > rank_tol * lam_max ? keep : drop).push_back(k);
  const int d = static_cast<int>(keep.size());
  require(d > 0, "state has rank-zero Gram matrix");

  // Coordinates with respect to the orthonormal quotient basis:
  // q(x) = D^{1/2} V^H x, and a left-multiplication operator L descends to
  // D^{1/2} V^H L V D^{-1/2}.
  Eigen::MatrixXcd V(n, d);
  Eigen::VectorXd rt(d), rt_inv(d);
  for (int c = 0; c < d; ++c) {
    V.col(c) = es.eigenvectors().col(keep[c]);
    rt(c) = std::sqrt(lam(keep[c]));
    rt_inv(c) = 1.0 / rt(c);
  }

  GnsRep rep;
  rep.dim = d;
  rep.pi.reserve(n);
  for (int i = 0; i < n; ++i)
    rep.pi.push_back(rt.asDiagonal() * (V.adjoint() * A.left_mult(i) * V) *
                     rt_inv.asDiagonal());
  // The cyclic vector is the class of the unit.
  rep.cyclic = rt.asDiagonal() * (V.adjoint() * A.unit());

  rep.null_ideal.resize(n, n - d);
  for (size_t c = 0; c < drop.size(); ++c)
    rep.null_ideal.col(static_cast<int>(c)) = es.eigenvectors().col(drop[c]);

  rep.commutant_dim = commutant_dimension(rep.pi);

  for (int i = 0; i < n; ++i) {
    Cx got = (rep.cyclic.adjoint() * rep.pi[i] * rep.cyclic).value();
    rep.reconstruction_error =
        std::max(rep.reconstruction_error, std::abs(got - phi(i)));
    rep.star_error =
        std::max(rep.star_error, (represent(rep.pi, A.star_map().col(i)) -
                                  rep.pi[i].adjoint())
                                     .cwiseAbs()
                                     .maxCoeff());
    for (int j = 0; j < n; ++j) {
      rep.rep_error = std::max(
          rep.rep_error, (rep.pi[i] * rep.pi[j] -
                          represent(rep.pi, A.left_mult(i).col(j)))
                             .cwiseAbs()
                             .maxCoeff());
    }
  }
  return rep;
}

Eigen::MatrixXcd represent(const std::vector<Eigen::MatrixXcd>& pi,
                           const Eigen::VectorXcd& x) {
  require(!pi.empty() && pi.size() == static_cast<size_t>(x.size()),
          "coordinate/representation size mismatch");
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(pi[0].rows(), pi[0].cols());
  for (int i = 0; i < x.size(); ++i)
    if (x(i) != Cx(0.0)) M += x(i) * pi[i];
  return M;
}

int commutant_dimension(const std::vector<Eigen::MatrixXcd>& pi,
                        double rel_tol) {
  require(!pi.empty(), "commutant of empty representation");
  const int d = static_cast<int>(pi[0].rows());
  Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
  // T commutes with every pi_i iff vec(T) annihilates the PSD matrix
  // M = sum_i A_i^H A_i with A_i = I (x) pi_i - pi_i^T (x) I; expanding keeps
  // every term a Kronecker product, so M is assembled without d^2 x d^2
  // multiplications.
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(d * d, d * d);
  for (const auto& p : pi) {
    Eigen::MatrixXcd ph = p.adjoint();
    M += kron(id, ph * p) - kron(p.transpose(), ph) -
         kron(p.conjugate(), p) + kron(p.conjugate() * p.transpose(), id);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M);
  require(es.info() == Eigen::Success, "commutant eigensolve failed");
  double top = std::max(es.eigenvalues().cwiseAbs().maxCoeff(), 1e-300);
  int dim = 0;
  for (int k = 0; k < d * d; ++k)
    if (es.eigenvalues()(k) <= rel_tol * top) ++dim;
  return dim;
}

bool is_pure(const FiniteAlgebra& A, const Eigen::VectorXcd& phi, double tol) {
  return gns_representation(A, phi, tol).commutant_dim == 1;
}

Eigen::VectorXcd state_from_vector(const FiniteAlgebra& A,
                                   const Eigen::VectorXcd& phi,
                                   const Eigen::VectorXcd& B, double tol) {
  require(phi.size() == A.dim() && B.size() == A.dim(),
          "state/element dimension mismatch");
  Eigen::MatrixXcd L_Bstar = A.left_mult_of(A.star(B));
  Cx denom = (phi.transpose() * (L_Bstar * B)).value();
  double scale = std::max(1.0, B.cwiseAbs().maxCoeff());
  require(std::abs(denom) > tol * scale * scale,
          "element lies in the null ideal of the state");
  Eigen::VectorXcd out(A.dim());
  for (int i = 0; i < A.dim(); ++i) {
    Eigen::VectorXcd xB = A.left_mult(i) * B;
    out(i) = (phi.transpose() * (L_Bstar * xB)).value() / denom;
  }
  return out;
}

std::optional<Eigen::MatrixXcd> find_intertwiner(
    const std::vector<Eigen::MatrixXcd>& pi1,
    const std::vector<Eigen::MatrixXcd>& pi2, double tol) {
  require(pi1.size() == pi2.size(), "representations of different algebras");
  require(!pi1.empty(), "empty representation");
  const int d1 = static_cast<int>(pi1[0].rows());
  const int d2 = static_cast<int>(pi2[0].rows());
  if (d1 != d2) return std::nullopt;
  const int d = d1;
  Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
  // T pi1_i = pi2_i T  iff  (pi1_i^T (x) I - I (x) pi2_i) vec(T) = 0.
  Eigen::MatrixXcd stack(static_cast<int>(pi1.size()) * d * d, d * d);
  for (size_t i = 0; i < pi1.size(); ++i)
    stack.middleRows(static_cast<int>(i) * d * d, d * d) =
        kron(pi1[i].transpose(), id) - kron(id, pi2[i]);
  Eigen::MatrixXcd null = nullspace(stack, 1e-10);
  if (null.cols() == 0) return std::nullopt;
  Eigen::MatrixXcd T =
      Eigen::Map<const Eigen::MatrixXcd>(null.col(0).data(), d, d);
  // For equivalent irreducible representations T is a scalar multiple of a
  // unitary; the polar factor recovers the unitary.
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
      T, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::MatrixXcd U = svd.matrixU() * svd.matrixV().adjoint();
  double worst = 0;
  for (size_t i = 0; i < pi1.size(); ++i) {
    double scale = std::max(1.0, pi1[i].cwiseAbs().maxCoeff());
    worst = std::max(
        worst,
        (U * pi1[i] * U.adjoint() - pi2[i]).cwiseAbs().maxCoeff() / scale);
  }
  if (worst > tol) return std::nullopt;
  return U;
}

TransitionResult transition_probability(const Eigen::MatrixXcd& rho1,
                                        const Eigen::MatrixXcd& rho2,
                                        double tol) {
  require(rho1.rows() == rho1.cols() && rho2.rows() == rho2.cols() &&
              rho1.rows() == rho2.rows(),
          "density matrices must share one square shape");
  auto check_density = [&](const Eigen::MatrixXcd& r) {
    require((r - r.adjoint()).cwiseAbs().maxCoeff() <= tol,
            "density matrix is not hermitian");
    require(std::abs(r.trace() - Cx(1.0)) <= tol,
            "density matrix trace is not 1");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(r);
    require(es.eigenvalues().minCoeff() >= -tol,
            "density matrix is not positive");
    return es;
  };
  auto es1 = check_density(rho1);
  auto es2 = check_density(rho2);

  TransitionResult out;
  out.probability = (rho1 * rho2).trace().real();

  const int d = static_cast<int>(rho1.rows());
  bool pure1 = es1.eigenvalues().maxCoeff() >= 1.0 - tol;
  bool pure2 = es2.eigenvalues().maxCoeff() >= 1.0 - tol;
  if (pure1 && pure2) {
    Eigen::VectorXcd psi1 = es1.eigenvectors().col(d - 1);
    Eigen::VectorXcd psi2 = es2.eigenvectors().col(d - 1);
    // Orthonormal measurement basis starting at the rho2 ray, by QR.
    Eigen::MatrixXcd seed = Eigen::MatrixXcd::Identity(d, d);
    seed.col(0) = psi2;
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(seed);
    Eigen::MatrixXcd Q = qr.householderQ();
    // QR may flip the first column by a phase; restore it.
    Cx overlap = (Q.col(0).adjoint() * psi2).value();
    Q.col(0) *= overlap / std::abs(overlap);
    out.basis.reserve(d);
    for (int k = 0; k < d; ++k) out.basis.push_back(Q.col(k));
    double p_outcome = std::norm((psi2.adjoint() * psi1).value());
    out.povm_agreement = std::abs(out.probability - p_outcome);
    out.povm_built = true;
  }
  return out;
}

DirectSumRep direct_sum_rep(const FiniteAlgebra& A,
                            const std::vector<Eigen::VectorXcd>& states,
                            double tol) {
  require(!states.empty(), "direct sum needs at least one state");
  DirectSumRep out;
  int total = 0;
  for (const auto& phi : states) {
    out.parts.push_back(gns_representation(A, phi, tol));
    total += out.parts.back().dim;
  }
  const int n = A.dim();
  out.pi.reserve(n);
  for (int i = 0; i < n; ++i) {
    Eigen::MatrixXcd block = Eigen::MatrixXcd::Zero(total, total);
    int at = 0;
    for (const auto& part : out.parts) {
      block.block(at, at, part.dim, part.dim) = part.pi[i];
      at += part.dim;
    }
    out.pi.push_back(std::move(block));
  }
  // Faithful iff x -> (pi(x)) has trivial kernel: stack vec(pi_i) columns.
  Eigen::MatrixXcd stacked(total * total, n);
  for (int i = 0; i < n; ++i)
    stacked.col(i) =
        Eigen::Map<const Eigen::VectorXcd>(out.pi[i].data(), total * total);
  out.faithful = matrix_rank(stacked, tol) == n;
  return out;
}

SuperselectionResult superselection_decompose(
    const FiniteAlgebra& A, const std::vector<Eigen::MatrixXcd>& pi,
    double tol) {
  require(pi.size() == static_cast<size_t>(A.dim()),
          "representation does not match the algebra");
  const int n = A.dim();
  const int d = static_cast<int>(pi[0].rows());

  SuperselectionResult out;
  Eigen::MatrixXcd stacked(d * d, n);
  for (int i = 0; i < n; ++i)
    stacked.col(i) = Eigen::Map<const Eigen::VectorXcd>(pi[i].data(), d * d);
  // Coordinates in the kernel of the representation map must not count as
  // central, so work inside the row space of that map.
  Eigen::JacobiSVD<Eigen::MatrixXcd> im_svd(stacked, Eigen::ComputeThinV);
  const auto& sv = im_svd.singularValues();
  int r = 0;
  for (int k = 0; k < sv.size(); ++k)
    if (sv(k) > tol * sv(0)) ++r;
  out.faithful = r == n;
  Eigen::MatrixXcd coords = im_svd.matrixV().leftCols(r);

  // Center of the image algebra: x with [represent(x), pi_j] = 0 for all j.
  Eigen::MatrixXcd cond(n * d * d, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Eigen::MatrixXcd comm = pi[i] * pi[j] - pi[j] * pi[i];
      cond.block(j * d * d, i, d * d, 1) =
          Eigen::Map<const Eigen::VectorXcd>(comm.data(), d * d);
    }
  }
  Eigen::MatrixXcd Z = coords * nullspace(cond * coords, tol);
  int zdim = static_cast<int>(Z.cols());
  require(zdim >= 1, "image algebra has empty center");

  // A generic hermitian central operator; its eigenspaces are the coherent
  // subspaces.  The center is star-closed, so the hermitian and
  // antihermitian parts of each generator are central; a weighted sum of
  // both avoids losing generators that are purely antihermitian.
  // Deterministic weights, nudged on a degenerate draw.
  for (int attempt = 0; attempt < 8; ++attempt) {
    Eigen::MatrixXcd T = Eigen::MatrixXcd::Zero(d, d);
    for (int c = 0; c < zdim; ++c) {
      Eigen::MatrixXcd zc = represent(pi, Z.col(c));
      double w1 = 1.0 + 0.37 * c + 0.011 * attempt * (c + 1) * (c + 1);
      double w2 = 0.53 + 0.29 * c + 0.017 * attempt * (c + 2);
      T += w1 * 0.5 * (zc + zc.adjoint());
      T += w2 * Cx(0.0, 0.5) * (zc.adjoint() - zc);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(T);
    require(es.info() == Eigen::Success, "central eigensolve failed");
    const Eigen::VectorXd& lam = es.eigenvalues();
    double scale = std::max(1.0, lam.cwiseAbs().maxCoeff());

    // Cluster eigenvalues; expect exactly zdim well-separated clusters.
    std::vector<std::pair<int, int>> clusters;  // [first, last] index ranges
    int start = 0;
    for (int k = 1; k <= d; ++k) {
      if (k == d || lam(k) - lam(k - 1) > 1e-6 * scale) {
        clusters.push_back({start, k - 1});
        start = k;
      }
    }
    if (static_cast<int>(clusters.size()) != zdim) continue;
    bool tight = true;
    for (auto [a, b] : clusters)
      if (lam(b) - lam(a) > 1e-9 * scale) tight = false;
    if (!tight) continue;

    out.sectors.clear();
    for (auto [a, b] : clusters) {
      Sector s;
      s.dim = b - a + 1;
      s.projection = es.eigenvectors().middleCols(a, s.dim) *
                     es.eigenvectors().middleCols(a, s.dim).adjoint();
      out.sectors.push_back(std::move(s));
    }
    std::sort(out.sectors.begin(), out.sectors.end(),
              [](const Sector& x, const Sector& y) { return x.dim > y.dim; });
    // Rebuild the last projection from the identity so the sum is exact.
    Eigen::MatrixXcd rest = Eigen::MatrixXcd::Identity(d, d);
    for (size_t k = 0; k + 1 < out.sectors.size(); ++k)
      rest -= out.sectors[k].projection;
    out.sectors.back().projection = rest;

    for (const auto& s : out.sectors)
      for (const auto& p : pi)
        out.commutation_residual =
            std::max(out.commutation_residual,
                     (s.projection * p - p * s.projection)
                         .cwiseAbs()
                         .maxCoeff());
    return out;
  }
  throw Error("could not separate the central spectrum");
}

std::vector<int> block_dims_of(const FiniteAlgebra& A) {
  std::vector<int> dims;
  const std::string& name = A.name();
  size_t at = 0;
  while (at < name.size()) {
    size_t plus = name.find('+', at);
    std::string part = name.substr(at, plus == std::string::npos
                                           ? std::string::npos
                                           : plus - at);
    if (part.rfind("matn:", 0) != 0)
      throw Error("algebra '" + name + "' has no matrix-unit basis");
    dims.push_back(std::stoi(part.substr(5)));
    if (plus == std::string::npos) break;
    at = plus + 1;
  }
  int total = 0;
  for (int dd : dims) total += dd * dd;
  require(total == A.dim(), "algebra name inconsistent with dimension");
  return dims;
}

Eigen::MatrixXcd density_of_state(const FiniteAlgebra& A,
                                  const Eigen::VectorXcd& phi) {
  auto dims = block_dims_of(A);
  int space = 0;
  for (int dd : dims) space += dd;
  Eigen::MatrixXcd D = Eigen::MatrixXcd::Zero(space, space);
  int base = 0, idx = 0;
  for (int dd : dims) {
    // phi(e_ab) = Tr(D |a><b|) = D_{ba}
    for (int a = 0; a < dd; ++a)
      for (int b = 0; b < dd; ++b) D(base + b, base + a) = phi(idx + a * dd + b);
    base += dd;
    idx += dd * dd;
  }
  return D;
}

Eigen::VectorXcd state_of_density(const FiniteAlgebra& A,
                                  const Eigen::MatrixXcd& D) {
  auto dims = block_dims_of(A);
  Eigen::VectorXcd phi(A.dim());
  int base = 0, idx = 0;
  for (int dd : dims) {
    for (int a = 0; a < dd; ++a)
      for (int b = 0; b < dd; ++b) phi(idx + a * dd + b) = D(base + b, base + a);
    base += dd;
    idx += dd * dd;
  }
  return phi;
}

Eigen::VectorXcd vector_state(const FiniteAlgebra& A,
                              const Eigen::VectorXcd& psi) {
  require(std::abs(psi.norm() - 1.0) <= 1e-12, "vector state needs unit norm");
  return state_of_density(A, psi * psi.adjoint());
}

Eigen::VectorXcd random_matrix_state(const FiniteAlgebra& A,
                                     std::mt19937_64& rng, int rank) {
  auto dims = block_dims_of(A);
  int space = 0;
  for (int dd : dims) space += dd;
  require(rank >= 1 && rank <= space, "rank out of range");
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> wdist(0.2, 1.0);
  Eigen::MatrixXcd D = Eigen::MatrixXcd::Zero(space, space);
  for (int r = 0; r < rank; ++r) {
    Eigen::VectorXcd psi(space);
    for (int k = 0; k < space; ++k) psi(k) = Cx(gauss(rng), gauss(rng));
    psi.normalize();
    D += wdist(rng) * (psi * psi.adjoint());
  }
  // Keep only block-diagonal parts; cross-block terms are invisible to the
  // algebra and would break trace normalization.
  Eigen::MatrixXcd Db = Eigen::MatrixXcd::Zero(space, space);
  int base = 0;
  for (int dd : dims) {
    Db.block(base, base, dd, dd) = D.block(base, base, dd, dd);
    base += dd;
  }
  Db /= Db.trace().real();
  return state_of_density(A, Db);
}

Eigen::VectorXcd random_state(const FiniteAlgebra& A, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int n = A.dim();
  for (int attempt = 0; attempt < 64; ++attempt) {
    Eigen::VectorXcd B(n);
    for (int i = 0; i < n; ++i) B(i) = Cx(gauss(rng), gauss(rng));
    Eigen::MatrixXcd L_Bstar = A.left_mult_of(A.star(B));
    Cx denom = A.trace(L_Bstar * B);
    // denom = tau(B* B); retry on near-null draws so the division is safe.
    if (std::abs(denom) < 1e-8) continue;
    Eigen::VectorXcd phi(n);
    for (int i = 0; i < n; ++i)
      phi(i) = A.trace(L_Bstar * (A.left_mult(i) * B)) / denom;
    return phi;
  }
  throw Error("random state generation kept drawing null elements");
}

}  // namespace supmech
