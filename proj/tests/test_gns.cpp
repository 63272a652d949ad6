// States, cyclic representations, purity, intertwiners, and superselection
// on small matrix algebras, checked against hand-computable matrix oracles.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>

#include "supmech/error.hpp"
#include "supmech/finite_algebra.hpp"
#include "supmech/gns.hpp"
#include "supmech/presentations.hpp"

using namespace supmech;

namespace {

Eigen::VectorXcd unit_ray(std::initializer_list<Cx> entries) {
  Eigen::VectorXcd v(static_cast<int>(entries.size()));
  int k = 0;
  for (Cx e : entries) v(k++) = e;
  v.normalize();
  return v;
}

// Independent matrix model of M_n: basis element a*n+b acts as |a><b|.
Eigen::MatrixXcd matrix_unit(int n, int a, int b) {
  Eigen::MatrixXcd E = Eigen::MatrixXcd::Zero(n, n);
  E(a, b) = 1.0;
  return E;
}

double max_abs(const Eigen::MatrixXcd& M) { return M.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("full matrix algebra structure matches the matrix model") {
  FiniteAlgebra A = FiniteAlgebra::full_matrix(3);
  CHECK(A.dim() == 9);
  CHECK(A.labels()[0 * 3 + 1] == "e12");
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::VectorXcd x(9), y(9);
    for (int k = 0; k < 9; ++k) {
      x(k) = Cx(g(rng), g(rng));
      y(k) = Cx(g(rng), g(rng));
    }
    Eigen::MatrixXcd Mx = Eigen::MatrixXcd::Zero(3, 3);
    Eigen::MatrixXcd My = Eigen::MatrixXcd::Zero(3, 3);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        Mx += x(a * 3 + b) * matrix_unit(3, a, b);
        My += y(a * 3 + b) * matrix_unit(3, a, b);
      }
    // product, star, and trace all agree with honest matrix arithmetic
    Eigen::VectorXcd xy = A.mul(x, y);
    Eigen::MatrixXcd Mxy = Mx * My;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        CHECK(std::abs(xy(a * 3 + b) - Mxy(a, b)) < 1e-13);
        CHECK(std::abs(A.star(x)(a * 3 + b) - std::conj(Mx(b, a))) < 1e-13);
      }
    CHECK(std::abs(A.trace(x) - Mx.trace()) < 1e-13);
  }
  CHECK(A.is_hermitian(A.unit()));
}

TEST_CASE("malformed structure constants are rejected at construction") {
  FiniteAlgebra good = FiniteAlgebra::full_matrix(2);
  std::vector<Eigen::MatrixXcd> lmul;
  for (int i = 0; i < 4; ++i) lmul.push_back(good.left_mult(i));
  lmul[1](2, 2) += 0.5;  // e12 * e21 picks up a spurious component
  CHECK_THROWS_AS(FiniteAlgebra("bad", good.labels(), lmul, good.star_map(),
                                good.unit(), Eigen::VectorXcd::Zero(4)),
                  Error);
}

TEST_CASE("grassmann bridge reproduces exact products") {
  FiniteAlgebra G = FiniteAlgebra::from_name("grassmann:2");
  CHECK(G.dim() == 4);
  // basis order: 1, th1, th2, th1 th2
  Eigen::VectorXcd th1 = Eigen::VectorXcd::Unit(4, 1);
  Eigen::VectorXcd th2 = Eigen::VectorXcd::Unit(4, 2);
  Eigen::VectorXcd p12 = G.mul(th1, th2);
  CHECK(std::abs(p12(3) - Cx(1.0)) < 1e-15);
  Eigen::VectorXcd p21 = G.mul(th2, th1);
  CHECK(std::abs(p21(3) + Cx(1.0)) < 1e-15);
  CHECK(max_abs(G.mul(th1, th1)) == 0.0);
  // (th1 th2)* = th2 th1 = -th1 th2
  CHECK(std::abs(G.star(p12)(3) + Cx(1.0)) < 1e-15);
}

TEST_CASE("json loader round-trips a commutative two-point algebra") {
  const char* path = "tmp_algebra_test.json";
  {
    std::ofstream out(path);
    out << R"({
      "labels": ["u1", "u2"],
      "mult": [[[1, 0], [0, 0]], [[0, 0], [0, 1]]],
      "star": [[1, 0], [0, 1]],
      "unit": [1, 1]
    })";
  }
  FiniteAlgebra A = FiniteAlgebra::from_json_file(path);
  CHECK(A.dim() == 2);
  Eigen::VectorXcd u1 = Eigen::VectorXcd::Unit(2, 0);
  CHECK(max_abs(A.mul(u1, Eigen::VectorXcd::Unit(2, 1))) == 0.0);

  // evaluation at the first summand is a pure state with a 1-dim rep
  Eigen::VectorXcd phi = u1;
  CHECK(check_state(A, phi).ok());
  GnsRep rep = gns_representation(A, phi);
  CHECK(rep.dim == 1);
  CHECK(rep.commutant_dim == 1);
  CHECK(is_pure(A, phi));

  {
    std::ofstream out(path);
    out << R"({
      "labels": ["u1", "u2"],
      "mult": [[[1, 0], [0, 0]], [[0, 0], [0, 1]]],
      "star": [[0, 1], [0, 1]],
      "unit": [1, 1]
    })";
  }
  CHECK_THROWS_AS(FiniteAlgebra::from_json_file(path), Error);
  CHECK_THROWS_AS(FiniteAlgebra::from_json_file("no_such_file.json"), Error);
}

TEST_CASE("state validation on hand-checked functionals") {
  FiniteAlgebra A = FiniteAlgebra::full_matrix(2);

  Eigen::VectorXcd phi11 = vector_state(A, unit_ray({1.0, 0.0}));
  CHECK(check_state(A, phi11).ok());

  // A -> A_12 is not even normalized
  Eigen::VectorXcd off = Eigen::VectorXcd::Zero(4);
  off(0 * 2 + 1) = 1.0;
  StateCheck bad = check_state(A, off);
  CHECK_FALSE(bad.unital);
  CHECK_FALSE(bad.ok());

  // half-trace: Gram = (1/2) identity in the matrix-unit basis
  Eigen::VectorXcd half_tr(4);
  half_tr << 0.5, 0.0, 0.0, 0.5;
  CHECK(check_state(A, half_tr).ok());
  Eigen::MatrixXcd G = gram_matrix(A, half_tr);
  CHECK(max_abs(G - 0.5 * Eigen::MatrixXcd::Identity(4, 4)) < 1e-14);

  // Gram of a vector state vs direct matrix evaluation
  Eigen::VectorXcd psi = unit_ray({Cx(0.6, 0.3), Cx(-0.2, 0.7)});
  Eigen::VectorXcd phi = vector_state(A, psi);
  Eigen::MatrixXcd Gv = gram_matrix(A, phi);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Eigen::MatrixXcd Mi = matrix_unit(2, i / 2, i % 2);
      Eigen::MatrixXcd Mj = matrix_unit(2, j / 2, j % 2);
      Cx expect = (psi.adjoint() * (Mi.adjoint() * Mj) * psi).value();
      CHECK(std::abs(Gv(i, j) - expect) < 1e-14);
    }
}

TEST_CASE("cyclic representation dimensions and residuals") {
  FiniteAlgebra A = FiniteAlgebra::full_matrix(2);

  Eigen::VectorXcd phi11 = vector_state(A, unit_ray({1.0, 0.0}));
  GnsRep r1 = gns_representation(A, phi11);
  CHECK(r1.dim == 2);
  CHECK(r1.commutant_dim == 1);
  CHECK(r1.rep_error < 1e-12);
  CHECK(r1.star_error < 1e-12);
  CHECK(r1.reconstruction_error < 1e-12);
  CHECK(r1.null_ideal.cols() == 2);
  // the null ideal of the e1 vector state is spanned by e12, e22
  for (int c = 0; c < 2; ++c) {
    Eigen::VectorXcd v = r1.null_ideal.col(c);
    CHECK(std::abs(v(0 * 2 + 0)) < 1e-12);
    CHECK(std::abs(v(1 * 2 + 0)) < 1e-12);
  }

  Eigen::VectorXcd half_tr(4);
  half_tr << 0.5, 0.0, 0.0, 0.5;
  GnsRep r2 = gns_representation(A, half_tr);
  CHECK(r2.dim == 4);
  CHECK(r2.commutant_dim == 4);
  CHECK(r2.reconstruction_error < 1e-12);

  FiniteAlgebra C1 = FiniteAlgebra::full_matrix(1);
  Eigen::VectorXcd triv(1);
  triv << 1.0;
  CHECK(gns_representation(C1, triv).dim == 1);
}

TEST_CASE("purity matches the density-matrix oracle with zero disagreements") {
  std::mt19937_64 rng(20260822);
  for (const char* name : {"matn:2", "sumn:2,3"}) {
    FiniteAlgebra A = FiniteAlgebra::from_name(name);
    auto dims = block_dims_of(A);
    int space = 0;
    for (int d : dims) space += d;
    int checked = 0;
    while (checked < 100) {
      std::uniform_int_distribution<int> rdist(1, space);
      Eigen::VectorXcd phi = random_matrix_state(A, rng, rdist(rng));
      Eigen::MatrixXcd D = density_of_state(A, phi);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(D);
      double second = es.eigenvalues()(space - 2);
      if (second > 1e-10 && second < 1e-4) continue;  // ambiguous draw
      bool oracle_pure = second <= 1e-10;
      CHECK(check_state(A, phi).ok());
      GnsRep rep = gns_representation(A, phi);
      CHECK(rep.reconstruction_error <= 1e-12);
      CHECK(rep.rep_error <= 1e-12);
      CHECK(rep.star_error <= 1e-12);
      // the commutant criterion and the spectral oracle must never disagree
      REQUIRE((rep.commutant_dim == 1) == oracle_pure);
      if (!oracle_pure) {
        // exhibit an explicit two-state decomposition from the spectrum
        Eigen::VectorXcd top = es.eigenvectors().col(space - 1);
        Eigen::VectorXcd next = es.eigenvectors().col(space - 2);
        double w1 = es.eigenvalues()(space - 1);
        double w2 = 1.0 - w1;
        Eigen::MatrixXcd D1 = top * top.adjoint();
        Eigen::MatrixXcd D2 = (D - w1 * D1) / w2;
        Eigen::VectorXcd phi1 = state_of_density(A, D1);
        Eigen::VectorXcd phi2 = state_of_density(A, D2);
        CHECK(check_state(A, phi1).ok());
        CHECK(check_state(A, phi2, 1e-8).ok());
        CHECK((w1 * phi1 + w2 * phi2 - phi).cwiseAbs().maxCoeff() < 1e-10);
        CHECK((phi1 - phi2).cwiseAbs().maxCoeff() > 1e-6);
        (void)next;
      }
      ++checked;
    }
  }
}

TEST_CASE("compressed states: scale invariance, null ideal, purity") {
  FiniteAlgebra A = FiniteAlgebra::full_matrix(2);
  Eigen::VectorXcd phi = vector_state(A, unit_ray({1.0, 0.0}));

  Eigen::VectorXcd e12 = Eigen::VectorXcd::Unit(4, 0 * 2 + 1);
  Eigen::VectorXcd e21 = Eigen::VectorXcd::Unit(4, 1 * 2 + 0);

  CHECK((state_from_vector(A, phi, A.unit()) - phi).cwiseAbs().maxCoeff() <
        1e-14);
  CHECK((state_from_vector(A, phi, 2.0 * A.unit()) - phi)
            .cwiseAbs()
            .maxCoeff() < 1e-14);

  // compressing A -> A_11 by e21 lands on A -> A_22
  Eigen::VectorXcd phi22 = vector_state(A, unit_ray({0.0, 1.0}));
  CHECK((state_from_vector(A, phi, e21) - phi22).cwiseAbs().maxCoeff() <
        1e-14);
  CHECK(is_pure(A, state_from_vector(A, phi, e21)));

  // e12 annihilates the cyclic vector of phi
  CHECK_THROWS_AS(state_from_vector(A, phi, e12), Error);

  // adding a null-ideal element does not change the compressed state
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    Eigen::VectorXcd B(4);
    for (int k = 0; k < 4; ++k) B(k) = Cx(g(rng), g(rng));
    Eigen::VectorXcd K = Cx(g(rng), g(rng)) * e12;
    K += Cx(g(rng), g(rng)) * Eigen::VectorXcd::Unit(4, 1 * 2 + 1);
    Eigen::VectorXcd direct = state_from_vector(A, phi, B);
    Eigen::VectorXcd shifted = state_from_vector(A, phi, B + K);
    CHECK((direct - shifted).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(check_state(A, direct).ok());
    CHECK(is_pure(A, direct));
  }
}

TEST_CASE("intertwiners between cyclic representations") {
  FiniteAlgebra A = FiniteAlgebra::full_matrix(2);
  GnsRep r1 = gns_representation(A, vector_state(A, unit_ray({1.0, 0.0})));
  GnsRep r2 = gns_representation(A, vector_state(A, unit_ray({0.0, 1.0})));

  // a representation intertwines with itself by a phase times identity
  auto self = find_intertwiner(r1.pi, r1.pi);
  REQUIRE(self.has_value());
  Cx lead = (*self)(0, 0);
  CHECK(std::abs(std::abs(lead) - 1.0) < 1e-10);
  CHECK(max_abs(*self - lead * Eigen::MatrixXcd::Identity(2, 2)) < 1e-10);

  auto cross = find_intertwiner(r1.pi, r2.pi, 1e-10);
  REQUIRE(cross.has_value());
  for (int i = 0; i < 4; ++i)
    CHECK(max_abs((*cross) * r1.pi[i] * cross->adjoint() - r2.pi[i]) < 1e-10);

  // pure states of different blocks have inequivalent representations
  FiniteAlgebra S = FiniteAlgebra::from_name("sumn:2,3");
  Eigen::VectorXcd left = Eigen::VectorXcd::Zero(5), right = left;
  left(0) = 1.0;
  right(2) = 1.0;
  GnsRep rl = gns_representation(S, vector_state(S, left));
  GnsRep rr = gns_representation(S, vector_state(S, right));
  CHECK(rl.dim == 2);
  CHECK(rr.dim == 3);
  CHECK_FALSE(find_intertwiner(rl.pi, rr.pi).has_value());

  // equal dimensions but different blocks: still no intertwiner
  FiniteAlgebra S22 = FiniteAlgebra::from_name("sumn:2,2");
  Eigen::VectorXcd l22 = Eigen::VectorXcd::Zero(4), r22 = l22;
  l22(0) = 1.0;
  r22(2) = 1.0;
  GnsRep ra = gns_representation(S22, vector_state(S22, l22));
  GnsRep rb = gns_representation(S22, vector_state(S22, r22));
  CHECK(ra.dim == 2);
  CHECK(rb.dim == 2);
  CHECK_FALSE(find_intertwiner(ra.pi, rb.pi).has_value());
}

TEST_CASE("random compressions of a pure state stay in its equivalence class") {
  FiniteAlgebra A = FiniteAlgebra::full_matrix(2);
  Eigen::VectorXcd phi = vector_state(A, unit_ray({1.0, 0.0}));
  GnsRep base = gns_representation(A, phi);
  std::mt19937_64 rng(77);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::VectorXcd B(4);
    for (int k = 0; k < 4; ++k) B(k) = Cx(g(rng), g(rng));
    Eigen::VectorXcd phiB = state_from_vector(A, phi, B);
    CHECK(check_state(A, phiB).ok());
    GnsRep repB = gns_representation(A, phiB);
    CHECK(repB.commutant_dim == 1);
    auto U = find_intertwiner(base.pi, repB.pi, 1e-10);
    REQUIRE(U.has_value());
    for (int i = 0; i < 4; ++i)
      CHECK(max_abs((*U) * base.pi[i] * U->adjoint() - repB.pi[i]) < 1e-10);
  }
}

TEST_CASE("transition probabilities and the measurement witness") {
  Eigen::VectorXcd psi1 = unit_ray({1.0, 0.0});
  Eigen::VectorXcd psi2 = unit_ray({1.0, 1.0});
  Eigen::MatrixXcd rho1 = psi1 * psi1.adjoint();
  Eigen::MatrixXcd rho2 = psi2 * psi2.adjoint();

  TransitionResult same = transition_probability(rho1, rho1);
  CHECK(same.probability == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(same.povm_built);

  Eigen::VectorXcd perp = unit_ray({0.0, 1.0});
  TransitionResult ortho =
      transition_probability(rho1, perp * perp.adjoint());
  CHECK(std::abs(ortho.probability) < 1e-14);

  TransitionResult half = transition_probability(rho1, rho2);
  CHECK(half.probability == doctest::Approx(0.5).epsilon(1e-12));
  REQUIRE(half.povm_built);
  REQUIRE(half.basis.size() == 2);
  // orthonormality and the first-vector convention
  CHECK(max_abs(half.basis[0] * half.basis[0].adjoint() +
                half.basis[1] * half.basis[1].adjoint() -
                Eigen::MatrixXcd::Identity(2, 2)) < 1e-12);
  CHECK((half.basis[0] - psi2).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(half.povm_agreement < 1e-12);

  // mixed states use the trace formula and skip the witness
  Eigen::MatrixXcd m1 = Eigen::MatrixXcd::Zero(2, 2);
  m1.diagonal() << 0.5, 0.5;
  Eigen::MatrixXcd m2 = Eigen::MatrixXcd::Zero(2, 2);
  m2.diagonal() << 0.75, 0.25;
  TransitionResult mixed = transition_probability(m1, m2);
  CHECK(mixed.probability == doctest::Approx(0.5).epsilon(1e-12));
  CHECK_FALSE(mixed.povm_built);

  CHECK_THROWS_AS(transition_probability(2.0 * rho1, rho2), Error);
}

TEST_CASE("direct sums and faithfulness") {
  FiniteAlgebra A = FiniteAlgebra::full_matrix(2);
  Eigen::VectorXcd p1 = vector_state(A, unit_ray({1.0, 0.0}));
  Eigen::VectorXcd p2 = vector_state(A, unit_ray({0.0, 1.0}));

  DirectSumRep both = direct_sum_rep(A, {p1, p2});
  CHECK(both.faithful);
  CHECK(both.pi[0].rows() == 4);

  // a simple algebra is already separated by one pure state
  DirectSumRep alone = direct_sum_rep(A, {p1});
  CHECK(alone.faithful);

  // one summand of a direct sum cannot see the other
  FiniteAlgebra C2 = FiniteAlgebra::from_name("sumn:1,1");
  Eigen::VectorXcd first = Eigen::VectorXcd::Zero(2);
  first(0) = 1.0;
  DirectSumRep partial = direct_sum_rep(C2, {first});
  CHECK_FALSE(partial.faithful);
}

TEST_CASE("superselection sectors of a two-block algebra") {
  FiniteAlgebra S = FiniteAlgebra::from_name("sumn:2,3");
  Eigen::VectorXcd left = Eigen::VectorXcd::Zero(5), right = left;
  left(0) = 1.0;
  right(2) = 1.0;
  DirectSumRep rep = direct_sum_rep(
      S, {vector_state(S, left), vector_state(S, right)});
  REQUIRE(rep.faithful);

  SuperselectionResult sel = superselection_decompose(S, rep.pi);
  CHECK(sel.faithful);
  REQUIRE(sel.sectors.size() == 2);
  CHECK(sel.sectors[0].dim == 3);
  CHECK(sel.sectors[1].dim == 2);
  CHECK(sel.commutation_residual <= 1e-12);

  // the projections are hermitian idempotents summing to the identity with
  // no roundoff at all
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(5, 5);
  for (const auto& s : sel.sectors) {
    CHECK(max_abs(s.projection - s.projection.adjoint()) < 1e-12);
    CHECK(max_abs(s.projection * s.projection - s.projection) < 1e-12);
    sum += s.projection;
  }
  CHECK(max_abs(sum - Eigen::MatrixXcd::Identity(5, 5)) == 0.0);
  CHECK(max_abs(sel.sectors[0].projection * sel.sectors[1].projection) <
        1e-12);

  // the large sector projection is the image of the second block's unit
  Eigen::VectorXcd block_unit = Eigen::VectorXcd::Zero(13);
  block_unit(4 + 0 * 3 + 0) = 1.0;
  block_unit(4 + 1 * 3 + 1) = 1.0;
  block_unit(4 + 2 * 3 + 2) = 1.0;
  CHECK(max_abs(represent(rep.pi, block_unit) - sel.sectors[0].projection) <
        1e-12);

  // weighted sums of the projections commute pairwise and with the image
  Eigen::MatrixXcd Q1 =
      1.5 * sel.sectors[0].projection - 0.25 * sel.sectors[1].projection;
  Eigen::MatrixXcd Q2 =
      -0.4 * sel.sectors[0].projection + 2.0 * sel.sectors[1].projection;
  CHECK(max_abs(Q1 * Q2 - Q2 * Q1) < 1e-12);
  for (const auto& p : rep.pi) CHECK(max_abs(Q1 * p - p * Q1) < 1e-12);

  // an irreducible representation has a single full sector
  FiniteAlgebra M2 = FiniteAlgebra::full_matrix(2);
  GnsRep irr = gns_representation(M2, vector_state(M2, unit_ray({1.0, 0.0})));
  SuperselectionResult one = superselection_decompose(M2, irr.pi);
  REQUIRE(one.sectors.size() == 1);
  CHECK(one.sectors[0].dim == 2);
  CHECK(max_abs(one.sectors[0].projection -
                Eigen::MatrixXcd::Identity(2, 2)) == 0.0);

  // a non-faithful representation is flagged and shows the quotient only
  DirectSumRep partial = direct_sum_rep(S, {vector_state(S, left)});
  SuperselectionResult quot = superselection_decompose(S, partial.pi);
  CHECK_FALSE(quot.faithful);
  CHECK(quot.sectors.size() == 1);
}

TEST_CASE("trace-compressed random states are states everywhere") {
  std::mt19937_64 rng(303);
  FiniteAlgebra A = FiniteAlgebra::full_matrix(2);
  for (int trial = 0; trial < 5; ++trial)
    CHECK(check_state(A, random_state(A, rng)).ok());

  // on a grassmann algebra every trace compression collapses to the
  // coefficient-of-unit functional: words cannot multiply back to a scalar
  FiniteAlgebra G = FiniteAlgebra::from_name("grassmann:3");
  Eigen::VectorXcd expected = Eigen::VectorXcd::Zero(8);
  expected(0) = 1.0;
  for (int trial = 0; trial < 5; ++trial) {
    Eigen::VectorXcd phi = random_state(G, rng);
    CHECK((phi - expected).cwiseAbs().maxCoeff() < 1e-12);
  }
}
