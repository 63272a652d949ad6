// Grid transforms, split-step evolution, and the localization measure,
// checked against closed-form Gaussian and plane-wave oracles.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "supmech/fd.hpp"
#include "supmech/localization.hpp"
#include "supmech/phase_grid.hpp"
#include "supmech/schrodinger.hpp"

using namespace supmech;
using Cx = std::complex<double>;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

WaveField random_field(const PhaseGrid& g, std::mt19937_64& rng) {
  std::normal_distribution<double> dist;
  WaveField psi(g.N);
  for (int j = 0; j < g.N; ++j) psi(j) = Cx(dist(rng), dist(rng));
  return normalized(g, psi);
}

// Closed-form momentum wave function of gaussian_packet(x0, p0, sigma).
Cx gaussian_momentum(double p, double x0, double p0, double sigma, double hbar) {
  const double amp = std::pow(2 * sigma * sigma / (kPi * hbar * hbar), 0.25);
  const double q = p - p0;
  return amp * std::exp(-sigma * sigma * q * q / (hbar * hbar)) *
         std::exp(Cx(0.0, -p * x0 / hbar));
}

}  // namespace

TEST_CASE("finite-difference weights reproduce classic stencils") {
  // Three-point first and second derivative at the center node.
  const std::vector<double> nodes{-1.0, 0.0, 1.0};
  auto w1 = fd_weights(0.0, nodes, 1);
  CHECK(w1[0] == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(w1[1] == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(w1[2] == doctest::Approx(0.5).epsilon(1e-14));
  auto w2 = fd_weights(0.0, nodes, 2);
  CHECK(w2[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(w2[1] == doctest::Approx(-2.0).epsilon(1e-14));
  CHECK(w2[2] == doctest::Approx(1.0).epsilon(1e-14));

  // One-sided first derivative: forward difference of order 2.
  const std::vector<double> fwd{0.0, 1.0, 2.0};
  auto wf = fd_weights(0.0, fwd, 1);
  CHECK(wf[0] == doctest::Approx(-1.5).epsilon(1e-14));
  CHECK(wf[1] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(wf[2] == doctest::Approx(-0.5).epsilon(1e-14));

  // Interpolation weights (order 0) sum to one and are exact on cubics.
  const std::vector<double> quad{-1.0, 0.0, 1.0, 2.0};
  auto wi = fd_weights(0.37, quad, 0);
  double sum = 0, val = 0;
  for (size_t i = 0; i < quad.size(); ++i) {
    sum += wi[i];
    val += wi[i] * (quad[i] * quad[i] * quad[i] - 2 * quad[i] + 1);
  }
  const double z = 0.37;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(val == doctest::Approx(z * z * z - 2 * z + 1).epsilon(1e-13));
}

TEST_CASE("differentiation matrices are exact on polynomials, edges included") {
  const int n = 24;
  const double dx = 0.31;
  for (int order : {1, 2, 3}) {
    Eigen::MatrixXd d = derivative_matrix(n, dx, order, 9);
    // f(x) = x^5 - 3x^2 + 2, degree 5 <= 8.
    Eigen::VectorXd f(n), expect(n);
    for (int j = 0; j < n; ++j) {
      const double x = j * dx;
      f(j) = std::pow(x, 5) - 3 * x * x + 2;
      if (order == 1) expect(j) = 5 * std::pow(x, 4) - 6 * x;
      if (order == 2) expect(j) = 20 * std::pow(x, 3) - 6;
      if (order == 3) expect(j) = 60 * x * x;
    }
    const double scale = expect.cwiseAbs().maxCoeff();
    CHECK((d * f - expect).cwiseAbs().maxCoeff() / scale < 1e-9);
  }
}

TEST_CASE("grid spacings satisfy the conjugacy relation") {
  PhaseGrid g(20.0, 128, 0.7);
  CHECK(g.dx() * g.dp() * g.N == doctest::Approx(2 * kPi * g.hbar).epsilon(1e-15));
  CHECK(g.p(g.N / 2) == 0.0);
  // Midpoint centers are symmetric about the origin.
  CHECK(g.x(0) + g.x(g.N - 1) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK_THROWS_AS(PhaseGrid(20.0, 100, 1.0), Error);
  CHECK_THROWS_AS(PhaseGrid(-1.0, 64, 1.0), Error);
  CHECK_THROWS_AS(PhaseGrid(20.0, 64, 0.0), Error);
}

TEST_CASE("momentum transform sends lattice plane waves to single bins") {
  PhaseGrid g(16.0, 64, 0.5);
  const int q = 41;
  WaveField psi(g.N);
  for (int j = 0; j < g.N; ++j)
    psi(j) = std::exp(Cx(0.0, g.p(q) * g.x(j) / g.hbar)) / std::sqrt(g.L);
  WaveField hat = to_momentum(g, psi);
  for (int m = 0; m < g.N; ++m) {
    if (m == q) continue;
    CHECK(std::abs(hat(m)) < 1e-12);
  }
  // |psihat_q|^2 dp = 1; the phase convention makes the peak positive real
  // up to the packet's own phase at x0.
  CHECK(std::norm(hat(q)) * g.dp() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("transform pair is unitary and invertible") {
  PhaseGrid g(20.0, 128, 1.3);
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 5; ++trial) {
    WaveField psi = random_field(g, rng);
    WaveField hat = to_momentum(g, psi);
    CHECK(hat.squaredNorm() * g.dp() == doctest::Approx(1.0).epsilon(1e-13));
    WaveField back = to_position(g, hat);
    CHECK((back - psi).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("gaussian packet matches its closed-form momentum representation") {
  PhaseGrid g(24.0, 256, 0.8);
  const double x0 = 1.3, p0 = -0.9, sigma = 1.1;
  WaveField psi = gaussian_packet(g, x0, p0, sigma);
  WaveField hat = to_momentum(g, psi);
  // The packet phase convention uses p0 (x - x0); the closed form then
  // carries e^{-i p x0 / hbar} with no extra constant phase.
  for (int m = 0; m < g.N; m += 7) {
    const Cx expect = gaussian_momentum(g.p(m), x0, p0, sigma, g.hbar);
    CHECK(std::abs(hat(m) - expect) < 1e-8);
  }
  CHECK(position_mean(g, psi) == doctest::Approx(x0).epsilon(1e-9));
  CHECK(position_variance(g, psi) ==
        doctest::Approx(sigma * sigma).epsilon(1e-9));
}

TEST_CASE("boundary mass flags packets leaning on the box edge") {
  PhaseGrid g(20.0, 256, 1.0);
  CHECK(boundary_mass(g, gaussian_packet(g, 0.0, 0.0, 1.0)) < 1e-14);
  CHECK(boundary_mass(g, gaussian_packet(g, 9.5, 0.0, 1.0)) > 0.1);
}

TEST_CASE("half-step interpolation reproduces samples and analytic values") {
  PhaseGrid g(20.0, 128, 0.9);
  const double x0 = 0.3, p0 = 1.2, sigma = 0.8;
  WaveField psi = gaussian_packet(g, x0, p0, sigma);
  Eigen::VectorXcd fine = doubled_samples(g, psi);
  // Exact at the original nodes.
  for (int j = 0; j < g.N; ++j)
    CHECK(std::abs(fine(2 * j + 1) - psi(j)) < 1e-12);
  // Near the analytic packet at the in-between nodes (same normalization as
  // the grid packet, checked through the ratio at the peak sample).
  const Cx ratio = psi(g.N / 2) /
                   Cx(std::exp(-std::pow(g.x(g.N / 2) - x0, 2) / (4 * sigma * sigma)) *
                          std::cos(p0 * (g.x(g.N / 2) - x0) / g.hbar),
                      std::exp(-std::pow(g.x(g.N / 2) - x0, 2) / (4 * sigma * sigma)) *
                          std::sin(p0 * (g.x(g.N / 2) - x0) / g.hbar));
  for (int k = 0; k < 2 * g.N; k += 13) {
    const double xt = -g.L / 2 + k * g.dx() / 2;
    const double u = xt - x0;
    const Cx analytic =
        ratio * std::exp(Cx(-u * u / (4 * sigma * sigma), p0 * u / g.hbar));
    CHECK(std::abs(fine(k) - analytic) < 1e-10);
  }
}

TEST_CASE("position and momentum operators act correctly") {
  PhaseGrid g(16.0, 64, 0.5);
  // apply_p on a lattice plane wave multiplies by its momentum.
  const int q = 20;
  WaveField psi(g.N);
  for (int j = 0; j < g.N; ++j)
    psi(j) = std::exp(Cx(0.0, g.p(q) * g.x(j) / g.hbar)) / std::sqrt(g.L);
  WaveField pw = apply_p(g, psi);
  CHECK((pw - g.p(q) * psi).cwiseAbs().maxCoeff() < 1e-12);
  // <psi, P psi> for a moving packet equals p0.
  PhaseGrid g2(24.0, 256, 1.0);
  WaveField packet = gaussian_packet(g2, -0.4, 1.7, 0.9);
  CHECK(inner(g2, packet, apply_p(g2, packet)).real() ==
        doctest::Approx(1.7).epsilon(1e-9));
  CHECK(inner(g2, packet, apply_x(g2, packet)).real() ==
        doctest::Approx(-0.4).epsilon(1e-9));
}

TEST_CASE("free evolution follows the Gaussian width law") {
  PhaseGrid g(40.0, 512, 1.0);
  const double sigma0 = 1.0, mass = 1.0, t = 1.0;
  WaveField psi0 = gaussian_packet(g, 0.0, 0.0, sigma0);
  WaveField psi = schrodinger_evolve(g, psi0, Eigen::VectorXd::Zero(g.N), mass,
                                     t, 400);
  const double expect = free_gaussian_width_sq(sigma0, g.hbar, mass, t);
  CHECK(std::abs(position_variance(g, psi) - expect) / expect < 1e-6);
  CHECK(std::abs(field_norm(g, psi) - 1.0) < 1e-12);
  // Momentum distribution is invariant under free evolution.
  WaveField hat0 = to_momentum(g, psi0), hat = to_momentum(g, psi);
  CHECK((hat.cwiseAbs() - hat0.cwiseAbs()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("drifting packet moves at p0/m") {
  PhaseGrid g(40.0, 512, 1.0);
  const double p0 = 2.0, mass = 2.0, t = 1.5;
  WaveField psi0 = gaussian_packet(g, -2.0, p0, 1.0);
  WaveField psi =
      schrodinger_evolve(g, psi0, Eigen::VectorXd::Zero(g.N), mass, t, 300);
  CHECK(position_mean(g, psi) ==
        doctest::Approx(-2.0 + p0 / mass * t).epsilon(1e-8));
}

TEST_CASE("coherent state returns after one harmonic period") {
  PhaseGrid g(30.0, 512, 1.0);
  const double mass = 1.0, omega = 1.0;
  WaveField psi0 = coherent_state(g, mass, omega, 2.0, 0.0);
  Eigen::VectorXd v = harmonic_potential(g, mass, omega);
  const double period = 2 * kPi / omega;
  WaveField psi = schrodinger_evolve(g, psi0, v, mass, period, 4096);
  const double fidelity = std::abs(inner(g, psi0, psi));
  CHECK(fidelity >= 1.0 - 1e-8);
}

TEST_CASE("harmonic energy drifts below 1e-8 over a thousand steps") {
  PhaseGrid g(30.0, 256, 1.0);
  const double mass = 1.0, omega = 1.0;
  Eigen::VectorXd v = harmonic_potential(g, mass, omega);
  WaveField psi0 = coherent_state(g, mass, omega, 1.5, 0.8);
  const double e0 = energy(g, psi0, v, mass);
  WaveField psi = psi0;
  const double dt_total = 0.05;
  psi = schrodinger_evolve(g, psi, v, mass, dt_total, 1000);
  const double e1 = energy(g, psi, v, mass);
  CHECK(std::abs(e1 - e0) / std::abs(e0) <= 1e-8);
}

TEST_CASE("split-step error falls second order under step refinement") {
  PhaseGrid g(24.0, 256, 1.0);
  Eigen::VectorXd v(g.N);
  for (int j = 0; j < g.N; ++j) v(j) = 0.25 * std::pow(g.x(j), 4);
  WaveField psi0 = gaussian_packet(g, 1.0, 0.0, 0.8);
  const double t = 0.5;
  WaveField ref = schrodinger_evolve(g, psi0, v, 1.0, t, 4096);
  const double e1 =
      (schrodinger_evolve(g, psi0, v, 1.0, t, 32) - ref).cwiseAbs().maxCoeff();
  const double e2 =
      (schrodinger_evolve(g, psi0, v, 1.0, t, 64) - ref).cwiseAbs().maxCoeff();
  const double e4 =
      (schrodinger_evolve(g, psi0, v, 1.0, t, 128) - ref).cwiseAbs().maxCoeff();
  CHECK(e1 / e2 > 3.0);
  CHECK(e1 / e2 < 5.0);
  CHECK(e2 / e4 > 3.0);
  CHECK(e2 / e4 < 5.0);
}

TEST_CASE("evolution rejects bad inputs and non-finite data") {
  PhaseGrid g(10.0, 64, 1.0);
  WaveField psi = gaussian_packet(g, 0.0, 0.0, 0.7);
  Eigen::VectorXd v = Eigen::VectorXd::Zero(g.N);
  CHECK_THROWS_AS(schrodinger_evolve(g, psi, v, -1.0, 1.0, 10), Error);
  CHECK_THROWS_AS(schrodinger_evolve(g, psi, v, 1.0, -0.5, 10), Error);
  CHECK_THROWS_AS(schrodinger_evolve(g, psi, v, 1.0, 1.0, 0), Error);
  // t = 0 returns the input untouched regardless of steps.
  CHECK((schrodinger_evolve(g, psi, v, 1.0, 0.0, 0) - psi).norm() == 0.0);
  Eigen::VectorXd bad = v;
  bad(3) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(schrodinger_evolve(g, psi, bad, 1.0, 1.0, 10), Error);
  WaveField badpsi = psi;
  badpsi(5) = Cx(std::numeric_limits<double>::infinity(), 0.0);
  CHECK_THROWS_AS(schrodinger_evolve(g, badpsi, v, 1.0, 1.0, 10), Error);
}

TEST_CASE("cell sets enforce alignment and support exact set algebra") {
  PhaseGrid g(20.0, 64, 1.0);
  CellSet left = CellSet::interval(g, -10.0, 0.0);
  CHECK(left.size() == 32);
  CHECK_THROWS_AS(CellSet::interval(g, -10.0, 0.1), Error);
  CHECK_THROWS_AS(CellSet::interval(g, -11.0, 0.0), Error);
  CellSet right = left.complement();
  CHECK(left.disjoint_from(right));
  CHECK(left.unite(right).size() == 64);
  CHECK(left.intersect(right).size() == 0);
  CHECK(left.translated(5).size() == 32);
}

TEST_CASE("localization measure: exact additivity, unit total, covariance") {
  PhaseGrid g(20.0, 256, 1.0);
  std::mt19937_64 rng(1234);
  PobvmGrid pobvm = localization_pobvm(g);
  for (int trial = 0; trial < 10; ++trial) {
    WaveField psi = random_field(g, rng);
    CellSet a = CellSet::interval(g, -10.0, -2.5);
    CellSet b = CellSet::interval(g, 1.25, 6.25);
    REQUIRE(a.disjoint_from(b));

    // Operator-level additivity and completeness are exact by construction.
    Eigen::VectorXd pa = pobvm.projection(a), pb = pobvm.projection(b);
    CHECK((pobvm.projection(a.unite(b)) - (pa + pb)).cwiseAbs().maxCoeff() == 0.0);
    CHECK((pobvm.projection(CellSet::all(g.N)) -
           Eigen::VectorXd::Ones(g.N)).cwiseAbs().maxCoeff() == 0.0);
    CHECK(pobvm.projection(CellSet::none(g.N)).cwiseAbs().maxCoeff() == 0.0);

    // Probability additivity holds exactly in rational arithmetic.
    CHECK(probability_exact(g, psi, a.unite(b)) ==
          probability_exact(g, psi, a) + probability_exact(g, psi, b));
    CHECK(probability_exact(g, psi, a) + probability_exact(g, psi, a.complement()) ==
          probability_exact(g, psi, CellSet::all(g.N)));
    CHECK(probability(g, psi, CellSet::all(g.N)) ==
          doctest::Approx(1.0).epsilon(1e-13));
    CHECK(probability(g, psi, CellSet::none(g.N)) == 0.0);

    // Monotonicity under set inclusion.
    CHECK(probability(g, psi, a) <= probability(g, psi, a.unite(b)));

    // Translation covariance is exact: mu_{U psi}(D) = mu_psi(D shifted back).
    const int cells = 37;
    WaveField shifted = translate(g, psi, cells);
    CHECK(probability_exact(g, shifted, a) ==
          probability_exact(g, psi, a.translated(-cells)));
    CHECK(std::abs(probability(g, shifted, a) -
                   probability(g, psi, a.translated(-cells))) <= 1e-12);
  }
}

TEST_CASE("half-line probability matches the error-function oracle") {
  PhaseGrid g(20.0, 4096, 1.0);
  const double x0 = 0.3, sigma = 1.0;
  WaveField psi = gaussian_packet(g, x0, 0.6, sigma);
  CellSet left = CellSet::interval(g, -10.0, 0.0);
  const double expect = 0.5 * (1.0 + std::erf((0.0 - x0) / (sigma * std::sqrt(2.0))));
  CHECK(std::abs(probability(g, psi, left) - expect) < 1e-6);
  // Standard centered Gaussian: exactly one half by symmetry.
  WaveField centered = gaussian_packet(g, 0.0, 0.0, sigma);
  CHECK(std::abs(probability(g, centered, left) - 0.5) < 1e-9);
}

TEST_CASE("weyl relations hold on the grid at hbar = 1") {
  PhaseGrid g(20.0, 256, 1.0);
  WaveField psi = gaussian_packet(g, -1.0, 0.7, 0.9);
  const double a = 64 * g.dx();
  const double b = 2 * kPi / g.L * 32;
  WeylRelationsResult res = weyl_relations_check(g, a, b, psi);
  CHECK(res.u_group_residual == 0.0);
  CHECK(res.u_inverse_residual == 0.0);
  CHECK(res.v_group_residual < 1e-12);
  CHECK(res.commutation_residual < 1e-12);
  // a = b = 0 gives all identities exactly.
  WeylRelationsResult zero = weyl_relations_check(g, 0.0, 0.0, psi);
  CHECK(zero.max() == 0.0);
  // Off-lattice boosts still commute correctly on margin states.
  WeylRelationsResult off = weyl_relations_check(g, 16 * g.dx(), 1.2345, psi);
  CHECK(off.commutation_residual < 1e-10);
  CHECK_THROWS_AS(weyl_relations_check(g, 0.5 * g.dx(), 0.1, psi), Error);
  PhaseGrid g2(20.0, 64, 0.5);
  CHECK_THROWS_AS(
      weyl_relations_check(g2, g2.dx(), 0.1, gaussian_packet(g2, 0, 0, 1)),
      Error);
}

TEST_CASE("translation generator converges to the momentum operator") {
  PhaseGrid g(20.0, 512, 1.0);
  WaveField psi = gaussian_packet(g, 0.5, 1.1, 1.0);
  WaveField target(g.N);
  {
    WaveField pw = apply_p(g, psi);
    for (int j = 0; j < g.N; ++j) target(j) = Cx(0, -1) / g.hbar * pw(j);
  }
  std::vector<double> errs;
  for (int cells : {16, 8, 4, 2}) {
    const double eps = cells * g.dx();
    WaveField diff = (translate(g, psi, cells) - psi) / eps;
    errs.push_back((diff - target).cwiseAbs().maxCoeff());
  }
  // First-order rate: error halves with the step.
  for (size_t i = 1; i < errs.size(); ++i) {
    const double ratio = errs[i - 1] / errs[i];
    CHECK(ratio > 1.7);
    CHECK(ratio < 2.3);
  }
}
