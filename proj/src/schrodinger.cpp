// Strang split-step integration of the grid Schrodinger equation.

#include "supmech/schrodinger.hpp"

#include <cmath>
#include <string>

namespace supmech {

namespace {

using Cx = std::complex<double>;

void check_finite(const WaveField& psi, int step) {
  if (!psi.allFinite())
    throw Error("schrodinger_evolve produced a non-finite sample at step " +
                std::to_string(step));
}

}  // namespace

WaveField schrodinger_evolve(const PhaseGrid& g, const WaveField& psi0,
                             const Eigen::VectorXd& potential, double mass,
                             double t, int steps) {
  require(psi0.size() == g.N && potential.size() == g.N,
          "field size does not match the grid");
  require(mass > 0, "mass must be positive");
  require(t >= 0, "evolution time must be nonnegative");
  if (t == 0) return psi0;
  require(steps >= 1, "step count must be at least 1");
  require(potential.allFinite(), "potential contains non-finite samples");

  const double dt = t / steps;
  Eigen::VectorXcd half_kick(g.N), drift(g.N);
  for (int j = 0; j < g.N; ++j)
    half_kick(j) = std::exp(Cx(0.0, -potential(j) * dt / (2 * g.hbar)));
  for (int m = 0; m < g.N; ++m) {
    const double p = g.p(m);
    drift(m) = std::exp(Cx(0.0, -p * p * dt / (2 * mass * g.hbar)));
  }

  WaveField psi = psi0;
  check_finite(psi, 0);
  for (int s = 0; s < steps; ++s) {
    psi = psi.cwiseProduct(half_kick);
    WaveField hat = to_momentum(g, psi);
    hat = hat.cwiseProduct(drift);
    psi = to_position(g, hat);
    psi = psi.cwiseProduct(half_kick);
    check_finite(psi, s + 1);
  }
  return psi;
}

double energy(const PhaseGrid& g, const WaveField& psi,
              const Eigen::VectorXd& potential, double mass) {
  require(psi.size() == g.N && potential.size() == g.N,
          "field size does not match the grid");
  const WaveField hat = to_momentum(g, psi);
  double kinetic = 0;
  for (int m = 0; m < g.N; ++m)
    kinetic += g.p(m) * g.p(m) / (2 * mass) * std::norm(hat(m));
  kinetic *= g.dp();
  double pot = 0;
  for (int j = 0; j < g.N; ++j) pot += potential(j) * std::norm(psi(j));
  pot *= g.dx();
  return kinetic + pot;
}

Eigen::VectorXd harmonic_potential(const PhaseGrid& g, double mass,
                                   double omega) {
  Eigen::VectorXd v(g.N);
  for (int j = 0; j < g.N; ++j)
    v(j) = 0.5 * mass * omega * omega * g.x(j) * g.x(j);
  return v;
}

double position_mean(const PhaseGrid& g, const WaveField& psi) {
  double s = 0;
  for (int j = 0; j < g.N; ++j) s += g.x(j) * std::norm(psi(j));
  return s * g.dx();
}

double position_variance(const PhaseGrid& g, const WaveField& psi) {
  const double mean = position_mean(g, psi);
  double s = 0;
  for (int j = 0; j < g.N; ++j) {
    const double u = g.x(j) - mean;
    s += u * u * std::norm(psi(j));
  }
  return s * g.dx();
}

double free_gaussian_width_sq(double sigma0, double hbar, double mass,
                              double t) {
  const double r = hbar * t / (2 * mass * sigma0 * sigma0);
  return sigma0 * sigma0 * (1 + r * r);
}

}  // namespace supmech
