#pragma once

#include <Eigen/Dense>

#include <complex>

#include "supmech/error.hpp"

namespace supmech {

// Conjugate position/momentum sampling of a periodic box.  Positions are the
// N cell midpoints x_j = -L/2 + (j + 1/2) dx; momenta are p_m = (m - N/2) dp
// with dp = 2 pi hbar / L, so an N-point DFT makes the two grids exact
// Fourier duals at the given hbar and sum |psi|^2 dx = sum |psihat|^2 dp.
struct PhaseGrid {
  PhaseGrid(double box, int points, double hbar_value);

  double L = 0;
  int N = 0;
  double hbar = 0;

  double dx() const { return L / N; }
  double dp() const { return 2.0 * pi() * hbar / L; }
  double x(int j) const { return -L / 2 + (j + 0.5) * dx(); }
  double p(int m) const { return (m - N / 2) * dp(); }
  Eigen::VectorXd xs() const;
  Eigen::VectorXd ps() const;

  static double pi() { return 3.141592653589793238462643383279502884; }
};

// Wave function samples psi(x_j); unit norm means sum |psi|^2 dx = 1.
using WaveField = Eigen::VectorXcd;

// Unnormalized forward DFT (sum_j in_j e^{-2 pi i j m / n}) and its
// normalized inverse, for any length.
Eigen::VectorXcd dft(const Eigen::VectorXcd& in);
Eigen::VectorXcd idft(const Eigen::VectorXcd& in);

// psihat_m = (dx / sqrt(2 pi hbar)) sum_j e^{-i p_m x_j / hbar} psi_j and its
// inverse; the pair is unitary between the dx and dp measures.
WaveField to_momentum(const PhaseGrid& g, const WaveField& psi);
WaveField to_position(const PhaseGrid& g, const WaveField& psihat);

double field_norm(const PhaseGrid& g, const WaveField& psi);
WaveField normalized(const PhaseGrid& g, const WaveField& psi);

// Mass sum |psi|^2 dx over the `edge_cells` outermost cells on each side;
// reports record it as a validity indicator for the periodic surrogate.
// Default edge_cells = N/16.
double boundary_mass(const PhaseGrid& g, const WaveField& psi, int edge_cells = -1);

// Normalized packet exp(-(x-x0)^2/(4 sigma^2) + i p0 (x-x0)/hbar); |psi|^2
// has standard deviation sigma.
WaveField gaussian_packet(const PhaseGrid& g, double x0, double p0, double sigma);

// Harmonic-oscillator coherent state: gaussian_packet at the ground-state
// width sigma = sqrt(hbar / (2 m omega)).
WaveField coherent_state(const PhaseGrid& g, double mass, double omega,
                         double x0, double p0);

WaveField apply_x(const PhaseGrid& g, const WaveField& psi);
WaveField apply_p(const PhaseGrid& g, const WaveField& psi);

// <phi, psi> = sum conj(phi) psi dx
std::complex<double> inner(const PhaseGrid& g, const WaveField& phi,
                           const WaveField& psi);

// Trigonometric interpolation of psi onto the 2N half-step points
// xt_k = -L/2 + k dx/2; the original samples sit at odd k and are
// reproduced exactly.
Eigen::VectorXcd doubled_samples(const PhaseGrid& g, const WaveField& psi);

}  // namespace supmech
