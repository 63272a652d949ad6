#pragma once

#include "supmech/phase_grid.hpp"

namespace supmech {

// Split-step spectral integrator for i hbar d psi/dt = (P^2/2m + V) psi with
// Strang splitting: half potential kick, full kinetic drift, half kick.
// Each factor is diagonal and unitary, so the norm is preserved to roundoff;
// the step error is second order.  Throws on t < 0, steps < 1 (unless t = 0),
// or any non-finite sample appearing during the run.
WaveField schrodinger_evolve(const PhaseGrid& g, const WaveField& psi0,
                             const Eigen::VectorXd& potential, double mass,
                             double t, int steps);

// <psi, (P^2/2m + V) psi>, real part.
double energy(const PhaseGrid& g, const WaveField& psi,
              const Eigen::VectorXd& potential, double mass);

Eigen::VectorXd harmonic_potential(const PhaseGrid& g, double mass, double omega);

// Position mean and variance of |psi|^2 on the grid.
double position_mean(const PhaseGrid& g, const WaveField& psi);
double position_variance(const PhaseGrid& g, const WaveField& psi);

// Closed-form width of a free Gaussian packet:
// width^2(t) = sigma0^2 (1 + (hbar t / (2 m sigma0^2))^2).
double free_gaussian_width_sq(double sigma0, double hbar, double mass, double t);

}  // namespace supmech
