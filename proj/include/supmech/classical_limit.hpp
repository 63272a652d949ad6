#pragma once

// Quantum-corrected phase-space transport against classical Liouville
// transport.  The quantum evolution moves a sampled density with the
// grid-periodic form of
//   dW/dt = -(p/m) dW/dx + V'(x) dW/dp - (hbar^2/24) V'''(x) d^3W/dp^3,
// which is the full star-commutator flow whenever V has polynomial degree
// at most four; the classical solver transports the same initial density
// along Hamiltonian trajectories.  Their gap, measured in L1 and in low
// moments, is the computable hbar -> 0 correspondence check.

#include <Eigen/Dense>

#include <functional>

#include "supmech/phase_grid.hpp"

namespace supmech {

// One-dimensional potential with the derivatives the transport needs.
// slope is dV/dx and third is d^3V/dx^3; value enters only through the
// energy functional used for step control.
struct PotentialModel {
  double mass = 1.0;
  std::function<double(double)> value;
  std::function<double(double)> slope;
  std::function<double(double)> third;
};

PotentialModel free_particle(double mass = 1.0);
PotentialModel harmonic_well(double mass, double omega);
// V(x) = c2 x^2 + c4 x^4
PotentialModel quartic_well(double mass, double c2, double c4);

// Phase-space density as a callable, used for initial data and for the
// pointwise evaluation the classical solver needs.
using PhaseDensity = std::function<double(double x, double p)>;

Eigen::MatrixXd sample_density(const PhaseGrid& g, const PhaseDensity& rho);

struct MoyalEvolution {
  Eigen::MatrixXd w;         // evolved samples, rows x and columns p
  int steps = 0;             // composition steps actually taken
  bool refined = false;      // step count grew beyond the initial estimate
  double energy_drift = 0;   // relative drift of sum (p^2/2m + V) W dx dp
  double mass_error = 0;     // |final - initial| of sum W dx dp
};

// Evolves density samples for time t.  Both split factors are exact phase
// multiplications in the conjugate index, so every step is norm-preserving
// and unconditionally stable; steps only control the splitting error.  The
// factors are composed in a fourth-order triple-Strang pattern.  With
// steps = 0 the step count starts from a heuristic and grows until the
// relative energy drift falls below energy_tol, throwing after max_refine
// failed enlargements; an explicit steps runs exactly once and just reports
// the drift.  hbar may be zero, which transports classically.  hbar is a
// coefficient of the equation and may differ from g.hbar, so grids can be
// reused across an hbar sweep.
MoyalEvolution moyal_evolve(const PhaseGrid& g, const Eigen::MatrixXd& w0,
                            const PotentialModel& pot, double hbar, double t,
                            int steps = 0, double energy_tol = 1e-8,
                            int max_refine = 6);

// Evaluates the classically transported density at every grid node by
// tracing the Hamiltonian flow backward for time t with fixed-step RK4 and
// reading the initial density there.  steps = 0 picks roughly 256 steps
// per unit time.
Eigen::MatrixXd liouville_transport(const PhaseGrid& g,
                                    const PotentialModel& pot,
                                    const PhaseDensity& rho0, double t,
                                    int steps = 0);

struct CorrespondenceReport {
  double l1_gap = 0;         // dx dp sum |W_quantum - W_classical|
  double gap_x = 0;          // gap of the mean of x between the two routes
  double gap_p = 0;
  double gap_xx = 0;         // gap of the mean of x^2
  int moyal_steps = 0;
  bool refined = false;
  double energy_drift = 0;
  double mass_error = 0;
};

// Samples rho0, runs both transports for time t, and reports the gaps.
// steps and energy_tol are passed through to moyal_evolve.
CorrespondenceReport classical_limit_compare(const PhaseGrid& g,
                                             const PhaseDensity& rho0,
                                             const PotentialModel& pot,
                                             double hbar, double t,
                                             int steps = 0,
                                             double energy_tol = 1e-8);

}  // namespace supmech
