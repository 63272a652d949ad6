#pragma once

#include <complex>
#include <functional>

#include "supmech/phase_grid.hpp"

namespace supmech {

// Phase-space density samples W(x_j, p_m), normalized so that
// sum W dx dp = 1; row index j runs over positions, column index m over
// momenta.  imag_residual records the largest imaginary part discarded
// when the transform produced the real samples.
struct WignerField {
  Eigen::MatrixXd w;
  double imag_residual = 0;
};

// Phase-space distribution of a pure state, computed from the half-step
// interpolant with the separation variable restricted to one conjugate
// period.  Real up to roundoff; the x-marginal reproduces |psi|^2.
WignerField wigner(const PhaseGrid& g, const WaveField& psi);

// Phase-space distribution of a density operator (unit matrix trace).
WignerField wigner_density(const PhaseGrid& g, const Eigen::MatrixXcd& density);

double total_mass(const PhaseGrid& g, const WignerField& w);
Eigen::VectorXd x_marginal(const PhaseGrid& g, const WignerField& w);
Eigen::VectorXd p_marginal(const PhaseGrid& g, const WignerField& w);
// sum W^2 dx dp; equals 1/(2 pi hbar) exactly for pure states.
double phase_purity(const PhaseGrid& g, const WignerField& w);

// A symbol is an entire function of the two phase-space coordinates; the
// complex-argument form is what the quadrature star product evaluates.
using AnalyticSymbol =
    std::function<std::complex<double>(std::complex<double>, std::complex<double>)>;

// Symbol samples f(x_j, p_m), optionally carrying the analytic function
// they were drawn from.
struct SymbolField {
  Eigen::MatrixXcd samples;
  AnalyticSymbol analytic;
  bool has_analytic() const { return static_cast<bool>(analytic); }
};

SymbolField sample_symbol(const PhaseGrid& g, const AnalyticSymbol& f);

// Symbol of an operator given as a matrix on the grid (kernel = op/dx):
// the separation transform of the kernel along antidiagonals, with
// odd separations filled in by order-8 interpolation between antidiagonal
// centers.  Sends the identity to 1, diag(x_j) to x, and the spectral
// momentum operator to p; diagonal and circulant operators come out exact
// at every center.
//
// Periodization caveat: the momentum lattice makes kernels L-periodic in
// the separation, so matrix entries coupling the two box edges (chordal
// |a - b| > N/2) hold the through-seam image of mid-grid kernel content.
// Centers within L/4 of a box edge read those entries and therefore
// reproduce a localized operator's symbol only up to that image; centers
// in the middle half of the box are clean.  Expectation values against
// states that vanish near the edges are unaffected.
SymbolField weyl_symbol(const PhaseGrid& g, const Eigen::MatrixXcd& op);

// Inverse direction: operator matrix with kernel
// (dp/2 pi hbar) sum_m f((x_a+x_b)/2, p_m) e^{i p_m (x_a - x_b)/hbar};
// midpoint values between grid centers come from the analytic backing when
// present, otherwise from order-8 interpolation of the samples.  Edge
// coupling entries (chordal |a - b| > N/2) receive the periodized kernel
// image described at weyl_symbol, so quantize(symbol(op)) restores op on
// the chordal strip and on all matrix elements between edge-vanishing
// states, not entry-by-entry in the corners.
Eigen::MatrixXcd weyl_quantize(const PhaseGrid& g, const SymbolField& f);

// sum_{j,m} f(x_j,p_m) W(x_j,p_m) dx dp; pairs symbols with states.
double phase_expectation(const PhaseGrid& g, const SymbolField& f,
                         const WignerField& w);

}  // namespace supmech
