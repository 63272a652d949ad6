#pragma once

#include <vector>

#include "supmech/wigner.hpp"

namespace supmech {

// Noncommutative product of phase-space symbols at deformation parameter
// hbar (independent of the grid's own hbar, which only fixes the momentum
// sampling).
//
// series: sum_n (1/n!) (i hbar/2)^n sum_k (-1)^k C(n,k)
//         (dx^{n-k} dp^k f) (dx^k dp^{n-k} g)
// with 9-point finite-difference derivatives; exact for polynomial symbols
// of total degree <= order (order at most 8).
//
// quadrature: Gauss-Hermite discretization of the integral form of the
// product, with the oscillatory kernel rotated onto real Gaussian axes;
// requires analytic operands (they are evaluated at complex arguments) and
// is restricted to grids with N <= 64.
enum class StarMethod { series, quadrature };

SymbolField star_product(const PhaseGrid& g, const SymbolField& f,
                         const SymbolField& h, double hbar, StarMethod method,
                         int order = 4, int quad_nodes = 8);

// Point evaluation of the quadrature product (any grid, used as an oracle).
std::complex<double> star_quadrature_at(double x, double p,
                                        const AnalyticSymbol& f,
                                        const AnalyticSymbol& h, double hbar,
                                        int nodes = 8);

// {f, h}_M = (-i hbar)^{-1} (f * h - h * f); {p, x}_M = +1.
SymbolField moyal_bracket(const PhaseGrid& g, const SymbolField& f,
                          const SymbolField& h, double hbar,
                          StarMethod method = StarMethod::series,
                          int order = 4, int quad_nodes = 8);

// {f, h}_cl = dp f dx h - dx f dp h; {p, x}_cl = +1.
SymbolField classical_bracket(const PhaseGrid& g, const SymbolField& f,
                              const SymbolField& h);

// Remainder R(hbar) = max |f*h - fh + (i hbar/2){f,h}_cl| across the grid,
// fitted as log R = slope log hbar + intercept.  Remainders at the
// floating-point floor are excluded from the fit and flagged.
struct ScalingFit {
  double slope = 0;
  double intercept = 0;
  std::vector<double> hbars;
  std::vector<double> remainders;
  std::vector<double> fit_residuals;  // log-log residual per fitted point
  std::vector<char> excluded;
};
ScalingFit semiclassical_scaling(const PhaseGrid& g, const SymbolField& f,
                                 const SymbolField& h,
                                 const std::vector<double>& hbars,
                                 int order = 4);

// Gauss-Hermite nodes and weights for weight e^{-t^2} (Golub-Welsch).
std::pair<Eigen::VectorXd, Eigen::VectorXd> gauss_hermite(int n);

}  // namespace supmech
