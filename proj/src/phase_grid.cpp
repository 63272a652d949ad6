// Periodic grid transforms: the discrete position/momentum pairing and the
// half-step interpolation used by the phase-space calculus.

#include "supmech/phase_grid.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>

namespace supmech {

namespace {

using Cx = std::complex<double>;

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

PhaseGrid::PhaseGrid(double box, int points, double hbar_value)
    : L(box), N(points), hbar(hbar_value) {
  require(L > 0, "box length must be positive");
  require(power_of_two(N) && N >= 4, "point count must be a power of two, at least 4");
  require(hbar > 0, "hbar must be positive");
}

Eigen::VectorXd PhaseGrid::xs() const {
  Eigen::VectorXd v(N);
  for (int j = 0; j < N; ++j) v(j) = x(j);
  return v;
}

Eigen::VectorXd PhaseGrid::ps() const {
  Eigen::VectorXd v(N);
  for (int m = 0; m < N; ++m) v(m) = p(m);
  return v;
}

Eigen::VectorXcd dft(const Eigen::VectorXcd& in) {
  Eigen::FFT<double> fft;
  Eigen::VectorXcd out;
  fft.fwd(out, in);
  return out;
}

Eigen::VectorXcd idft(const Eigen::VectorXcd& in) {
  Eigen::FFT<double> fft;
  Eigen::VectorXcd out;
  fft.inv(out, in);
  return out;
}

WaveField to_momentum(const PhaseGrid& g, const WaveField& psi) {
  require(psi.size() == g.N, "field size does not match the grid");
  Eigen::VectorXcd staggered(g.N);
  for (int j = 0; j < g.N; ++j)
    staggered(j) = (j % 2 == 0) ? psi(j) : -psi(j);
  Eigen::VectorXcd out = dft(staggered);
  const double scale = g.dx() / std::sqrt(2.0 * PhaseGrid::pi() * g.hbar);
  const double x0 = g.x(0);
  for (int m = 0; m < g.N; ++m)
    out(m) *= scale * std::exp(Cx(0.0, -g.p(m) * x0 / g.hbar));
  return out;
}

WaveField to_position(const PhaseGrid& g, const WaveField& psihat) {
  require(psihat.size() == g.N, "field size does not match the grid");
  const double x0 = g.x(0);
  Eigen::VectorXcd phased(g.N);
  for (int m = 0; m < g.N; ++m)
    phased(m) = psihat(m) * std::exp(Cx(0.0, g.p(m) * x0 / g.hbar));
  Eigen::VectorXcd out = idft(phased);
  const double scale =
      g.N * g.dp() / std::sqrt(2.0 * PhaseGrid::pi() * g.hbar);
  for (int j = 0; j < g.N; ++j)
    out(j) *= (j % 2 == 0) ? scale : -scale;
  return out;
}

double field_norm(const PhaseGrid& g, const WaveField& psi) {
  return std::sqrt(psi.squaredNorm() * g.dx());
}

WaveField normalized(const PhaseGrid& g, const WaveField& psi) {
  const double n = field_norm(g, psi);
  require(n > 0, "cannot normalize the zero field");
  return psi / n;
}

double boundary_mass(const PhaseGrid& g, const WaveField& psi, int edge_cells) {
  if (edge_cells < 0) edge_cells = g.N / 16;
  require(2 * edge_cells <= g.N, "edge region larger than the grid");
  double s = 0;
  for (int j = 0; j < edge_cells; ++j)
    s += std::norm(psi(j)) + std::norm(psi(g.N - 1 - j));
  return s * g.dx();
}

WaveField gaussian_packet(const PhaseGrid& g, double x0, double p0,
                          double sigma) {
  require(sigma > 0, "packet width must be positive");
  WaveField psi(g.N);
  for (int j = 0; j < g.N; ++j) {
    const double u = g.x(j) - x0;
    psi(j) = std::exp(Cx(-u * u / (4 * sigma * sigma), p0 * u / g.hbar));
  }
  return normalized(g, psi);
}

WaveField coherent_state(const PhaseGrid& g, double mass, double omega,
                         double x0, double p0) {
  require(mass > 0 && omega > 0, "mass and frequency must be positive");
  return gaussian_packet(g, x0, p0, std::sqrt(g.hbar / (2 * mass * omega)));
}

WaveField apply_x(const PhaseGrid& g, const WaveField& psi) {
  WaveField out(g.N);
  for (int j = 0; j < g.N; ++j) out(j) = g.x(j) * psi(j);
  return out;
}

WaveField apply_p(const PhaseGrid& g, const WaveField& psi) {
  WaveField hat = to_momentum(g, psi);
  for (int m = 0; m < g.N; ++m) hat(m) *= g.p(m);
  return to_position(g, hat);
}

std::complex<double> inner(const PhaseGrid& g, const WaveField& phi,
                           const WaveField& psi) {
  return phi.dot(psi) * g.dx();
}

Eigen::VectorXcd doubled_samples(const PhaseGrid& g, const WaveField& psi) {
  require(psi.size() == g.N, "field size does not match the grid");
  const int n = g.N;
  Eigen::VectorXcd staggered(n);
  for (int j = 0; j < n; ++j)
    staggered(j) = (j % 2 == 0) ? psi(j) : -psi(j);
  Eigen::VectorXcd c = dft(staggered);
  // Frequency of bin m is mt = m - N/2; place it at bin (mt mod 2N) of the
  // doubled spectrum.
  Eigen::VectorXcd padded = Eigen::VectorXcd::Zero(2 * n);
  for (int m = 0; m < n; ++m) {
    const int mt = m - n / 2;
    padded((mt + 2 * n) % (2 * n)) = c(m);
  }
  Eigen::VectorXcd fine = idft(padded);
  // Half-step point k lies (k-1) half-cells from the first original sample,
  // so the interpolant is read at index k-1 of the doubled transform.
  Eigen::VectorXcd out(2 * n);
  for (int k = 0; k < 2 * n; ++k)
    out(k) = 2.0 * fine(((k - 1) % (2 * n) + 2 * n) % (2 * n));
  return out;
}

}  // namespace supmech
