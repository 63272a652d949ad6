// Cell-set localization measure, translation covariance, and the discrete
// Weyl relations.

#include "supmech/localization.hpp"

#include <cmath>

namespace supmech {

namespace {

using Cx = std::complex<double>;

}  // namespace

CellSet CellSet::none(int grid_points) {
  require(grid_points > 0, "grid must have cells");
  return CellSet(std::vector<unsigned char>(grid_points, 0));
}

CellSet CellSet::all(int grid_points) {
  require(grid_points > 0, "grid must have cells");
  return CellSet(std::vector<unsigned char>(grid_points, 1));
}

CellSet CellSet::from_cells(int grid_points, const std::vector<int>& cells) {
  CellSet d = none(grid_points);
  for (int k : cells) {
    require(k >= 0 && k < grid_points, "cell index out of range");
    d.in_[k] = 1;
  }
  return d;
}

CellSet CellSet::interval(const PhaseGrid& g, double a, double b) {
  require(a <= b, "interval endpoints out of order");
  // Cell boundaries sit at -L/2 + k dx.
  const double ka = (a + g.L / 2) / g.dx();
  const double kb = (b + g.L / 2) / g.dx();
  const double ra = std::round(ka);
  const double rb = std::round(kb);
  require(std::abs(ka - ra) <= 1e-9 && std::abs(kb - rb) <= 1e-9,
          "interval endpoints must lie on cell boundaries");
  const int ia = static_cast<int>(ra);
  const int ib = static_cast<int>(rb);
  require(ia >= 0 && ib <= g.N, "interval leaves the box");
  CellSet d = none(g.N);
  for (int k = ia; k < ib; ++k) d.in_[k] = 1;
  return d;
}

int CellSet::size() const {
  int s = 0;
  for (unsigned char c : in_) s += c;
  return s;
}

bool CellSet::disjoint_from(const CellSet& o) const {
  require(grid_points() == o.grid_points(), "cell sets live on different grids");
  for (int k = 0; k < grid_points(); ++k)
    if (in_[k] && o.in_[k]) return false;
  return true;
}

CellSet CellSet::unite(const CellSet& o) const {
  require(grid_points() == o.grid_points(), "cell sets live on different grids");
  CellSet d = *this;
  for (int k = 0; k < grid_points(); ++k) d.in_[k] = in_[k] | o.in_[k];
  return d;
}

CellSet CellSet::intersect(const CellSet& o) const {
  require(grid_points() == o.grid_points(), "cell sets live on different grids");
  CellSet d = *this;
  for (int k = 0; k < grid_points(); ++k) d.in_[k] = in_[k] & o.in_[k];
  return d;
}

CellSet CellSet::complement() const {
  CellSet d = *this;
  for (int k = 0; k < grid_points(); ++k) d.in_[k] = in_[k] ? 0 : 1;
  return d;
}

CellSet CellSet::translated(int cells) const {
  const int n = grid_points();
  CellSet d = *this;
  for (int k = 0; k < n; ++k) d.in_[((k + cells) % n + n) % n] = in_[k];
  return d;
}

PobvmGrid localization_pobvm(const PhaseGrid& g) { return PobvmGrid{g.N}; }

Eigen::VectorXd PobvmGrid::projection(const CellSet& d) const {
  require(d.grid_points() == n, "cell set does not match the grid");
  Eigen::VectorXd diag(n);
  for (int k = 0; k < n; ++k) diag(k) = d.contains(k) ? 1.0 : 0.0;
  return diag;
}

double probability(const PhaseGrid& g, const WaveField& psi, const CellSet& d) {
  require(psi.size() == g.N && d.grid_points() == g.N,
          "field or cell set does not match the grid");
  // Neumaier compensated sum.
  double s = 0, comp = 0;
  for (int k = 0; k < g.N; ++k) {
    if (!d.contains(k)) continue;
    const double term = std::norm(psi(k));
    const double t = s + term;
    comp += std::abs(s) >= std::abs(term) ? (s - t) + term : (term - t) + s;
    s = t;
  }
  return (s + comp) * g.dx();
}

Rational probability_exact(const PhaseGrid& g, const WaveField& psi,
                           const CellSet& d) {
  require(psi.size() == g.N && d.grid_points() == g.N,
          "field or cell set does not match the grid");
  Rational s = 0;
  for (int k = 0; k < g.N; ++k) {
    if (!d.contains(k)) continue;
    const Rational re(psi(k).real());
    const Rational im(psi(k).imag());
    s += re * re + im * im;
  }
  return s * Rational(g.dx());
}

WaveField translate(const PhaseGrid& g, const WaveField& psi, int cells) {
  require(psi.size() == g.N, "field size does not match the grid");
  WaveField out(g.N);
  for (int j = 0; j < g.N; ++j)
    out(((j + cells) % g.N + g.N) % g.N) = psi(j);
  return out;
}

WaveField boost(const PhaseGrid& g, const WaveField& psi, double b) {
  require(psi.size() == g.N, "field size does not match the grid");
  WaveField out(g.N);
  for (int j = 0; j < g.N; ++j)
    out(j) = std::exp(Cx(0.0, -b * g.x(j))) * psi(j);
  return out;
}

double WeylRelationsResult::max() const {
  return std::max(std::max(u_group_residual, v_group_residual),
                  std::max(u_inverse_residual, commutation_residual));
}

WeylRelationsResult weyl_relations_check(const PhaseGrid& g, double a, double b,
                                         const WaveField& test_psi) {
  require(test_psi.size() == g.N, "field size does not match the grid");
  require(g.hbar == 1.0, "the Weyl relation check is defined at hbar = 1");
  const double cells_real = a / g.dx();
  const double r = std::round(cells_real);
  require(std::abs(cells_real - r) <= 1e-9,
          "translation must be an integer multiple of dx");
  const int cells = static_cast<int>(r);

  WeylRelationsResult res;
  const WaveField psi = test_psi;

  // U(a)U(a) vs U(2a), V(b)V(b) vs V(2b), U(a)U(-a) vs identity.
  res.u_group_residual =
      (translate(g, translate(g, psi, cells), cells) - translate(g, psi, 2 * cells))
          .cwiseAbs()
          .maxCoeff();
  res.v_group_residual =
      (boost(g, boost(g, psi, b), b) - boost(g, psi, 2 * b)).cwiseAbs().maxCoeff();
  res.u_inverse_residual =
      (translate(g, translate(g, psi, cells), -cells) - psi).cwiseAbs().maxCoeff();

  // U(a) V(b) = e^{iab} V(b) U(a).
  const WaveField lhs = translate(g, boost(g, psi, b), cells);
  const WaveField rhs =
      std::exp(Cx(0.0, a * b)) * boost(g, translate(g, psi, cells), b);
  res.commutation_residual = (lhs - rhs).cwiseAbs().maxCoeff();
  return res;
}

}  // namespace supmech
