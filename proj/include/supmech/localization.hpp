#pragma once

#include <vector>

#include "supmech/phase_grid.hpp"
#include "supmech/rational.hpp"

namespace supmech {

// Unions of whole grid cells; cell k covers [x(k) - dx/2, x(k) + dx/2).
// Interval descriptors must have endpoints on cell boundaries.
class CellSet {
 public:
  static CellSet none(int grid_points);
  static CellSet all(int grid_points);
  static CellSet from_cells(int grid_points, const std::vector<int>& cells);
  // Cells covering [a, b); throws when an endpoint is off the boundary
  // lattice or the interval leaves the box.
  static CellSet interval(const PhaseGrid& g, double a, double b);

  int grid_points() const { return static_cast<int>(in_.size()); }
  int size() const;
  bool contains(int k) const { return in_[k] != 0; }
  bool disjoint_from(const CellSet& o) const;
  CellSet unite(const CellSet& o) const;
  CellSet intersect(const CellSet& o) const;
  CellSet complement() const;
  // Circular shift by a whole number of cells.
  CellSet translated(int cells) const;

 private:
  explicit CellSet(std::vector<unsigned char> mask) : in_(std::move(mask)) {}
  std::vector<unsigned char> in_;
};

// The localization measure: cell sets to diagonal 0/1 projections.  The
// projection entries are exact, so additivity on disjoint unions and
// P(all) = identity hold with no rounding at all.
struct PobvmGrid {
  int n = 0;
  Eigen::VectorXd projection(const CellSet& d) const;
};
PobvmGrid localization_pobvm(const PhaseGrid& g);

// mu_psi(D) = sum_{k in D} |psi_k|^2 dx.  The exact variant sums in rational
// arithmetic (every double is a rational), making measure identities
// checkable with zero tolerance.
double probability(const PhaseGrid& g, const WaveField& psi, const CellSet& d);
Rational probability_exact(const PhaseGrid& g, const WaveField& psi,
                           const CellSet& d);

// Translation by a whole number of cells: [U psi](x) = psi(x - cells*dx),
// an exact circular shift.
WaveField translate(const PhaseGrid& g, const WaveField& psi, int cells);

// Boost V(b): psi(x) -> e^{-i b x} psi(x); with U and V at hbar = 1,
// U(a) V(b) = e^{i a b} V(b) U(a).
WaveField boost(const PhaseGrid& g, const WaveField& psi, double b);

struct WeylRelationsResult {
  double u_group_residual = 0;      // U(a)U(a') vs U(a+a')
  double v_group_residual = 0;      // V(b)V(b') vs V(b+b')
  double u_inverse_residual = 0;    // U(a)U(-a) vs identity
  double commutation_residual = 0;  // U(a)V(b) vs e^{iab} V(b)U(a)
  double max() const;
};

// Checks the discrete Weyl relations on a test field; a must be an integer
// multiple of dx (within 1e-9 dx); the grid must have hbar = 1.
WeylRelationsResult weyl_relations_check(const PhaseGrid& g, double a, double b,
                                         const WaveField& test_psi);

}  // namespace supmech
