#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "supmech/presentation.hpp"

namespace supmech {

using Cx = std::complex<double>;

// Finite-dimensional associative *-algebra over C in a fixed linear basis.
// Elements are coordinate vectors; multiplication is encoded by the
// left-multiplication matrix of each basis element, the involution by an
// antilinear map star(x) = S * conj(x).  A reference trace functional is kept
// for generating states tau(B* x B)/tau(B* B).
//
// The constructor cross-checks associativity, the unit, star compatibility,
// and the trace property, so malformed structure data fails fast.
class FiniteAlgebra {
 public:
  FiniteAlgebra(std::string name, std::vector<std::string> labels,
                std::vector<Eigen::MatrixXcd> left_mult,
                Eigen::MatrixXcd star_map, Eigen::VectorXcd unit,
                Eigen::VectorXcd trace_vec);

  const std::string& name() const { return name_; }
  int dim() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Eigen::VectorXcd& unit() const { return unit_; }
  const Eigen::MatrixXcd& left_mult(int i) const { return lmul_.at(i); }
  const Eigen::MatrixXcd& star_map() const { return star_; }

  Eigen::MatrixXcd left_mult_of(const Eigen::VectorXcd& x) const;
  Eigen::MatrixXcd right_mult_of(const Eigen::VectorXcd& x) const;
  Eigen::VectorXcd mul(const Eigen::VectorXcd& x, const Eigen::VectorXcd& y) const;
  Eigen::VectorXcd star(const Eigen::VectorXcd& x) const;
  Cx trace(const Eigen::VectorXcd& x) const {
    // plain bilinear pairing, no conjugation
    return (trace_.transpose() * x).value();
  }
  bool is_hermitian(const Eigen::VectorXcd& x, double tol = 1e-12) const;

  // Full matrix algebra M_n with the matrix-unit basis e(a,b) at index a*n+b.
  static FiniteAlgebra full_matrix(int n);
  static FiniteAlgebra direct_sum(const FiniteAlgebra& a, const FiniteAlgebra& b);
  // Bridges a Grassmann presentation to its 2^n-dimensional algebra; the
  // reference trace is the left-regular one.
  static FiniteAlgebra from_grassmann(const PresPtr& pres);
  // "matn:<n>", "sumn:<n1>,<n2>", "grassmann:<n>"
  static FiniteAlgebra from_name(const std::string& name);
  // JSON object with labels, mult[i][j][k] (coefficient of b_k in b_i b_j),
  // star[i][j] (coefficient of b_j in b_i*), unit[i]; complex entries are
  // [re, im] pairs.  Optional "trace"; defaults to the left-regular trace.
  static FiniteAlgebra from_json_file(const std::string& path);

 private:
  void validate() const;

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Eigen::MatrixXcd> lmul_;
  Eigen::MatrixXcd star_;
  Eigen::VectorXcd unit_;
  Eigen::VectorXcd trace_;
};

}  // namespace supmech
