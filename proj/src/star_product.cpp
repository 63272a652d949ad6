// Deformation product of phase-space symbols: finite-difference series
// evaluation, contour-rotated Gauss-Hermite quadrature for analytic
// operands, Moyal and classical brackets, and the hbar-scaling fit of the
// second-order remainder.
#include "supmech/star_product.hpp"

#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Eigenvalues>

#include "supmech/error.hpp"
#include "supmech/fd.hpp"

namespace supmech {
namespace {

using Cx = std::complex<double>;

double binomial(int n, int k) {
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<Eigen::MatrixXd> derivative_ops(int n, double h, int order) {
  std::vector<Eigen::MatrixXd> ops(order + 1);
  ops[0] = Eigen::MatrixXd::Identity(n, n);
  for (int k = 1; k <= order; ++k) ops[k] = derivative_matrix(n, h, k);
  return ops;
}

// der[a][b] = dx^a dp^b F for a + b <= order.  Rows of F run along x,
// columns along p, so x-derivatives act from the left and p-derivatives
// from the right (transposed).
std::vector<std::vector<Eigen::MatrixXcd>> mixed_derivatives(
    const PhaseGrid& g, const Eigen::MatrixXcd& F, int order) {
  const int n = g.N;
  if (F.rows() != n || F.cols() != n)
    throw Error("symbol samples do not match the grid");
  const auto dxo = derivative_ops(n, g.dx(), order);
  const auto dpo = derivative_ops(n, g.dp(), order);
  std::vector<std::vector<Eigen::MatrixXcd>> der(order + 1);
  for (int a = 0; a <= order; ++a) {
    const Eigen::MatrixXcd xa = dxo[a] * F;
    der[a].resize(order - a + 1);
    for (int b = 0; b + a <= order; ++b)
      der[a][b] = xa * dpo[b].transpose();
  }
  return der;
}

Eigen::MatrixXcd series_from_derivatives(
    const std::vector<std::vector<Eigen::MatrixXcd>>& der_f,
    const std::vector<std::vector<Eigen::MatrixXcd>>& der_h, double hbar,
    int order) {
  Eigen::MatrixXcd out = der_f[0][0].cwiseProduct(der_h[0][0]);
  Cx power(1, 0);
  double factorial = 1;
  for (int n = 1; n <= order; ++n) {
    power *= Cx(0, hbar / 2);
    factorial *= n;
    Eigen::MatrixXcd term =
        Eigen::MatrixXcd::Zero(out.rows(), out.cols());
    for (int k = 0; k <= n; ++k) {
      const double c = binomial(n, k) * (k % 2 ? -1.0 : 1.0);
      term += c * der_f[n - k][k].cwiseProduct(der_h[k][n - k]);
    }
    out += (power / factorial) * term;
  }
  return out;
}

void check_series_order(int order) {
  if (order < 0 || order > 8)
    throw Error("star series order must lie between 0 and 8");
}

// Gauss-Hermite tables for the rotated integral form.  The product
//   (f*h)(x,p) = (pi hbar)^-2 int f(x+u1,p+v1) h(x+u2,p+v2)
//                e^{(2i/hbar)(u1 v2 - u2 v1)} du1 dv1 du2 dv2
// becomes a plain Gaussian integral after
//   u1 = s(e a + e* b), v2 = s(e a - e* b),
//   u2 = s(e* c + e d), v1 = s(e* c - e d),
// with s = sqrt(hbar/2), e = e^{i pi/4}: the phase turns into
// -(a^2+b^2+c^2+d^2) and the Jacobian cancels the hbar prefactor,
// leaving pi^-2 times a four-axis Gauss-Hermite sum.
struct QuadTables {
  // Index q runs over node pairs; u1/v2 share pair (a,b), u2/v1 share (c,d).
  std::vector<Cx> u1, v2, u2, v1;
  std::vector<double> w2;
};

QuadTables quad_tables(double hbar, int nodes) {
  if (nodes < 1) throw Error("quadrature node count must be positive");
  auto [t, w] = gauss_hermite(nodes);
  const double s = std::sqrt(hbar / 2);
  const Cx e = std::polar(1.0, PhaseGrid::pi() / 4);
  const Cx ec = std::conj(e);
  QuadTables q;
  const int nn = nodes * nodes;
  q.u1.resize(nn);
  q.v2.resize(nn);
  q.u2.resize(nn);
  q.v1.resize(nn);
  q.w2.resize(nn);
  for (int i = 0; i < nodes; ++i)
    for (int j = 0; j < nodes; ++j) {
      const int idx = i * nodes + j;
      q.u1[idx] = s * (e * t(i) + ec * t(j));
      q.v2[idx] = s * (e * t(i) - ec * t(j));
      q.u2[idx] = s * (ec * t(i) + e * t(j));
      q.v1[idx] = s * (ec * t(i) - e * t(j));
      q.w2[idx] = w(i) * w(j);
    }
  return q;
}

Cx quad_eval(const QuadTables& q, double x, double p, const AnalyticSymbol& f,
             const AnalyticSymbol& h) {
  const int nn = static_cast<int>(q.w2.size());
  Cx sum(0, 0);
  for (int q1 = 0; q1 < nn; ++q1) {
    const Cx fx = Cx(x, 0) + q.u1[q1];
    const Cx hp = Cx(p, 0) + q.v2[q1];
    Cx inner(0, 0);
    for (int q2 = 0; q2 < nn; ++q2)
      inner += q.w2[q2] * f(fx, Cx(p, 0) + q.v1[q2]) *
               h(Cx(x, 0) + q.u2[q2], hp);
    sum += q.w2[q1] * inner;
  }
  const double pi = PhaseGrid::pi();
  return sum / (pi * pi);
}

}  // namespace

std::pair<Eigen::VectorXd, Eigen::VectorXd> gauss_hermite(int n) {
  if (n < 1) throw Error("Gauss-Hermite rule needs at least one node");
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) {
    const double b = std::sqrt(i / 2.0);
    jac(i, i - 1) = b;
    jac(i - 1, i) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jac);
  if (es.info() != Eigen::Success)
    throw Error("Gauss-Hermite eigenvalue computation failed");
  Eigen::VectorXd nodes = es.eigenvalues();
  Eigen::VectorXd weights = std::sqrt(PhaseGrid::pi()) *
                            es.eigenvectors().row(0).array().square();
  return {std::move(nodes), std::move(weights)};
}

SymbolField star_product(const PhaseGrid& g, const SymbolField& f,
                         const SymbolField& h, double hbar, StarMethod method,
                         int order, int quad_nodes) {
  if (!(hbar > 0)) throw Error("star product needs hbar > 0");
  SymbolField out;
  if (method == StarMethod::series) {
    check_series_order(order);
    const auto der_f = mixed_derivatives(g, f.samples, order);
    const auto der_h = mixed_derivatives(g, h.samples, order);
    out.samples = series_from_derivatives(der_f, der_h, hbar, order);
    return out;
  }
  if (!f.has_analytic() || !h.has_analytic())
    throw Error("quadrature star product needs analytic operands");
  if (g.N > 64)
    throw Error("quadrature star product over a full grid is limited to N <= 64");
  const QuadTables q = quad_tables(hbar, quad_nodes);
  const int n = g.N;
  out.samples.resize(n, n);
  for (int j = 0; j < n; ++j)
    for (int m = 0; m < n; ++m)
      out.samples(j, m) = quad_eval(q, g.x(j), g.p(m), f.analytic, h.analytic);
  return out;
}

Cx star_quadrature_at(double x, double p, const AnalyticSymbol& f,
                      const AnalyticSymbol& h, double hbar, int nodes) {
  if (!(hbar > 0)) throw Error("star product needs hbar > 0");
  if (!f || !h) throw Error("quadrature star product needs analytic operands");
  return quad_eval(quad_tables(hbar, nodes), x, p, f, h);
}

SymbolField moyal_bracket(const PhaseGrid& g, const SymbolField& f,
                          const SymbolField& h, double hbar, StarMethod method,
                          int order, int quad_nodes) {
  const SymbolField fh = star_product(g, f, h, hbar, method, order, quad_nodes);
  const SymbolField hf = star_product(g, h, f, hbar, method, order, quad_nodes);
  SymbolField out;
  out.samples = (fh.samples - hf.samples) / Cx(0, -hbar);
  return out;
}

SymbolField classical_bracket(const PhaseGrid& g, const SymbolField& f,
                              const SymbolField& h) {
  const int n = g.N;
  if (f.samples.rows() != n || f.samples.cols() != n ||
      h.samples.rows() != n || h.samples.cols() != n)
    throw Error("symbol samples do not match the grid");
  const Eigen::MatrixXd dx1 = derivative_matrix(n, g.dx(), 1);
  const Eigen::MatrixXd dp1 = derivative_matrix(n, g.dp(), 1);
  const Eigen::MatrixXcd fx = dx1 * f.samples;
  const Eigen::MatrixXcd fp = f.samples * dp1.transpose();
  const Eigen::MatrixXcd hx = dx1 * h.samples;
  const Eigen::MatrixXcd hp = h.samples * dp1.transpose();
  SymbolField out;
  out.samples = fp.cwiseProduct(hx) - fx.cwiseProduct(hp);
  return out;
}

ScalingFit semiclassical_scaling(const PhaseGrid& g, const SymbolField& f,
                                 const SymbolField& h,
                                 const std::vector<double>& hbars, int order) {
  if (hbars.size() < 2)
    throw Error("scaling fit needs at least two hbar values");
  check_series_order(order);
  if (order < 2)
    throw Error("scaling fit needs series order >= 2");
  const auto der_f = mixed_derivatives(g, f.samples, order);
  const auto der_h = mixed_derivatives(g, h.samples, order);
  const Eigen::MatrixXcd fh = f.samples.cwiseProduct(h.samples);
  const Eigen::MatrixXcd cb = classical_bracket(g, f, h).samples;

  ScalingFit fit;
  fit.hbars = hbars;
  fit.remainders.resize(hbars.size());
  fit.excluded.assign(hbars.size(), 0);
  fit.fit_residuals.assign(hbars.size(), 0);
  for (std::size_t i = 0; i < hbars.size(); ++i) {
    const double hb = hbars[i];
    if (!(hb > 0)) throw Error("scaling fit needs hbar > 0");
    const Eigen::MatrixXcd star =
        series_from_derivatives(der_f, der_h, hb, order);
    const Eigen::MatrixXcd rem = star - fh + Cx(0, hb / 2) * cb;
    fit.remainders[i] = rem.cwiseAbs().maxCoeff();
  }

  // Remainders at the rounding floor of f h carry no scaling information.
  const double floor_level =
      1e-13 * std::max(1.0, fh.cwiseAbs().maxCoeff());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int kept = 0;
  for (std::size_t i = 0; i < hbars.size(); ++i) {
    if (fit.remainders[i] < floor_level) {
      fit.excluded[i] = 1;
      continue;
    }
    const double lx = std::log(hbars[i]);
    const double ly = std::log(fit.remainders[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++kept;
  }
  if (kept < 2)
    throw Error("scaling fit has fewer than two usable remainders");
  const double det = kept * sxx - sx * sx;
  fit.slope = (kept * sxy - sx * sy) / det;
  fit.intercept = (sy * sxx - sx * sxy) / det;
  for (std::size_t i = 0; i < hbars.size(); ++i) {
    if (fit.excluded[i]) continue;
    fit.fit_residuals[i] = std::log(fit.remainders[i]) -
                           (fit.slope * std::log(hbars[i]) + fit.intercept);
  }
  return fit;
}

}  // namespace supmech
