// Phase-space transforms: state and operator symbols on the conjugate grid.
//
// The separation variable y in both transforms is restricted to one
// conjugate period (|y| <= L/2, endpoints at half weight); outside that
// window the periodic continuation of the integrand carries wrap-around
// images, not state content.  Odd separations between sample points are
// reached by order-8 interpolation between antidiagonal centers.

#include "supmech/wigner.hpp"

#include <cmath>

#include "supmech/fd.hpp"

namespace supmech {

namespace {

using Cx = std::complex<double>;

int wrap(int k, int n) { return ((k % n) + n) % n; }

// Half-step periodic Lagrange filter: value at node index z + 1/2 from the
// 8 surrounding integer nodes, as (offsets, weights) relative to z.
struct HalfStepFilter {
  std::array<int, 8> offset;
  std::array<double, 8> weight;
  HalfStepFilter() {
    auto [first, w] = periodic_interp_weights(0.5, 8);
    for (int s = 0; s < 8; ++s) {
      offset[s] = static_cast<int>(first) + s;
      weight[s] = w[s];
    }
  }
};

const HalfStepFilter& half_step_filter() {
  static const HalfStepFilter f;
  return f;
}

}  // namespace

WignerField wigner(const PhaseGrid& g, const WaveField& psi) {
  require(psi.size() == g.N, "field size does not match the grid");
  const int n = g.N;
  const int n2 = 2 * n;
  const Eigen::VectorXcd fine = doubled_samples(g, psi);

  WignerField out;
  out.w.resize(n, n);
  const double scale = g.dx() / (2 * PhaseGrid::pi() * g.hbar);
  Eigen::VectorXcd corr(n2);
  for (int j = 0; j < n; ++j) {
    const int center = 2 * j + 1;
    corr.setZero();
    for (int sep = -n / 2; sep <= n / 2; ++sep) {
      const double weight = (std::abs(sep) == n / 2) ? 0.5 : 1.0;
      const Cx a = fine(wrap(center + sep, n2));
      const Cx b = fine(wrap(center - sep, n2));
      corr(wrap(sep, n2)) = weight * a * std::conj(b);
    }
    const Eigen::VectorXcd spec = dft(corr);
    for (int m = 0; m < n; ++m) {
      const Cx v = scale * spec(wrap(2 * m - n, n2));
      out.w(j, m) = v.real();
      out.imag_residual = std::max(out.imag_residual, std::abs(v.imag()));
    }
  }
  return out;
}

WignerField wigner_density(const PhaseGrid& g, const Eigen::MatrixXcd& density) {
  const SymbolField symbol = weyl_symbol(g, density);
  WignerField out;
  out.w.resize(g.N, g.N);
  const double scale = 1.0 / (2 * PhaseGrid::pi() * g.hbar);
  for (int j = 0; j < g.N; ++j)
    for (int m = 0; m < g.N; ++m) {
      const Cx v = scale * symbol.samples(j, m);
      out.w(j, m) = v.real();
      out.imag_residual = std::max(out.imag_residual, std::abs(v.imag()));
    }
  return out;
}

double total_mass(const PhaseGrid& g, const WignerField& w) {
  return w.w.sum() * g.dx() * g.dp();
}

Eigen::VectorXd x_marginal(const PhaseGrid& g, const WignerField& w) {
  return w.w.rowwise().sum() * g.dp();
}

Eigen::VectorXd p_marginal(const PhaseGrid& g, const WignerField& w) {
  return w.w.colwise().sum().transpose() * g.dx();
}

double phase_purity(const PhaseGrid& g, const WignerField& w) {
  return w.w.squaredNorm() * g.dx() * g.dp();
}

SymbolField sample_symbol(const PhaseGrid& g, const AnalyticSymbol& f) {
  require(static_cast<bool>(f), "symbol function is empty");
  SymbolField out;
  out.samples.resize(g.N, g.N);
  for (int j = 0; j < g.N; ++j)
    for (int m = 0; m < g.N; ++m) out.samples(j, m) = f(g.x(j), g.p(m));
  out.analytic = f;
  return out;
}

SymbolField weyl_symbol(const PhaseGrid& g, const Eigen::MatrixXcd& op) {
  require(op.rows() == g.N && op.cols() == g.N,
          "operator matrix does not match the grid");
  const int n = g.N;
  const auto& filter = half_step_filter();

  // K_j(s), the kernel at center x_j and separation s dx.  Even s lies on
  // the matrix antidiagonal a+b = 2j; odd s is interpolated across the
  // vertex-centered antidiagonal a+b odd.
  Eigen::MatrixXcd sep = Eigen::MatrixXcd::Zero(n, n);  // (j, s mod n)
  Eigen::VectorXcd diag_vals(n);
  for (int s = -n / 2; s < n / 2; ++s) {
    const int col = wrap(s, n);
    if (wrap(s, 2) == 0) {
      const int t = s / 2;
      for (int j = 0; j < n; ++j)
        sep(j, col) = op(wrap(j + t, n), wrap(j - t, n));
    } else {
      // Values at vertex centers c_r: entries a = r + (s-1)/2, b = r - (s+1)/2.
      const int da = (s - 1) / 2;
      const int db = (s + 1) / 2;
      for (int r = 0; r < n; ++r)
        diag_vals(r) = op(wrap(r + da, n), wrap(r - db, n));
      for (int j = 0; j < n; ++j) {
        Cx acc = 0;
        for (int q = 0; q < 8; ++q)
          acc += filter.weight[q] * diag_vals(wrap(j + filter.offset[q], n));
        sep(j, col) = acc;
      }
    }
  }

  // A_W = dx * sum_s K_j(s) e^{-i p_m s dx / hbar}; the dx cancels against
  // kernel = op/dx, so the samples are plain separation DFTs of op entries.
  SymbolField out;
  out.samples.resize(n, n);
  for (int j = 0; j < n; ++j) {
    const Eigen::VectorXcd spec = dft(sep.row(j).transpose());
    for (int m = 0; m < n; ++m)
      out.samples(j, m) = spec(wrap(m - n / 2, n));
  }
  return out;
}

Eigen::MatrixXcd weyl_quantize(const PhaseGrid& g, const SymbolField& f) {
  require(f.samples.rows() == g.N && f.samples.cols() == g.N,
          "symbol samples do not match the grid");
  const int n = g.N;
  const auto& filter = half_step_filter();

  // Symbol values at the 2n centers: odd index 2j+1 is the midpoint x_j,
  // even index 2r the vertex c_r = x_r - dx/2.
  Eigen::MatrixXcd centers(2 * n, n);
  for (int j = 0; j < n; ++j) centers.row(2 * j + 1) = f.samples.row(j);
  if (f.has_analytic()) {
    for (int r = 0; r < n; ++r) {
      const double c = -g.L / 2 + r * g.dx();
      for (int m = 0; m < n; ++m) centers(2 * r, m) = f.analytic(c, g.p(m));
    }
  } else {
    // Vertex c_r sits at midpoint index r - 1/2: reuse the half-step filter
    // one node lower.
    for (int r = 0; r < n; ++r) {
      for (int m = 0; m < n; ++m) {
        Cx acc = 0;
        for (int q = 0; q < 8; ++q)
          acc += filter.weight[q] *
                 f.samples(wrap(r - 1 + filter.offset[q], n), m);
        centers(2 * r, m) = acc;
      }
    }
  }

  // G[c, d mod n] = (1/n) sum_m F(c,m) e^{2 pi i (m - n/2) d / n}.
  Eigen::MatrixXcd gtab(2 * n, n);
  for (int c = 0; c < 2 * n; ++c) {
    const Eigen::VectorXcd inv = idft(centers.row(c).transpose());
    for (int d = 0; d < n; ++d)
      gtab(c, d) = (d % 2 == 0 ? 1.0 : -1.0) * inv(d);
  }

  Eigen::MatrixXcd op(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      op(a, b) = gtab(wrap(a + b + 1, 2 * n), wrap(a - b, n));
  return op;
}

double phase_expectation(const PhaseGrid& g, const SymbolField& f,
                         const WignerField& w) {
  require(f.samples.rows() == g.N && w.w.rows() == g.N,
          "field sizes do not match the grid");
  Cx acc = 0;
  for (int j = 0; j < g.N; ++j)
    for (int m = 0; m < g.N; ++m) acc += f.samples(j, m) * w.w(j, m);
  return acc.real() * g.dx() * g.dp();
}

}  // namespace supmech
