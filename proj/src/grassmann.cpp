// Berezin calculus on anticommuting algebras: the graded integral, exact
// enumeration of all states by rational elimination, and the compatible
// completeness check for observable/state families.

#include "supmech/grassmann.hpp"

#include <algorithm>

#include "supmech/error.hpp"
#include "supmech/gns.hpp"

namespace supmech {

namespace {

// The integral needs a free anticommuting algebra: every generator odd and
// every supercommutator zero.
void require_grassmann(const Presentation* p) {
  require(p != nullptr, "polynomial has no presentation");
  for (int a = 0; a < p->ngens(); ++a) {
    require(p->odd(a), "berezin integral needs all generators odd");
    for (int b = 0; b <= a; ++b)
      require(p->supercomm_table(a, b).empty(),
              "berezin integral needs a relation-free algebra");
  }
}

Word word_of_mask(unsigned mask) {
  Word w;
  for (int g = 0; mask >> g; ++g)
    if (mask & (1u << g)) w.push_back(g);
  return w;
}

unsigned mask_of_word(const Word& w) {
  unsigned mask = 0;
  for (int g : w) mask |= 1u << g;
  return mask;
}

NcPoly word_poly(const PresPtr& p, unsigned mask) {
  TermMap t;
  t.emplace(word_of_mask(mask), Laurent::scalar(p->nparams(), GaussRat(1)));
  return NcPoly::from_terms(p.get(), t);
}

// Parity of n(n-1)/2 reversals: sign relating th_n...th_1 to th_1...th_n.
GaussRat reversal_sign(int n) {
  return GaussRat((n * (n - 1) / 2) % 2 == 0 ? 1 : -1);
}

using RatRow = std::vector<Rational>;

// Reduced row echelon form over the rationals; the last column is the right
// hand side.  Returns pivot column indices or nullopt when inconsistent.
std::optional<std::vector<int>> rref(std::vector<RatRow>& rows, int ncols) {
  std::vector<int> pivots;
  size_t next_row = 0;
  for (int col = 0; col < ncols && next_row < rows.size(); ++col) {
    size_t pr = next_row;
    while (pr < rows.size() && rows[pr][col] == 0) ++pr;
    if (pr == rows.size()) continue;
    std::swap(rows[next_row], rows[pr]);
    Rational lead = rows[next_row][col];
    for (auto& e : rows[next_row]) e /= lead;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == next_row || rows[r][col] == 0) continue;
      Rational f = rows[r][col];
      for (int c = 0; c <= ncols; ++c) rows[r][c] -= f * rows[next_row][c];
    }
    pivots.push_back(col);
    ++next_row;
  }
  for (size_t r = next_row; r < rows.size(); ++r)
    if (rows[r][ncols] != 0) return std::nullopt;
  return pivots;
}

}  // namespace

Laurent berezin_integral(const NcPoly& f) {
  const Presentation* p = f.pres();
  require_grassmann(p);
  const int n = p->ngens();
  Word full;
  for (int g = 0; g < n; ++g) full.push_back(g);
  Laurent c = f.coeff(full);
  c.scale(reversal_sign(n));
  return c;
}

Laurent berezin_expectation(const NcPoly& f, const NcPoly& rho) {
  require(f.pres() != nullptr && f.pres() == rho.pres(),
          "expectation needs both polynomials in one algebra");
  return berezin_integral(f * rho);
}

GrassmannStateFamily enumerate_states(int n) {
  require(n >= 0 && n <= 4, "state enumeration supports 0..4 generators");
  GrassmannStateFamily out;
  out.n = n;
  out.pres = grassmann(n);
  const Presentation* p = out.pres.get();
  const int N = 1 << n;

  // phi(basis word t) = sum_x B[t][x] c_x for a density rho = sum_x c_x b_x.
  std::vector<std::vector<GaussRat>> B(N, std::vector<GaussRat>(N));
  std::vector<NcPoly> basis;
  for (unsigned x = 0; x < static_cast<unsigned>(N); ++x)
    basis.push_back(word_poly(out.pres, x));
  for (int t = 0; t < N; ++t)
    for (int x = 0; x < N; ++x)
      B[t][x] = berezin_integral(basis[t] * basis[x]).as_scalar();

  // A polynomial u defines the complex-linear functional c -> phi(u).
  auto complex_row = [&](const NcPoly& u) {
    std::vector<GaussRat> r(N);
    for (const auto& [w, coeff] : u.terms()) {
      GaussRat c = coeff.as_scalar();
      int t = static_cast<int>(mask_of_word(w));
      for (int x = 0; x < N; ++x) r[x] += c * B[t][x];
    }
    return r;
  };

  // Real unknowns: a_x at 2x, b_x at 2x+1, with c_x = a_x + i b_x.
  const int ncols = 2 * N;
  std::vector<RatRow> rows;
  auto push_complex_eq = [&](const std::vector<GaussRat>& r,
                             const GaussRat& rhs) {
    RatRow re(ncols + 1, Rational(0)), im(ncols + 1, Rational(0));
    for (int x = 0; x < N; ++x) {
      re[2 * x] = r[x].re;
      re[2 * x + 1] = -r[x].im;
      im[2 * x] = r[x].im;
      im[2 * x + 1] = r[x].re;
    }
    re[ncols] = rhs.re;
    im[ncols] = rhs.im;
    rows.push_back(std::move(re));
    rows.push_back(std::move(im));
  };

  // Normalization phi(1) = 1.
  push_complex_eq(complex_row(NcPoly::unit(p)), GaussRat(1));

  // Positivity forcing: phi(w* w) = 0 identically for nonempty w, and a
  // positive-semidefinite Gram matrix with a zero diagonal entry has a zero
  // row, so phi(w* v) = 0 for every v.
  for (int w = 1; w < N; ++w) {
    for (int v = 0; v < N; ++v) {
      NcPoly u = basis[w].star() * basis[v];
      if (u.is_zero()) continue;
      push_complex_eq(complex_row(u), GaussRat(0));
    }
  }

  // Hermiticity phi(w*) = conj(phi(w)): the real parts agree and the
  // imaginary parts are opposite.
  for (int w = 0; w < N; ++w) {
    std::vector<GaussRat> lhs = complex_row(basis[w].star());
    std::vector<GaussRat> rhs = complex_row(basis[w]);
    RatRow re(ncols + 1, Rational(0)), im(ncols + 1, Rational(0));
    for (int x = 0; x < N; ++x) {
      re[2 * x] = lhs[x].re - rhs[x].re;
      re[2 * x + 1] = -lhs[x].im + rhs[x].im;
      im[2 * x] = lhs[x].im + rhs[x].im;
      im[2 * x + 1] = lhs[x].re + rhs[x].re;
    }
    rows.push_back(std::move(re));
    rows.push_back(std::move(im));
  }

  auto pivots = rref(rows, ncols);
  require(pivots.has_value(), "state conditions are inconsistent");
  out.free_parameters = ncols - static_cast<int>(pivots->size());

  // Representative solution: free coordinates set to zero.
  std::vector<Rational> sol(ncols, Rational(0));
  for (size_t k = 0; k < pivots->size(); ++k)
    sol[(*pivots)[k]] = rows[k][ncols];

  TermMap dens;
  for (int x = 0; x < N; ++x) {
    GaussRat c(sol[2 * x], sol[2 * x + 1]);
    if (c == GaussRat(0)) continue;
    dens.emplace(word_of_mask(static_cast<unsigned>(x)),
                 Laurent::scalar(p->nparams(), c));
  }
  NcPoly rho = NcPoly::from_terms(p, dens);

  // Exact verification of the representative: normalized, hermitian
  // expectations, positive-semidefinite Gram matrix.
  require(berezin_expectation(NcPoly::unit(p), rho).as_scalar() == GaussRat(1),
          "solved state is not normalized");
  std::vector<GaussRat> values(N);
  for (int w = 0; w < N; ++w)
    values[w] = berezin_expectation(basis[w], rho).as_scalar();
  for (int w = 0; w < N; ++w) {
    GaussRat starred = berezin_expectation(basis[w].star(), rho).as_scalar();
    require(starred == values[w].conj(), "solved state is not hermitian");
  }
  std::vector<std::vector<GaussRat>> G(N, std::vector<GaussRat>(N));
  for (int v = 0; v < N; ++v)
    for (int w = 0; w < N; ++w)
      G[v][w] = berezin_expectation(basis[v].star() * basis[w], rho)
                    .as_scalar();
  require(exact_psd(G), "solved state has an indefinite Gram matrix");

  out.density = std::move(rho);
  return out;
}

bool exact_psd(std::vector<std::vector<GaussRat>> G) {
  const int N = static_cast<int>(G.size());
  for (const auto& row : G)
    require(static_cast<int>(row.size()) == N, "matrix is not square");
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      require(G[i][j] == G[j][i].conj(), "matrix is not hermitian");

  std::vector<int> active(N);
  for (int i = 0; i < N; ++i) active[i] = i;
  while (!active.empty()) {
    int pivot = -1;
    for (int k : active) {
      if (G[k][k] == GaussRat(0)) continue;
      if (G[k][k].im != 0 || G[k][k].re < 0) return false;
      pivot = k;
      break;
    }
    if (pivot < 0) {
      // zero diagonal throughout: semidefinite only if everything is zero
      for (int i : active)
        for (int j : active)
          if (G[i][j] != GaussRat(0)) return false;
      return true;
    }
    std::vector<int> rest;
    for (int k : active)
      if (k != pivot) rest.push_back(k);
    for (int i : rest)
      for (int j : rest) G[i][j] -= G[i][pivot] * G[pivot][j] / G[pivot][pivot];
    active = std::move(rest);
  }
  return true;
}

CcResult cc_check(const std::vector<NcPoly>& observables,
                  const std::vector<NcPoly>& densities) {
  require(!densities.empty(), "compatible completeness needs states");
  const Presentation* p = densities.front().pres();
  require_grassmann(p);
  for (const auto& f : observables) {
    require(f.pres() == p, "observable lives in a different algebra");
    require(f.star() == f, "observable is not hermitian");
    require(f.even_part() == f, "observable is not even");
  }
  const int N = 1 << p->ngens();
  const int ns = static_cast<int>(densities.size());
  const int no = static_cast<int>(observables.size());
  for (const auto& rho : densities) {
    require(rho.pres() == p, "state lives in a different algebra");
    require(
        berezin_expectation(NcPoly::unit(p), rho).as_scalar() == GaussRat(1),
        "density is not normalized");
  }

  std::vector<std::vector<Laurent>> E(ns, std::vector<Laurent>(no));
  for (int s = 0; s < ns; ++s)
    for (int o = 0; o < no; ++o)
      E[s][o] = berezin_expectation(observables[o], densities[s]);

  CcResult out;
  for (int o1 = 0; o1 < no; ++o1)
    for (int o2 = o1 + 1; o2 < no; ++o2) {
      if (observables[o1] == observables[o2]) continue;
      bool separated = false;
      for (int s = 0; s < ns && !separated; ++s)
        separated = !(E[s][o1] == E[s][o2]);
      if (!separated) {
        out.witness = CcWitness{true, o1, o2};
        return out;
      }
    }

  // Functional value tables decide whether two densities are the same state.
  std::vector<std::vector<GaussRat>> V(ns, std::vector<GaussRat>(N));
  for (int s = 0; s < ns; ++s)
    for (int x = 0; x < N; ++x) {
      TermMap t;
      t.emplace(word_of_mask(static_cast<unsigned>(x)),
                Laurent::scalar(p->nparams(), GaussRat(1)));
      V[s][x] = berezin_expectation(NcPoly::from_terms(p, t), densities[s])
                    .as_scalar();
    }
  for (int s1 = 0; s1 < ns; ++s1)
    for (int s2 = s1 + 1; s2 < ns; ++s2) {
      if (V[s1] == V[s2]) continue;
      bool separated = false;
      for (int o = 0; o < no && !separated; ++o)
        separated = !(E[s1][o] == E[s2][o]);
      if (!separated) {
        out.witness = CcWitness{false, s1, s2};
        return out;
      }
    }
  out.pass = true;
  return out;
}

CcResult cc_check(const FiniteAlgebra& A,
                  const std::vector<Eigen::VectorXcd>& observables,
                  const std::vector<Eigen::VectorXcd>& states,
                  double sep_tol) {
  for (const auto& x : observables)
    require(A.is_hermitian(x, 1e-10), "observable is not hermitian");
  for (const auto& s : states)
    require(check_state(A, s).ok(), "invalid state functional");

  const int ns = static_cast<int>(states.size());
  const int no = static_cast<int>(observables.size());
  Eigen::MatrixXcd E(ns, no);
  for (int s = 0; s < ns; ++s)
    for (int o = 0; o < no; ++o)
      E(s, o) = (states[s].transpose() * observables[o]).value();

  CcResult out;
  for (int o1 = 0; o1 < no; ++o1)
    for (int o2 = o1 + 1; o2 < no; ++o2) {
      if ((observables[o1] - observables[o2]).cwiseAbs().maxCoeff() <= sep_tol)
        continue;
      bool separated = false;
      for (int s = 0; s < ns && !separated; ++s)
        separated = std::abs(E(s, o1) - E(s, o2)) > sep_tol;
      if (!separated) {
        out.witness = CcWitness{true, o1, o2};
        return out;
      }
    }
  for (int s1 = 0; s1 < ns; ++s1)
    for (int s2 = s1 + 1; s2 < ns; ++s2) {
      if ((states[s1] - states[s2]).cwiseAbs().maxCoeff() <= sep_tol) continue;
      bool separated = false;
      for (int o = 0; o < no && !separated; ++o)
        separated = std::abs(E(s1, o) - E(s2, o)) > sep_tol;
      if (!separated) {
        out.witness = CcWitness{false, s1, s2};
        return out;
      }
    }
  out.pass = true;
  return out;
}

}  // namespace supmech
