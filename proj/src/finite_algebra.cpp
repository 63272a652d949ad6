#include "supmech/finite_algebra.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "supmech/error.hpp"
#include "supmech/ncpoly.hpp"
#include "supmech/presentations.hpp"

namespace supmech {

namespace {

double rel_tol(double scale) { return 1e-12 * std::max(1.0, scale); }

}  // namespace

FiniteAlgebra::FiniteAlgebra(std::string name, std::vector<std::string> labels,
                             std::vector<Eigen::MatrixXcd> left_mult,
                             Eigen::MatrixXcd star_map, Eigen::VectorXcd unit,
                             Eigen::VectorXcd trace_vec)
    : name_(std::move(name)),
      labels_(std::move(labels)),
      lmul_(std::move(left_mult)),
      star_(std::move(star_map)),
      unit_(std::move(unit)),
      trace_(std::move(trace_vec)) {
  const int n = dim();
  require(n > 0 && n <= 4096, "algebra dimension out of range");
  require(static_cast<int>(lmul_.size()) == n, "left-multiplication table size");
  for (const auto& m : lmul_)
    require(m.rows() == n && m.cols() == n, "left-multiplication matrix shape");
  require(star_.rows() == n && star_.cols() == n, "star map shape");
  require(unit_.size() == n && trace_.size() == n, "unit/trace vector size");
  validate();
}

Eigen::MatrixXcd FiniteAlgebra::left_mult_of(const Eigen::VectorXcd& x) const {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim(), dim());
  for (int i = 0; i < dim(); ++i)
    if (x(i) != Cx(0)) m += x(i) * lmul_[i];
  return m;
}

Eigen::MatrixXcd FiniteAlgebra::right_mult_of(const Eigen::VectorXcd& x) const {
  // column j of the right-multiplication matrix holds b_j * x
  Eigen::MatrixXcd m(dim(), dim());
  for (int j = 0; j < dim(); ++j) m.col(j) = lmul_[j] * x;
  return m;
}

Eigen::VectorXcd FiniteAlgebra::mul(const Eigen::VectorXcd& x,
                                    const Eigen::VectorXcd& y) const {
  Eigen::VectorXcd r = Eigen::VectorXcd::Zero(dim());
  for (int i = 0; i < dim(); ++i)
    if (x(i) != Cx(0)) r += x(i) * (lmul_[i] * y);
  return r;
}

Eigen::VectorXcd FiniteAlgebra::star(const Eigen::VectorXcd& x) const {
  return star_ * x.conjugate();
}

bool FiniteAlgebra::is_hermitian(const Eigen::VectorXcd& x, double tol) const {
  return (star(x) - x).cwiseAbs().maxCoeff() <= tol;
}

void FiniteAlgebra::validate() const {
  const int n = dim();
  double scale = 0;
  for (const auto& m : lmul_) scale = std::max(scale, m.cwiseAbs().maxCoeff());
  const double tol = rel_tol(scale * scale);

  for (int i = 0; i < n; ++i) {
    Eigen::VectorXcd bi = Eigen::VectorXcd::Unit(n, i);
    require((mul(unit_, bi) - bi).cwiseAbs().maxCoeff() <= tol,
            "unit fails on the left");
    require((mul(bi, unit_) - bi).cwiseAbs().maxCoeff() <= tol,
            "unit fails on the right");
    require((star(star(bi)) - bi).cwiseAbs().maxCoeff() <= tol,
            "involution is not involutive");
  }
  // associativity via left-multiplication matrices: L_{b_i b_j} = L_i L_j
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Eigen::VectorXcd bij = lmul_[i].col(j);  // coords of b_i b_j
      require((left_mult_of(bij) - lmul_[i] * lmul_[j]).cwiseAbs().maxCoeff() <=
                  tol,
              "multiplication table is not associative");
    }
  // star antiautomorphism and trace properties on basis pairs
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXcd bi = Eigen::VectorXcd::Unit(n, i);
    Eigen::VectorXcd si = star(bi);
    require(std::abs(trace(si) - std::conj(trace(bi))) <= tol,
            "trace is not star-compatible");
    for (int j = 0; j < n; ++j) {
      Eigen::VectorXcd bj = Eigen::VectorXcd::Unit(n, j);
      require((star(mul(bi, bj)) - mul(star(bj), si)).cwiseAbs().maxCoeff() <=
                  tol,
              "star is not an antiautomorphism");
      require(std::abs(trace(mul(bi, bj)) - trace(mul(bj, bi))) <= tol,
              "trace is not cyclic");
    }
  }
}

FiniteAlgebra FiniteAlgebra::full_matrix(int n) {
  require(n >= 1 && n <= 12, "matrix algebra size out of range");
  const int d = n * n;
  auto idx = [n](int a, int b) { return a * n + b; };
  std::vector<std::string> labels(d);
  std::vector<Eigen::MatrixXcd> lmul(d, Eigen::MatrixXcd::Zero(d, d));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      labels[idx(a, b)] =
          "e" + std::to_string(a + 1) + std::to_string(b + 1);
      // e(a,b) e(c,d) = delta_{bc} e(a,d)
      for (int dd = 0; dd < n; ++dd)
        lmul[idx(a, b)](idx(a, dd), idx(b, dd)) = 1.0;
    }
  Eigen::MatrixXcd star = Eigen::MatrixXcd::Zero(d, d);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) star(idx(b, a), idx(a, b)) = 1.0;
  Eigen::VectorXcd unit = Eigen::VectorXcd::Zero(d);
  Eigen::VectorXcd tr = Eigen::VectorXcd::Zero(d);
  for (int a = 0; a < n; ++a) {
    unit(idx(a, a)) = 1.0;
    tr(idx(a, a)) = 1.0;
  }
  return FiniteAlgebra("matn:" + std::to_string(n), std::move(labels),
                       std::move(lmul), std::move(star), std::move(unit),
                       std::move(tr));
}

FiniteAlgebra FiniteAlgebra::direct_sum(const FiniteAlgebra& a,
                                        const FiniteAlgebra& b) {
  const int na = a.dim(), nb = b.dim(), n = na + nb;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& l : a.labels()) labels.push_back("L:" + l);
  for (const auto& l : b.labels()) labels.push_back("R:" + l);
  std::vector<Eigen::MatrixXcd> lmul(n, Eigen::MatrixXcd::Zero(n, n));
  for (int i = 0; i < na; ++i) lmul[i].topLeftCorner(na, na) = a.left_mult(i);
  for (int i = 0; i < nb; ++i)
    lmul[na + i].bottomRightCorner(nb, nb) = b.left_mult(i);
  Eigen::MatrixXcd star = Eigen::MatrixXcd::Zero(n, n);
  star.topLeftCorner(na, na) = a.star_map();
  star.bottomRightCorner(nb, nb) = b.star_map();
  Eigen::VectorXcd unit(n), tr(n);
  unit << a.unit(), b.unit();
  Eigen::VectorXcd ta = Eigen::VectorXcd::Zero(na), tb = Eigen::VectorXcd::Zero(nb);
  for (int i = 0; i < na; ++i) ta(i) = a.trace(Eigen::VectorXcd::Unit(na, i));
  for (int i = 0; i < nb; ++i) tb(i) = b.trace(Eigen::VectorXcd::Unit(nb, i));
  tr << ta, tb;
  return FiniteAlgebra(a.name() + "+" + b.name(), std::move(labels),
                       std::move(lmul), std::move(star), std::move(unit),
                       std::move(tr));
}

FiniteAlgebra FiniteAlgebra::from_grassmann(const PresPtr& pres) {
  const Presentation* p = pres.get();
  const int ng = p->ngens();
  require(ng >= 1 && ng <= 10, "grassmann bridge supports up to 10 generators");
  for (int g = 0; g < ng; ++g)
    require(p->odd(g), "grassmann bridge requires odd generators only");
  const int d = 1 << ng;
  auto word_of = [&](int mask) {
    Word w;
    for (int g = 0; g < ng; ++g)
      if (mask & (1 << g)) w.push_back(static_cast<std::uint8_t>(g));
    return w;
  };
  auto poly_of = [&](int mask) {
    TermMap t;
    t.emplace(word_of(mask), Laurent::scalar(p->nparams(), GaussRat(1)));
    return NcPoly::from_terms(p, t);
  };
  auto coords_of = [&](const NcPoly& f) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(d);
    for (const auto& [w, c] : f.terms()) {
      int mask = 0;
      for (auto g : w) mask |= 1 << g;
      GaussRat s = c.as_scalar();
      v(mask) = Cx(s.to_double_re(), s.to_double_im());
    }
    return v;
  };
  std::vector<std::string> labels(d);
  std::vector<Eigen::MatrixXcd> lmul(d, Eigen::MatrixXcd::Zero(d, d));
  Eigen::MatrixXcd star = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    labels[i] = p->word_str(word_of(i));
    NcPoly bi = poly_of(i);
    star.col(i) = coords_of(bi.star());
    for (int j = 0; j < d; ++j) lmul[i].col(j) = coords_of(bi * poly_of(j));
  }
  Eigen::VectorXcd unit = Eigen::VectorXcd::Zero(d);
  unit(0) = 1.0;
  Eigen::VectorXcd tr(d);
  for (int i = 0; i < d; ++i) tr(i) = lmul[i].trace();
  return FiniteAlgebra("grassmann:" + std::to_string(ng), std::move(labels),
                       std::move(lmul), std::move(star), std::move(unit),
                       std::move(tr));
}

FiniteAlgebra FiniteAlgebra::from_name(const std::string& name) {
  auto parse_int = [&](const std::string& s) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      throw Error("bad algebra name '" + name + "'");
    }
    if (used != s.size()) throw Error("bad algebra name '" + name + "'");
    return v;
  };
  if (name.rfind("matn:", 0) == 0) return full_matrix(parse_int(name.substr(5)));
  if (name.rfind("sumn:", 0) == 0) {
    auto rest = name.substr(5);
    auto comma = rest.find(',');
    if (comma == std::string::npos) throw Error("bad algebra name '" + name + "'");
    return direct_sum(full_matrix(parse_int(rest.substr(0, comma))),
                      full_matrix(parse_int(rest.substr(comma + 1))));
  }
  if (name.rfind("grassmann:", 0) == 0)
    return from_grassmann(grassmann(parse_int(name.substr(10))));
  throw Error("unknown algebra '" + name + "'");
}

namespace {

Cx json_cx(const nlohmann::json& v) {
  if (v.is_number()) return Cx(v.get<double>(), 0.0);
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return Cx(v[0].get<double>(), v[1].get<double>());
  throw Error("complex entries must be numbers or [re, im] pairs");
}

}  // namespace

FiniteAlgebra FiniteAlgebra::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open algebra file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error("bad JSON in '" + path + "': " + e.what());
  }
  try {
    auto labels = j.at("labels").get<std::vector<std::string>>();
    const int n = static_cast<int>(labels.size());
    require(n > 0 && n <= 64, "algebra file dimension out of range");
    const auto& mult = j.at("mult");
    const auto& star_j = j.at("star");
    const auto& unit_j = j.at("unit");
    require(static_cast<int>(mult.size()) == n, "mult table size");
    std::vector<Eigen::MatrixXcd> lmul(n, Eigen::MatrixXcd::Zero(n, n));
    for (int i = 0; i < n; ++i) {
      require(static_cast<int>(mult[i].size()) == n, "mult table row size");
      for (int jj = 0; jj < n; ++jj) {
        require(static_cast<int>(mult[i][jj].size()) == n, "mult table cell size");
        for (int k = 0; k < n; ++k) lmul[i](k, jj) = json_cx(mult[i][jj][k]);
      }
    }
    Eigen::MatrixXcd star = Eigen::MatrixXcd::Zero(n, n);
    require(static_cast<int>(star_j.size()) == n, "star table size");
    for (int i = 0; i < n; ++i) {
      require(static_cast<int>(star_j[i].size()) == n, "star table row size");
      for (int jj = 0; jj < n; ++jj) star(jj, i) = json_cx(star_j[i][jj]);
    }
    Eigen::VectorXcd unit(n);
    require(static_cast<int>(unit_j.size()) == n, "unit vector size");
    for (int i = 0; i < n; ++i) unit(i) = json_cx(unit_j[i]);
    Eigen::VectorXcd tr(n);
    if (j.contains("trace")) {
      const auto& tr_j = j.at("trace");
      require(static_cast<int>(tr_j.size()) == n, "trace vector size");
      for (int i = 0; i < n; ++i) tr(i) = json_cx(tr_j[i]);
    } else {
      for (int i = 0; i < n; ++i) tr(i) = lmul[i].trace();
    }
    std::string name = j.value("name", path);
    return FiniteAlgebra(std::move(name), std::move(labels), std::move(lmul),
                         std::move(star), std::move(unit), std::move(tr));
  } catch (const nlohmann::json::exception& e) {
    throw Error("bad algebra file '" + path + "': " + e.what());
  }
}

}  // namespace supmech
