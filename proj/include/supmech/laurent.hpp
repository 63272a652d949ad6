#pragma once

#include <map>
#include <string>
#include <vector>

#include "supmech/rational.hpp"

namespace supmech {

// Sparse Laurent polynomial over Q(i) in a fixed tuple of commuting formal
// parameters (hbar, m, t, ...).  Exponents may be negative.  The parameter
// names live in the owning Presentation; here a term is just an exponent
// vector.  Zero coefficients are never stored, so is_zero() == empty().
class Laurent {
 public:
  using Exp = std::vector<int>;

  Laurent() = default;
  explicit Laurent(int nparams) : np_(nparams) {}

  static Laurent scalar(int nparams, GaussRat c) {
    Laurent l(nparams);
    if (!c.is_zero()) l.t_[Exp(nparams, 0)] = std::move(c);
    return l;
  }
  static Laurent monomial(int nparams, Exp e, GaussRat c) {
    Laurent l(nparams);
    if (!c.is_zero()) l.t_[std::move(e)] = std::move(c);
    return l;
  }
  // Single parameter to an integer power (negative allowed).
  static Laurent param_pow(int nparams, int param, int k, GaussRat c = GaussRat(1)) {
    Exp e(nparams, 0);
    e.at(param) = k;
    return monomial(nparams, std::move(e), std::move(c));
  }

  int nparams() const { return np_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t nterms() const { return t_.size(); }
  const std::map<Exp, GaussRat>& terms() const { return t_; }

  // Scalar (parameter-free) content, or throw if non-scalar.
  GaussRat as_scalar() const {
    if (t_.empty()) return GaussRat(0);
    require(t_.size() == 1 && t_.begin()->first == Exp(np_, 0),
            "coefficient is not a pure scalar");
    return t_.begin()->second;
  }
  bool is_scalar() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first == Exp(np_, 0));
  }
  // Invertible in the Laurent ring iff a single term.
  bool is_single_term() const { return t_.size() == 1; }

  Laurent& operator+=(const Laurent& o) {
    check(o);
    for (const auto& [e, c] : o.t_) add_term(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    check(o);
    for (const auto& [e, c] : o.t_) add_term(e, -c);
    return *this;
  }
  Laurent operator-() const {
    Laurent r(np_);
    for (const auto& [e, c] : t_) r.t_[e] = -c;
    return r;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    a.check(b);
    Laurent r(a.np_);
    for (const auto& [ea, ca] : a.t_)
      for (const auto& [eb, cb] : b.t_) {
        Exp e(a.np_);
        for (int k = 0; k < a.np_; ++k) e[k] = ea[k] + eb[k];
        r.add_term(std::move(e), ca * cb);
      }
    return r;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  Laurent& scale(const GaussRat& c) {
    if (c.is_zero()) {
      t_.clear();
      return *this;
    }
    for (auto& [e, v] : t_) v *= c;
    return *this;
  }

  // Exact division by an invertible (single-term) Laurent element.
  Laurent divide_by(const Laurent& d) const {
    check(d);
    require(d.is_single_term(), "division only by a single-term (invertible) factor");
    const auto& [de, dc] = *d.t_.begin();
    Laurent r(np_);
    for (const auto& [e, c] : t_) {
      Exp q(np_);
      for (int k = 0; k < np_; ++k) q[k] = e[k] - de[k];
      r.t_[std::move(q)] = c / dc;
    }
    return r;
  }

  // Complex conjugation; all parameters are real formal symbols.
  Laurent conj() const {
    Laurent r(np_);
    for (const auto& [e, c] : t_) r.t_[e] = c.conj();
    return r;
  }

  // Formal d/d(param): c * p^k  ->  c*k * p^(k-1).
  Laurent derivative(int param) const {
    Laurent r(np_);
    for (const auto& [e, c] : t_) {
      if (e.at(param) == 0) continue;
      Exp q = e;
      q[param] -= 1;
      r.add_term(std::move(q), c * GaussRat(e[param]));
    }
    return r;
  }

  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.np_ == b.np_ && a.t_ == b.t_;
  }

  // Canonical text form, deterministic term order; param_names must match
  // the presentation this coefficient belongs to.
  std::string str(const std::vector<std::string>& param_names) const;

 private:
  void check(const Laurent& o) const {
    require(np_ == o.np_, "coefficient parameter spaces differ");
  }
  void add_term(Exp e, GaussRat c) {
    auto it = t_.find(e);
    if (it == t_.end()) {
      if (!c.is_zero()) t_.emplace(std::move(e), std::move(c));
    } else {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  int np_ = 0;
  std::map<Exp, GaussRat> t_;
};

}  // namespace supmech
