#pragma once

#include "supmech/presentation.hpp"

namespace supmech {

// Which adjacent reducible pair the rewriter picks first.  Both must produce
// identical normal forms (confluence); the property tests drive both.
enum class RewriteOrder { FirstPair, LastPair };

// Normal-ordered polynomial over a Presentation: finitely many words, each
// strictly ascending-compatible with the generator order (no adjacent
// inversions, no repeated odd generators), with Laurent coefficients and no
// stored zeros.  All constructors and operations maintain this invariant.
class NcPoly {
 public:
  NcPoly() = default;
  explicit NcPoly(const Presentation* p) : pres_(p) {}

  static NcPoly zero(const Presentation* p) { return NcPoly(p); }
  static NcPoly unit(const Presentation* p) { return scalar(p, GaussRat(1)); }
  static NcPoly scalar(const Presentation* p, GaussRat c);
  static NcPoly scalar(const Presentation* p, Laurent c);
  static NcPoly generator(const Presentation* p, int idx);
  // Arbitrary raw terms, reduced to normal form.
  static NcPoly from_terms(const Presentation* p, const TermMap& raw,
                           RewriteOrder ord = RewriteOrder::FirstPair);

  const Presentation* pres() const { return pres_; }
  const TermMap& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  int degree() const {  // max word length; -1 for the zero polynomial
    return t_.empty() ? -1 : static_cast<int>(t_.rbegin()->first.size());
  }

  // Coefficient of a (normal-ordered) word; zero Laurent if absent.
  Laurent coeff(const Word& w) const;

  NcPoly operator-() const;
  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
  NcPoly& operator*=(const NcPoly& o) { return *this = *this * o; }
  friend bool operator==(const NcPoly& a, const NcPoly& b) {
    return a.t_ == b.t_;
  }

  NcPoly scaled(const Laurent& c) const;
  NcPoly scaled(const GaussRat& c) const;
  // Exact division by an invertible scalar coefficient (single Laurent term).
  NcPoly divided_by(const Laurent& c) const;

  // Involution: antilinear anti-automorphism fixing every generator.
  NcPoly star() const;

  // Z2 grading helpers.
  bool is_homogeneous() const;
  bool parity() const;  // requires nonzero homogeneous
  NcPoly even_part() const;
  NcPoly odd_part() const;

  // Formal derivative of every coefficient with respect to a parameter.
  NcPoly param_derivative(int param) const;

  std::string str() const;

 private:
  const Presentation* pres_ = nullptr;
  TermMap t_;

  void add_term(Word w, Laurent c);
  friend class NcOps;
};

// Supercommutator [A,B] = AB - (-1)^{par A . par B} BA, extended bilinearly
// over homogeneous word components.
NcPoly supercommutator(const NcPoly& a, const NcPoly& b);

// Quantum Poisson bracket {A,B} = (-i hbar)^{-1} [A,B].
NcPoly quantum_pb(const NcPoly& a, const NcPoly& b);

// Reduce a single raw word to normal form with a chosen rewrite strategy;
// exposed so the confluence property tests can drive both orders.
NcPoly normal_form_word(const Presentation* p, const Word& w, RewriteOrder ord);

// Builders call this once: checks relation-table star-closure and the
// super-Jacobi identity on all generator triples.
void validate_presentation(const Presentation& p);

}  // namespace supmech
