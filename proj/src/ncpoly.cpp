#include "supmech/ncpoly.hpp"

#include <sstream>
#include <utility>

namespace supmech {

namespace {

// Position of the first (or last) adjacent reducible pair, or -1 if the word
// is normal-ordered.  Reducible: inversion w[k] > w[k+1], or a repeated odd
// generator.
int find_reducible(const Presentation& P, const Word& w, RewriteOrder ord) {
  const int n = static_cast<int>(w.size());
  auto reducible = [&](int k) {
    return w[k] > w[k + 1] || (w[k] == w[k + 1] && P.odd(w[k]));
  };
  if (ord == RewriteOrder::FirstPair) {
    for (int k = 0; k + 1 < n; ++k)
      if (reducible(k)) return k;
  } else {
    for (int k = n - 2; k >= 0; --k)
      if (reducible(k)) return k;
  }
  return -1;
}

Word splice(const Word& w, int pos, const Word& replacement) {
  Word nw;
  nw.reserve(w.size() - 2 + replacement.size());
  nw.insert(nw.end(), w.begin(), w.begin() + pos);
  nw.insert(nw.end(), replacement.begin(), replacement.end());
  nw.insert(nw.end(), w.begin() + pos + 2, w.end());
  return nw;
}

void accumulate(TermMap& out, Word w, Laurent c) {
  if (c.is_zero()) return;
  auto it = out.find(w);
  if (it == out.end()) {
    out.emplace(std::move(w), std::move(c));
  } else {
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  }
}

// Rewrite (w, c) to normal order, accumulating the result.  Every rewrite
// product is strictly smaller in the length-then-lex word order (a swap fixes
// the length and lowers the first differing letter; a relation term shortens
// the word), so processing the largest pending word first and merging
// duplicate words handles each distinct word at most once and terminates.
void reduce_into(const Presentation& P, Word w0, Laurent c0, TermMap& out, RewriteOrder ord) {
  TermMap pending;
  accumulate(pending, std::move(w0), std::move(c0));
  while (!pending.empty()) {
    auto top = std::prev(pending.end());
    Word w = top->first;
    Laurent c = std::move(top->second);
    pending.erase(top);
    int pos = find_reducible(P, w, ord);
    if (pos < 0) {
      accumulate(out, std::move(w), std::move(c));
      continue;
    }
    const int a = w[pos], b = w[pos + 1];
    if (a > b) {
      Word sw = w;
      std::swap(sw[pos], sw[pos + 1]);
      Laurent sc = c;
      if (P.odd(a) && P.odd(b)) sc = -sc;
      accumulate(pending, std::move(sw), std::move(sc));
      for (const auto& [rw, rc] : P.supercomm_table(a, b))
        accumulate(pending, splice(w, pos, rw), c * rc);
    } else {
      // a == b odd: g*g = [g,g]/2 (zero when the table entry is empty).
      for (const auto& [rw, rc] : P.supercomm_table(a, a)) {
        Laurent half = c * rc;
        half.scale(GaussRat::frac(1, 2));
        accumulate(pending, splice(w, pos, rw), std::move(half));
      }
    }
  }
}

}  // namespace

NcPoly NcPoly::scalar(const Presentation* p, GaussRat c) {
  return scalar(p, Laurent::scalar(p->nparams(), std::move(c)));
}

NcPoly NcPoly::scalar(const Presentation* p, Laurent c) {
  require(c.nparams() == p->nparams(), "coefficient parameter mismatch");
  NcPoly r(p);
  if (!c.is_zero()) r.t_.emplace(Word{}, std::move(c));
  return r;
}

NcPoly NcPoly::generator(const Presentation* p, int idx) {
  require(idx >= 0 && idx < p->ngens(), "generator index out of range");
  NcPoly r(p);
  r.t_.emplace(Word{static_cast<std::uint8_t>(idx)},
               Laurent::scalar(p->nparams(), GaussRat(1)));
  return r;
}

NcPoly NcPoly::from_terms(const Presentation* p, const TermMap& raw, RewriteOrder ord) {
  NcPoly r(p);
  for (const auto& [w, c] : raw) {
    require(c.nparams() == p->nparams(), "coefficient parameter mismatch");
    reduce_into(*p, w, c, r.t_, ord);
  }
  return r;
}

Laurent NcPoly::coeff(const Word& w) const {
  auto it = t_.find(w);
  return it == t_.end() ? Laurent(pres_ ? pres_->nparams() : 0) : it->second;
}

NcPoly NcPoly::operator-() const {
  NcPoly r(pres_);
  for (const auto& [w, c] : t_) r.t_.emplace(w, -c);
  return r;
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  if (!pres_) pres_ = o.pres_;
  require(pres_ == o.pres_ || o.t_.empty(), "operands from different presentations");
  for (const auto& [w, c] : o.t_) add_term(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
  if (!pres_) pres_ = o.pres_;
  require(pres_ == o.pres_ || o.t_.empty(), "operands from different presentations");
  for (const auto& [w, c] : o.t_) add_term(w, -c);
  return *this;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
  require(a.pres_ == b.pres_ || a.t_.empty() || b.t_.empty(),
          "operands from different presentations");
  const Presentation* p = a.pres_ ? a.pres_ : b.pres_;
  NcPoly r(p);
  for (const auto& [wa, ca] : a.t_)
    for (const auto& [wb, cb] : b.t_) {
      Word w;
      w.reserve(wa.size() + wb.size());
      w.insert(w.end(), wa.begin(), wa.end());
      w.insert(w.end(), wb.begin(), wb.end());
      reduce_into(*p, std::move(w), ca * cb, r.t_, RewriteOrder::FirstPair);
    }
  return r;
}

NcPoly NcPoly::scaled(const Laurent& c) const {
  NcPoly r(pres_);
  for (const auto& [w, v] : t_) {
    Laurent nv = v * c;
    if (!nv.is_zero()) r.t_.emplace(w, std::move(nv));
  }
  return r;
}

NcPoly NcPoly::scaled(const GaussRat& c) const {
  NcPoly r(pres_);
  if (c.is_zero()) return r;
  for (const auto& [w, v] : t_) {
    Laurent nv = v;
    nv.scale(c);
    r.t_.emplace(w, std::move(nv));
  }
  return r;
}

NcPoly NcPoly::divided_by(const Laurent& c) const {
  NcPoly r(pres_);
  for (const auto& [w, v] : t_) r.t_.emplace(w, v.divide_by(c));
  return r;
}

NcPoly NcPoly::star() const {
  NcPoly r(pres_);
  for (const auto& [w, c] : t_) {
    Word rev(w.rbegin(), w.rend());
    reduce_into(*pres_, std::move(rev), c.conj(), r.t_, RewriteOrder::FirstPair);
  }
  return r;
}

bool NcPoly::is_homogeneous() const {
  if (t_.empty()) return true;
  bool p0 = pres_->word_parity(t_.begin()->first);
  for (const auto& [w, c] : t_)
    if (pres_->word_parity(w) != p0) return false;
  return true;
}

bool NcPoly::parity() const {
  require(!t_.empty() && is_homogeneous(), "parity of non-homogeneous polynomial");
  return pres_->word_parity(t_.begin()->first);
}

NcPoly NcPoly::even_part() const {
  NcPoly r(pres_);
  for (const auto& [w, c] : t_)
    if (!pres_->word_parity(w)) r.t_.emplace(w, c);
  return r;
}

NcPoly NcPoly::odd_part() const {
  NcPoly r(pres_);
  for (const auto& [w, c] : t_)
    if (pres_->word_parity(w)) r.t_.emplace(w, c);
  return r;
}

NcPoly NcPoly::param_derivative(int param) const {
  NcPoly r(pres_);
  for (const auto& [w, c] : t_) {
    Laurent d = c.derivative(param);
    if (!d.is_zero()) r.t_.emplace(w, std::move(d));
  }
  return r;
}

void NcPoly::add_term(Word w, Laurent c) { accumulate(t_, std::move(w), std::move(c)); }

std::string NcPoly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : t_) {
    if (!first) os << " + ";
    first = false;
    std::string cs = c.str(pres_->params());
    if (w.empty()) {
      os << (cs == "1" ? "I" : "(" + cs + ")*I");
    } else if (cs == "1") {
      os << pres_->word_str(w);
    } else {
      os << "(" << cs << ")*" << pres_->word_str(w);
    }
  }
  return os.str();
}

NcPoly normal_form_word(const Presentation* p, const Word& w, RewriteOrder ord) {
  TermMap raw;
  raw.emplace(w, Laurent::scalar(p->nparams(), GaussRat(1)));
  return NcPoly::from_terms(p, raw, ord);
}

NcPoly supercommutator(const NcPoly& a, const NcPoly& b) {
  require(a.pres() == b.pres() || a.is_zero() || b.is_zero(),
          "operands from different presentations");
  const Presentation* p = a.pres() ? a.pres() : b.pres();
  if (!p) return NcPoly();
  NcPoly r(p);
  // Bilinear over words; each word is homogeneous, so the Koszul sign is
  // decided per word pair.
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      bool sign = p->word_parity(wa) && p->word_parity(wb);
      NcPoly ab = NcPoly::from_terms(p, TermMap{{wa, ca}}) *
                  NcPoly::from_terms(p, TermMap{{wb, cb}});
      NcPoly ba = NcPoly::from_terms(p, TermMap{{wb, cb}}) *
                  NcPoly::from_terms(p, TermMap{{wa, ca}});
      r += ab;
      if (sign)
        r += ba;
      else
        r -= ba;
    }
  return r;
}

NcPoly quantum_pb(const NcPoly& a, const NcPoly& b) {
  NcPoly c = supercommutator(a, b);
  if (c.is_zero()) return c;
  const Presentation* p = c.pres();
  // (-i hbar)^{-1} = i / hbar.
  Laurent inv = Laurent::param_pow(p->nparams(), p->hbar_index(), -1, GaussRat::i());
  return c.scaled(inv);
}

void validate_presentation(const Presentation& P) {
  const int n = P.ngens();
  auto rel_poly = [&](int a, int b) {
    // [g_a, g_b] for any pair, via the stored table and super-antisymmetry
    // [g_b, g_a] = -(-1)^{par a par b} [g_a, g_b].
    if (a >= b) return NcPoly::from_terms(&P, P.supercomm_table(a, b));
    NcPoly r = NcPoly::from_terms(&P, P.supercomm_table(b, a));
    bool sign = P.odd(a) && P.odd(b);
    return sign ? r : -r;
  };
  // Star-closure: [a,b]* = -(-1)^{par a par b} [a,b] for hermitian generators.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b <= a; ++b) {
      if (a == b && !P.odd(a)) continue;
      NcPoly r = NcPoly::from_terms(&P, P.supercomm_table(a, b));
      NcPoly expect = (P.odd(a) && P.odd(b)) ? r : -r;
      require(r.star() == expect,
              "relation table not star-closed at [" + P.gen_name(a) + "," + P.gen_name(b) + "]");
    }
  // Super-Jacobi on generator triples:
  // (-1)^{pa pc}[[a,b],c] + (-1)^{pb pa}[[b,c],a] + (-1)^{pc pb}[[c,a],b] = 0.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        NcPoly ga = NcPoly::generator(&P, a);
        NcPoly gb = NcPoly::generator(&P, b);
        NcPoly gc = NcPoly::generator(&P, c);
        auto sgn = [&](int x, int y) { return P.odd(x) && P.odd(y); };
        NcPoly t1 = supercommutator(rel_poly(a, b), gc);
        NcPoly t2 = supercommutator(rel_poly(b, c), ga);
        NcPoly t3 = supercommutator(rel_poly(c, a), gb);
        NcPoly sum = (sgn(a, c) ? -t1 : t1) + (sgn(b, a) ? -t2 : t2) + (sgn(c, b) ? -t3 : t3);
        require(sum.is_zero(), "relation table violates super-Jacobi at (" + P.gen_name(a) +
                                   "," + P.gen_name(b) + "," + P.gen_name(c) + ")");
      }
}

}  // namespace supmech
