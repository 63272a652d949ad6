#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "supmech/error.hpp"
#include "supmech/ncpoly.hpp"
#include "supmech/parser.hpp"
#include "supmech/presentations.hpp"

using namespace supmech;

namespace {

std::vector<GaussRat> coeff_pool() {
  return {GaussRat(1),         GaussRat(-1),          GaussRat(2),
          GaussRat::frac(1, 2), GaussRat::i(),        -GaussRat::i(),
          GaussRat(Rational(1), Rational(1)),
          GaussRat(Rational(-2), Rational(3))};
}

TermMap random_raw(std::mt19937& rng, const Presentation* p, int max_len) {
  const auto pool = coeff_pool();
  TermMap t;
  int nterms = 1 + static_cast<int>(rng() % 3);
  for (int i = 0; i < nterms; ++i) {
    int len = static_cast<int>(rng() % (max_len + 1));
    Word w;
    for (int j = 0; j < len; ++j)
      w.push_back(static_cast<std::uint8_t>(rng() % p->ngens()));
    GaussRat c = pool[rng() % pool.size()];
    Laurent l = Laurent::scalar(p->nparams(), c);
    if (p->nparams() > 0 && rng() % 3 == 0)
      l = Laurent::param_pow(p->nparams(), 0, static_cast<int>(rng() % 3) - 1, c);
    auto [it, fresh] = t.emplace(std::move(w), l);
    if (!fresh) it->second += l;
  }
  for (auto it = t.begin(); it != t.end();)
    it = it->second.is_zero() ? t.erase(it) : std::next(it);
  return t;
}

NcPoly random_poly(std::mt19937& rng, const Presentation* p, int max_len) {
  return NcPoly::from_terms(p, random_raw(rng, p, max_len));
}

// Random polynomial whose words all share one parity (grading-homogeneous).
NcPoly random_homogeneous(std::mt19937& rng, const Presentation* p, bool odd_par) {
  const auto pool = coeff_pool();
  TermMap t;
  int nterms = 1 + static_cast<int>(rng() % 2);
  for (int i = 0; i < nterms; ++i) {
    int len = (odd_par ? 1 : 0) + 2 * static_cast<int>(rng() % 2);
    Word w;
    for (int j = 0; j < len; ++j)
      w.push_back(static_cast<std::uint8_t>(rng() % p->ngens()));
    auto [it, fresh] =
        t.emplace(std::move(w), Laurent::scalar(p->nparams(), pool[rng() % pool.size()]));
    if (!fresh) it->second += Laurent::scalar(p->nparams(), pool[rng() % pool.size()]);
  }
  for (auto it = t.begin(); it != t.end();)
    it = it->second.is_zero() ? t.erase(it) : std::next(it);
  return NcPoly::from_terms(p, t);
}

bool word_is_normal(const Presentation* p, const Word& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] > w[i + 1]) return false;
    if (w[i] == w[i + 1] && p->odd(w[i])) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("gaussian rational arithmetic") {
  GaussRat a = GaussRat::frac(3, 2);
  GaussRat b(Rational(1), Rational(-2));  // 1 - 2i
  CHECK((a + b) == GaussRat(Rational(5) / 2, Rational(-2)));
  CHECK((a * GaussRat::i()).str() == "3/2*i");
  CHECK((b * b.conj()).str() == "5");
  CHECK((a / b * b) == a);
  CHECK((GaussRat::i() * GaussRat::i()) == GaussRat(-1));
  CHECK(GaussRat().is_zero());
  CHECK(GaussRat(Rational(0), Rational(-1)).str() == "-i");
  CHECK(!b.is_real());
  CHECK(a.is_real());
  CHECK(a.to_double_re() == doctest::Approx(1.5));
}

TEST_CASE("laurent coefficients") {
  Laurent h = Laurent::param_pow(2, 0, 1);
  Laurent minv = Laurent::param_pow(2, 1, -1);
  Laurent prod = h * minv;
  CHECK(prod.is_single_term());
  CHECK(prod.divide_by(minv) == h);
  CHECK(prod.divide_by(h) == minv);

  Laurent s = h * h + minv;
  CHECK(s.nterms() == 2);
  CHECK(s.derivative(0) == Laurent::param_pow(2, 0, 1, GaussRat(2)));
  CHECK(s.derivative(1) == Laurent::param_pow(2, 1, -2, GaussRat(-1)));

  Laurent ih = Laurent::param_pow(2, 0, 1, GaussRat::i());
  CHECK(ih.conj() == Laurent::param_pow(2, 0, 1, -GaussRat::i()));
  CHECK((ih - ih).is_zero());
  CHECK_THROWS_AS(s.as_scalar(), Error);
  CHECK(Laurent::scalar(2, GaussRat::frac(-7, 3)).as_scalar() ==
        GaussRat::frac(-7, 3));
}

TEST_CASE("parser scalars, powers, division") {
  auto pres = ccr_spin();
  const Presentation* p = pres.get();
  CHECK(parse_expr(p, "3/2") == NcPoly::scalar(p, GaussRat::frac(3, 2)));
  CHECK(parse_expr(p, "i*i") == NcPoly::scalar(p, GaussRat(-1)));
  CHECK(parse_expr(p, "I") == NcPoly::unit(p));
  CHECK(parse_expr(p, "2*I - 2") .is_zero());
  CHECK(parse_expr(p, "hbar^-1 * hbar") == NcPoly::unit(p));
  CHECK(parse_expr(p, "X1^3") ==
        parse_expr(p, "X1*X1*X1"));
  CHECK(parse_expr(p, "(2*m)^-2") == parse_expr(p, "1/(4*m^2)"));
  CHECK(parse_expr(p, "-X1 + X1").is_zero());
}

TEST_CASE("parser error positions") {
  auto pres = ccr_spin();
  const Presentation* p = pres.get();
  CHECK_THROWS_AS(parse_expr(p, "X1 +"), Error);
  CHECK_THROWS_AS(parse_expr(p, "(X1"), Error);
  CHECK_THROWS_AS(parse_expr(p, "Q9"), Error);
  CHECK_THROWS_AS(parse_expr(p, "X1 / P1"), Error);       // nonscalar divisor
  CHECK_THROWS_AS(parse_expr(p, "X1^-1"), Error);         // nonscalar base
  CHECK_THROWS_AS(parse_expr(p, "(1+m)^-1"), Error);      // noninvertible scalar
  try {
    parse_expr(p, "X1 + @");
    FAIL("expected parse error");
  } catch (const Error& e) {
    CHECK(e.pos == 5);
  }
  try {
    parse_expr(p, "X1 X2");
    FAIL("expected parse error");
  } catch (const Error& e) {
    CHECK(e.pos == 3);  // juxtaposition is not multiplication
  }
}

TEST_CASE("involution vs multiplication disambiguation") {
  auto pres = ccr_spin();
  const Presentation* p = pres.get();
  CHECK(parse_expr(p, "X1*") == parse_expr(p, "X1"));
  CHECK(parse_expr(p, "(i*X1)*") == parse_expr(p, "-i*X1"));
  CHECK(parse_expr(p, "X1*X2") == parse_expr(p, "X2*X1"));
  CHECK(parse_expr(p, "X1**X2") == parse_expr(p, "X1*X2"));
  CHECK(parse_expr(p, "X1* - X2") == parse_expr(p, "X1 - X2"));
  CHECK(parse_expr(p, "(X1*P1)*") == parse_expr(p, "P1*X1"));
  CHECK(parse_expr(p, "X1***") == parse_expr(p, "X1"));
}

TEST_CASE("normal ordering in the position/momentum algebra") {
  auto pres = ccr_spin();
  const Presentation* p = pres.get();
  CHECK(parse_expr(p, "P1*X1") == parse_expr(p, "X1*P1 - i*hbar*I"));
  CHECK(parse_expr(p, "P1*X1^2") == parse_expr(p, "X1^2*P1 - 2*i*hbar*X1"));
  CHECK(parse_expr(p, "S2*S1") == parse_expr(p, "S1*S2 - i*hbar*S3"));
  CHECK(parse_expr(p, "P2*X1") == parse_expr(p, "X1*P2"));
  CHECK(parse_expr(p, "(X1+P1)^2") ==
        parse_expr(p, "X1^2 + 2*X1*P1 + P1^2 - i*hbar*I"));
  NcPoly cube = parse_expr(p, "(X1+P1+S3)^3");
  for (const auto& [w, c] : cube.terms()) {
    (void)c;
    CHECK(word_is_normal(p, w));
  }

  CHECK(quantum_pb(parse_expr(p, "P1"), parse_expr(p, "X1")) ==
        NcPoly::unit(p));
  CHECK(quantum_pb(parse_expr(p, "X1"), parse_expr(p, "P1")) ==
        parse_expr(p, "-I"));
  CHECK(quantum_pb(parse_expr(p, "S1"), parse_expr(p, "S2")) ==
        parse_expr(p, "-S3"));
}

TEST_CASE("grassmann normal ordering") {
  auto pres = grassmann(3);
  const Presentation* p = pres.get();
  CHECK(parse_expr(p, "th2*th1") == parse_expr(p, "-th1*th2"));
  CHECK(parse_expr(p, "th1*th1").is_zero());
  CHECK(parse_expr(p, "th3*th2*th1") == parse_expr(p, "-th1*th2*th3"));
  CHECK(parse_expr(p, "(th1*th2)*") == parse_expr(p, "-th1*th2"));
  CHECK(parse_expr(p, "(i*th1*th2)*") == parse_expr(p, "i*th1*th2"));
  CHECK(supercommutator(parse_expr(p, "th1"), parse_expr(p, "th2")).is_zero());
  CHECK(supercommutator(parse_expr(p, "th1"), parse_expr(p, "th1")).is_zero());
  // th1 th2 th1 th3 = -th1 th1 th2 th3 = 0
  CHECK(parse_expr(p, "th1*th2*th1*th3").is_zero());
}

TEST_CASE("rewriting is confluent and degree-bounded") {
  std::mt19937 rng(12345);
  for (auto pres : {galilei_extended(), ccr_spin(), grassmann(4)}) {
    const Presentation* p = pres.get();
    for (int iter = 0; iter < 300; ++iter) {
      TermMap raw = random_raw(rng, p, 4);
      NcPoly a = NcPoly::from_terms(p, raw, RewriteOrder::FirstPair);
      NcPoly b = NcPoly::from_terms(p, raw, RewriteOrder::LastPair);
      CHECK(a == b);
      int max_len = 0;
      for (const auto& [w, c] : raw) {
        (void)c;
        max_len = std::max<int>(max_len, static_cast<int>(w.size()));
      }
      CHECK(a.degree() <= max_len);
      for (const auto& [w, c] : a.terms()) {
        (void)c;
        CHECK(word_is_normal(p, w));
      }
      // reducing an already-normal polynomial is the identity
      CHECK(NcPoly::from_terms(p, a.terms(), RewriteOrder::LastPair) == a);
    }
  }
}

TEST_CASE("products respect associativity and degree additivity") {
  std::mt19937 rng(777);
  for (auto pres : {galilei_extended(), ccr_spin(), grassmann(4)}) {
    const Presentation* p = pres.get();
    for (int iter = 0; iter < 120; ++iter) {
      NcPoly a = random_poly(rng, p, 3);
      NcPoly b = random_poly(rng, p, 3);
      NcPoly c = random_poly(rng, p, 3);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      if (!a.is_zero() && !b.is_zero() && !(a * b).is_zero())
        CHECK((a * b).degree() <= a.degree() + b.degree());
      CHECK(a * NcPoly::unit(p) == a);
      CHECK(NcPoly::unit(p) * a == a);
    }
  }
}

TEST_CASE("graded jacobi identity on random homogeneous polynomials") {
  std::mt19937 rng(2024);
  // even case: all generators even
  {
    auto pres = galilei_extended();
    const Presentation* p = pres.get();
    for (int iter = 0; iter < 80; ++iter) {
      NcPoly a = random_poly(rng, p, 2);
      NcPoly b = random_poly(rng, p, 2);
      NcPoly c = random_poly(rng, p, 2);
      NcPoly j = supercommutator(supercommutator(a, b), c) +
                 supercommutator(supercommutator(b, c), a) +
                 supercommutator(supercommutator(c, a), b);
      CHECK(j.is_zero());
    }
  }
  // graded case with Koszul signs
  {
    auto pres = grassmann(4);
    const Presentation* p = pres.get();
    for (int iter = 0; iter < 120; ++iter) {
      bool pa = rng() % 2, pb = rng() % 2, pc = rng() % 2;
      NcPoly a = random_homogeneous(rng, p, pa);
      NcPoly b = random_homogeneous(rng, p, pb);
      NcPoly c = random_homogeneous(rng, p, pc);
      auto sgn = [](bool x, bool y) { return x && y ? GaussRat(-1) : GaussRat(1); };
      NcPoly j = supercommutator(supercommutator(a, b), c).scaled(sgn(pa, pc)) +
                 supercommutator(supercommutator(b, c), a).scaled(sgn(pb, pa)) +
                 supercommutator(supercommutator(c, a), b).scaled(sgn(pc, pb));
      CHECK(j.is_zero());
    }
  }
}

TEST_CASE("bracket Leibniz rules") {
  std::mt19937 rng(5150);
  auto pres = ccr_spin();
  const Presentation* p = pres.get();
  for (int iter = 0; iter < 80; ++iter) {
    NcPoly a = random_poly(rng, p, 2);
    NcPoly b = random_poly(rng, p, 2);
    NcPoly c = random_poly(rng, p, 2);
    CHECK(quantum_pb(a, b * c) == quantum_pb(a, b) * c + b * quantum_pb(a, c));
    CHECK(supercommutator(a * b, c) ==
          a * supercommutator(b, c) + supercommutator(a, c) * b);
  }
  auto g4 = grassmann(4);
  const Presentation* q = g4.get();
  for (int iter = 0; iter < 80; ++iter) {
    bool pa = rng() % 2, pb = rng() % 2;
    NcPoly a = random_homogeneous(rng, q, pa);
    NcPoly b = random_homogeneous(rng, q, pb);
    NcPoly c = random_poly(rng, q, 3);
    NcPoly lhs = supercommutator(a, b * c);
    NcPoly rhs = supercommutator(a, b) * c +
                 (b * supercommutator(a, c)).scaled(pa && pb ? GaussRat(-1)
                                                             : GaussRat(1));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("involution is an antiautomorphism compatible with brackets") {
  std::mt19937 rng(31337);
  for (auto pres : {galilei_extended(), ccr_spin(), grassmann(4)}) {
    const Presentation* p = pres.get();
    for (int iter = 0; iter < 100; ++iter) {
      NcPoly a = random_poly(rng, p, 3);
      NcPoly b = random_poly(rng, p, 3);
      CHECK((a * b).star() == b.star() * a.star());
      CHECK(a.star().star() == a);
      CHECK((a + b).star() == a.star() + b.star());
    }
  }
  auto pres = ccr_spin();
  const Presentation* p = pres.get();
  for (int iter = 0; iter < 60; ++iter) {
    NcPoly a = random_poly(rng, p, 2);
    NcPoly b = random_poly(rng, p, 2);
    CHECK(quantum_pb(a, b).star() == quantum_pb(a.star(), b.star()));
  }
}

TEST_CASE("even and odd parts, parity, parameter derivative") {
  auto pres = grassmann(3);
  const Presentation* p = pres.get();
  NcPoly f = parse_expr(p, "1 + th1 + 2*th1*th2 + th1*th2*th3");
  CHECK(f.even_part() == parse_expr(p, "1 + 2*th1*th2"));
  CHECK(f.odd_part() == parse_expr(p, "th1 + th1*th2*th3"));
  CHECK(f.even_part() + f.odd_part() == f);
  CHECK(parse_expr(p, "th1*th2").parity() == false);
  CHECK(parse_expr(p, "th3").parity() == true);
  CHECK(!f.is_homogeneous());

  auto cs = ccr_spin();
  const Presentation* q = cs.get();
  NcPoly g = parse_expr(q, "m*X1 - P1*t");
  CHECK(g.param_derivative(q->param_index("t")) == parse_expr(q, "-P1"));
  CHECK(g.param_derivative(q->param_index("m")) == parse_expr(q, "X1"));
  CHECK(g.param_derivative(q->param_index("hbar")).is_zero());
}

TEST_CASE("canonical string forms") {
  auto pres = ccr_spin();
  const Presentation* p = pres.get();
  CHECK(NcPoly::zero(p).str() == "0");
  CHECK(NcPoly::unit(p).str() == "I");
  // str is stable under reparsing
  NcPoly f = parse_expr(p, "(X1+P1)^2 - i*hbar*S3 + 3/2");
  CHECK(parse_expr(p, f.str()) == f);
  NcPoly g = parse_expr(p, "hbar^-1*X1 - 2/3*i*P1");
  CHECK(parse_expr(p, g.str()) == g);
}
