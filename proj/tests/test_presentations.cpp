#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "supmech/algebra_checks.hpp"
#include "supmech/error.hpp"
#include "supmech/ncpoly.hpp"
#include "supmech/parser.hpp"
#include "supmech/presentations.hpp"

using namespace supmech;

namespace {

void check_all(const std::vector<ExactCheck>& checks) {
  for (const auto& c : checks) {
    INFO(c.id, ": expected ", c.expected, ", got ", c.got);
    CHECK(c.ok);
  }
}

}  // namespace

TEST_CASE("builtin presentation lookup") {
  CHECK(presentation_from_name("galilei-extended")->ngens() == 11);
  CHECK(presentation_from_name("galilei-reduced")->ngens() == 10);
  CHECK(presentation_from_name("ccr-spin")->ngens() == 9);
  CHECK(presentation_from_name("grassmann:5")->ngens() == 5);
  CHECK_THROWS_AS(presentation_from_name("grassmann:x"), Error);
  CHECK_THROWS_AS(presentation_from_name("grassmann:0"), Error);
  CHECK_THROWS_AS(presentation_from_name("nope"), Error);
}

TEST_CASE("rotation generators act on vector triples") {
  auto pres = galilei_extended();
  const Presentation* p = pres.get();
  // spot checks straight off the commutator table
  CHECK(supercommutator(parse_expr(p, "J1"), parse_expr(p, "J2")) ==
        parse_expr(p, "i*hbar*J3"));
  CHECK(supercommutator(parse_expr(p, "K1"), parse_expr(p, "H")) ==
        parse_expr(p, "i*hbar*P1"));
  CHECK(supercommutator(parse_expr(p, "K2"), parse_expr(p, "P2")) ==
        parse_expr(p, "i*hbar*M"));
  CHECK(supercommutator(parse_expr(p, "K1"), parse_expr(p, "P2")).is_zero());
  // M is central
  for (int g = 0; g < p->ngens(); ++g)
    CHECK(supercommutator(NcPoly::generator(p, g), parse_expr(p, "M")).is_zero());
}

TEST_CASE("bracket tables verify against both transcriptions") {
  auto pres = galilei_extended();
  auto pb = verify_galilei_pb_table(pres);
  CHECK(pb.size() == 55);
  check_all(pb);
  auto comm = verify_galilei_comm_table(pres);
  CHECK(comm.size() == 55);
  check_all(comm);
}

TEST_CASE("casimir elements bracket to zero with every generator") {
  auto pres = galilei_extended();
  auto rep = verify_galilei_casimirs(pres);
  CHECK(rep.main.size() == 22);
  CHECK(rep.intermediate.size() == 30);
  check_all(rep.main);
  check_all(rep.intermediate);
}

TEST_CASE("derived observables of the reduced presentation") {
  auto pres = galilei_reduced();
  auto checks = verify_reduced_observables(pres);
  CHECK(checks.size() == 47);
  check_all(checks);
}

TEST_CASE("a deliberately corrupted table is rejected") {
  // flipping one sign in the rotation block breaks the Jacobi identity
  CHECK_THROWS_AS(load_presentation_text(R"(
params hbar
generator A
generator B
generator C
generator E
relation [C,A] = i*B
relation [C,B] = -i*A
relation [A,B] = i*E
relation [C,E] = i*A
)"),
                  Error);
  // a hermitian pair whose commutator is hermitian violates star closure
  CHECK_THROWS_AS(load_presentation_text(R"(
generator A
generator B
relation [B,A] = I
)"),
                  Error);
}

TEST_CASE("presentation files round-trip against the built-ins") {
  auto loaded = load_presentation_text(R"(
# one canonical pair
params hbar
generator Q
generator P
relation [P,Q] = -i*hbar*I
)");
  const Presentation* p = loaded.get();
  CHECK(parse_expr(p, "P*Q") == parse_expr(p, "Q*P - i*hbar*I"));
  CHECK(quantum_pb(parse_expr(p, "P"), parse_expr(p, "Q")) == NcPoly::unit(p));

  auto odd = load_presentation_text(R"(
generator a odd
generator b odd
)");
  CHECK(parse_expr(odd.get(), "b*a") == parse_expr(odd.get(), "-a*b"));
  CHECK(parse_expr(odd.get(), "a*a").is_zero());
}

TEST_CASE("presentation file syntax errors") {
  CHECK_THROWS_AS(load_presentation_text("bogus line"), Error);
  CHECK_THROWS_AS(load_presentation_text(""), Error);
  CHECK_THROWS_AS(load_presentation_text(R"(
generator A
relation [A,A] = I
generator B
)"),
                  Error);  // declarations after relations
  CHECK_THROWS_AS(load_presentation_text(R"(
generator A
generator B
relation [A,C] = I
)"),
                  Error);  // unknown generator
  CHECK_THROWS_AS(load_presentation_text(R"(
generator A
generator B
relation [B,A] = A*B
)"),
                  Error);  // relation value of degree 2
}
