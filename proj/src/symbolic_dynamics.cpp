#include "supmech/symbolic_dynamics.hpp"

#include "supmech/error.hpp"
#include "supmech/parser.hpp"

namespace supmech {

NcPoly heisenberg_evolve(const NcPoly& a, const NcPoly& h, int t_param,
                         int k_max) {
  const Presentation* p = a.pres();
  require(p != nullptr, "evolving an empty polynomial");
  require(t_param >= 0 && t_param < p->nparams(), "bad time parameter index");
  NcPoly acc = a;
  NcPoly iter = a;
  Rational fact = 1;
  for (int k = 1; k <= k_max; ++k) {
    iter = quantum_pb(h, iter);
    if (iter.is_zero()) return acc;
    fact *= k;
    Laurent tk = Laurent::param_pow(p->nparams(), t_param, k,
                                    GaussRat(Rational(1) / fact));
    acc += iter.scaled(tk);
  }
  throw Error("Heisenberg series did not terminate within " +
              std::to_string(k_max) + " bracket iterations");
}

std::vector<ConservationCheck> conservation_check(
    const NcPoly& h, const std::vector<std::pair<std::string, NcPoly>>& symbols,
    int t_param) {
  std::vector<ConservationCheck> out;
  for (const auto& [name, g] : symbols) {
    NcPoly r = g.param_derivative(t_param) + quantum_pb(h, g);
    out.push_back({name, r.str(), r.is_zero()});
  }
  return out;
}

std::vector<ConservationCheck> free_particle_conservation(const PresPtr& pres) {
  const Presentation* p = pres.get();
  NcPoly h = parse_expr(p, "(P1^2 + P2^2 + P3^2)/(2*m)");
  std::vector<std::pair<std::string, NcPoly>> symbols = {
      {"J1", parse_expr(p, "X2*P3 - X3*P2")},
      {"J2", parse_expr(p, "X3*P1 - X1*P3")},
      {"J3", parse_expr(p, "X1*P2 - X2*P1")},
      {"P1", parse_expr(p, "P1")},
      {"P2", parse_expr(p, "P2")},
      {"P3", parse_expr(p, "P3")},
      {"G1", parse_expr(p, "m*X1 - P1*t")},
      {"G2", parse_expr(p, "m*X2 - P2*t")},
      {"G3", parse_expr(p, "m*X3 - P3*t")},
      {"E", parse_expr(p, "-((P1^2 + P2^2 + P3^2)/(2*m))")},
      {"M", parse_expr(p, "m*I")},
  };
  return conservation_check(h, symbols, p->param_index("t"));
}

}  // namespace supmech
