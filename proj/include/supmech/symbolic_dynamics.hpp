#pragma once

#include <string>
#include <vector>

#include "supmech/ncpoly.hpp"

namespace supmech {

// Formal Heisenberg evolution A(t) = sum_k (t^k/k!) {H,.}^k A, where the
// bracket is the quantum Poisson bracket and t is the formal parameter with
// index t_param. The iterated brackets must vanish identically within k_max
// steps; otherwise the series does not terminate and an Error is thrown.
NcPoly heisenberg_evolve(const NcPoly& a, const NcPoly& h, int t_param,
                         int k_max = 64);

struct ConservationCheck {
  std::string name;
  std::string residual;  // canonical form of dG/dt + {H,G}
  bool conserved = false;
};

// Checks dG/dt + {H,G} = 0 for each named symbol G (possibly explicitly
// dependent on the formal time parameter).
std::vector<ConservationCheck> conservation_check(
    const NcPoly& h, const std::vector<std::pair<std::string, NcPoly>>& symbols,
    int t_param);

// The stock free-particle conservation suite over the ccr-spin presentation:
// orbital angular momentum, momentum, the boost combinations m X_i - P_i t,
// energy, and the central mass element (11 entries).
std::vector<ConservationCheck> free_particle_conservation(const PresPtr& pres);

}  // namespace supmech
