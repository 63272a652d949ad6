#pragma once

#include <string>
#include <vector>

#include "supmech/presentation.hpp"

namespace supmech {

// One exact symbolic comparison. `ok` means computed == expected identically;
// the string forms are canonical renderings for reporting.
struct ExactCheck {
  std::string id;
  std::string expected;
  std::string got;
  bool ok = false;
};

// Quantum Poisson brackets {a,b} = (i/hbar)[a,b] of all unordered generator
// pairs of the extended Galilei presentation against a hand-tabulated
// expectation (55 entries for 11 generators).
std::vector<ExactCheck> verify_galilei_pb_table(const PresPtr& pres);

// The same relations transcribed independently at the commutator level.
std::vector<ExactCheck> verify_galilei_comm_table(const PresPtr& pres);

struct CasimirChecks {
  std::vector<ExactCheck> main;          // {C1,g} and {C2,g} over all generators
  std::vector<ExactCheck> intermediate;  // brackets of generators with B_j
};

// C1 = 2 M H - P^2, B_j = M J_j - eps_jkl K_k P_l, C2 = sum_j B_j^2.
CasimirChecks verify_galilei_casimirs(const PresPtr& pres);

// Identities among derived observables of the reduced presentation:
// X_j = K_j / m, S_j = J_j - eps_jkl X_k P_l, U = H - P^2/(2m).
std::vector<ExactCheck> verify_reduced_observables(const PresPtr& pres);

}  // namespace supmech
