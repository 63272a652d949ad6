#pragma once

#include <string>

#include "supmech/presentation.hpp"

namespace supmech {

// Centrally extended Galilei generators J1..J3, K1..K3, P1..P3, H, M over the
// parameter hbar. M is central; the nonzero commutators are
//   [J_i,J_j] = i hbar eps_ijk J_k     [K_i,H]   = i hbar P_i
//   [J_i,K_j] = i hbar eps_ijk K_k     [K_i,P_j] = i hbar delta_ij M
//   [J_i,P_j] = i hbar eps_ijk P_k
PresPtr galilei_extended();

// Same algebra with the central element specialized to m times the unit,
// dropping M as a generator; parameters hbar and m.
PresPtr galilei_reduced();

// Position/momentum pairs with internal angular momentum: X1..X3, P1..P3,
// S1..S3 over hbar, m, t, s (t and s are formal evolution parameters).
// [X_i,P_j] = i hbar delta_ij, [S_i,S_j] = i hbar eps_ijk S_k, S commutes
// with X and P.
PresPtr ccr_spin();

// Grassmann algebra on n anticommuting hermitian generators th1..thn.
PresPtr grassmann(int n);

// Resolves "galilei-extended", "galilei-reduced", "ccr-spin", "grassmann:<n>".
PresPtr presentation_from_name(const std::string& name);

// Declarative presentation files: comment lines start with '#'; then
//   params <name>...
//   generator <name> [odd]
//   relation [<gen>,<gen>] = <expression>
// with every params/generator line preceding the first relation. Relation
// right-hand sides must reduce to degree <= 1. Unlisted pairs supercommute.
PresPtr load_presentation_text(const std::string& text);
PresPtr load_presentation_file(const std::string& path);

}  // namespace supmech
