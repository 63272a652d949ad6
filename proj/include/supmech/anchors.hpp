#pragma once

#include <array>
#include <string_view>

// Stable identifiers for every class of check the verification suites emit.
// Reports key their entries on these anchors, and the acceptance harness
// selects entries by anchor rather than by parsing free-form ids, so the
// two sides cannot drift apart silently.

namespace supmech::anchor {

inline constexpr std::string_view galilei_pair_bracket = "galilei/pair-bracket";
inline constexpr std::string_view galilei_pair_commutator = "galilei/pair-commutator";
inline constexpr std::string_view galilei_casimir_bracket = "galilei/casimir-bracket";
inline constexpr std::string_view galilei_boost_vector = "galilei/boost-vector";
inline constexpr std::string_view galilei_reduced_identity = "galilei/reduced-identity";

inline constexpr std::string_view noether_free_invariant = "noether/free-invariant";

inline constexpr std::string_view grassmann_unique_state = "grassmann/unique-state";
inline constexpr std::string_view grassmann_density_form = "grassmann/density-form";
inline constexpr std::string_view grassmann_moments = "grassmann/vanishing-moments";
inline constexpr std::string_view grassmann_cc_witness = "grassmann/cc-witness";
inline constexpr std::string_view grassmann_cc_separation = "grassmann/cc-separation";

inline constexpr std::string_view gns_state_axioms = "gns/state-axioms";
inline constexpr std::string_view gns_dimension = "gns/dimension";
inline constexpr std::string_view gns_irreducible = "gns/irreducible";
inline constexpr std::string_view gns_reconstruction = "gns/reconstruction";
inline constexpr std::string_view gns_representation = "gns/representation";
inline constexpr std::string_view gns_purity_commutant = "gns/purity-commutant";
inline constexpr std::string_view gns_compression_state = "gns/compression-state";
inline constexpr std::string_view gns_compression_pure = "gns/compression-pure";
inline constexpr std::string_view gns_compression_intertwiner = "gns/compression-intertwiner";
inline constexpr std::string_view sector_faithful = "sectors/faithful";
inline constexpr std::string_view sector_count = "sectors/count";
inline constexpr std::string_view sector_dims = "sectors/dims";
inline constexpr std::string_view sector_center_commutes = "sectors/center-commutes";
inline constexpr std::string_view sector_projection_sum = "sectors/projection-sum";

inline constexpr std::string_view evolve_norm = "evolve/norm";
inline constexpr std::string_view evolve_width_law = "evolve/width-law";
inline constexpr std::string_view evolve_drift = "evolve/drift";
inline constexpr std::string_view evolve_boundary_mass = "evolve/boundary-mass";
inline constexpr std::string_view evolve_return_fidelity = "evolve/return-fidelity";
inline constexpr std::string_view evolve_energy_drift = "evolve/energy-drift";

inline constexpr std::string_view localize_additivity = "localize/additivity";
inline constexpr std::string_view localize_completeness = "localize/completeness";
inline constexpr std::string_view localize_covariance = "localize/covariance";
inline constexpr std::string_view localize_half_line = "localize/half-line";

inline constexpr std::string_view weyl_translation_group = "weyl/translation-group";
inline constexpr std::string_view weyl_boost_group = "weyl/boost-group";
inline constexpr std::string_view weyl_inverse = "weyl/inverse";
inline constexpr std::string_view weyl_commutation_phase = "weyl/commutation-phase";

inline constexpr std::string_view wigner_mass = "wigner/mass";
inline constexpr std::string_view wigner_closed_form = "wigner/closed-form";
inline constexpr std::string_view wigner_marginal_x = "wigner/marginal-x";
inline constexpr std::string_view wigner_marginal_p = "wigner/marginal-p";
inline constexpr std::string_view wigner_purity = "wigner/purity";
inline constexpr std::string_view wigner_born_pairing = "wigner/born-pairing";

inline constexpr std::string_view star_commutator_series = "star/commutator-series";
inline constexpr std::string_view star_commutator_quadrature = "star/commutator-quadrature";
inline constexpr std::string_view star_remainder_slope = "star/remainder-slope";
inline constexpr std::string_view star_remainder_floor = "star/remainder-floor";

inline constexpr std::string_view climit_transport_gap = "climit/transport-gap";
inline constexpr std::string_view climit_moment_gap = "climit/moment-gap";
inline constexpr std::string_view climit_period_return = "climit/period-return";
inline constexpr std::string_view climit_mass = "climit/mass";
inline constexpr std::string_view climit_energy_drift = "climit/energy-drift";
inline constexpr std::string_view climit_hbar_slope = "climit/hbar-slope";
inline constexpr std::string_view climit_hbar_monotone = "climit/hbar-monotone";

inline constexpr std::string_view suite_error = "suite/error";

// Every anchor a suite may emit; the report tests hold emitted entries to
// this list.
inline constexpr std::array<std::string_view, 57> all = {
    galilei_pair_bracket,     galilei_pair_commutator,
    galilei_casimir_bracket,  galilei_boost_vector,
    galilei_reduced_identity, noether_free_invariant,
    grassmann_unique_state,   grassmann_density_form,
    grassmann_moments,        grassmann_cc_witness,
    grassmann_cc_separation,  gns_state_axioms,
    gns_dimension,            gns_irreducible,
    gns_reconstruction,       gns_representation,
    gns_purity_commutant,     gns_compression_state,
    gns_compression_pure,     gns_compression_intertwiner,
    sector_faithful,          sector_count,
    sector_dims,              sector_center_commutes,
    sector_projection_sum,    evolve_norm,
    evolve_width_law,         evolve_drift,
    evolve_boundary_mass,     evolve_return_fidelity,
    evolve_energy_drift,      localize_additivity,
    localize_completeness,    localize_covariance,
    localize_half_line,       weyl_translation_group,
    weyl_boost_group,         weyl_inverse,
    weyl_commutation_phase,   wigner_mass,
    wigner_closed_form,       wigner_marginal_x,
    wigner_marginal_p,        wigner_purity,
    wigner_born_pairing,      star_commutator_series,
    star_commutator_quadrature, star_remainder_slope,
    star_remainder_floor,     climit_transport_gap,
    climit_moment_gap,        climit_period_return,
    climit_mass,              climit_energy_drift,
    climit_hbar_slope,        climit_hbar_monotone,
    suite_error,
};

}  // namespace supmech::anchor
