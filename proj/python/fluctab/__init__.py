"""Fluctuating tableaux: promotion, evacuation, Bender-Knuth involutions,
jeu de taquin, promotion matrices and permutations, and type-A crystal
operators, backed by the C++ core."""

from ._fluctab import (  # noqa: F401
    FluctabError,
    Tableau,
    antiexcedances,
    bender_knuth,
    bk_promote,
    count_hw_oracle,
    devacuate,
    devacuate_via_jdt,
    enumerate_tableaux,
    epsilon,
    evacuate,
    evacuate_via_jdt,
    extremal_tableau,
    from_json,
    from_text,
    inverse_promote,
    is_highest_weight,
    orbit,
    oscillize,
    promote,
    promote_power,
    promote_via_crystal,
    promote_via_jdt,
    promotion_matrix,
    promotion_permutations,
    raise_to_highest,
    reconstruct_from_permutations,
    reduced_matrices,
    reduced_matrices_via_crystal,
    render_dihedral,
    selftest,
    tau,
    to_json,
    to_text,
    toggle,
    varpi,
    weight_class,
)

__all__ = [name for name in dir() if not name.startswith("_")]
