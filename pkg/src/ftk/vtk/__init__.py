from .diagrams import (
    ChordDiagram,
    NumberedChordDiagram,
    BraidedGaussDiagram,
    enumerate_cds,
    enumerate_cds_exact,
)
from .maps import catalan, coeff_f, u_embed, v_expand
from .relations import (
    generate_type1,
    generate_type2,
    generate_type3,
    relation_rows,
    relation_basis,
    vtk_dimension,
)
from .braids import (
    VirtualBraidWord,
    braid_word_to_bgd,
    positive_resolution,
    evaluate_invariant,
    braid_relation_crosscheck,
)

__all__ = [
    "ChordDiagram",
    "NumberedChordDiagram",
    "BraidedGaussDiagram",
    "enumerate_cds",
    "enumerate_cds_exact",
    "catalan",
    "coeff_f",
    "u_embed",
    "v_expand",
    "generate_type1",
    "generate_type2",
    "generate_type3",
    "relation_rows",
    "relation_basis",
    "vtk_dimension",
    "VirtualBraidWord",
    "braid_word_to_bgd",
    "positive_resolution",
    "evaluate_invariant",
    "braid_relation_crosscheck",
]
