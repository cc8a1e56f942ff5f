"""Weight hierarchies, parity-check matroids and Stanley-Reisner Betti numbers of linear codes."""

from .gfield import Field, FieldElem, field_new
from .exactla import Mat, column_subset_rank, kernel_basis, rank, rref
from .code import (
    LinearCode,
    Subcode,
    WeightHierarchy,
    check_constant_weight_cor2,
    check_constant_weight_direct,
    check_constant_weight_prop1,
    enumerate_subcodes,
    gen_simplex,
    griesmer_bound,
    predicted_hierarchy_from_level,
    support,
    weight_hierarchy,
)
from .matroid import Matroid, circuits, matroid_weights, n_sets, restriction
from .srres import (
    BettiTable,
    ResolutionSummary,
    betti_table,
    first_betti_cw_test,
    gauss_binomial,
    gauss_identity_residual,
    hochster_betti,
    predict_cw_resolution,
    project_n_graded,
    project_ungraded,
    resolution_summary,
)

__version__ = "0.1.0"
