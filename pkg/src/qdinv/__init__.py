"""Exact evaluation of the gap-poset quadratic form of <a,b> and the dinv statistics."""

from qdinv.semigroup import (
    Cell,
    GapDiagram,
    ParameterError,
    SemigroupParams,
    antiproj_row,
    arrow,
    gap_diagram,
    poset_leq,
    proj_row,
    proj_stays_in_G,
)
from qdinv.diagrams import (
    DiagramShapeError,
    Subdiagram,
    arm,
    enumerate_subdiagrams,
    leg,
    make_subdiagram,
    upper_boundary,
)
from qdinv.statistics import (
    classify_cells,
    cross_dinv,
    cross_dinv_half,
    dinv,
    double_cross_dinv,
    nested_dinv,
)
from qdinv.forms import GVector, B, B_raw, Q, deficit_B_raw, deficit_Q, kernel_eval
from qdinv.bijections import Arrow, arrow_set, phi_mixed, phi_single, verify_bijection
from qdinv.cone import (
    cone_contains,
    decompose,
    effective_bound_check,
    nested_to_vector,
    truncation_radius,
    vector_to_nested,
)
from qdinv.series import catalan_count, dinv_distribution, z_partial_sum

__version__ = "0.1.0"
