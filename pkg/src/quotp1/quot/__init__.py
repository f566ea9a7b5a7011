"""Charts, points, Hilb-support and singularity diagnostics for Quot^d(O^r) on P^1."""

from .charts import (
    ChartIndex,
    chart_char_poly,
    chart_ideal,
    chart_ring,
    chart_vars,
    generic_p_matrix,
    partitions,
    reduced_chart_equations,
    xi_chart_map,
)
from .fibers import FiberComponent, MultiplicityEntry, fiber_decompose, multiplicity_profile
from .forms import BinaryForm
from .points import (
    CMatrix,
    CoordinateFrame,
    PlueckerVector,
    QuotPoint,
    change_frame,
    detect_chart,
    expand_point,
    p_matrix_at,
    pluecker_coords,
    point_from_cmatrix,
    to_standard,
)
from .sampling import point_from_action, random_chart, random_invertible, random_point, random_split_point
from .singular import TangentReport, component_at, tangent_report
from .support import annihilates, cayley_hamilton_check, cayley_hamilton_symbolic, frame_form, hilb_support

__all__ = [
    "ChartIndex", "chart_char_poly", "chart_ideal", "chart_ring", "chart_vars", "generic_p_matrix",
    "partitions", "reduced_chart_equations", "xi_chart_map", "FiberComponent", "MultiplicityEntry",
    "fiber_decompose", "multiplicity_profile", "BinaryForm", "CMatrix", "CoordinateFrame",
    "PlueckerVector", "QuotPoint", "change_frame", "detect_chart", "expand_point", "p_matrix_at",
    "pluecker_coords", "point_from_cmatrix", "to_standard", "TangentReport", "component_at",
    "tangent_report", "annihilates", "cayley_hamilton_check", "cayley_hamilton_symbolic",
    "frame_form", "hilb_support", "point_from_action", "random_chart", "random_invertible",
    "random_point", "random_split_point",
]
