"""Exact Z transform, Cesaro summation and the complex Z plane over GF(p).

Everything is exact modular arithmetic; divergence of a series is a value,
never an approximation.  The hot kernels run from a compiled extension
when it is built (see ``zgf.kernels.BACKEND``) and from pure Python
otherwise, with identical results.
"""

__version__ = "0.1.0"

from .cesaro import (
    DIVERGENT,
    CesaroVerdict,
    SequenceSpec,
    cesaro_sum,
    detect_period,
    geometric_cesaro,
    is_divergent,
    partial_sums,
)
from .errors import DomainError
from .gf import DEFAULT_TABLE_CEILING, GfElem, Prime, quadratic_residues
from .gi import GiElem
from .groups import (
    SUBGROUP_KINDS,
    OrderCensus,
    element_order,
    enumerate_subgroup,
    find_full_generator,
    find_gs_generator,
    nth_root_element,
    order_census,
    symmetry_set,
)
from .kernels import BACKEND as KERNEL_BACKEND
from .polar import PolarForm, discrete_log, from_polar, to_polar
from .transform import (
    RationalForm,
    TransformTable,
    exponential_closed_form,
    ff_dtft,
    ffzt_eval,
    ffzt_table,
    iffzt,
    iffzt_window,
    lemma1_sum,
    rational_eval,
)
from .zplane import (
    Circle,
    RenderSpec,
    Trajectory,
    ZPlane,
    build_plane,
    order_trajectory,
    render_svg,
    render_text,
    trajectory_radius_pattern,
)

__all__ = [
    "DIVERGENT",
    "DEFAULT_TABLE_CEILING",
    "CesaroVerdict",
    "Circle",
    "DomainError",
    "GfElem",
    "GiElem",
    "KERNEL_BACKEND",
    "OrderCensus",
    "PolarForm",
    "Prime",
    "RationalForm",
    "RenderSpec",
    "SUBGROUP_KINDS",
    "SequenceSpec",
    "Trajectory",
    "TransformTable",
    "ZPlane",
    "build_plane",
    "cesaro_sum",
    "detect_period",
    "discrete_log",
    "element_order",
    "enumerate_subgroup",
    "exponential_closed_form",
    "ff_dtft",
    "ffzt_eval",
    "ffzt_table",
    "find_full_generator",
    "find_gs_generator",
    "from_polar",
    "geometric_cesaro",
    "iffzt",
    "iffzt_window",
    "is_divergent",
    "lemma1_sum",
    "nth_root_element",
    "order_census",
    "order_trajectory",
    "partial_sums",
    "quadratic_residues",
    "rational_eval",
    "render_svg",
    "render_text",
    "symmetry_set",
    "to_polar",
    "trajectory_radius_pattern",
]
