"""Newton polyhedra, NND certification and multiplicity = volume checks."""

from .errors import (
    BudgetExceeded,
    DimensionError,
    DomainError,
    EmptyGenerator,
    FaceKindError,
    GradednessViolation,
    NewtonError,
    NotCoFinite,
    NotPrimary,
    NotPrimaryOrBudget,
    ParseError,
    StabilizationBudgetExceeded,
    UnsupportedDimension,
)
from .family import (
    FamilySpec,
    LimitingBody,
    family_multiplicity,
    limiting_body,
    mult_equals_covol_check,
    noetherian_report,
)
from .geometry import (
    CompactFace,
    Facet,
    StaircasePolyhedron,
    compact_faces,
    covolume,
    hull_staircase,
    minkowski_sum,
    scale,
)
from .monomial import MonomialIdeal, colength, ideal_I0, is_m_primary, monomial_integral_closure
from .nnd import NotNND, closure_if_nnd, compare_multiplicity, is_nnd, is_nnd_face, is_nnd_multiplicity
from .oracle import colength_stable, colength_truncated, multiplicity
from .series import IdealPresentation, LocalElement, newton_polyhedron, power_ideal, product_ideal, support

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "CompactFace",
    "DimensionError",
    "DomainError",
    "EmptyGenerator",
    "FaceKindError",
    "Facet",
    "FamilySpec",
    "GradednessViolation",
    "IdealPresentation",
    "LimitingBody",
    "LocalElement",
    "MonomialIdeal",
    "NewtonError",
    "NotCoFinite",
    "NotNND",
    "NotPrimary",
    "NotPrimaryOrBudget",
    "ParseError",
    "StabilizationBudgetExceeded",
    "StaircasePolyhedron",
    "UnsupportedDimension",
    "closure_if_nnd",
    "colength",
    "colength_stable",
    "colength_truncated",
    "compact_faces",
    "compare_multiplicity",
    "covolume",
    "family_multiplicity",
    "hull_staircase",
    "ideal_I0",
    "is_m_primary",
    "is_nnd",
    "is_nnd_face",
    "is_nnd_multiplicity",
    "limiting_body",
    "minkowski_sum",
    "monomial_integral_closure",
    "mult_equals_covol_check",
    "multiplicity",
    "newton_polyhedron",
    "noetherian_report",
    "power_ideal",
    "product_ideal",
    "scale",
    "support",
]
