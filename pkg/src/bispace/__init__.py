"""Semi-open structure, sg*-closed sets and pairwise semi-separation in bispaces."""

from __future__ import annotations

from .axioms import (
    AxiomProfile,
    axiom_profile,
    condition_C,
    is_pairwise_semi_door,
    is_pairwise_semi_R0,
    is_pairwise_semi_symmetric,
    is_pairwise_semi_T0,
    is_pairwise_semi_T1,
    is_pairwise_semi_Tw,
    is_pairwise_strongly_semi_symmetric,
    sc_equals_so,
)
from .kappa import (
    Bispace,
    Explicit,
    InvalidFamily,
    Schema,
    Violation,
    closure,
    enumerate_sigma_structures,
    finite_bispace,
    interior,
    is_closed,
    is_open,
    validate,
)
from .semi import (
    are_semi_separated,
    is_semi_closed,
    is_semi_open,
    semi_closure,
    semi_derived,
    semi_interior,
    semi_kernel,
    semi_open_family,
)
from .sgstar import (
    InvariantViolation,
    SgIndex,
    g_family,
    g_prime_family,
    is_sg_star_closed,
    is_sg_star_open,
    sg_star_closure,
    sg_star_witness,
    star_semi_open_family,
)
from .universe import (
    Abstract,
    Bulk,
    CoFinite,
    ExplicitSmall,
    FiniteMask,
    FiniteUniverse,
    Indeterminate,
    SymbolicUniverse,
    UniverseError,
    complement,
    intersect,
    union,
)

__version__ = "0.1.0"
