"""Picard-lattice computations on del Pezzo surfaces.

Curve classes, cones and Zariski decompositions (:mod:`.surface`), Fujita
invariants and breaking maps (:mod:`.adjoint`), the component census for
rational curves (:mod:`.manin`), and finite-field criteria for inseparable
families (:mod:`.ffcover`).
"""

from .adjoint import (
    AInvariantResult,
    BreakingCase,
    CaseLabel,
    adjoint_analyze,
    breaking_dim_bound,
    classify_breaking_cases,
    fujita_invariant,
)
from .curves import (
    RootBasis,
    ade_type,
    enum_minus1_classes,
    enum_root_classes,
    is_positive_root,
    is_root,
    reflect,
)
from .errors import DelPezzoError
from .lattice import (
    DivisorClass,
    anticanonical,
    arithmetic_genus,
    canonical_class,
    degree,
    exceptional,
    hyperplane,
    intersect,
)
from .manin import (
    ComponentCensus,
    PathologyFlags,
    Tri,
    classify_low_degree,
    component_census,
    conic_classes,
    delta,
    excess_family_predicate,
    expected_dim,
    pathology_from_roots,
)
from .surface import (
    NefDecomposition,
    SurfaceModel,
    ZariskiDecomposition,
    del_pezzo,
    is_nef,
    is_pseudo_effective,
    nef_decompose,
    zariski_decompose,
)

__version__ = "0.1.0"
