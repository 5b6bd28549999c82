"""Reduced minimal models of elliptic curves over Q.

Exact-arithmetic tools for Weierstrass invariants, signature minimization,
the Laska-Kraus-Connell reduction, congruence classification of the reduced
minimal model, Mazur torsion families, and distribution reports over curve
databases.
"""

from .curves import (
    INFINITY,
    RationalPoint,
    ReductionType,
    Signature,
    WeierstrassModel,
    apply_isomorphism,
    compute_invariants,
    point_add,
    point_mul,
    point_neg,
    point_order,
    reduction_type,
)
from .families import (
    FamilyParameters,
    TorsionStructure,
    build_model,
    family_signature,
    validate_params,
)
from .minimal import (
    CongruenceProfile,
    RmmClass,
    allowed_indices_for_reduction,
    congruence_profile,
    kraus_admissible,
    lkc_reduce,
    minimize,
    reduced_model,
    rmm_index,
)
from .classify import (
    ResidueClassification,
    SweepReport,
    allowed_rmm,
    c2c2_symbolic_check,
    reduction_cross_check,
    residue_classification,
    sweep_verify,
)
from .dataset import (
    CurveRecord,
    DistributionReport,
    distribution,
    distribution_from_lines,
    parse_allcurves,
    serialize_record,
    torsion_structure,
    two_torsion_rank,
)

__version__ = "0.1.0"
