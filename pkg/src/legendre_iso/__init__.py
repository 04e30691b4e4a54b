"""Legendre elliptic curves over finite fields and their F_q-isomorphism classes."""

from .census import (
    CensusReport,
    ClassPartition,
    HStratification,
    count_fqbar_classes,
    expected_h_counts,
    expected_Nq,
    h_stratify,
    partition_classes,
    run_census,
)
from .curves import (
    LegendreCurve,
    TwoParamCurve,
    WeierstrassCurve,
    b_quantities,
    discriminant,
    j_invariant,
    j_legendre,
    lambda_orbit,
    to_weierstrass,
    two_torsion,
)
from .gf import FieldElement, FieldError, FieldSpec, elements, field_of_order, jacobi, make_field, sqrt
from .iso import (
    IsoWitness,
    TransformParams,
    apply_transform,
    corollary32_iso,
    lemma31_iso,
    simplified_iso_witness,
    table1_fast_iso,
)

__version__ = "0.1.0"
