"""Symbolic checks for higher distributivity cubes and derivations of the mod 2 Steenrod algebra."""

from ._backend import BACKEND
from .cube import Bit, Code, dim_of, enumerate_codes, is_face_of, meet, proper_codes, specialize
from .derivations import (
    GeneratorDerivation,
    LinearMap,
    compose,
    extend_leibniz,
    kappa_squared,
    kappa_squared_generators,
    kristensen_kappa,
    parse_table,
    verify_derivation_property,
    verify_well_defined,
)
from .faces import (
    DistributorTerm,
    FaceLabel,
    IntervalSum,
    ObstructionTable,
    WedgeConstant,
    check_face_compatibility,
    check_universality,
    check_wedge,
    face_label,
    obstruction_map,
    partition_blocks,
    restrict_label,
    wedge_collapse,
)
from .report import Counterexample, VerificationReport
from .steenrod import (
    GrammarError,
    SteenrodElement,
    adem_expand,
    admissible_basis,
    multiply,
    normalize,
)

__version__ = "0.1.0"
