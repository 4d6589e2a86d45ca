"""Exact fuzzy measure theory on finite universes with discretized grades.

Sigma-algebra generation, measure and outer-measure validation, the
Caratheodory-style extension, positive/negative sets and the Hahn
decomposition, each paired with brute-force checks and witnesses.
"""

__version__ = "0.1.0"

from .caratheodory import (
    ADDITIVE,
    MAX,
    CoverSystem,
    ExtensionResult,
    OuterMeasure,
    extend_measure,
    is_measurable,
    measurable_class,
    measurability_witness,
    outer_from_covers,
    outer_from_measure,
    uniqueness_spot_check,
    validate_outer,
)
from .errors import *  # noqa: F401,F403
from .hahn import (
    ExtractionTrace,
    HahnDecomposition,
    PositivityCertificate,
    check_trace,
    classify,
    extract_positive_subset,
    hahn_decompose,
    hahn_report,
    oracle_hahn,
    oracle_positive_subset,
)
from .lattice import FuzzySet, GradeLattice, Universe, complement, join, leq, make_constant, meet, sup_of
from .measures import (
    FuzzyMeasure,
    SignedMeasure,
    coordinatewise_measure,
    difference_measure,
    linear_measure,
    negate,
    validate_fuzzy_measure,
    validate_signed_measure,
    zero_measure,
)
from .report import ValidationReport, Witness
from .sigma import FuzzyFamily, FuzzySigmaAlgebra, full_cube, generate_algebra, is_algebra, subsets_of
