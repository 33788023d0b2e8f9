"""Numerical semigroups generated by compound sequences."""
from .config import Budget
from .core import (
    CompoundSequence,
    DigitExpansion,
    SuitablePair,
    build_sequence,
    digit_expand,
    is_representable,
    normalize,
    power,
    project,
    reverse,
    sigma,
    validate_suitable,
)
from .errors import (
    BudgetExceeded,
    GcdViolation,
    GenusTooSmall,
    IndexOutOfRange,
    InternalError,
    LengthMismatch,
    PerfectPowerViolation,
    SemigroupError,
    ValidationError,
)
from .identity import tuenter_check, u_j_zero
from .semigroup import AperySet, SemigroupSummary, apery_set, frobenius_closed, gaps, summarize
from .sylvester import (
    BernoulliCache,
    bernoulli,
    s0_closed,
    s_bernoulli,
    s_closed,
    s_enumerated,
    s_geometric,
    supersymmetric_summary,
)
from .weierstrass import TowerSpec, WeightReport, q_weight, q_weight_geometric, validate_tower

__version__ = "0.1.0"
