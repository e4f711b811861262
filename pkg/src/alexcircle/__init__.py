"""Invariant calculus for closed Alexandrov 3-spaces with isometric local circle actions."""

from .assembly import AssemblyPlan, BlockKind, BlockSpec, BlockType, Route, build_plan, read_off_invariants
from .collapse import (
    UNDETERMINED,
    CollapseDecomposition,
    CollapsePiece,
    InteriorData,
    PartialTuple,
    SeifertPartDescriptor,
    admits_local_action,
    classify_piece,
    collapse_to_invariants,
)
from .core import (
    BlockCensus,
    EpsilonClass,
    InvariantTuple,
    ObstructionTerm,
    Regime,
    SeifertPair,
    SingularDistribution,
    ValidationReport,
    canonicalize,
    equivalent,
    fiber_space_summary,
    singular_point_count,
    validate,
)
from .enumeration import Bounds, count_classes, enumerate_valid, iter_valid, random_valid
from .errors import (
    AlexcircleError,
    BoundsTooLarge,
    EmptyDomain,
    IncompatibleCollapse,
    InconsistentPlan,
    InvalidDecomposition,
    NotAdmissible,
    ReductionInconsistency,
)
from .reduce import ManifoldInvariants, ReductionResult, is_manifold, reduce_to_manifold

__version__ = "0.1.0"
