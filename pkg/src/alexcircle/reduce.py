"""Reduction of an invariant tuple to a closed 3-manifold plus Susp(RP^2) summands.

A space with invariants {b; e, g, (f,k1), (t,k2), (s,k3); pairs; r; q} is
equivalent to M # r Susp(RP^2), where M carries the manifold invariants
{b; e, g, (f+s, k1+k3), (t,k2); pairs} and 2r counts the singular points.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    EpsilonClass,
    InvariantTuple,
    ObstructionTerm,
    SeifertPair,
    ValidationReport,
    b_regime,
    canonicalize,
    validate,
)
from .errors import NotAdmissible, ReductionInconsistency


@dataclass(frozen=True)
class ManifoldInvariants:
    """Invariants of a closed 3-manifold with a local circle action (no SF-blocks)."""

    b: ObstructionTerm
    epsilon: EpsilonClass
    g: int
    f_pairs: tuple[int, int]
    t_pairs: tuple[int, int]
    seifert: tuple[SeifertPair, ...]

    @classmethod
    def from_tuple(cls, tup: InvariantTuple) -> "ManifoldInvariants":
        if tup.s or tup.k3 or tup.r or tup.q:
            raise ValueError("only tuples with s = 0 embed as manifold invariants")
        return cls(tup.b, tup.epsilon, tup.g, (tup.f, tup.k1), (tup.t, tup.k2), tup.seifert)

    def as_tuple(self) -> InvariantTuple:
        """Embed back into :class:`InvariantTuple` with s = k3 = 0 and empty r/q."""
        (f, k1), (t, k2) = self.f_pairs, self.t_pairs
        return InvariantTuple.build(
            b=self.b.value,
            regime=self.b.regime,
            epsilon=self.epsilon,
            g=self.g,
            f=f,
            k1=k1,
            t=t,
            k2=k2,
            seifert=self.seifert,
        )

    def validate(self) -> ValidationReport:
        return validate(self.as_tuple())


@dataclass(frozen=True)
class ReductionResult:
    manifold: ManifoldInvariants
    summand_count: int


def reduce_to_manifold(tup: InvariantTuple) -> ReductionResult:
    """Split off the Susp(RP^2) summands.

    The b-regime of the manifold part is recomputed from its own data.  If
    the recomputed regime rejects the inherited b value the reduction raises
    :class:`ReductionInconsistency` instead of silently zeroing it.
    """
    report = validate(tup)
    if not report.ok:
        raise NotAdmissible(report)
    f2, k12 = tup.f + tup.s, tup.k1 + tup.k3
    regime = b_regime(tup.epsilon, f2, tup.t, 0, tup.seifert)
    manifold = ManifoldInvariants(
        b=ObstructionTerm(tup.b.value, regime),
        epsilon=tup.epsilon,
        g=tup.g,
        f_pairs=(f2, k12),
        t_pairs=(tup.t, tup.k2),
        seifert=tup.seifert,
    )
    _check_manifold(manifold, tup)
    return ReductionResult(manifold, tup.singular.total // 2)


def _check_manifold(manifold: ManifoldInvariants, source: InvariantTuple) -> None:
    report = manifold.validate()
    if not report.ok:
        raise ReductionInconsistency(
            f"manifold part of {source!r} is not admissible: "
            + "; ".join(str(v) for v in report.violations)
        )


def is_manifold(tup: InvariantTuple) -> bool:
    """True iff the space has no topologically singular points (s = 0)."""
    report = validate(tup)
    if not report.ok:
        raise NotAdmissible(report)
    return tup.s == 0


def canonical_reduction(tup: InvariantTuple) -> ReductionResult:
    """Reduction of the canonical form, so equivalent inputs give equal results."""
    return reduce_to_manifold(canonicalize(tup))
