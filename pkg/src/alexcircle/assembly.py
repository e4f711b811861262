"""Assembly plans: the block-gluing recipe that builds a space from its invariants.

A plan lists the base surface (genus g, f + t + n + s boundary circles), the
circle-bundle class (epsilon, k), the obstruction b, and one block per
boundary circle.  Blocks are listed in the fixed kind order

    E < simpleF < twistedF < simpleSE < twistedSE < simpleSF < twistedSF

with parameters ascending inside each kind, and numbered 1, 2, ... in turn.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum

from .core import (
    EpsilonClass,
    InvariantTuple,
    ObstructionTerm,
    Regime,
    SeifertPair,
    canonicalize,
    validate,
)
from .errors import InconsistentPlan


class BlockKind(str, Enum):
    E = "E"
    SIMPLE_F = "simpleF"
    TWISTED_F = "twistedF"
    SIMPLE_SE = "simpleSE"
    TWISTED_SE = "twistedSE"
    SIMPLE_SF = "simpleSF"
    TWISTED_SF = "twistedSF"

    @property
    def twisted(self) -> bool:
        return self in _TWISTED

    @property
    def singular(self) -> bool:
        return self in (BlockKind.SIMPLE_SF, BlockKind.TWISTED_SF)


KIND_ORDER = tuple(BlockKind)
_TWISTED = frozenset({BlockKind.TWISTED_F, BlockKind.TWISTED_SE, BlockKind.TWISTED_SF})


class Route(str, Enum):
    BOUNDARY_GLUING = "boundary_gluing"
    CONNECTED_SUM = "connected_sum"


@dataclass(frozen=True)
class BlockType:
    """A block kind with its parameter: a Seifert pair for E, a singular count for SF."""

    kind: BlockKind
    seifert: SeifertPair | None = None
    singular: int | None = None

    def problems(self) -> list[str]:
        kind = self.kind
        if kind is BlockKind.E:
            if self.seifert is None or self.singular is not None:
                return ["E block must carry exactly a Seifert pair"]
            return [msg for _, msg in self.seifert.problems()]
        if kind.singular:
            x = self.singular
            if self.seifert is not None or not isinstance(x, int) or isinstance(x, bool):
                return [f"{kind.value} block must carry an integer singular count"]
            if x < 2 or x % 2:
                return [f"{kind.value} block singular count {x} is not a positive even integer"]
            return []
        if self.seifert is not None or self.singular is not None:
            return [f"{kind.value} block takes no parameter"]
        return []


@dataclass(frozen=True)
class BlockSpec:
    kind: BlockKind
    boundary_index: int
    seifert: SeifertPair | None = None
    singular: int | None = None

    @property
    def block_type(self) -> BlockType:
        return BlockType(self.kind, self.seifert, self.singular)


@dataclass(frozen=True)
class BaseSurface:
    genus: int
    orientable: bool
    boundary_count: int


@dataclass(frozen=True)
class BundleClass:
    epsilon: EpsilonClass
    k: int


@dataclass(frozen=True)
class AssemblyPlan:
    base: BaseSurface
    bundle: BundleClass
    obstruction: ObstructionTerm
    blocks: tuple[BlockSpec, ...]
    route: Route

    def kind_counts(self) -> dict[BlockKind, int]:
        counts = Counter(b.kind for b in self.blocks)
        return {kind: counts.get(kind, 0) for kind in KIND_ORDER}


def expected_route(f: int, t: int, s: int) -> Route:
    if f + t == 0 and s > 0:
        return Route.CONNECTED_SUM
    return Route.BOUNDARY_GLUING


def build_plan(tup: InvariantTuple) -> AssemblyPlan:
    """Emit the gluing recipe of a valid tuple.  Equal canonical forms give equal plans."""
    c = canonicalize(tup)
    types: list[BlockType] = [BlockType(BlockKind.E, seifert=p) for p in c.seifert]
    types += [BlockType(BlockKind.SIMPLE_F)] * (c.f - c.k1)
    types += [BlockType(BlockKind.TWISTED_F)] * c.k1
    types += [BlockType(BlockKind.SIMPLE_SE)] * (c.t - c.k2)
    types += [BlockType(BlockKind.TWISTED_SE)] * c.k2
    types += [BlockType(BlockKind.SIMPLE_SF, singular=x) for x in c.r]
    types += [BlockType(BlockKind.TWISTED_SF, singular=x) for x in c.q]
    blocks = tuple(
        BlockSpec(bt.kind, i, bt.seifert, bt.singular) for i, bt in enumerate(types, start=1)
    )
    return AssemblyPlan(
        base=BaseSurface(c.g, c.epsilon.orientable, c.boundary_count),
        bundle=BundleClass(c.epsilon, c.k),
        obstruction=c.b,
        blocks=blocks,
        route=expected_route(c.f, c.t, c.s),
    )


def read_off_invariants(plan: AssemblyPlan) -> InvariantTuple:
    """Recover the canonical invariant tuple from a plan.

    Raises :class:`InconsistentPlan` naming every contradiction found, for
    example ``"k odd"`` when the plan holds an odd number of twisted blocks.
    """
    problems: list[str] = []
    indices = sorted(b.boundary_index for b in plan.blocks)
    if indices != list(range(1, plan.base.boundary_count + 1)):
        problems.append(
            f"blocks must cover boundary indices 1..{plan.base.boundary_count} exactly once"
        )
    for blk in plan.blocks:
        for msg in blk.block_type.problems():
            problems.append(f"block at boundary {blk.boundary_index}: {msg}")

    twisted = sum(1 for b in plan.blocks if b.kind.twisted)
    if twisted % 2:
        problems.append("k odd")
    if twisted != plan.bundle.k:
        problems.append(f"bundle has k = {plan.bundle.k} but the plan holds {twisted} twisted blocks")

    eps = EpsilonClass.parse(plan.bundle.epsilon)
    if eps is None:
        problems.append(f"unknown bundle class {plan.bundle.epsilon!r}")
    elif eps.orientable != plan.base.orientable:
        problems.append(f"base orientability {plan.base.orientable} contradicts class {eps.value}")
    if problems:
        raise InconsistentPlan(problems)

    ordered = sorted(plan.blocks, key=lambda b: b.boundary_index)
    counts = plan.kind_counts()
    f = counts[BlockKind.SIMPLE_F] + counts[BlockKind.TWISTED_F]
    t = counts[BlockKind.SIMPLE_SE] + counts[BlockKind.TWISTED_SE]
    s = counts[BlockKind.SIMPLE_SF] + counts[BlockKind.TWISTED_SF]
    if plan.route is not expected_route(f, t, s):
        problems.append(f"route {Route(plan.route).value} does not match the block census")

    tup = InvariantTuple.build(
        b=plan.obstruction.value,
        regime=Regime(plan.obstruction.regime),
        epsilon=eps,
        g=plan.base.genus,
        f=f,
        k1=counts[BlockKind.TWISTED_F],
        t=t,
        k2=counts[BlockKind.TWISTED_SE],
        s=s,
        k3=counts[BlockKind.TWISTED_SF],
        seifert=[b.seifert for b in ordered if b.kind is BlockKind.E],
        r=[b.singular for b in ordered if b.kind is BlockKind.SIMPLE_SF],
        q=[b.singular for b in ordered if b.kind is BlockKind.TWISTED_SF],
    )
    report = validate(tup)
    problems.extend(str(v) for v in report.violations)
    if problems:
        raise InconsistentPlan(problems)
    return canonicalize(tup)
