"""Collapse pieces of Alexandrov 3-spaces collapsing to a surface, read as blocks.

A space collapsing to a surface decomposes into generalized solid tori and
generalized solid Klein bottles over the boundary of the limit, plus a
generalized Seifert part.  Pieces of type N > 0 are SF-blocks carrying 2N
singular points; type-0 pieces are manifold blocks.  A compatible local
circle action exists exactly when the Seifert part has no B(pt) fibers.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .assembly import BlockKind, BlockType
from .core import BlockCensus, EpsilonClass, InvariantTuple, SeifertPair, SingularDistribution
from .errors import IncompatibleCollapse, InvalidDecomposition


class PieceKind(str, Enum):
    GENERALIZED_SOLID_TORUS = "generalized_solid_torus"
    GENERALIZED_SOLID_KLEIN_BOTTLE = "generalized_solid_klein_bottle"
    TYPE0 = "type0"


class Type0Variant(str, Enum):
    D2xS1 = "D2xS1"  # solid torus, core circle of fixed points
    MOxS1 = "MoxS1"
    D2xtS1 = "D2xtS1"  # solid Klein bottle
    MOxtS1 = "MoxtS1"


_TYPE0_BLOCK = {
    Type0Variant.D2xS1: BlockKind.SIMPLE_F,
    Type0Variant.MOxS1: BlockKind.SIMPLE_SE,
    Type0Variant.D2xtS1: BlockKind.TWISTED_F,
    Type0Variant.MOxtS1: BlockKind.TWISTED_SE,
}


@dataclass(frozen=True)
class CollapsePiece:
    kind: PieceKind
    N: int | None = None
    variant: Type0Variant | None = None

    @classmethod
    def solid_torus(cls, N: int) -> "CollapsePiece":
        return cls(PieceKind.GENERALIZED_SOLID_TORUS, N=N)

    @classmethod
    def klein_bottle(cls, N: int) -> "CollapsePiece":
        return cls(PieceKind.GENERALIZED_SOLID_KLEIN_BOTTLE, N=N)

    @classmethod
    def type0(cls, variant: Type0Variant | str) -> "CollapsePiece":
        return cls(PieceKind.TYPE0, variant=Type0Variant(variant))

    def problems(self) -> list[str]:
        if self.kind is PieceKind.TYPE0:
            if not isinstance(self.variant, Type0Variant) or self.N is not None:
                return ["type0 piece needs a variant and no N"]
            return []
        N = self.N
        if not isinstance(N, int) or isinstance(N, bool) or N < 1 or self.variant is not None:
            return [f"{self.kind.value} needs an integer type N >= 1 (type-0 pieces use the variant form)"]
        return []


@dataclass(frozen=True)
class InteriorData:
    """Known invariants of the Seifert part: b, epsilon, genus and exceptional fibers."""

    b: int
    epsilon: EpsilonClass
    g: int
    seifert: tuple[SeifertPair, ...] = ()


@dataclass(frozen=True)
class SeifertPartDescriptor:
    bpt_count: int = 0
    interior: InteriorData | None = None


@dataclass(frozen=True)
class CollapseDecomposition:
    boundary_pieces: tuple[CollapsePiece, ...] = ()
    seifert_part: SeifertPartDescriptor = SeifertPartDescriptor()

    def problems(self) -> list[str]:
        out = []
        for i, piece in enumerate(self.boundary_pieces):
            out.extend(f"piece {i}: {msg}" for msg in piece.problems())
        bpt = self.seifert_part.bpt_count
        if not isinstance(bpt, int) or isinstance(bpt, bool) or bpt < 0:
            out.append(f"bpt_count must be a non-negative integer, got {bpt!r}")
        return out

    def check(self) -> None:
        problems = self.problems()
        if problems:
            raise InvalidDecomposition("; ".join(problems))


def classify_piece(piece: CollapsePiece) -> BlockType:
    """Block type of a boundary piece; type-N pieces carry 2N singular points."""
    if piece.problems():
        raise InvalidDecomposition("; ".join(piece.problems()))
    if piece.kind is PieceKind.GENERALIZED_SOLID_TORUS:
        return BlockType(BlockKind.SIMPLE_SF, singular=2 * piece.N)
    if piece.kind is PieceKind.GENERALIZED_SOLID_KLEIN_BOTTLE:
        return BlockType(BlockKind.TWISTED_SF, singular=2 * piece.N)
    return BlockType(_TYPE0_BLOCK[piece.variant])


def admits_local_action(decomp: CollapseDecomposition) -> bool:
    decomp.check()
    return decomp.seifert_part.bpt_count == 0


class _Undetermined:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "UNDETERMINED"

    def __reduce__(self):
        return (_Undetermined, ())


#: Marker for invariants a collapse decomposition does not determine.
UNDETERMINED = _Undetermined()

_OPEN_SLOTS = ("b", "epsilon", "g", "seifert")


@dataclass(frozen=True)
class PartialTuple:
    """Invariant tuple with the block census fixed and other slots possibly open."""

    census: BlockCensus
    singular: SingularDistribution
    b: object = UNDETERMINED
    epsilon: object = UNDETERMINED
    g: object = UNDETERMINED
    seifert: object = UNDETERMINED

    @property
    def undetermined(self) -> tuple[str, ...]:
        return tuple(name for name in _OPEN_SLOTS if getattr(self, name) is UNDETERMINED)

    @property
    def k_parity_ok(self) -> bool:
        """Whether the fixed twisted-block count is even; no completion can repair it."""
        return self.census.k % 2 == 0

    def complete(self, **fills) -> InvariantTuple:
        """Fill every undetermined slot; determined slots cannot be overridden."""
        open_slots = set(self.undetermined)
        extra = set(fills) - open_slots
        if extra:
            raise ValueError(f"cannot fill determined or unknown slots: {sorted(extra)}")
        missing = open_slots - set(fills)
        if missing:
            raise ValueError(f"completion is missing slots: {sorted(missing)}")
        values = {name: getattr(self, name) for name in _OPEN_SLOTS}
        values.update(fills)
        c = self.census
        return InvariantTuple.build(
            b=values["b"],
            epsilon=values["epsilon"],
            g=values["g"],
            f=c.f, k1=c.k1, t=c.t, k2=c.k2, s=c.s, k3=c.k3,
            seifert=values["seifert"],
            r=self.singular.r,
            q=self.singular.q,
        )


def collapse_to_invariants(decomp: CollapseDecomposition) -> PartialTuple:
    """Synthesize the part of the invariant tuple a decomposition determines.

    Raises :class:`IncompatibleCollapse` when the Seifert part has B(pt) fibers.
    """
    if not admits_local_action(decomp):
        raise IncompatibleCollapse(
            f"incompatible collapse: {decomp.seifert_part.bpt_count} B(pt) fiber(s) present"
        )
    counts = {kind: 0 for kind in BlockKind}
    r, q = [], []
    for piece in decomp.boundary_pieces:
        bt = classify_piece(piece)
        counts[bt.kind] += 1
        if bt.kind is BlockKind.SIMPLE_SF:
            r.append(bt.singular)
        elif bt.kind is BlockKind.TWISTED_SF:
            q.append(bt.singular)
    census = BlockCensus(
        f=counts[BlockKind.SIMPLE_F] + counts[BlockKind.TWISTED_F],
        k1=counts[BlockKind.TWISTED_F],
        t=counts[BlockKind.SIMPLE_SE] + counts[BlockKind.TWISTED_SE],
        k2=counts[BlockKind.TWISTED_SE],
        s=len(r) + len(q),
        k3=len(q),
    )
    singular = SingularDistribution(tuple(sorted(r)), tuple(sorted(q)))
    interior = decomp.seifert_part.interior
    if interior is None:
        return PartialTuple(census, singular)
    return PartialTuple(
        census,
        singular,
        b=interior.b,
        epsilon=EpsilonClass(interior.epsilon),
        g=interior.g,
        seifert=tuple(sorted(interior.seifert)),
    )


def decomposition(pieces: Iterable[CollapsePiece], bpt_count: int = 0, interior=None) -> CollapseDecomposition:
    return CollapseDecomposition(tuple(pieces), SeifertPartDescriptor(bpt_count, interior))
