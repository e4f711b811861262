"""Domain types, admissibility rules and canonical forms for invariant tuples.

An invariant tuple is the classification datum

    {b; epsilon, g, (f, k1), (t, k2), (s, k3); (alpha_i, beta_i); r-list; q-list}

of a closed Alexandrov 3-space with an isometric local circle action.  All
values here are immutable; every function is pure.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from enum import Enum
from math import gcd
from typing import Iterable

from .errors import NotAdmissible

__all__ = [
    "EpsilonClass",
    "Regime",
    "SeifertPair",
    "BlockCensus",
    "SingularDistribution",
    "ObstructionTerm",
    "InvariantTuple",
    "Violation",
    "ValidationReport",
    "FiberSpaceSummary",
    "RULES",
    "b_regime",
    "validate",
    "canonicalize",
    "is_canonical",
    "equivalent",
    "singular_point_count",
    "fiber_space_summary",
    "absorb_empty_sf_blocks",
    "sort_key",
]


class EpsilonClass(str, Enum):
    """Weak-equivalence class of the circle bundle over the principal stratum."""

    O1 = "o1"
    O2 = "o2"
    N1 = "n1"
    N2 = "n2"
    N3 = "n3"
    N4 = "n4"
    O = "o"
    N = "n"

    @property
    def orientable(self) -> bool:
        return self in _ORIENTABLE

    @property
    def genus_floor(self) -> int:
        return _GENUS_FLOOR[self]

    @property
    def requires_twisting(self) -> bool:
        """True for the collapsed classes ``o`` and ``n`` (k > 0 only)."""
        return self in (EpsilonClass.O, EpsilonClass.N)

    @classmethod
    def parse(cls, value) -> "EpsilonClass | None":
        if isinstance(value, cls):
            return value
        try:
            return cls(value)
        except ValueError:
            return None


EPSILON_ORDER = tuple(EpsilonClass)
_EPS_INDEX = {e: i for i, e in enumerate(EPSILON_ORDER)}
_ORIENTABLE = frozenset({EpsilonClass.O1, EpsilonClass.O2, EpsilonClass.O})
_GENUS_FLOOR = {
    EpsilonClass.O1: 0,
    EpsilonClass.O2: 1,
    EpsilonClass.N1: 1,
    EpsilonClass.N2: 1,
    EpsilonClass.N3: 2,
    EpsilonClass.N4: 3,
    EpsilonClass.O: 0,
    EpsilonClass.N: 1,
}
# Classes whose b is reduced mod 2 (or killed by an alpha = 2 fiber).
_MOD_TWO_CLASSES = frozenset(
    {EpsilonClass.O2, EpsilonClass.N1, EpsilonClass.N3, EpsilonClass.N4}
)


class Regime(str, Enum):
    FORCED_ZERO = "forced_zero"
    MOD_TWO = "mod_two"
    FREE = "free"


@dataclass(frozen=True, order=True)
class SeifertPair:
    """Seifert invariants (alpha, beta) of one exceptional fiber."""

    alpha: int
    beta: int

    def __iter__(self):
        yield self.alpha
        yield self.beta

    def problems(self) -> list[tuple[str, str]]:
        if not (_is_int(self.alpha) and _is_int(self.beta)):
            return [("seifert_range", f"{self!r}: entries must be integers")]
        out = []
        if self.alpha < 2 or not 0 < self.beta < self.alpha:
            out.append(
                ("seifert_range", f"({self.alpha},{self.beta}): need alpha >= 2 and 0 < beta < alpha")
            )
        if gcd(self.alpha, self.beta) != 1:
            out.append(("seifert_coprime", f"({self.alpha},{self.beta}): gcd is {gcd(self.alpha, self.beta)}"))
        return out

    @property
    def is_valid(self) -> bool:
        return not self.problems()


@dataclass(frozen=True)
class BlockCensus:
    """Component counts: F (f, twisted k1), SE (t, k2) and SF (s, k3)."""

    f: int = 0
    k1: int = 0
    t: int = 0
    k2: int = 0
    s: int = 0
    k3: int = 0

    @property
    def k(self) -> int:
        return self.k1 + self.k2 + self.k3


@dataclass(frozen=True)
class SingularDistribution:
    """Singular-point counts of the simple (r) and twisted (q) SF-blocks."""

    r: tuple[int, ...] = ()
    q: tuple[int, ...] = ()

    @property
    def total(self) -> int:
        return sum(self.r) + sum(self.q)


@dataclass(frozen=True)
class ObstructionTerm:
    value: int
    regime: Regime

    def reduced(self) -> "ObstructionTerm":
        if self.regime is Regime.MOD_TWO:
            return ObstructionTerm(self.value % 2, self.regime)
        return self


def b_regime(epsilon, f: int, t: int, s: int, seifert: Iterable[SeifertPair]) -> Regime:
    """Regime of the obstruction integer b given the rest of the tuple.

    Any fixed-point boundary component (F, SE or SF) forces b = 0.  Otherwise
    the classes o2, n1, n3, n4 carry b mod 2, and b vanishes outright once
    some exceptional fiber has alpha = 2.  All other cases leave b free.
    """
    if f + t + s > 0:
        return Regime.FORCED_ZERO
    if epsilon in _MOD_TWO_CLASSES:
        if any(p.alpha == 2 for p in seifert):
            return Regime.FORCED_ZERO
        return Regime.MOD_TWO
    return Regime.FREE


@dataclass(frozen=True)
class InvariantTuple:
    """One classification datum.  Construction never validates; use :func:`validate`.

    Prefer :meth:`build`, which takes flat fields and derives the regime of b.
    """

    b: ObstructionTerm
    epsilon: EpsilonClass
    g: int
    census: BlockCensus
    seifert: tuple[SeifertPair, ...]
    singular: SingularDistribution

    @classmethod
    def build(
        cls,
        *,
        b: int = 0,
        epsilon: EpsilonClass | str = EpsilonClass.O1,
        g: int = 0,
        f: int = 0,
        k1: int = 0,
        t: int = 0,
        k2: int = 0,
        s: int = 0,
        k3: int = 0,
        seifert: Iterable = (),
        r: Iterable[int] = (),
        q: Iterable[int] = (),
        regime: Regime | str | None = None,
    ) -> "InvariantTuple":
        eps = EpsilonClass.parse(epsilon) or epsilon
        pairs = tuple(p if isinstance(p, SeifertPair) else SeifertPair(*p) for p in seifert)
        if regime is None:
            regime = _safe_regime(eps, f, t, s, pairs)
        return cls(
            b=ObstructionTerm(b, Regime(regime)),
            epsilon=eps,
            g=g,
            census=BlockCensus(f, k1, t, k2, s, k3),
            seifert=pairs,
            singular=SingularDistribution(tuple(r), tuple(q)),
        )

    def fields(self) -> dict:
        """Flat field dictionary in document key order (b as a plain integer)."""
        c = self.census
        return {
            "b": self.b.value,
            "epsilon": self.epsilon,
            "g": self.g,
            "f": c.f,
            "k1": c.k1,
            "t": c.t,
            "k2": c.k2,
            "s": c.s,
            "k3": c.k3,
            "seifert": self.seifert,
            "r": self.singular.r,
            "q": self.singular.q,
        }

    def replace(self, **changes) -> "InvariantTuple":
        """Copy with flat fields changed; the regime of b is re-derived."""
        flat = self.fields()
        flat.update(changes)
        return InvariantTuple.build(**flat)

    # shorthand accessors
    f = property(lambda self: self.census.f)
    k1 = property(lambda self: self.census.k1)
    t = property(lambda self: self.census.t)
    k2 = property(lambda self: self.census.k2)
    s = property(lambda self: self.census.s)
    k3 = property(lambda self: self.census.k3)
    k = property(lambda self: self.census.k)
    n = property(lambda self: len(self.seifert))
    r = property(lambda self: self.singular.r)
    q = property(lambda self: self.singular.q)

    @property
    def boundary_count(self) -> int:
        """Boundary components of the cut-open base: f + t + n + s."""
        return self.f + self.t + self.n + self.s


def _safe_regime(eps, f, t, s, pairs) -> Regime:
    try:
        return b_regime(eps, f, t, s, [p for p in pairs if _is_int(p.alpha)])
    except TypeError:
        return Regime.FREE


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


@dataclass(frozen=True)
class Violation:
    rule: str
    message: str

    def __str__(self) -> str:
        return f"{self.rule}: {self.message}"


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Violation, ...] = ()
    coercions: tuple[str, ...] = ()
    subject: InvariantTuple | None = None

    @property
    def rules(self) -> set[str]:
        return {v.rule for v in self.violations}

    def __bool__(self) -> bool:
        return self.ok


#: Rule identifiers a report can carry.
RULES = (
    "epsilon_tag",
    "genus_range",
    "count_range",
    "k_bounds",
    "k_parity",
    "epsilon_k",
    "genus_floor",
    "closed_k",
    "seifert_range",
    "seifert_coprime",
    "singular_length",
    "singular_even",
    "singular_positive",
    "b_regime",
)


def absorb_empty_sf_blocks(tup: InvariantTuple) -> tuple[InvariantTuple, list[str]]:
    """Lenient normalization: an SF-block with 0 singular points is an F-block.

    Each 0 in the r-list turns one simple SF-block into a simple F-block; each
    0 in the q-list turns one twisted SF-block into a twisted F-block.
    """
    r, q = tup.singular.r, tup.singular.q
    zr = sum(1 for x in r if x == 0)
    zq = sum(1 for x in q if x == 0)
    if not (zr or zq):
        return tup, []
    notes = []
    if zr:
        notes.append(f"absorbed {zr} empty simple SF-block(s) into simple F-blocks")
    if zq:
        notes.append(f"absorbed {zq} empty twisted SF-block(s) into twisted F-blocks")
    out = tup.replace(
        f=tup.f + zr + zq,
        k1=tup.k1 + zq,
        s=tup.s - zr - zq,
        k3=tup.k3 - zq,
        r=tuple(x for x in r if x != 0),
        q=tuple(x for x in q if x != 0),
    )
    return out, notes


def validate(tup: InvariantTuple, *, lenient: bool = False) -> ValidationReport:
    """Check every admissibility rule and report all violations.

    With ``lenient=True`` zero entries of the r/q lists are first absorbed
    via :func:`absorb_empty_sf_blocks`; the report then records the coercion
    and carries the coerced tuple.
    """
    coercions: list[str] = []
    if lenient:
        try:
            tup, coercions = absorb_empty_sf_blocks(tup)
        except TypeError:
            pass
    out: list[Violation] = []

    def bad(rule, msg):
        out.append(Violation(rule, msg))

    eps = EpsilonClass.parse(tup.epsilon)
    if eps is None:
        bad("epsilon_tag", f"unknown class {tup.epsilon!r}")

    g = tup.g
    if not _is_int(g) or g < 0:
        bad("genus_range", f"g must be a non-negative integer, got {g!r}")
        g = None

    c = tup.census
    counts = dataclasses.asdict(c)
    counts_ok = True
    for name, value in counts.items():
        if not _is_int(value) or value < 0:
            bad("count_range", f"{name} must be a non-negative integer, got {value!r}")
            counts_ok = False

    pairs_ok = all(isinstance(p, SeifertPair) for p in tup.seifert)
    if not pairs_ok:
        bad("seifert_range", "entries must be SeifertPair values")
    else:
        for p in tup.seifert:
            for rule, msg in p.problems():
                bad(rule, msg)

    if counts_ok:
        for sub, tot, label in ((c.k1, c.f, "k1 <= f"), (c.k2, c.t, "k2 <= t"), (c.k3, c.s, "k3 <= s")):
            if sub > tot:
                bad("k_bounds", f"{label} fails ({sub} > {tot})")
        k = c.k
        if k % 2:
            bad("k_parity", f"k = k1 + k2 + k3 = {k} is odd")
        if eps is not None:
            if k > 0 and not eps.requires_twisting:
                bad("epsilon_k", f"k = {k} > 0 requires class o or n, got {eps.value}")
            elif k == 0 and eps.requires_twisting:
                bad("epsilon_k", f"class {eps.value} requires k > 0")
        if c.f + c.t + len(tup.seifert) + c.s == 0 and k != 0:
            bad("closed_k", "closed base (no boundary components) forces k = 0")

    if eps is not None and g is not None and g < eps.genus_floor:
        bad("genus_floor", f"class {eps.value} needs g >= {eps.genus_floor}, got {g}")

    _check_singular(tup.singular, c, counts_ok, bad)

    _check_b(tup, eps, counts_ok and pairs_ok, bad)

    ok = not out
    if ok:
        assert (tup.census.k > 0) == tup.epsilon.requires_twisting
    return ValidationReport(ok, tuple(out), tuple(coercions), tup)


def _check_singular(sd: SingularDistribution, c: BlockCensus, counts_ok: bool, bad) -> None:
    if not isinstance(sd.r, tuple) or not isinstance(sd.q, tuple):
        bad("singular_length", "r and q must be tuples")
        return
    if counts_ok:
        if len(sd.r) != c.s - c.k3:
            bad("singular_length", f"r-list has {len(sd.r)} entries, expected s - k3 = {c.s - c.k3}")
        if len(sd.q) != c.k3:
            bad("singular_length", f"q-list has {len(sd.q)} entries, expected k3 = {c.k3}")
    for name, seq in (("r", sd.r), ("q", sd.q)):
        for x in seq:
            if not _is_int(x):
                bad("singular_even", f"{name}-entry {x!r} is not an integer")
            elif x % 2:
                bad("singular_even", f"{name}-entry {x} is odd")
            elif x < 2:
                bad("singular_positive", f"{name}-entry {x} < 2 (zero entries need lenient mode)")


def _check_b(tup: InvariantTuple, eps, inputs_ok: bool, bad) -> None:
    b = tup.b
    if not isinstance(b, ObstructionTerm) or not _is_int(b.value):
        bad("b_regime", f"b must be an integer obstruction term, got {b!r}")
        return
    if not inputs_ok or eps is None:
        return
    c = tup.census
    expected = b_regime(eps, c.f, c.t, c.s, tup.seifert)
    if Regime(b.regime) is not expected:
        bad("b_regime", f"b is carried as {Regime(b.regime).value} but the tuple puts it in {expected.value}")
    if expected is Regime.FORCED_ZERO and b.value != 0:
        bad("b_regime", f"b must be 0 here, got {b.value}")
    elif expected is Regime.MOD_TWO and b.value not in (0, 1):
        bad("b_regime", f"b is taken mod 2 here and must be 0 or 1, got {b.value}")


def _require_valid(tup: InvariantTuple) -> None:
    report = validate(tup)
    if not report.ok:
        raise NotAdmissible(report)


def canonicalize(tup: InvariantTuple) -> InvariantTuple:
    """Sorted representative of an admissible tuple.

    Raises :class:`NotAdmissible` on invalid input.
    """
    _require_valid(tup)
    return _canonical(tup)


def _canonical(tup: InvariantTuple) -> InvariantTuple:
    return InvariantTuple(
        b=tup.b.reduced(),
        epsilon=EpsilonClass(tup.epsilon),
        g=tup.g,
        census=tup.census,
        seifert=tuple(sorted(tup.seifert)),
        singular=SingularDistribution(tuple(sorted(tup.singular.r)), tuple(sorted(tup.singular.q))),
    )


def is_canonical(tup: InvariantTuple) -> bool:
    return validate(tup).ok and _canonical(tup) == tup


def equivalent(a: InvariantTuple, b: InvariantTuple) -> bool:
    """Equivariant equivalence of the underlying spaces: equal canonical forms."""
    return canonicalize(a) == canonicalize(b)


def singular_point_count(tup: InvariantTuple) -> int:
    """Number 2r of topologically singular points."""
    _require_valid(tup)
    return tup.singular.total


@dataclass(frozen=True)
class FiberSpaceSummary:
    genus: int
    orientable: bool
    boundary_circle_count: int
    interior_exceptional_count: int
    euler_characteristic: int


def fiber_space_summary(tup: InvariantTuple) -> FiberSpaceSummary:
    _require_valid(tup)
    boundary = tup.f + tup.t + tup.s
    orientable = tup.epsilon.orientable
    handles = 2 * tup.g if orientable else tup.g
    return FiberSpaceSummary(
        genus=tup.g,
        orientable=orientable,
        boundary_circle_count=boundary,
        interior_exceptional_count=tup.n,
        euler_characteristic=2 - handles - boundary,
    )


def sort_key(tup: InvariantTuple) -> tuple:
    """Total order on canonical tuples, field by field in document key order.

    epsilon compares by its position in o1, o2, n1, n2, n3, n4, o, n; the
    Seifert list, r-list and q-list compare lexicographically as sequences.
    """
    c = tup.census
    return (
        tup.b.value,
        _EPS_INDEX[tup.epsilon],
        tup.g,
        c.f, c.k1, c.t, c.k2, c.s, c.k3,
        tuple((p.alpha, p.beta) for p in tup.seifert),
        tup.singular.r,
        tup.singular.q,
    )
