"""Bounded census of canonical invariant tuples, plus a seeded random generator.

Census order is the field-by-field order of :func:`alexcircle.core.sort_key`:
b, epsilon (o1, o2, n1, n2, n3, n4, o, n), g, f, k1, t, k2, s, k3, then the
Seifert, r and q lists as sequences.  Tuples are generated directly in that
order, so the census streams without buffering.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb, gcd
from typing import Iterator

from .core import (
    EPSILON_ORDER,
    BlockCensus,
    EpsilonClass,
    InvariantTuple,
    ObstructionTerm,
    Regime,
    SeifertPair,
    SingularDistribution,
    b_regime,
    validate,
)
from .errors import BoundsTooLarge, EmptyDomain

DEFAULT_CAP = 10**7
CAP_ENV = "ALEXCIRCLE_ENUM_CAP"


@dataclass(frozen=True)
class Bounds:
    max_g: int = 0
    max_f: int = 0
    max_t: int = 0
    max_s: int = 0
    max_n: int = 0
    max_alpha: int = 2
    max_singular_entry: int = 2
    max_abs_b: int = 0

    def __post_init__(self):
        for name in ("max_g", "max_f", "max_t", "max_s", "max_n", "max_abs_b"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 0:
                raise ValueError(f"{name} must be a non-negative integer, got {v!r}")
        if not isinstance(self.max_alpha, int) or self.max_alpha < 2:
            raise ValueError(f"max_alpha must be an integer >= 2, got {self.max_alpha!r}")
        e = self.max_singular_entry
        if not isinstance(e, int) or e < 2 or e % 2:
            raise ValueError(f"max_singular_entry must be an even integer >= 2, got {e!r}")

    @property
    def pairs(self) -> tuple[SeifertPair, ...]:
        return _pairs(self.max_alpha)

    @property
    def singular_entries(self) -> tuple[int, ...]:
        return tuple(range(2, self.max_singular_entry + 1, 2))


@lru_cache(maxsize=None)
def _pairs(max_alpha: int) -> tuple[SeifertPair, ...]:
    return tuple(
        SeifertPair(a, b) for a in range(2, max_alpha + 1) for b in range(1, a) if gcd(a, b) == 1
    )


def resolve_cap(cap: int | None = None) -> int:
    if cap is not None:
        return cap
    env = os.environ.get(CAP_ENV)
    return int(env) if env else DEFAULT_CAP


def _headers(bounds: Bounds) -> Iterator[tuple[EpsilonClass, int, BlockCensus]]:
    """(epsilon, g, census) triples satisfying every rule that involves only them."""
    for eps in EPSILON_ORDER:
        for g in range(eps.genus_floor, bounds.max_g + 1):
            for f in range(bounds.max_f + 1):
                for k1 in range(f + 1):
                    for t in range(bounds.max_t + 1):
                        for k2 in range(t + 1):
                            for s in range(bounds.max_s + 1):
                                for k3 in range(s + 1):
                                    k = k1 + k2 + k3
                                    if k % 2 or (k > 0) != eps.requires_twisting:
                                        continue
                                    yield eps, g, BlockCensus(f, k1, t, k2, s, k3)


def _seifert_multisets(bounds: Bounds) -> list[tuple[SeifertPair, ...]]:
    out = []
    for n in range(bounds.max_n + 1):
        out.extend(combinations_with_replacement(bounds.pairs, n))
    out.sort(key=lambda ms: tuple((p.alpha, p.beta) for p in ms))
    return out


def _b_allowed(regime: Regime, b: int) -> bool:
    if regime is Regime.FORCED_ZERO:
        return b == 0
    if regime is Regime.MOD_TWO:
        return b in (0, 1)
    return True


def iter_valid(bounds: Bounds, *, cap: int | None = None) -> Iterator[InvariantTuple]:
    """Stream the census in order.  The size check runs before the first tuple."""
    count_classes(bounds, cap=cap)
    headers = list(_headers(bounds))
    multisets = _seifert_multisets(bounds)
    entries = bounds.singular_entries
    B = bounds.max_abs_b
    for b in range(-B, B + 1):
        for eps, g, c in headers:
            rs = list(combinations_with_replacement(entries, c.s - c.k3))
            qs = list(combinations_with_replacement(entries, c.k3))
            for ms in multisets:
                regime = b_regime(eps, c.f, c.t, c.s, ms)
                if not _b_allowed(regime, b):
                    continue
                term = ObstructionTerm(b, regime)
                for r in rs:
                    for q in qs:
                        yield InvariantTuple(term, eps, g, c, ms, SingularDistribution(r, q))


def enumerate_valid(bounds: Bounds, *, cap: int | None = None) -> list[InvariantTuple]:
    """One canonical representative per equivalence class within ``bounds``, in census order.

    Raises :class:`BoundsTooLarge` when the class count exceeds the cap
    (default 10**7, overridable through ``ALEXCIRCLE_ENUM_CAP``).
    """
    return list(iter_valid(bounds, cap=cap))


def count_classes(bounds: Bounds, *, cap: int | None = None) -> int:
    """Number of equivalence classes within ``bounds``, counted without enumerating."""
    limit = resolve_cap(cap)
    total = _count(bounds)
    if total > limit:
        raise BoundsTooLarge(total, limit)
    return total


def _multichoose(n: int, k: int) -> int:
    return comb(n + k - 1, k) if n else int(k == 0)


@lru_cache(maxsize=256)
def _count(bounds: Bounds) -> int:
    P = len(bounds.pairs)
    P_odd = P - 1  # pairs without alpha = 2; (2, 1) is the only one
    E = len(bounds.singular_entries)
    B = bounds.max_abs_b
    n_free = 2 * B + 1
    n_mod2 = min(B, 1) + 1
    total = 0
    for eps, g, c in _headers(bounds):
        sing = _multichoose(E, c.s - c.k3) * _multichoose(E, c.k3)
        for n in range(bounds.max_n + 1):
            every = _multichoose(P, n)
            if c.f + c.t + c.s > 0:
                b_choices = every
            elif eps in (EpsilonClass.O2, EpsilonClass.N1, EpsilonClass.N3, EpsilonClass.N4):
                without_two = _multichoose(P_odd, n)
                b_choices = (every - without_two) + without_two * n_mod2
            else:
                b_choices = every * n_free
            total += sing * b_choices
    return total


def random_valid(seed: int, bounds: Bounds, *, max_attempts: int = 100_000) -> InvariantTuple:
    """Reproducible random valid tuple within ``bounds``.

    Rejection sampling in stages: the (epsilon, g, census) header is drawn
    uniformly from the bounded box until admissible, then the Seifert pairs,
    singular entries and b are drawn and rejected individually.  Every class
    within the bounds has positive probability.
    """
    if _count(bounds) == 0:
        raise EmptyDomain("no valid tuple fits the bounds")
    rng = random.Random(seed)
    for _ in range(max_attempts):
        eps = rng.choice(EPSILON_ORDER)
        g = rng.randint(0, bounds.max_g)
        f, k1 = rng.randint(0, bounds.max_f), rng.randint(0, bounds.max_f)
        t, k2 = rng.randint(0, bounds.max_t), rng.randint(0, bounds.max_t)
        s, k3 = rng.randint(0, bounds.max_s), rng.randint(0, bounds.max_s)
        k = k1 + k2 + k3
        if k1 > f or k2 > t or k3 > s or k % 2:
            continue
        if (k > 0) != eps.requires_twisting or g < eps.genus_floor:
            continue
        break
    else:
        raise EmptyDomain("rejection sampling exhausted its attempts")

    pairs = []
    for _ in range(rng.randint(0, bounds.max_n)):
        while True:
            alpha = rng.randint(2, bounds.max_alpha)
            beta = rng.randint(1, alpha - 1)
            if gcd(alpha, beta) == 1:
                pairs.append(SeifertPair(alpha, beta))
                break
    entries = bounds.singular_entries
    r = [rng.choice(entries) for _ in range(s - k3)]
    q = [rng.choice(entries) for _ in range(k3)]
    regime = b_regime(eps, f, t, s, pairs)
    while True:
        b = rng.randint(-bounds.max_abs_b, bounds.max_abs_b)
        if _b_allowed(regime, b):
            break
    tup = InvariantTuple.build(
        b=b, epsilon=eps, g=g, f=f, k1=k1, t=t, k2=k2, s=s, k3=k3, seifert=pairs, r=r, q=q
    )
    assert validate(tup).ok, validate(tup)
    return tup
